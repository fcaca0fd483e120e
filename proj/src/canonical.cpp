#include "hyperboot/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace hyperboot {

namespace {

constexpr int kMaxVertices = 30;

// Shared state for the relabeling branch-and-bound. New labels are assigned
// 1, 2, ... to old vertices; once the first d labels are fixed, every member
// inside them contributes a final entry of the sorted rank vector, so the
// comparison against `ref` is decided prefix by prefix.
struct CanonSearch {
    int n = 0, j = 0, m = 0;
    std::vector<std::vector<int>> member_verts;
    std::vector<std::uint32_t> member_mask;
    std::vector<int> try_order;  // degree desc, id asc
    const std::vector<Rank>* ref = nullptr;
    bool need_vector = false;

    bool found = false;
    std::vector<Rank> smaller;

    std::vector<int> new_of_old;  // [1..n], 0 = unassigned
    std::uint32_t assigned = 0;
    std::vector<char> completed;
    std::vector<Rank> current;

    void init(const std::vector<Rank>& ranks, int n_, int j_) {
        n = n_;
        j = j_;
        m = static_cast<int>(ranks.size());
        if (n > kMaxVertices)
            throw std::domain_error("canonical form: n above the supported vertex limit");
        member_verts.clear();
        member_mask.clear();
        for (Rank r : ranks) {
            auto verts = unrank_jset(r, n, j);
            std::uint32_t mask = 0;
            for (int v : verts) mask |= std::uint32_t{1} << (v - 1);
            member_verts.push_back(std::move(verts));
            member_mask.push_back(mask);
        }
        std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& verts : member_verts)
            for (int v : verts) ++degree[static_cast<std::size_t>(v)];
        try_order.resize(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) try_order[static_cast<std::size_t>(v - 1)] = v;
        std::stable_sort(try_order.begin(), try_order.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
        });
        new_of_old.assign(static_cast<std::size_t>(n) + 1, 0);
        assigned = 0;
        completed.assign(static_cast<std::size_t>(m), 0);
        current.clear();
        found = false;
        smaller.clear();
    }

    Rank relabeled_rank(int member) const {
        std::vector<int> labels;
        labels.reserve(member_verts[static_cast<std::size_t>(member)].size());
        for (int v : member_verts[static_cast<std::size_t>(member)])
            labels.push_back(new_of_old[static_cast<std::size_t>(v)]);
        std::sort(labels.begin(), labels.end());
        return rank_jset(labels);
    }

    void dfs(int depth, int pos, bool strictly_less) {
        if (found) return;
        if (strictly_less && static_cast<int>(current.size()) == m) {
            found = true;
            if (need_vector) smaller = current;
            return;
        }
        if (!strictly_less && pos == m) return;  // can only tie from here on
        if (depth == n) return;

        for (int u : try_order) {
            if (assigned & (std::uint32_t{1} << (u - 1))) continue;
            new_of_old[static_cast<std::size_t>(u)] = depth + 1;
            assigned |= std::uint32_t{1} << (u - 1);

            std::vector<Rank> block;
            std::vector<int> block_members;
            for (int mi = 0; mi < m; ++mi) {
                if (completed[static_cast<std::size_t>(mi)]) continue;
                const std::uint32_t mask = member_mask[static_cast<std::size_t>(mi)];
                if ((mask & ~assigned) == 0 && (mask >> (u - 1)) & 1) {
                    block.push_back(relabeled_rank(mi));
                    block_members.push_back(mi);
                }
            }
            std::sort(block.begin(), block.end());

            bool ok = true;
            bool child_less = strictly_less;
            int child_pos = pos;
            if (!child_less) {
                for (Rank x : block) {
                    if (x < (*ref)[static_cast<std::size_t>(child_pos)]) {
                        child_less = true;
                        break;
                    }
                    if (x > (*ref)[static_cast<std::size_t>(child_pos)]) {
                        ok = false;
                        break;
                    }
                    ++child_pos;
                }
            }
            if (ok) {
                for (int mi : block_members) completed[static_cast<std::size_t>(mi)] = 1;
                current.insert(current.end(), block.begin(), block.end());
                if (child_less && !need_vector) {
                    found = true;  // lex-smaller is already decided
                } else {
                    dfs(depth + 1, child_pos, child_less);
                }
                current.resize(current.size() - block.size());
                for (int mi : block_members) completed[static_cast<std::size_t>(mi)] = 0;
            }
            new_of_old[static_cast<std::size_t>(u)] = 0;
            assigned &= ~(std::uint32_t{1} << (u - 1));
            if (found) return;
        }
    }
};

void validate_ranks(const std::vector<Rank>& ranks, int n, int j) {
    const std::uint64_t total = binom(n, j);
    Rank prev = 0;
    bool first = true;
    for (Rank r : ranks) {
        if (!first && r <= prev) throw std::domain_error("rank vector must be strictly increasing");
        if (r >= total) throw std::domain_error("rank out of range");
        prev = r;
        first = false;
    }
}

// First strictly smaller relabeled vector, if any.
bool find_smaller(const std::vector<Rank>& ranks, int n, int j, bool need_vector,
                  std::vector<Rank>* out) {
    CanonSearch search;
    search.init(ranks, n, j);
    search.ref = &ranks;
    search.need_vector = need_vector;
    search.dfs(0, 0, false);
    if (search.found && need_vector) *out = std::move(search.smaller);
    return search.found;
}

}  // namespace

bool is_canonical(const std::vector<Rank>& ranks, int n, int j) {
    validate_ranks(ranks, n, j);
    return !find_smaller(ranks, n, j, false, nullptr);
}

std::vector<Rank> canonical_rank_vector(const std::vector<Rank>& ranks, int n, int j) {
    std::vector<Rank> best = ranks;
    std::sort(best.begin(), best.end());
    validate_ranks(best, n, j);
    std::vector<Rank> next;
    while (find_smaller(best, n, j, true, &next)) best = next;
    return best;
}

void enumerate_canonical_configs(int n, int j, int m,
                                 const std::function<void(const std::vector<Rank>&)>& emit) {
    if (m < 0) throw std::domain_error("enumerate_canonical_configs: negative size");
    if (j < 1 || j > n) throw std::domain_error("enumerate_canonical_configs: invalid j");
    const std::uint64_t total = binom(n, j);
    if (total > Configuration::encoding_budget())
        throw std::domain_error("enumerate_canonical_configs: C(n, j) above the encoding budget");
    std::vector<Rank> stack;
    // Orderly generation: a canonical set minus its largest rank is canonical,
    // so extending canonical parents by a larger rank reaches every orbit once.
    std::function<void()> extend = [&] {
        if (static_cast<int>(stack.size()) == m) {
            emit(stack);
            return;
        }
        const Rank from = stack.empty() ? 0 : stack.back() + 1;
        for (Rank z = from; z < total; ++z) {
            stack.push_back(z);
            if (is_canonical(stack, n, j)) extend();
            stack.pop_back();
        }
    };
    extend();
}

std::uint64_t count_canonical_configs(int n, int j, int m) {
    std::uint64_t count = 0;
    enumerate_canonical_configs(n, j, m, [&](const std::vector<Rank>&) { ++count; });
    return count;
}

std::vector<Rank> config_to_ranks(const Configuration& config) {
    std::vector<Rank> out;
    out.reserve(config.size());
    config.for_each([&](std::span<const int> member) { out.push_back(rank_jset(member)); });
    return out;
}

Configuration ranks_to_config(const std::vector<Rank>& ranks, int n, int j) {
    Configuration out(j, Universe(n));
    for (Rank r : ranks) out.insert(unrank_jset(r, n, j));
    return out;
}

}  // namespace hyperboot
