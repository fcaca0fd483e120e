#include "hyperboot/combinatorics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace hyperboot {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return (s < a) ? kSaturated : s;
}

// Pascal triangle rows computed on demand, saturating.
struct BinomTable {
    std::vector<std::vector<std::uint64_t>> rows;

    BinomTable() { rows.push_back({1}); }

    std::uint64_t get(int n, int k) {
        while (static_cast<int>(rows.size()) <= n) {
            const auto& prev = rows.back();
            std::vector<std::uint64_t> row(prev.size() + 1, 1);
            for (std::size_t i = 1; i < prev.size(); ++i)
                row[i] = sat_add(prev[i - 1], prev[i]);
            rows.push_back(std::move(row));
        }
        return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

}  // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static thread_local BinomTable table;
    return table.get(n, k);
}

Rank rank_jset(std::span<const int> vertices) {
    Rank r = 0;
    int i = 1;
    for (int v : vertices) r = r + binom(v - 1, i++);
    return r;
}

Rank rank_jset(std::span<const int> vertices, int n, int j) {
    if (static_cast<int>(vertices.size()) != j)
        throw std::domain_error("rank_jset: expected " + std::to_string(j) + " vertices, got " +
                                std::to_string(vertices.size()));
    int prev = 0;
    for (int v : vertices) {
        if (v <= prev)
            throw std::domain_error("rank_jset: vertices must be strictly increasing");
        if (v < 1 || v > n)
            throw std::domain_error("rank_jset: vertex " + std::to_string(v) + " outside [1, " +
                                    std::to_string(n) + "]");
        prev = v;
    }
    return rank_jset(vertices);
}

std::vector<int> unrank_jset(Rank rank, int n, int j) {
    if (j < 0 || j > n) throw std::domain_error("unrank_jset: invalid j");
    if (rank >= binom(n, j))
        throw std::domain_error("unrank_jset: rank " + std::to_string(rank) + " out of range [0, C(" +
                                std::to_string(n) + "," + std::to_string(j) + "))");
    std::vector<int> out(static_cast<std::size_t>(j));
    int hi = n;
    for (int i = j; i >= 1; --i) {
        // largest a with C(a-1, i) <= rank
        int a = i;  // C(i-1, i) = 0 always fits
        for (int cand = hi; cand >= i; --cand) {
            if (binom(cand - 1, i) <= rank) {
                a = cand;
                break;
            }
        }
        out[static_cast<std::size_t>(i - 1)] = a;
        rank -= binom(a - 1, i);
        hi = a - 1;
    }
    return out;
}

void for_each_ksubset(std::span<const int> pool, int k,
                      const std::function<void(std::span<const int>)>& fn) {
    const int m = static_cast<int>(pool.size());
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn({});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (;;) {
        for (int i = 0; i < k; ++i)
            subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(subset);
        // colex successor: bump the lowest index that can move
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? idx[static_cast<std::size_t>(i + 1)] - 1 : m - 1;
            if (idx[static_cast<std::size_t>(i)] < limit) break;
            ++i;
        }
        if (i == k) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int q = 0; q < i; ++q) idx[static_cast<std::size_t>(q)] = q;
    }
}

}  // namespace hyperboot
