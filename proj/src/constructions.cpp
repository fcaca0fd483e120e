#include "hyperboot/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperboot/bounds.hpp"

namespace hyperboot {

namespace {

std::vector<std::vector<int>> star_members(int m, int j, int size,
                                           const std::vector<int>& center,
                                           const std::vector<int>& pool) {
    if (m < 0 || m > j - 1) throw std::domain_error("make_star: need 0 <= m <= j-1");
    if (size < 0) throw std::domain_error("make_star: negative size");
    if (static_cast<int>(center.size()) != m)
        throw std::domain_error("make_star: center must have exactly m vertices");
    for (int c : center)
        for (int p : pool)
            if (c == p) throw std::domain_error("make_star: leaf pool overlaps the center");
    const int per_member = j - m;
    if (static_cast<int>(pool.size()) < size * per_member)
        throw std::domain_error("make_star: leaf pool too small (" + std::to_string(pool.size()) +
                                " < " + std::to_string(size * per_member) + ")");
    std::vector<std::vector<int>> members;
    members.reserve(static_cast<std::size_t>(size));
    std::size_t next = 0;
    for (int s = 0; s < size; ++s) {
        std::vector<int> member = center;
        for (int q = 0; q < per_member; ++q) member.push_back(pool[next++]);
        std::sort(member.begin(), member.end());
        members.push_back(std::move(member));
    }
    return members;
}

// Consumes pool ids in order: per star, a centre then its leaves.
std::pair<std::vector<std::vector<int>>, std::vector<int>> z_members(
    int r, const std::vector<int>& pool) {
    std::vector<std::vector<int>> members;
    std::vector<int> centers;
    std::size_t next = 0;
    for (int i = 1; i <= r; ++i) {
        const int star_size = (i + 1) / 2;  // ceil(i/2)
        if (next + 1 + static_cast<std::size_t>(star_size) > pool.size())
            throw std::domain_error("make_z_config: not enough vertices for Z_" +
                                    std::to_string(r));
        const int centre = pool[next++];
        centers.push_back(centre);
        for (int leaf = 0; leaf < star_size; ++leaf) {
            std::vector<int> member{centre, pool[next++]};
            std::sort(member.begin(), member.end());
            members.push_back(std::move(member));
        }
    }
    return {std::move(members), std::move(centers)};
}

std::pair<std::vector<std::vector<int>>, std::vector<int>> recursive_members(
    int k, int r, const std::vector<int>& pool) {
    if (static_cast<int>(pool.size()) < recursive_tight_vertex_budget(k, r))
        throw std::domain_error("make_recursive_tight: not enough vertices");
    std::vector<int> masters(pool.begin(), pool.begin() + r);
    std::vector<int> sub_pool(pool.begin() + r, pool.end());
    std::vector<std::vector<int>> members;
    for (int s = 1; s <= r; ++s) {
        std::vector<std::vector<int>> base = (k == 4)
                                                 ? z_members(s, sub_pool).first
                                                 : recursive_members(k - 1, s, sub_pool).first;
        const int master = masters[static_cast<std::size_t>(s - 1)];
        for (auto& member : base) {
            member.insert(std::upper_bound(member.begin(), member.end(), master), master);
            members.push_back(std::move(member));
        }
    }
    return {std::move(members), std::move(masters)};
}

}  // namespace

Configuration make_star(const StarSpec& spec, int n) {
    auto members = star_members(spec.m, spec.j, spec.size, spec.center, spec.pool);
    return Configuration::from_members(spec.j, Universe(n), members);
}

StarSpec star_spec_lowest(int m, int j, int size, int n) {
    StarSpec spec;
    spec.m = m;
    spec.j = j;
    spec.size = size;
    for (int v = 1; v <= m; ++v) spec.center.push_back(v);
    const int needed = size * (j - m);
    if (m + needed > n)
        throw std::domain_error("make_star: need " + std::to_string(m + needed) +
                                " vertices, have n = " + std::to_string(n));
    for (int v = m + 1; v <= m + needed; ++v) spec.pool.push_back(v);
    return spec;
}

ZConfig make_z_config(int r, int n) {
    if (r < 1) throw std::domain_error("make_z_config: r must be positive");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    auto [members, centers] = z_members(r, pool);
    return ZConfig{Configuration::from_members(2, Universe(n), members), std::move(centers)};
}

Configuration augment(const Configuration& base, int v) {
    bool clash = false;
    base.for_each([&](std::span<const int> member) {
        if (std::binary_search(member.begin(), member.end(), v)) clash = true;
    });
    if (clash)
        throw std::invalid_argument("augment: vertex " + std::to_string(v) +
                                    " occurs in a member of the configuration");
    Configuration out(base.j() + 1, base.universe().with(v));
    base.for_each([&](std::span<const int> member) {
        std::vector<int> grown(member.begin(), member.end());
        grown.insert(std::upper_bound(grown.begin(), grown.end(), v), v);
        out.insert(grown);
    });
    return out;
}

int recursive_tight_vertex_budget(int k, int r) {
    if (k < 3) throw std::domain_error("recursive_tight_vertex_budget: k must be at least 3");
    if (k == 3) return r + static_cast<int>(exact_32(r));  // Z_r: centres plus leaves
    return r + recursive_tight_vertex_budget(k - 1, r);
}

RecursiveTight make_recursive_tight(int k, int r, int n) {
    if (k < 4) throw std::domain_error("make_recursive_tight: k must be at least 4");
    if (r < 1) throw std::domain_error("make_recursive_tight: r must be positive");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    auto [members, masters] = recursive_members(k, r, pool);
    return RecursiveTight{Configuration::from_members(k - 1, Universe(n), members),
                          std::move(masters)};
}

Configuration make_clique_config(int j, int r, int n) {
    if (j < 1 || r < 1) throw std::domain_error("make_clique_config: j and r must be positive");
    if (j + r - 1 > n)
        throw std::domain_error("make_clique_config: need n >= j+r-1 = " +
                                std::to_string(j + r - 1));
    std::vector<int> base(static_cast<std::size_t>(j + r - 1));
    std::iota(base.begin(), base.end(), 1);
    Configuration out(j, Universe(n));
    for_each_ksubset(base, j, [&](std::span<const int> member) { out.insert(member); });
    return out;
}

}  // namespace hyperboot
