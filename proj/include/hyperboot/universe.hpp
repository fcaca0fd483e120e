#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace hyperboot {

// Active vertex set inside the ambient label space [1, n]. Restriction keeps
// original ids; only the active set shrinks.
class Universe {
public:
    explicit Universe(int n) : n_(check_n(n)), verts_(static_cast<std::size_t>(n)) {
        std::iota(verts_.begin(), verts_.end(), 1);
    }

    Universe(int n, std::vector<int> verts) : n_(check_n(n)), verts_(std::move(verts)) {
        int prev = 0;
        for (int v : verts_) {
            if (v <= prev) throw std::domain_error("Universe: vertices must be strictly increasing");
            if (v > n_) throw std::domain_error("Universe: vertex above ambient n");
            prev = v;
        }
    }

    int ambient_n() const { return n_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& verts() const { return verts_; }
    bool full() const { return static_cast<int>(verts_.size()) == n_; }

    bool contains(int v) const {
        return v >= 1 && v <= n_ && std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool contains_all(std::span<const int> vs) const {
        for (int v : vs)
            if (!contains(v)) return false;
        return true;
    }

    Universe without(std::span<const int> removed) const {
        std::vector<int> rem(removed.begin(), removed.end());
        std::sort(rem.begin(), rem.end());
        std::vector<int> keep;
        keep.reserve(verts_.size());
        for (int v : verts_)
            if (!std::binary_search(rem.begin(), rem.end(), v)) keep.push_back(v);
        return Universe(n_, std::move(keep));
    }

    Universe with(int v) const {
        if (contains(v)) return *this;
        if (v < 1) throw std::domain_error("Universe: vertex ids start at 1");
        std::vector<int> keep = verts_;
        keep.insert(std::upper_bound(keep.begin(), keep.end(), v), v);
        return Universe(std::max(n_, v), std::move(keep));
    }

    bool operator==(const Universe& other) const = default;

private:
    static int check_n(int n) {
        if (n < 0) throw std::domain_error("Universe: negative n");
        return n;
    }

    int n_;
    std::vector<int> verts_;
};

}  // namespace hyperboot
