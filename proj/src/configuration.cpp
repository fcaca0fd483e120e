#include "hyperboot/configuration.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hyperboot {

std::uint64_t Configuration::encoding_budget() {
    static const std::uint64_t budget = [] {
        if (const char* env = std::getenv("HYPERBOOT_MAX_CELLS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 22;
    }();
    return budget;
}

Configuration::Configuration(int j, Universe universe)
    : j_(j), universe_(std::move(universe)) {
    if (j_ < 1 || j_ > universe_.ambient_n())
        throw std::domain_error("Configuration: j out of range");
    const std::uint64_t cells = binom(universe_.ambient_n(), j_);
    dense_ = cells <= encoding_budget();
    if (dense_) bits_ = DynamicBitset(static_cast<std::size_t>(cells));
}

Configuration Configuration::from_members(int j, Universe universe,
                                          const std::vector<std::vector<int>>& members) {
    Configuration c(j, std::move(universe));
    for (const auto& m : members) c.insert(m);
    return c;
}

void Configuration::validate_member(std::span<const int> jset) const {
    if (static_cast<int>(jset.size()) != j_)
        throw std::domain_error("Configuration: member has " + std::to_string(jset.size()) +
                                " vertices, expected " + std::to_string(j_));
    int prev = 0;
    for (int v : jset) {
        if (v <= prev) throw std::domain_error("Configuration: member not strictly increasing");
        if (!universe_.contains(v))
            throw std::domain_error("Configuration: vertex " + std::to_string(v) +
                                    " not in the universe");
        prev = v;
    }
}

bool Configuration::contains(std::span<const int> jset) const {
    if (dense_) return bits_.test(static_cast<std::size_t>(rank_jset(jset)));
    return sparse_.count(std::vector<int>(jset.begin(), jset.end())) > 0;
}

bool Configuration::insert(std::span<const int> jset) {
    validate_member(jset);
    if (dense_) {
        const auto r = static_cast<std::size_t>(rank_jset(jset));
        if (bits_.test(r)) return false;
        bits_.set(r);
        ++count_;
        return true;
    }
    auto [it, inserted] = sparse_.insert(std::vector<int>(jset.begin(), jset.end()));
    if (inserted) ++count_;
    return inserted;
}

bool Configuration::contains_rank(Rank r) const {
    if (!dense_) throw std::logic_error("Configuration: rank access on sparse representation");
    return bits_.test(static_cast<std::size_t>(r));
}

void Configuration::insert_rank(Rank r) {
    if (!dense_) throw std::logic_error("Configuration: rank access on sparse representation");
    if (!bits_.test(static_cast<std::size_t>(r))) {
        bits_.set(static_cast<std::size_t>(r));
        ++count_;
    }
}

void Configuration::for_each(const std::function<void(std::span<const int>)>& fn) const {
    if (dense_) {
        bits_.for_each_set([&](std::size_t r) {
            auto verts = unrank_jset(static_cast<Rank>(r), universe_.ambient_n(), j_);
            fn(verts);
        });
    } else {
        for (const auto& m : sparse_) fn(m);
    }
}

std::vector<std::vector<int>> Configuration::members() const {
    std::vector<std::vector<int>> out;
    out.reserve(count_);
    for_each([&](std::span<const int> m) { out.emplace_back(m.begin(), m.end()); });
    return out;
}

bool Configuration::subset_of(const Configuration& other) const {
    if (j_ != other.j_) return false;
    if (size() > other.size()) return false;
    bool ok = true;
    for_each([&](std::span<const int> m) {
        if (ok && !other.contains(m)) ok = false;
    });
    return ok;
}

Configuration Configuration::restricted(std::span<const int> removed) const {
    Configuration out(j_, universe_.without(removed));
    for_each([&](std::span<const int> m) {
        for (int v : m)
            for (int r : removed)
                if (v == r) return;
        out.insert(m);
    });
    return out;
}

bool Configuration::operator==(const Configuration& other) const {
    if (j_ != other.j_ || !(universe_ == other.universe_) || count_ != other.count_) return false;
    if (dense_ && other.dense_) return bits_ == other.bits_;
    return members() == other.members();
}

}  // namespace hyperboot
