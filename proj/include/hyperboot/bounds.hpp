#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperboot {

// Exact rational over int64 with overflow checks; enough headroom for every
// bound evaluated here.
class Rational {
public:
    Rational() = default;
    Rational(long long num);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integral() const { return den_ == 1; }
    long long as_integer() const;  // throws unless integral

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    std::string str() const;

private:
    void normalize();
    long long num_ = 0;
    long long den_ = 1;
};

// Minimum contagious size in the non-tight case 1 <= j <= k-2: exactly r.
std::uint64_t exact_small_j(int k, int j, int r);

// Minimum contagious size for (k, j) = (3, 2): ((r+1)^2 - [r even]) / 4.
std::uint64_t exact_32(int r);

// Tight-case recursion: k = 3 gives exact_32(r), otherwise the sum over
// i in [r] of recursive_upper(k-1, i).
std::uint64_t recursive_upper(int k, int r);

// C(j+r-1, j): size of the clique construction.
std::uint64_t clique_upper(int j, int r);

// Closed form of the iterated tight-case recursion (k >= 4), evaluated in
// exact rational arithmetic; always integral and equal to recursive_upper.
Rational closed_form_upper(int k, int r);

struct BoundEntry {
    std::string name;
    std::uint64_t value;
};

struct BoundReport {
    int k = 0, j = 0, r = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<std::uint64_t> exact;
    std::vector<BoundEntry> provenance;
    std::vector<std::string> notes;  // surfaced inconsistencies, normally empty
};

// Aggregate of every applicable bound.
BoundReport best_known(int k, int j, int r);

}  // namespace hyperboot
