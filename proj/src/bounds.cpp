#include "hyperboot/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperboot/combinatorics.hpp"

namespace hyperboot {

namespace {

long long checked(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("Rational: overflow in ") + what);
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num) : num_(num), den_(1) {}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

long long Rational::as_integer() const {
    if (!is_integral()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return num_;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n, "*"), checked(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t exact_small_j(int k, int j, int r) {
    if (r < 1) throw std::domain_error("exact_small_j: r must be positive");
    if (j < 1 || j > k - 2)
        throw std::domain_error("exact_small_j: needs 1 <= j <= k-2 (tight case is separate)");
    return static_cast<std::uint64_t>(r);
}

std::uint64_t exact_32(int r) {
    if (r < 1) throw std::domain_error("exact_32: r must be positive");
    const std::uint64_t sq = static_cast<std::uint64_t>(r + 1) * static_cast<std::uint64_t>(r + 1);
    return (sq - (r % 2 == 0 ? 1 : 0)) / 4;
}

std::uint64_t recursive_upper(int k, int r) {
    if (k < 3) throw std::domain_error("recursive_upper: k must be at least 3");
    if (r < 1) throw std::domain_error("recursive_upper: r must be positive");
    if (k == 3) return exact_32(r);
    std::uint64_t total = 0;
    for (int i = 1; i <= r; ++i) total += recursive_upper(k - 1, i);
    return total;
}

std::uint64_t clique_upper(int j, int r) {
    if (j < 2 || r < 1) throw std::domain_error("clique_upper: needs j >= 2 and r >= 1");
    return binom(j + r - 1, j);
}

Rational closed_form_upper(int k, int r) {
    if (k < 4) throw std::domain_error("closed_form_upper: k must be at least 4");
    if (r < 1) throw std::domain_error("closed_form_upper: r must be positive");
    // ((2r^2 + r(5k-11) - 17(k-1) + 4k^2) / 4(k-1)!) * r(r+1)...(r+k-4)
    //   - 1/4 * sum_{i=1..floor(r/2)} C(r+k-4-2i, k-4)
    const long long rr = r, kk = k;
    Rational poly = Rational(2 * rr * rr + rr * (5 * kk - 11) - 17 * (kk - 1) + 4 * kk * kk);
    long long factorial = 1;
    for (long long f = 2; f <= kk - 1; ++f) factorial *= f;
    Rational first = poly / Rational(4 * factorial);
    for (long long t = 0; t < kk - 3; ++t) first = first * Rational(rr + t);
    Rational second(0);
    for (int i = 1; i <= r / 2; ++i)
        second = second + Rational(static_cast<long long>(binom(r + k - 4 - 2 * i, k - 4)));
    return first - second / Rational(4);
}

BoundReport best_known(int k, int j, int r) {
    if (k < 2 || j < 1 || j > k - 1 || r < 1)
        throw std::domain_error("best_known: invalid parameters (need k >= 2, 1 <= j <= k-1, r >= 1)");
    BoundReport report;
    report.k = k;
    report.j = j;
    report.r = r;
    report.lower = static_cast<std::uint64_t>(r);

    if (j == 1 && j == k - 1) {
        // Graph case: r singleton vertices percolate in one step.
        report.exact = static_cast<std::uint64_t>(r);
        report.upper = *report.exact;
        report.provenance.push_back({"singletons", *report.exact});
        return report;
    }
    if (j <= k - 2) {
        report.exact = exact_small_j(k, j, r);
        report.upper = *report.exact;
        report.provenance.push_back({"nontight-star", *report.exact});
        return report;
    }
    if (k == 3) {
        report.exact = exact_32(r);
        report.lower = *report.exact;
        report.upper = *report.exact;
        report.provenance.push_back({"z-config", *report.exact});
        return report;
    }
    const std::uint64_t rec = recursive_upper(k, r);
    const std::uint64_t clq = clique_upper(j, r);
    report.upper = std::min(rec, clq);
    report.provenance.push_back({"recursive", rec});
    report.provenance.push_back({"clique", clq});
    const Rational closed = closed_form_upper(k, r);
    if (closed.is_integral() && closed.as_integer() == static_cast<long long>(rec)) {
        report.provenance.push_back({"closed-form", rec});
    } else {
        // Recursion is authoritative; surface the mismatch instead of hiding it.
        report.notes.push_back("closed form evaluates to " + closed.str() +
                               ", recursion gives " + std::to_string(rec));
    }
    return report;
}

}  // namespace hyperboot
