#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperboot/bounds.hpp"

using namespace hyperboot;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(7, 2) - Rational(1, 2)) == Rational(3));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK(Rational(3).is_integral());
    CHECK(Rational(3).as_integer() == 3);
    CHECK(!Rational(1, 2).is_integral());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6).str() == "-2/3");
}

TEST_CASE("non-tight exact value") {
    CHECK(exact_small_j(4, 2, 3) == 3);
    CHECK(exact_small_j(5, 1, 1) == 1);
    CHECK(exact_small_j(10, 7, 4) == 4);
    CHECK_THROWS_AS(exact_small_j(3, 2, 1), std::domain_error);  // tight case
    CHECK_THROWS_AS(exact_small_j(4, 3, 2), std::domain_error);
}

TEST_CASE("(3,2) exact value") {
    CHECK(exact_32(1) == 1);
    CHECK(exact_32(2) == 2);
    CHECK(exact_32(3) == 4);
    CHECK(exact_32(4) == 6);
    CHECK(exact_32(5) == 9);
    // closed form equals the partial sums of ceil(i/2)
    std::uint64_t total = 0;
    for (int r = 1; r <= 20; ++r) {
        total += static_cast<std::uint64_t>((r + 1) / 2);
        CHECK(exact_32(r) == total);
    }
}

TEST_CASE("tight-case recursion") {
    CHECK(recursive_upper(4, 3) == 7);
    for (int r = 1; r <= 8; ++r) CHECK(recursive_upper(3, r) == exact_32(r));
    CHECK(recursive_upper(5, 2) == 4);
    CHECK(recursive_upper(4, 4) == 13);
}

TEST_CASE("clique bound") {
    CHECK(clique_upper(3, 3) == 10);
    CHECK(clique_upper(2, 1) == 1);
    CHECK(clique_upper(6, 2) == 7);
}

TEST_CASE("closed form equals the recursion") {
    CHECK(closed_form_upper(4, 3) == Rational(7));
    CHECK(closed_form_upper(4, 2) == Rational(3));
    CHECK(closed_form_upper(4, 4) == Rational(13));
    for (int k = 4; k <= 6; ++k)
        for (int r = 1; r <= 10; ++r) {
            const Rational closed = closed_form_upper(k, r);
            CHECK(closed.is_integral());
            CHECK(closed.as_integer() == static_cast<long long>(recursive_upper(k, r)));
        }
}

TEST_CASE("best_known aggregation") {
    BoundReport tight = best_known(4, 3, 3);
    CHECK(tight.lower == 3);
    CHECK(tight.upper == 7);
    CHECK(!tight.exact.has_value());
    CHECK(tight.notes.empty());

    BoundReport exact32 = best_known(3, 2, 4);
    CHECK(exact32.exact == 6);
    CHECK(exact32.lower == 6);
    CHECK(exact32.upper == 6);

    BoundReport nontight = best_known(6, 4, 2);
    CHECK(nontight.exact == 2);

    BoundReport graph = best_known(2, 1, 5);
    CHECK(graph.exact == 5);

    CHECK_THROWS_AS(best_known(3, 3, 1), std::domain_error);
}

TEST_CASE("clique bound can undercut the recursion") {
    // Large j, small r: the clique construction wins.
    BoundReport report = best_known(7, 6, 2);
    CHECK(clique_upper(6, 2) == 7);
    CHECK(report.upper <= 7);
    CHECK(report.upper == std::min(recursive_upper(7, 2), clique_upper(6, 2)));
}
