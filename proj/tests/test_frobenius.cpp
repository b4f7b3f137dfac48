#include "frobex/frobenius.hpp"

#include "frobex/counting.hpp"

#include "doctest.h"

using namespace frobex;

TEST_CASE("search on the worked triple") {
    FrobeniusResult r = frobenius_search(7, 13, 30);
    CHECK(r.g == 45);
    CHECK(r.f == 95);
    CHECK(r.method == Method::Search);
    CHECK(r.evaluations > 0);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("search rejects bad input and degenerates on a unit part") {
    CHECK_THROWS_AS(frobenius_search(4, 6, 7), std::invalid_argument);
    FrobeniusResult r = frobenius_search(1, 2, 5);
    CHECK(r.degenerate);
    CHECK(r.g == -1);
    CHECK(r.f == 7);
}

TEST_CASE("root certificate") {
    for (auto [a, b, c] : {std::array<std::int64_t, 3>{7, 13, 30},
                           std::array<std::int64_t, 3>{5, 7, 9},
                           std::array<std::int64_t, 3>{11, 13, 17}}) {
        FrobeniusResult r = frobenius_search(a, b, c);
        DenumerantEvaluator ev(a, b, c);
        CHECK(ev.count_pos(r.f) == 0);
        std::int64_t amin = std::min(a, std::min(b, c));
        for (std::int64_t t = r.f + 1; t <= r.f + amin; ++t)
            CHECK(ev.count_pos(t) >= 1);
    }
}

TEST_CASE("sieve oracle") {
    CHECK(frobenius_sieve({3, 5}) == 7);
    CHECK(frobenius_sieve({7, 13, 30}) == 45);
    CHECK(frobenius_sieve({2, 3, 7}) == 1);
    CHECK(frobenius_sieve({1, 4}) == -1);
    CHECK(frobenius_sieve({6, 10, 15}) == 29);
    CHECK_THROWS_AS(frobenius_sieve({4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_sieve(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("sieve monotone in extra parts") {
    CHECK(frobenius_sieve({7, 13, 30, 31}) <= frobenius_sieve({7, 13, 30}));
    CHECK(frobenius_sieve({11, 13, 17, 19, 23}) <= frobenius_sieve({11, 13, 17}));
}

TEST_CASE("sylvester") {
    CHECK(sylvester(3, 5) == 7);
    CHECK(sylvester(2, 3) == 1);
    CHECK(sylvester(7, 13) == 71);
    CHECK(sylvester(1, 9) == -1);
    CHECK_THROWS_AS(sylvester(4, 6), std::invalid_argument);
}

TEST_CASE("johnson reduction") {
    CHECK(johnson_reduce(4, 6, 7) == 9);
    CHECK(johnson_reduce(7, 13, 30) == 45);
    CHECK(johnson_reduce(2, 4, 5) == 3);
    CHECK(johnson_reduce(2, 3, 7) == 1);   // 7 representable by 2 and 3
    CHECK_THROWS_AS(johnson_reduce(2, 4, 6), std::invalid_argument);
}

TEST_CASE("brauer-shockley closed form") {
    CHECK(brauer_shockley(3, 4, 5) == 2);
    CHECK(brauer_shockley(5, 7, 8) == 11);
    CHECK(brauer_shockley(2, 3, 5) == 1);
    CHECK_THROWS_AS(brauer_shockley(3, 4, 7), std::invalid_argument);
    CHECK_THROWS_AS(brauer_shockley(2, 4, 6), std::invalid_argument);
}

TEST_CASE("lewin almost arithmetic") {
    CHECK(lewin_almost_arithmetic(7, 1, 2, 3) == 26);  // g(7,9,11)
    CHECK(lewin_almost_arithmetic(6, 1, 1, 3) == 17);  // g(6,7,8)
    CHECK_THROWS_AS(lewin_almost_arithmetic(7, 0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(lewin_almost_arithmetic(2, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(lewin_almost_arithmetic(9, 1, 3, 3), std::invalid_argument);
    // d = 3 specialization equals the general formula
    for (std::int64_t a = 3; a <= 50; ++a)
        for (std::int64_t m = 1; m <= 5; ++m)
            for (std::int64_t n = 1; n <= 5; ++n) {
                if (std::gcd(a, n) != 1) continue;
                CHECK(lewin_almost_arithmetic(a, m, n, 3) ==
                      (m * (a / 2) - 1) * a + (a - 1) * n);
            }
}

TEST_CASE("classifier verdicts") {
    // (7,17,20) = (7, 2*7+3, 2*7+6); note an m=1 family member such as
    // (7,9,11) is arithmetic, so its middle divides the sum and the
    // earlier divides-sum check claims it first
    AdmissibilityReport r = classify(7, 17, 20);
    CHECK(r.verdict == Verdict::AlmostArithmetic);
    CHECK(r.m == 2);
    CHECK(r.n == 3);
    CHECK(classify(7, 9, 11).verdict == Verdict::DividesSum);

    r = classify(3, 5, 8);
    CHECK(r.verdict == Verdict::MemberRepresentable);
    CHECK(r.x == 8);

    CHECK(classify(7, 13, 30).verdict == Verdict::Admissible);
    CHECK(classify(4, 6, 7).verdict == Verdict::NotPairwiseCoprime);
    CHECK(classify(3, 4, 5).verdict == Verdict::DividesSum);  // 3 | 4+5
    CHECK(classify(5, 7, 8).verdict == Verdict::DividesSum);
    CHECK(classify(1, 2, 5).verdict == Verdict::MemberRepresentable);
    CHECK_FALSE(classify(7, 17, 20).admissible());
    CHECK(classify(7, 13, 30).describe() == "admissible");
}

TEST_CASE("bounds on the worked triple") {
    CHECK(davison_lower(7, 13, 30) == doctest::Approx(40.4986).epsilon(1e-4));
    CHECK(davison_holds(45, 7, 13, 30));
    CHECK(davison_lower(1, 1, 1) < 0);

    CHECK(bdr_upper(7, 13, 30) == doctest::Approx(159.7305).epsilon(1e-4));
    CHECK(bdr_holds(45, 7, 13, 30));

    CHECK(conjecture_upper(7, 13, 30) == doctest::Approx(90.4856).epsilon(1e-3));
    CHECK(conjecture_holds(45, 7, 13, 30));

    BoundsReport rep = bounds_report(7, 13, 30, 45);
    CHECK(rep.lower_holds);
    CHECK(rep.bdr_holds);
    CHECK(rep.conjecture_holds);
}

TEST_CASE("bound from a periodic-part bound") {
    // B = 0 collapses to sqrt((a^2+b^2+c^2)/12) - (a+b+c)/2
    CHECK(bound_from_periodic_bound(7, 13, 30, Rational(0)) ==
          doctest::Approx(std::sqrt(1118.0 / 12.0) - 25.0).epsilon(1e-9));
    CHECK(bound_from_periodic_bound(7, 13, 30, Rational(1)) ==
          doctest::Approx(std::sqrt(5460.0 + 1118.0 / 12.0) - 25.0).epsilon(1e-9));
    // monotone in B
    double prev = bound_from_periodic_bound(7, 13, 30, Rational(0));
    for (int b = 1; b <= 5; ++b) {
        double cur = bound_from_periodic_bound(7, 13, 30, Rational(b));
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK_THROWS_AS(bound_from_periodic_bound(7, 13, 30, Rational(-1)), std::invalid_argument);
}

TEST_CASE("exact bound comparisons at the crossover") {
    // f^2 vs 3abc decides the Davison check exactly
    CHECK(davison_holds(-50 + 91, 7, 13, 30));   // f = 91, 91^2 = 8281 > 8190
    CHECK_FALSE(davison_holds(-50 + 90, 7, 13, 30));  // f = 90, 8100 < 8190
}
