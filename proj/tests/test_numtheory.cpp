#include "frobex/numtheory.hpp"

#include "doctest.h"

#include <random>

using namespace frobex;

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 13) == 1);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(5, 0) == 5);
    CHECK_THROWS_AS(gcd(-1, 5), std::invalid_argument);
}

TEST_CASE("pairwise coprimality") {
    CHECK(pairwise_coprime(7, 13, 30));
    CHECK_FALSE(pairwise_coprime(4, 6, 7));
    CHECK(pairwise_coprime(1, 1, 1));
    CHECK_THROWS_AS(pairwise_coprime(0, 1, 2), std::invalid_argument);
}

TEST_CASE("isqrt examples") {
    CHECK(isqrt(Int(8190)) == 90);
    CHECK(isqrt(Int(16)) == 4);
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(1)) == 1);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::invalid_argument);
}

TEST_CASE("isqrt bracketing property") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 2000; ++i) {
        Int n = Int(rng() >> (rng() % 40));
        if (i % 3 == 0) n *= n;  // exercise perfect squares too
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("representable_by_two examples") {
    CHECK(representable_by_two(17, 3, 7));
    CHECK_FALSE(representable_by_two(1, 2, 3));
    CHECK_FALSE(representable_by_two(30, 7, 13));
    CHECK_THROWS_AS(representable_by_two(10, 2, 4), std::invalid_argument);
}

TEST_CASE("non-representable gaps end at the Sylvester number") {
    for (std::int64_t a = 2; a <= 30; ++a)
        for (std::int64_t b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) != 1) continue;
            std::int64_t expect = a * b - a - b;
            std::int64_t largest_gap = 0;
            for (std::int64_t t = 1; t <= a * b; ++t)
                if (!representable_by_two(t, a, b)) largest_gap = t;
            CHECK(largest_gap == expect);
        }
}

TEST_CASE("rational canonical form under random expression trees") {
    std::mt19937_64 rng(99);
    auto rnd = [&](std::int64_t m) { return std::int64_t(rng() % m) - m / 2; };
    for (int i = 0; i < 500; ++i) {
        Rational x(rnd(1000), 1 + std::int64_t(rng() % 999));
        Rational y(rnd(1000), 1 + std::int64_t(rng() % 999));
        Rational z = x * y - y / (x * x + 1) + Rational(1, 3);
        CHECK(denominator(z) > 0);
        CHECK(boost::multiprecision::gcd(numerator(z), denominator(z)) == 1);
    }
}

TEST_CASE("sawtooth and bernoulli helpers") {
    CHECK(sawtooth(Rational(0)) == 0);
    CHECK(sawtooth(Rational(5)) == 0);
    CHECK(sawtooth(Rational(1, 4)) == Rational(-1, 4));
    CHECK(sawtooth(Rational(-1, 4)) == Rational(1, 4));
    CHECK(bernoulli2(Rational(0)) == Rational(1, 6));
    CHECK(bernoulli2(Rational(1, 2)) == Rational(-1, 12));
    CHECK(frac(Rational(-7, 3)) == Rational(2, 3));
}

TEST_CASE("triple metadata") {
    Triple t(7, 13, 30);
    CHECK(t.sorted_ascending);
    CHECK(t.pairwise_coprime);
    CHECK(t.sum() == 50);
    CHECK(t.min_part() == 7);
    CHECK(t.product() == 2730);
    CHECK_FALSE(Triple(4, 6, 7).pairwise_coprime);
}
