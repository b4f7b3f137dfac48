#pragma once

// Exact integer and rational primitives shared by all other modules.
//
// All formula evaluation in this project runs on exact arbitrary-precision
// rationals; floating point only appears in diagnostics and reporting.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace frobex {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t gcd(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0)
        throw std::invalid_argument("gcd: arguments must be nonnegative");
    return std::gcd(x, y);
}

inline bool pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("pairwise_coprime: arguments must be positive");
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

// Largest k with k*k <= n, by integer Newton iteration.  No floating-point
// sqrt feeds any exact computation.
Int isqrt(const Int& n);

inline std::int64_t isqrt_i64(std::int64_t n) {
    return static_cast<std::int64_t>(isqrt(Int(n)));
}

// True iff target = m1*a + m2*b has a solution with m1, m2 >= 0.
// Requires gcd(a,b) = 1.  Enumerates m2 up to target/b.
bool representable_by_two(std::int64_t target, std::int64_t a, std::int64_t b);

// Floor division and residue helpers for the exact paths.
inline Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if ((n % d) != 0 && ((n < 0) != (d < 0))) --q;
    return q;
}

inline std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m (extended Euclid).  Requires gcd(a,m)=1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Fractional part in [0,1) and the two periodic functions the Dedekind
// machinery is built from: the sawtooth ((x)) and the Bernoulli function
// B2({x}) = {x}^2 - {x} + 1/6.
Rational frac(const Rational& x);
Rational sawtooth(const Rational& x);
Rational bernoulli2(const Rational& x);

// Three positive coin denominations; coprimality computed once and cached.
struct Triple {
    std::int64_t a, b, c;
    bool sorted_ascending;
    bool pairwise_coprime;

    Triple(std::int64_t a_, std::int64_t b_, std::int64_t c_)
        : a(a_), b(b_), c(c_),
          sorted_ascending(a_ <= b_ && b_ <= c_),
          pairwise_coprime(frobex::pairwise_coprime(a_, b_, c_)) {}

    std::int64_t sum() const { return a + b + c; }
    std::int64_t min_part() const { return std::min(a, std::min(b, c)); }
    Int product() const { return Int(a) * b * c; }
};

}  // namespace frobex
