#include "frobex/numtheory.hpp"

#include <boost/multiprecision/integer.hpp>

namespace frobex {

Int isqrt(const Int& n) {
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    // Newton iteration from a power-of-two overestimate.
    unsigned bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << (bits / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    // x is now floor(sqrt(n)); guard against off-by-one.
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool representable_by_two(std::int64_t target, std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1 || target < 1)
        throw std::invalid_argument("representable_by_two: arguments must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("representable_by_two: gcd(a,b) must be 1");
    for (std::int64_t m2 = 0; m2 * b <= target; ++m2)
        if ((target - m2 * b) % a == 0) return true;
    return false;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t r0 = mod_pos(a, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r0 != 0) {
        std::int64_t q = r1 / r0;
        std::int64_t r = r1 - q * r0;
        r1 = r0; r0 = r;
        std::int64_t s = s1 - q * s0;
        s1 = s0; s0 = s;
    }
    if (r1 != 1)
        throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_pos(s1, m);
}

Rational frac(const Rational& x) {
    Int fl = floor_div(numerator(x), denominator(x));
    return x - Rational(fl);
}

Rational sawtooth(const Rational& x) {
    Rational f = frac(x);
    if (f == 0) return 0;
    return f - Rational(1, 2);
}

Rational bernoulli2(const Rational& x) {
    Rational f = frac(x);
    return f * f - f + Rational(1, 6);
}

}  // namespace frobex
