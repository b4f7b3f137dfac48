#include "frobex/dedekind.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace frobex {

namespace {

constexpr std::int64_t kInt64SafeModulus = std::int64_t(1) << 20;

void check_sigma_args(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("sigma: arguments must be positive");
    if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw std::invalid_argument("sigma: a and b must be coprime to the modulus c");
}

// 2<r> - c - 1 for a residue r in [0,c); <r> is r lifted to {1,...,c}.
inline std::int64_t sawtooth_weight(std::int64_t r, std::int64_t c) {
    return 2 * (r == 0 ? c : r) - c - 1;
}

inline std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return std::int64_t((unsigned __int128)(x) * (unsigned __int128)(y) % (unsigned __int128)(m));
}

}  // namespace

Rational sigma_direct(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    check_sigma_args(a, b, c);
    if (c == 1) return 0;
    const std::int64_t ai = mod_inverse(a, c);
    const std::int64_t bi = mod_inverse(b, c);
    const std::int64_t tm = mod_pos(t, c);
    std::int64_t ra = 0;                 // a' * n  mod c
    std::int64_t rb = mulmod(bi, tm, c); // b' * (t - n)  mod c
    if (c <= kInt64SafeModulus) {
        std::int64_t acc = 0;  // |terms| < c^2, c <= 2^20: no overflow
        for (std::int64_t n = 0; n < c; ++n) {
            acc += sawtooth_weight(ra, c) * sawtooth_weight(rb, c);
            ra += ai; if (ra >= c) ra -= c;
            rb -= bi; if (rb < 0) rb += c;
        }
        return Rational(Int(acc), Int(4) * c * c);
    }
    Int acc = 0;
    for (std::int64_t n = 0; n < c; ++n) {
        acc += Int(sawtooth_weight(ra, c)) * sawtooth_weight(rb, c);
        ra += ai; if (ra >= c) ra -= c;
        rb -= bi; if (rb < 0) rb += c;
    }
    return Rational(acc, Int(4) * c * c);
}

SigmaTable sigma_table(std::int64_t a, std::int64_t b, std::int64_t c) {
    check_sigma_args(a, b, c);
    if (c == 1) return SigmaTable(a, b, 1, {Rational(0)});
    const std::int64_t ai = mod_inverse(a, c);
    const std::int64_t bi = mod_inverse(b, c);
    std::vector<std::int64_t> u(c), w(c);
    {
        std::int64_t ra = 0, rb = 0;
        for (std::int64_t n = 0; n < c; ++n) {
            u[n] = sawtooth_weight(ra, c);
            w[n] = sawtooth_weight(rb, c);
            ra += ai; if (ra >= c) ra -= c;
            rb += bi; if (rb >= c) rb -= c;
        }
    }
    const Int den = Int(4) * c * c;
    std::vector<Rational> values(c);
    if (c <= kInt64SafeModulus) {
        for (std::int64_t r = 0; r < c; ++r) {
            std::int64_t acc = 0;
            std::int64_t j = r;  // (r - n) mod c
            for (std::int64_t n = 0; n < c; ++n) {
                acc += u[n] * w[j];
                if (--j < 0) j += c;
            }
            values[r] = Rational(Int(acc), den);
        }
    } else {
        for (std::int64_t r = 0; r < c; ++r) {
            Int acc = 0;
            std::int64_t j = r;
            for (std::int64_t n = 0; n < c; ++n) {
                acc += Int(u[n]) * w[j];
                if (--j < 0) j += c;
            }
            values[r] = Rational(acc, den);
        }
    }
    return SigmaTable(a, b, c, std::move(values));
}

Rational dedekind_rademacher(Int h, Int k, Rational x, Rational y) {
    if (k < 1)
        throw std::invalid_argument("dedekind_rademacher: k must be positive");
    x = frac(x);
    y = frac(y);
    if (k == 1) return sawtooth(Rational(h) * y + x) * sawtooth(y);
    // s(h,k;x,y) depends on h only through h mod k, with x shifted by y
    // per subtracted multiple of k.
    Int q = floor_div(h, k);
    Int r = h - q * k;
    x = frac(x + Rational(q) * y);
    if (r == 0) return sawtooth(x) * sawtooth(y);
    if (boost::multiprecision::gcd(r, k) != 1)
        throw std::invalid_argument("dedekind_rademacher: h and k must be coprime");
    // Rademacher reciprocity for s(r,k;x,y) + s(k,r;y,x).
    Rational rhs = sawtooth(x) * sawtooth(y)
                 + Rational(r, k) * bernoulli2(y) / 2
                 + Rational(k, r) * bernoulli2(x) / 2
                 + bernoulli2(Rational(r) * y + Rational(k) * x) / (Rational(2) * r * k);
    if (frac(x) == 0 && frac(y) == 0) rhs -= Rational(1, 4);
    return rhs - dedekind_rademacher(k, r, y, x);
}

Rational sigma_fast(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    check_sigma_args(a, b, c);
    if (c == 1) return 0;
    const std::int64_t ai = mod_inverse(a, c);
    const std::int64_t bi = mod_inverse(b, c);
    const std::int64_t tm = mod_pos(t, c);
    const std::int64_t h = mod_pos(c - mulmod(mod_pos(a, c), bi, c), c);  // -a b' mod c
    const std::int64_t v = mulmod(bi, tm, c);                             // b' t mod c
    const std::int64_t u1 = mulmod(ai, tm, c);                            // a' t mod c
    Rational s = dedekind_rademacher(Int(h), Int(c), Rational(v, c), Rational(0));
    s += sawtooth(Rational(u1, c)) / 2;
    s += sawtooth(Rational(v, c)) / 2;
    if (tm == 0) s += Rational(1, 4);
    s -= Rational(1, Int(4) * c);
    return s;
}

Rational periodic_part(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!pairwise_coprime(a, b, c))
        throw std::invalid_argument("periodic_part: triple must be pairwise coprime");
    return -(sigma_direct(-t, b, c, a) + sigma_direct(-t, a, c, b) + sigma_direct(-t, a, b, c));
}

namespace {

template <typename F>
double numeric_check_impl(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const Rational exact = sigma_direct(t, a, b, c);
    if (c == 1) return 0.0;
    const F pi = 4 * atan(F(1));
    std::vector<F> cs(c), sn(c);
    for (std::int64_t j = 0; j < c; ++j) {
        F ang = 2 * pi * F(j) / F(c);
        cs[j] = cos(ang);
        sn[j] = sin(ang);
    }
    const std::int64_t tm = mod_pos(t, c), am = mod_pos(a, c), bm = mod_pos(b, c);
    F sum_re = 0, sum_im = 0;
    for (std::int64_t k = 1; k < c; ++k) {
        std::int64_t it = mulmod(k, tm, c), ia = mulmod(k, am, c), ib = mulmod(k, bm, c);
        // denominator (lambda^a - 1)(lambda^b - 1)
        F da_re = cs[ia] - 1, da_im = sn[ia];
        F db_re = cs[ib] - 1, db_im = sn[ib];
        F d_re = da_re * db_re - da_im * db_im;
        F d_im = da_re * db_im + da_im * db_re;
        F d2 = d_re * d_re + d_im * d_im;
        // lambda^t / denominator
        sum_re += (cs[it] * d_re + sn[it] * d_im) / d2;
        sum_im += (sn[it] * d_re - cs[it] * d_im) / d2;
    }
    sum_re /= F(c);
    sum_im /= F(c);
    F ex = numerator(exact).template convert_to<F>() / denominator(exact).template convert_to<F>();
    F diff = sqrt((sum_re - ex) * (sum_re - ex) + sum_im * sum_im);
    return diff.template convert_to<double>();
}

}  // namespace

double sigma_numeric_check(std::int64_t t, std::int64_t a, std::int64_t b,
                           std::int64_t c, int digits) {
    if (digits < 1)
        throw std::invalid_argument("sigma_numeric_check: digits must be positive");
    if (digits <= 50)
        return numeric_check_impl<boost::multiprecision::cpp_bin_float_50>(t, a, b, c);
    if (digits <= 100)
        return numeric_check_impl<boost::multiprecision::cpp_bin_float_100>(t, a, b, c);
    throw std::invalid_argument("sigma_numeric_check: at most 100 digits supported");
}

}  // namespace frobex
