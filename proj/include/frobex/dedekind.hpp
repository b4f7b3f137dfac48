#pragma once

// Exact evaluation of Fourier-Dedekind sums
//
//   sigma_t(a,b;c) = (1/c) * sum over lambda^c = 1, lambda != 1 of
//                    lambda^t / ((lambda^a - 1)(lambda^b - 1))
//
// and assembly of the periodic part P_t(a,b,c) of the denumerant.
//
// The root-of-unity sum is never evaluated in floating point on the exact
// path.  Internally each factor 1/(lambda^a - 1) is expanded by finite
// Fourier analysis into a sawtooth-like integer sequence, which turns the
// whole sum into an integer cyclic convolution:
//
//   4c^2 * sigma_t(a,b;c) = sum_{n mod c} u(n) * w(t-n),
//   u(n) = 2<a'n> - c - 1,  w(m) = 2<b'm> - c - 1,
//
// where a', b' are the inverses of a, b mod c and <x> is the residue of x
// in {1,...,c}.  sigma_fast evaluates the same value in O(log c) exact
// rational operations through the reciprocity law for Dedekind-Rademacher
// sums.

#include "frobex/numtheory.hpp"

#include <cstdint>
#include <vector>

namespace frobex {

// Identifies one sigma evaluation; sigma depends on t only through t mod c.
struct SigmaKey {
    std::int64_t t_residue;  // in [0, modulus)
    std::int64_t a, b;
    std::int64_t modulus;
};

// All residue values of sigma_t(a,b;c) for t = 0..c-1.  Immutable after
// construction and shareable across threads.
class SigmaTable {
public:
    SigmaTable(std::int64_t a, std::int64_t b, std::int64_t modulus,
               std::vector<Rational> values)
        : a_(a), b_(b), modulus_(modulus), values_(std::move(values)) {}

    std::int64_t modulus() const { return modulus_; }
    const Rational& at(std::int64_t t) const {
        return values_[mod_pos(t, modulus_)];
    }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::int64_t a_, b_, modulus_;
    std::vector<Rational> values_;
};

// Exact value of the defining sum, O(c).  Requires gcd(a,c)=gcd(b,c)=1.
// c = 1 yields 0 (empty sum).
Rational sigma_direct(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);

// Same value in O(log c) via the Dedekind-Rademacher reciprocity recursion.
Rational sigma_fast(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);

// All c residue values at once (integer cyclic convolution, O(c^2) total).
SigmaTable sigma_table(std::int64_t a, std::int64_t b, std::int64_t c);

// Dedekind-Rademacher sum
//   s(h,k;x,y) = sum_{j mod k} (( h(j+y)/k + x )) (( (j+y)/k ))
// evaluated by the Euclidean reciprocity recursion.  Exposed for tests.
Rational dedekind_rademacher(Int h, Int k, Rational x, Rational y);

// Periodic part P_t(a,b,c) of the denumerant, assembled from the three
// sigma terms; N_t = polynomial part - P_t.  Requires a pairwise coprime
// triple.
Rational periodic_part(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);

// Evaluates the defining root-of-unity sum in high-precision complex
// arithmetic (at least `digits` decimal digits) and returns
// |numeric - exact|.  Diagnostic only; guards the sawtooth expansion
// against transcription errors.
double sigma_numeric_check(std::int64_t t, std::int64_t a, std::int64_t b,
                           std::int64_t c, int digits);

}  // namespace frobex
