#pragma once

// Frobenius-number computation: the downward root search on the positive
// denumerant, a representability-sieve oracle, the closed-form special
// cases (Sylvester, Johnson, Brauer-Shockley, Lewin), the admissibility
// classifier and the bounds.

#include "frobex/numtheory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frobex {

enum class Method { Search, Sieve, Sylvester, Johnson, BrauerShockley, Lewin };

const char* method_name(Method m);

struct FrobeniusResult {
    std::int64_t g;            // Frobenius number
    std::int64_t f;            // g + sum of parts
    Method method;
    std::int64_t evaluations;  // positive-denumerant evaluations (search only)
    bool degenerate = false;   // a part equal to 1; g = -1 by convention
};

// Downward scan for the largest root of the positive denumerant, starting
// at isqrt(3abc) + min(a,b,c) and extending upward until min(a,b,c)
// consecutive representable integers certify the root.  Requires a
// pairwise coprime triple; a part equal to 1 yields the degenerate result
// g = -1, f = a+b+c-1.
FrobeniusResult frobenius_search(std::int64_t a, std::int64_t b, std::int64_t c);

// Independent oracle: boolean representability sieve with adaptive cap;
// correct once min(parts) consecutive representable integers are seen.
// Requires gcd(parts) = 1; returns -1 if a part equals 1.
std::int64_t frobenius_sieve(const std::vector<std::int64_t>& parts);

// g(a,b) = ab - a - b for coprime a,b >= 2; -1 when a part is 1.
std::int64_t sylvester(std::int64_t a, std::int64_t b);

// Reduces shared pairwise factors via g(a,b,c) = m g(a/m,b/m,c) + (m-1)c
// until the triple is pairwise coprime, then delegates.  Requires
// gcd(a,b,c) = 1.
std::int64_t johnson_reduce(std::int64_t a, std::int64_t b, std::int64_t c);

// Closed form for pairwise coprime triples with a | (b+c).
std::int64_t brauer_shockley(std::int64_t a, std::int64_t b, std::int64_t c);

// g(a, ma+n, ..., ma+(d-1)n) for m,n > 0, gcd(a,n) = 1, 2 <= d <= a.
std::int64_t lewin_almost_arithmetic(std::int64_t a, std::int64_t m,
                                     std::int64_t n, std::int64_t d);

enum class Verdict {
    Admissible,
    NotPairwiseCoprime,
    MemberRepresentable,
    DividesSum,
    AlmostArithmetic,
};

const char* verdict_name(Verdict v);

// Classification of a triple against the exclusion families, tested in the
// fixed order: coprimality, member-representable, divides-sum,
// almost-arithmetic.  All permutations are tried for each family.
struct AdmissibilityReport {
    Verdict verdict = Verdict::Admissible;
    // Witness, meaningful only for an exclusion verdict:
    //   NotPairwiseCoprime:  gcd(x, y) = m > 1
    //   MemberRepresentable: x = m*y + n*z
    //   DividesSum:          x | (y + z)
    //   AlmostArithmetic:    (x, y, z) = (a', m a' + n, m a' + 2n)
    std::int64_t x = 0, y = 0, z = 0;
    std::int64_t m = 0, n = 0;

    bool admissible() const { return verdict == Verdict::Admissible; }
    std::string describe() const;
};

AdmissibilityReport classify(std::int64_t a, std::int64_t b, std::int64_t c);

// Bounds.  The real-valued accessors are for reporting; the *_holds
// predicates compare g against each bound exactly in integer arithmetic.
double davison_lower(std::int64_t a, std::int64_t b, std::int64_t c);
bool davison_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c);

double bdr_upper(std::int64_t a, std::int64_t b, std::int64_t c);
bool bdr_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c);

double conjecture_upper(std::int64_t a, std::int64_t b, std::int64_t c);
bool conjecture_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c);

// sqrt(2B*abc + (a^2+b^2+c^2)/12) - (a+b+c)/2 for a periodic-part bound B.
double bound_from_periodic_bound(std::int64_t a, std::int64_t b, std::int64_t c,
                                 const Rational& B);

struct BoundsReport {
    double davison_lower;
    double bdr_upper;
    double conjecture_upper;
    std::int64_t g;
    bool lower_holds, bdr_holds, conjecture_holds;
};

BoundsReport bounds_report(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t g);

}  // namespace frobex
