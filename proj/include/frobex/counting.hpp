#pragma once

// Denumerant computation: exact formula-based counts N_t (nonnegative
// solutions) and NB_t (strictly positive solutions) for a pairwise coprime
// triple, plus an independent dynamic-programming oracle for any part list.

#include "frobex/dedekind.hpp"
#include "frobex/numtheory.hpp"

#include <cstdint>
#include <vector>

namespace frobex {

enum class Positivity { Nonnegative, StrictlyPositive };

struct DenumerantQuery {
    std::int64_t t;
    Triple triple;
    Positivity positivity;
};

// Raised when the rational formula expression fails to reduce to a
// nonnegative integer: any sigma transcription bug becomes a loud failure.
struct FormulaConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Holds the three sigma tables and polynomial-part constants for one triple
// so that repeated t-queries are three table lookups plus small rational
// arithmetic.  Immutable after construction; shareable across threads.
class DenumerantEvaluator {
public:
    DenumerantEvaluator(std::int64_t a, std::int64_t b, std::int64_t c);

    // Exact count of nonnegative solutions of a*m1 + b*m2 + c*m3 = t.
    Int count_nonneg(std::int64_t t) const;
    // Exact count of strictly positive solutions.
    Int count_pos(std::int64_t t) const;

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }

private:
    std::int64_t a_, b_, c_;
    Int part_sum_;
    Int den_;        // 12abc, common denominator of the polynomial part
    Int const_num_;  // 3(ab+bc+ca) + a^2+b^2+c^2
    SigmaTable sig_a_, sig_b_, sig_c_;  // sigma(.,.; a), (.; b), (.; c)

    Int assemble(std::int64_t t, bool positive) const;
};

Int count_nonneg_formula(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);
Int count_pos_formula(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c);

// Independent denumerant oracle: iterative coin-counting table over the
// parts, O(t) memory.  No coprimality required.  Strictly-positive counts
// use the shift t -> t - sum(parts).
Int count_oracle(std::int64_t t, const std::vector<std::int64_t>& parts,
                 Positivity positivity = Positivity::Nonnegative);

// Oracle counts for all t in [0, t_max] at once (one DP sweep).
std::vector<Int> count_oracle_upto(std::int64_t t_max,
                                   const std::vector<std::int64_t>& parts);

}  // namespace frobex
