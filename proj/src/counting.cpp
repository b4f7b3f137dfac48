#include "frobex/counting.hpp"

#include <numeric>
#include <sstream>

namespace frobex {

namespace {
std::int64_t require_pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!pairwise_coprime(a, b, c))
        throw std::invalid_argument("DenumerantEvaluator: triple must be pairwise coprime");
    return a;
}
}  // namespace

DenumerantEvaluator::DenumerantEvaluator(std::int64_t a, std::int64_t b, std::int64_t c)
    : a_(require_pairwise_coprime(a, b, c)), b_(b), c_(c),
      part_sum_(Int(a) + b + c),
      den_(Int(12) * a * b * c),
      const_num_(Int(3) * (Int(a) * b + Int(b) * c + Int(c) * a)
                 + Int(a) * a + Int(b) * b + Int(c) * c),
      sig_a_(sigma_table(b, c, a)),
      sig_b_(sigma_table(a, c, b)),
      sig_c_(sigma_table(a, b, c)) {}

Int DenumerantEvaluator::assemble(std::int64_t t, bool positive) const {
    if (t < 0)
        throw std::invalid_argument("denumerant: t must be nonnegative");
    // The positive count comes from reciprocity, which is valid only for
    // t >= 1; at t = 0 it would report the single empty representation.
    if (positive && t == 0) return 0;
    const Int t2 = Int(t) * t;
    Int poly_num = 6 * t2 + const_num_;
    poly_num += (positive ? -6 : 6) * Int(t) * part_sum_;
    const std::int64_t ts = positive ? t : -t;
    Rational total = Rational(poly_num, den_)
                   + sig_a_.at(ts) + sig_b_.at(ts) + sig_c_.at(ts);
    if (denominator(total) != 1 || numerator(total) < 0) {
        std::ostringstream msg;
        msg << "denumerant formula did not reduce to a nonnegative integer: t=" << t
            << " triple=(" << a_ << "," << b_ << "," << c_ << ") value=" << total;
        throw FormulaConsistencyError(msg.str());
    }
    return numerator(total);
}

Int DenumerantEvaluator::count_nonneg(std::int64_t t) const { return assemble(t, false); }
Int DenumerantEvaluator::count_pos(std::int64_t t) const { return assemble(t, true); }

Int count_nonneg_formula(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    return DenumerantEvaluator(a, b, c).count_nonneg(t);
}

Int count_pos_formula(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c) {
    return DenumerantEvaluator(a, b, c).count_pos(t);
}

std::vector<Int> count_oracle_upto(std::int64_t t_max,
                                   const std::vector<std::int64_t>& parts) {
    if (parts.empty())
        throw std::invalid_argument("count_oracle: parts must be nonempty");
    if (t_max < 0)
        throw std::invalid_argument("count_oracle: t must be nonnegative");
    for (std::int64_t p : parts)
        if (p < 1) throw std::invalid_argument("count_oracle: parts must be positive");
    std::vector<Int> ways(t_max + 1, Int(0));
    ways[0] = 1;
    for (std::int64_t p : parts)
        for (std::int64_t t = p; t <= t_max; ++t)
            ways[t] += ways[t - p];
    return ways;
}

Int count_oracle(std::int64_t t, const std::vector<std::int64_t>& parts,
                 Positivity positivity) {
    if (positivity == Positivity::StrictlyPositive) {
        std::int64_t shift = std::accumulate(parts.begin(), parts.end(), std::int64_t(0));
        if (t < shift) return 0;
        t -= shift;
    }
    return count_oracle_upto(t, parts)[t];
}

}  // namespace frobex
