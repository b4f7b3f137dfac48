#pragma once

// Self-verification suites: every formula path is checked against an
// independent oracle (the representability sieve and the coin-counting
// dynamic program).

#include <cstdint>
#include <string>
#include <vector>

namespace frobex {

struct VerifyReport {
    std::string suite;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample;
    bool ok() const { return failures == 0; }
};

// frobenius_search vs frobenius_sieve, and count_nonneg_formula vs
// count_oracle for t <= f + 2*min, over all pairwise-coprime
// 2 <= a < b < c <= max.  Returns the two suite reports.
std::vector<VerifyReport> verify_oracle_equivalence(std::int64_t max);

// johnson_reduce vs sieve over gcd(a,b,c)=1 triples with a shared pairwise
// factor, parts in [2,max].
VerifyReport verify_johnson(std::int64_t max);

// brauer_shockley vs sieve over coprime permutations with first | (sum of
// other two), parts in [2,max].
VerifyReport verify_brauer_shockley(std::int64_t max);

// lewin_almost_arithmetic vs sieve for d in {2,3}; d=2 additionally
// against sylvester, and the d=3 specialization against the general form.
VerifyReport verify_lewin(std::int64_t a_max, std::int64_t mn_max);

// Denumerant formula vs oracle over one full period t in [0,abc) for all
// pairwise-coprime triples with max part <= max.
VerifyReport verify_sigma_closure(std::int64_t max);

// sigma_fast vs sigma_direct, exhaustive over moduli c <= c_max, all
// valid a,b in [1,c] and all residues t.
VerifyReport verify_sigma_fast(std::int64_t c_max);

std::vector<VerifyReport> verify_all(std::int64_t max);

}  // namespace frobex
