#include "frobex/verify.hpp"

#include "frobex/counting.hpp"
#include "frobex/dedekind.hpp"
#include "frobex/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace frobex {

namespace {

void record_failure(VerifyReport& rep, const std::string& what) {
    if (rep.failures == 0) rep.first_counterexample = what;
    ++rep.failures;
}

std::string triple_str(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

}  // namespace

std::vector<VerifyReport> verify_oracle_equivalence(std::int64_t max) {
    VerifyReport search{"search-vs-sieve"};
    VerifyReport formula{"formula-vs-oracle"};
    for (std::int64_t a = 2; a <= max; ++a)
        for (std::int64_t b = a + 1; b <= max; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t c = b + 1; c <= max; ++c) {
                if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                FrobeniusResult res = frobenius_search(a, b, c);
                std::int64_t gs = frobenius_sieve({a, b, c});
                ++search.checked;
                if (res.g != gs)
                    record_failure(search, triple_str(a, b, c) + ": search g=" +
                                               std::to_string(res.g) + " sieve g=" +
                                               std::to_string(gs));
                DenumerantEvaluator ev(a, b, c);
                std::int64_t t_max = res.f + 2 * a;
                auto oracle = count_oracle_upto(t_max, {a, b, c});
                for (std::int64_t t = 0; t <= t_max; ++t) {
                    ++formula.checked;
                    if (ev.count_nonneg(t) != oracle[t]) {
                        record_failure(formula, triple_str(a, b, c) + " t=" +
                                                    std::to_string(t));
                        break;
                    }
                }
            }
        }
    return {search, formula};
}

VerifyReport verify_johnson(std::int64_t max) {
    VerifyReport rep{"johnson-vs-sieve"};
    for (std::int64_t a = 2; a <= max; ++a)
        for (std::int64_t b = a; b <= max; ++b)
            for (std::int64_t c = b; c <= max; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                bool shared = std::gcd(a, b) > 1 || std::gcd(a, c) > 1 || std::gcd(b, c) > 1;
                if (!shared) continue;
                ++rep.checked;
                std::int64_t gj = johnson_reduce(a, b, c);
                std::int64_t gs = frobenius_sieve({a, b, c});
                if (gj != gs)
                    record_failure(rep, triple_str(a, b, c) + ": johnson g=" +
                                            std::to_string(gj) + " sieve g=" +
                                            std::to_string(gs));
            }
    return rep;
}

VerifyReport verify_brauer_shockley(std::int64_t max) {
    VerifyReport rep{"brauer-shockley-vs-sieve"};
    for (std::int64_t a = 2; a <= max; ++a)
        for (std::int64_t b = 2; b <= max; ++b)
            for (std::int64_t c = b + 1; c <= max; ++c) {
                if (a == b || a == c) continue;
                if (!pairwise_coprime(a, b, c)) continue;
                if ((b + c) % a != 0) continue;
                ++rep.checked;
                std::int64_t gf = brauer_shockley(a, b, c);
                std::int64_t gs = frobenius_sieve({a, b, c});
                if (gf != gs)
                    record_failure(rep, triple_str(a, b, c) + ": formula g=" +
                                            std::to_string(gf) + " sieve g=" +
                                            std::to_string(gs));
            }
    return rep;
}

VerifyReport verify_lewin(std::int64_t a_max, std::int64_t mn_max) {
    VerifyReport rep{"lewin-vs-sieve"};
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t a = d; a <= a_max; ++a)
            for (std::int64_t m = 1; m <= mn_max; ++m)
                for (std::int64_t n = 1; n <= mn_max; ++n) {
                    if (std::gcd(a, n) != 1) continue;
                    ++rep.checked;
                    std::int64_t gl = lewin_almost_arithmetic(a, m, n, d);
                    std::vector<std::int64_t> parts{a};
                    for (std::int64_t k = 1; k < d; ++k) parts.push_back(m * a + k * n);
                    std::int64_t gs = frobenius_sieve(parts);
                    std::ostringstream id;
                    id << "a=" << a << " m=" << m << " n=" << n << " d=" << d;
                    if (gl != gs) {
                        record_failure(rep, id.str() + ": lewin g=" + std::to_string(gl) +
                                                " sieve g=" + std::to_string(gs));
                        continue;
                    }
                    if (d == 2 && gl != sylvester(a, m * a + n))
                        record_failure(rep, id.str() + ": d=2 disagrees with sylvester");
                    if (d == 3 && a >= 3) {
                        std::int64_t spec = (m * (a / 2) - 1) * a + (a - 1) * n;
                        if (gl != spec)
                            record_failure(rep, id.str() + ": d=3 specialization mismatch");
                    }
                }
    return rep;
}

VerifyReport verify_sigma_closure(std::int64_t max) {
    VerifyReport rep{"denumerant-closure"};
    for (std::int64_t a = 1; a <= max; ++a)
        for (std::int64_t b = a; b <= max; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t c = b; c <= max; ++c) {
                if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                DenumerantEvaluator ev(a, b, c);
                std::int64_t period = a * b * c;
                auto oracle = count_oracle_upto(period - 1, {a, b, c});
                for (std::int64_t t = 0; t < period; ++t) {
                    ++rep.checked;
                    if (ev.count_nonneg(t) != oracle[t]) {
                        record_failure(rep, triple_str(a, b, c) + " t=" + std::to_string(t));
                        break;
                    }
                }
            }
        }
    return rep;
}

VerifyReport verify_sigma_fast(std::int64_t c_max) {
    VerifyReport rep{"sigma-fast-vs-direct"};
    for (std::int64_t c = 1; c <= c_max; ++c)
        for (std::int64_t a = 1; a <= c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            for (std::int64_t b = 1; b <= c; ++b) {
                if (std::gcd(b, c) != 1) continue;
                for (std::int64_t t = 0; t < c; ++t) {
                    ++rep.checked;
                    if (sigma_fast(t, a, b, c) != sigma_direct(t, a, b, c)) {
                        std::ostringstream os;
                        os << "sigma_" << t << "(" << a << "," << b << ";" << c << ")";
                        record_failure(rep, os.str());
                    }
                }
            }
        }
    return rep;
}

std::vector<VerifyReport> verify_all(std::int64_t max) {
    std::vector<VerifyReport> out = verify_oracle_equivalence(max);
    out.push_back(verify_johnson(max));
    out.push_back(verify_brauer_shockley(max));
    out.push_back(verify_lewin(std::min<std::int64_t>(max, 30), 4));
    out.push_back(verify_sigma_closure(std::min<std::int64_t>(max, 30)));
    out.push_back(verify_sigma_fast(std::min<std::int64_t>(max, 50)));
    return out;
}

}  // namespace frobex
