#include "frobex/frobenius.hpp"

#include "frobex/counting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

namespace frobex {

const char* method_name(Method m) {
    switch (m) {
        case Method::Search: return "search";
        case Method::Sieve: return "sieve";
        case Method::Sylvester: return "sylvester";
        case Method::Johnson: return "johnson";
        case Method::BrauerShockley: return "brauer-shockley";
        case Method::Lewin: return "lewin";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Admissible: return "admissible";
        case Verdict::NotPairwiseCoprime: return "not-pairwise-coprime";
        case Verdict::MemberRepresentable: return "member-representable";
        case Verdict::DividesSum: return "divides-sum";
        case Verdict::AlmostArithmetic: return "almost-arithmetic";
    }
    return "?";
}

FrobeniusResult frobenius_search(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!pairwise_coprime(a, b, c))
        throw std::invalid_argument("frobenius_search: triple must be pairwise coprime");
    const std::int64_t sum = a + b + c;
    const std::int64_t delta = std::min(a, std::min(b, c));
    if (delta == 1)
        return {-1, sum - 1, Method::Search, 0, true};
    DenumerantEvaluator ev(a, b, c);
    std::int64_t mb = static_cast<std::int64_t>(isqrt(Int(3) * a * b * c)) + delta;
    std::int64_t evaluations = 0;
    std::int64_t t = mb, f;
    for (;;) {
        for (;;) {
            ++evaluations;
            if (ev.count_pos(t) == 0) break;
            --t;
        }
        f = t;
        if (mb - f < delta) {
            mb += delta;
            t = mb;
        } else {
            break;
        }
    }
    return {f - sum, f, Method::Search, evaluations, false};
}

std::int64_t frobenius_sieve(const std::vector<std::int64_t>& parts) {
    if (parts.empty())
        throw std::invalid_argument("frobenius_sieve: parts must be nonempty");
    std::int64_t g_all = 0, amin = parts[0], sum = 0;
    for (std::int64_t p : parts) {
        if (p < 1) throw std::invalid_argument("frobenius_sieve: parts must be positive");
        g_all = std::gcd(g_all, p);
        amin = std::min(amin, p);
        sum += p;
    }
    if (g_all != 1)
        throw std::invalid_argument("frobenius_sieve: gcd of parts must be 1");
    if (amin == 1) return -1;

    // Initial cap from the coarse upper bound on the three smallest parts,
    // plus the part sum, doubled as slack; the run-of-amin certificate
    // below makes the result independent of the cap guess.
    std::vector<std::int64_t> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    double cap_guess = static_cast<double>(sum);
    if (sorted.size() >= 3)
        cap_guess += std::max(0.0, bdr_upper(sorted[0], sorted[1], sorted[2]));
    else
        cap_guess += static_cast<double>(sorted[0]) * sorted[1];
    std::int64_t cap = 2 * (static_cast<std::int64_t>(std::ceil(cap_guess)) + 1);

    for (;;) {
        std::vector<char> rep(cap + 1, 0);
        rep[0] = 1;
        for (std::int64_t p : parts)
            for (std::int64_t t = p; t <= cap; ++t)
                if (rep[t - p]) rep[t] = 1;
        std::int64_t g = -1;
        for (std::int64_t t = cap; t >= 1; --t)
            if (!rep[t]) { g = t; break; }
        if (g >= 0 && cap - g >= amin) return g;
        cap *= 2;  // no certified gap yet
    }
}

std::int64_t sylvester(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("sylvester: arguments must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("sylvester: arguments must be coprime");
    if (a == 1 || b == 1) return -1;
    return a * b - a - b;
}

std::int64_t johnson_reduce(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("johnson_reduce: arguments must be positive");
    if (std::gcd(std::gcd(a, b), c) != 1)
        throw std::invalid_argument("johnson_reduce: gcd(a,b,c) must be 1");
    if (a == 1 || b == 1 || c == 1) return -1;
    if (std::int64_t m = std::gcd(a, b); m > 1)
        return m * johnson_reduce(a / m, b / m, c) + (m - 1) * c;
    if (std::int64_t m = std::gcd(a, c); m > 1)
        return m * johnson_reduce(a / m, b, c / m) + (m - 1) * b;
    if (std::int64_t m = std::gcd(b, c); m > 1)
        return m * johnson_reduce(a, b / m, c / m) + (m - 1) * a;
    // pairwise coprime; drop a member representable by the other two
    if (representable_by_two(c, a, b)) return sylvester(a, b);
    if (representable_by_two(b, a, c)) return sylvester(a, c);
    if (representable_by_two(a, b, c)) return sylvester(b, c);
    return frobenius_search(a, b, c).g;
}

std::int64_t brauer_shockley(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!pairwise_coprime(a, b, c))
        throw std::invalid_argument("brauer_shockley: triple must be pairwise coprime");
    if ((b + c) % a != 0)
        throw std::invalid_argument("brauer_shockley: requires a | (b+c)");
    return std::max(b * (a * c / (b + c)), c * (a * b / (b + c))) - a;
}

std::int64_t lewin_almost_arithmetic(std::int64_t a, std::int64_t m,
                                     std::int64_t n, std::int64_t d) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("lewin: m and n must be positive");
    if (d < 2 || d > a)
        throw std::invalid_argument("lewin: requires 2 <= d <= a");
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("lewin: requires gcd(a,n) = 1");
    return (m * ((a - 2) / (d - 1)) + m - 1) * a + (a - 1) * n;
}

AdmissibilityReport classify(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("classify: arguments must be positive");
    AdmissibilityReport rep;
    const std::array<std::array<std::int64_t, 3>, 3> pairs{{{a, b, c}, {a, c, b}, {b, c, a}}};
    for (const auto& p : pairs) {
        if (std::int64_t m = std::gcd(p[0], p[1]); m > 1) {
            rep.verdict = Verdict::NotPairwiseCoprime;
            rep.x = p[0]; rep.y = p[1]; rep.m = m;
            return rep;
        }
    }
    // member representable by the other two
    const std::array<std::array<std::int64_t, 3>, 3> members{{{c, a, b}, {b, a, c}, {a, b, c}}};
    for (const auto& p : members) {
        for (std::int64_t m2 = 0; m2 * p[2] <= p[0]; ++m2) {
            if ((p[0] - m2 * p[2]) % p[1] == 0) {
                rep.verdict = Verdict::MemberRepresentable;
                rep.x = p[0]; rep.y = p[1]; rep.z = p[2];
                rep.m = (p[0] - m2 * p[2]) / p[1]; rep.n = m2;
                return rep;
            }
        }
    }
    for (const auto& p : members) {
        if ((p[1] + p[2]) % p[0] == 0) {
            rep.verdict = Verdict::DividesSum;
            rep.x = p[0]; rep.y = p[1]; rep.z = p[2];
            return rep;
        }
    }
    // almost arithmetic: (a', ma'+n, ma'+2n) over every assignment
    const std::array<std::array<std::int64_t, 3>, 6> assigns{{
        {a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
    for (const auto& p : assigns) {
        std::int64_t n = p[2] - p[1];
        if (n <= 0) continue;
        std::int64_t ma = 2 * p[1] - p[2];
        if (ma <= 0 || ma % p[0] != 0) continue;
        std::int64_t m = ma / p[0];
        if (std::gcd(p[0], n) != 1) continue;
        rep.verdict = Verdict::AlmostArithmetic;
        rep.x = p[0]; rep.y = p[1]; rep.z = p[2];
        rep.m = m; rep.n = n;
        return rep;
    }
    return rep;
}

std::string AdmissibilityReport::describe() const {
    std::ostringstream os;
    os << verdict_name(verdict);
    switch (verdict) {
        case Verdict::Admissible:
            break;
        case Verdict::NotPairwiseCoprime:
            os << ": gcd(" << x << "," << y << ")=" << m;
            break;
        case Verdict::MemberRepresentable:
            os << ": " << x << "=" << m << "*" << y << "+" << n << "*" << z;
            break;
        case Verdict::DividesSum:
            os << ": " << x << " | " << y << "+" << z;
            break;
        case Verdict::AlmostArithmetic:
            os << ": (" << x << "," << y << "," << z << ") with m=" << m << " n=" << n;
            break;
    }
    return os.str();
}

double davison_lower(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::sqrt(3.0 * a * b * c) - a - b - c;
}

bool davison_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c) {
    Int f = Int(g) + a + b + c;
    if (f < 0) return false;
    return f * f >= Int(3) * a * b * c;
}

double bdr_upper(std::int64_t a, std::int64_t b, std::int64_t c) {
    double s = static_cast<double>(a) + b + c;
    return 0.5 * (std::sqrt(static_cast<double>(a) * b * c * s) - s);
}

bool bdr_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c) {
    Int lhs = 2 * Int(g) + a + b + c;
    if (lhs <= 0) return true;
    return lhs * lhs <= Int(a) * b * c * (Int(a) + b + c);
}

double conjecture_upper(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::pow(static_cast<double>(a) * b * c, 0.625) - a - b - c;
}

bool conjecture_holds(std::int64_t g, std::int64_t a, std::int64_t b, std::int64_t c) {
    Int f = Int(g) + a + b + c;
    if (f < 0) return true;
    Int abc = Int(a) * b * c;
    return boost::multiprecision::pow(f, 8) <= boost::multiprecision::pow(abc, 5);
}

double bound_from_periodic_bound(std::int64_t a, std::int64_t b, std::int64_t c,
                                 const Rational& B) {
    if (B < 0)
        throw std::invalid_argument("bound_from_periodic_bound: B must be nonnegative");
    Rational inner = 2 * B * (Int(a) * b * c)
                   + Rational(Int(a) * a + Int(b) * b + Int(c) * c, 12);
    double x = numerator(inner).convert_to<double>() / denominator(inner).convert_to<double>();
    return std::sqrt(x) - 0.5 * (static_cast<double>(a) + b + c);
}

BoundsReport bounds_report(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t g) {
    return {davison_lower(a, b, c), bdr_upper(a, b, c), conjecture_upper(a, b, c), g,
            davison_holds(g, a, b, c), bdr_holds(g, a, b, c), conjecture_holds(g, a, b, c)};
}

}  // namespace frobex
