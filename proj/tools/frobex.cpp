// frobex: exact Frobenius numbers of triples, Fourier-Dedekind sums,
// admissibility classification, bounds and the Monte Carlo experiment.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 I/O failure.

#include "frobex/counting.hpp"
#include "frobex/dedekind.hpp"
#include "frobex/experiment.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>

namespace {

using namespace frobex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIoFailure = 3;

std::string fmt(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

int default_workers() {
    if (const char* env = std::getenv("FROBEX_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct ComputeOptions {
    std::vector<std::int64_t> parts;
    std::string method = "auto";
    std::string format = "text";
};

int run_compute(const ComputeOptions& opt) {
    const auto& parts = opt.parts;
    std::int64_t g_all = 0, sum = 0;
    for (std::int64_t p : parts) {
        if (p < 1) throw std::invalid_argument("parts must be positive");
        g_all = std::gcd(g_all, p);
        sum += p;
    }
    if (g_all != 1)
        throw std::invalid_argument("gcd of the parts must be 1 (Frobenius number undefined)");

    std::int64_t g;
    Method method;
    std::int64_t evaluations = 0;
    std::string note;
    if (opt.method == "sieve" || parts.size() >= 4) {
        g = frobenius_sieve(parts);
        method = Method::Sieve;
        if (parts.size() >= 4 && opt.method != "sieve")
            note = "formula-based counting covers 3 parts; falling back to the sieve";
    } else if (parts.size() == 2) {
        g = sylvester(parts[0], parts[1]);
        method = Method::Sylvester;
    } else if (opt.method == "search") {
        FrobeniusResult r = frobenius_search(parts[0], parts[1], parts[2]);
        g = r.g;
        method = r.method;
        evaluations = r.evaluations;
    } else {  // auto
        if (pairwise_coprime(parts[0], parts[1], parts[2])) {
            FrobeniusResult r = frobenius_search(parts[0], parts[1], parts[2]);
            g = r.g;
            method = r.method;
            evaluations = r.evaluations;
        } else {
            g = johnson_reduce(parts[0], parts[1], parts[2]);
            method = Method::Johnson;
        }
    }
    std::int64_t f = g + sum;
    if (opt.format == "json") {
        json out{{"g", g}, {"f", f}, {"method", method_name(method)},
                 {"evaluations", evaluations}};
        if (!note.empty()) out["note"] = note;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "g=" << g << " f=" << f << " method=" << method_name(method)
                  << " evaluations=" << evaluations << "\n";
        if (!note.empty()) std::cout << "note: " << note << "\n";
    }
    return kExitOk;
}

int run_count(std::int64_t t, const std::vector<std::int64_t>& parts, bool positive,
              bool oracle, const std::string& format) {
    Positivity pos = positive ? Positivity::StrictlyPositive : Positivity::Nonnegative;
    Int n;
    std::string path;
    if (!oracle && parts.size() == 3) {
        DenumerantEvaluator ev(parts[0], parts[1], parts[2]);
        n = positive ? ev.count_pos(t) : ev.count_nonneg(t);
        path = "formula";
    } else {
        n = count_oracle(t, parts, pos);
        path = "oracle";
    }
    if (format == "json")
        std::cout << json{{"t", t}, {"count", n.str()}, {"path", path}}.dump(2) << "\n";
    else
        std::cout << "count=" << n << " path=" << path << "\n";
    return kExitOk;
}

int run_sigma(std::int64_t t, std::int64_t a, std::int64_t b, std::int64_t c,
              bool fast, int check_digits, const std::string& format) {
    Rational s = fast ? sigma_fast(t, a, b, c) : sigma_direct(t, a, b, c);
    double diff = check_digits > 0 ? sigma_numeric_check(t, a, b, c, check_digits) : -1.0;
    if (format == "json") {
        json out{{"t", t}, {"a", a}, {"b", b}, {"c", c},
                 {"numerator", numerator(s).str()},
                 {"denominator", denominator(s).str()}};
        if (diff >= 0) out["numeric_diff"] = diff;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "sigma_" << t << "(" << a << "," << b << ";" << c << ") = " << s << "\n";
        if (diff >= 0) std::cout << "numeric_diff=" << diff << "\n";
    }
    return kExitOk;
}

int run_classify(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& format) {
    AdmissibilityReport rep = classify(a, b, c);
    if (format == "json") {
        json out{{"verdict", verdict_name(rep.verdict)}, {"detail", rep.describe()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.describe() << "\n";
    }
    return kExitOk;
}

int run_bounds(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& format) {
    if (std::gcd(std::gcd(a, b), c) != 1)
        throw std::invalid_argument("gcd of the parts must be 1");
    std::int64_t g = pairwise_coprime(a, b, c)
                         ? (std::min({a, b, c}) == 1 ? -1 : frobenius_search(a, b, c).g)
                         : johnson_reduce(a, b, c);
    BoundsReport rep = bounds_report(a, b, c, g);
    if (format == "json") {
        std::cout << json{{"g", rep.g},
                          {"davison_lower", rep.davison_lower},
                          {"bdr_upper", rep.bdr_upper},
                          {"conjecture_upper", rep.conjecture_upper},
                          {"lower_holds", rep.lower_holds},
                          {"bdr_holds", rep.bdr_holds},
                          {"conjecture_holds", rep.conjecture_holds}}.dump(2)
                  << "\n";
    } else {
        std::cout << "g=" << rep.g << "\n"
                  << "davison_lower=" << fmt(rep.davison_lower, 5)
                  << " holds=" << (rep.lower_holds ? "yes" : "no") << "\n"
                  << "bdr_upper=" << fmt(rep.bdr_upper, 5)
                  << " holds=" << (rep.bdr_holds ? "yes" : "no") << "\n"
                  << "conjecture_upper=" << fmt(rep.conjecture_upper, 5)
                  << " holds=" << (rep.conjecture_holds ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_experiment_cmd(const ExperimentConfig& config, const std::string& out_dir,
                       const std::string& format, double bin_width) {
    ExperimentResult result = run_experiment(config);
    DataFormat df = format == "json" ? DataFormat::Json : DataFormat::Csv;
    try {
        emit_data(result, config, df, out_dir, bin_width);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: failed to write output files: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    }
    const SummaryStats& s = result.stats;
    std::cout << "n=" << s.n << " mean=" << fmt(s.mean, 5) << " median=" << fmt(s.median, 5)
              << " stdev=" << fmt(s.stdev, 5) << " min=" << fmt(s.min, 5)
              << " max=" << fmt(s.max, 5) << " q1=" << fmt(s.q1, 5)
              << " q3=" << fmt(s.q3, 5) << "\n";
    std::cout << "draws=" << result.sampling.draws
              << " rejected=" << result.sampling.rejected << "\n";
    auto violations = scan_conjecture(result.records);
    if (violations.empty()) {
        std::cout << "conjecture scan: no record with f >= z^(5/4)\n";
    } else {
        std::cout << "conjecture scan: " << violations.size() << " violating record(s):\n";
        for (const auto& v : violations)
            std::cout << "  (" << v.a << "," << v.b << "," << v.c << ") f=" << v.f << "\n";
    }
    std::cout << "wrote " << out_dir << "\n";
    return kExitOk;
}

int run_verify(std::int64_t max) {
    auto reports = verify_all(max);
    bool ok = true;
    for (const auto& rep : reports) {
        std::cout << rep.suite << ": checked=" << rep.checked
                  << " failures=" << rep.failures
                  << (rep.ok() ? " [pass]" : " [FAIL]") << "\n";
        if (!rep.ok()) {
            std::cout << "  counterexample: " << rep.first_counterexample << "\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitMismatch;
}

int run_table() {
    auto reports = reproduce_extremes();
    bool ok = true;
    for (const auto& rep : reports) {
        std::cout << "(" << rep.expected.a << "," << rep.expected.b << ","
                  << rep.expected.c << ") f=" << rep.f_computed
                  << " z=" << fmt(rep.z, 1) << " sqrt3z=" << fmt(rep.sqrt3z, 1)
                  << " zpow54=" << std::llround(rep.zpow) << " R=" << fmt(rep.R, 5)
                  << (rep.pass() ? " [pass]" : " [FAIL]") << "\n";
        if (!rep.pass()) ok = false;
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Frobenius numbers of triples via Fourier-Dedekind sums"};
    app.require_subcommand(1);

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "Frobenius number of the given parts");
    compute->add_option("parts", copt.parts, "coin denominations (2 or more)")
        ->required()
        ->expected(2, -1);
    compute->add_option("--method", copt.method, "auto|search|sieve")
        ->check(CLI::IsMember({"auto", "search", "sieve"}));
    compute->add_option("--format", copt.format)->check(CLI::IsMember({"text", "json"}));

    std::int64_t t = 0;
    std::vector<std::int64_t> parts;
    bool positive = false, oracle = false, fast = false;
    std::string format = "text";
    auto* count = app.add_subcommand("count", "denumerant of t over the given parts");
    count->add_option("t", t)->required();
    count->add_option("parts", parts)->required()->expected(1, -1);
    count->add_flag("--positive", positive, "count strictly positive solutions");
    count->add_flag("--oracle", oracle, "force the dynamic-programming oracle");
    count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::int64_t sa = 0, sb = 0, sc = 0;
    int check_digits = 0;
    auto* sigma = app.add_subcommand("sigma", "Fourier-Dedekind sum sigma_t(a,b;c)");
    sigma->add_option("t", t)->required();
    sigma->add_option("a", sa)->required();
    sigma->add_option("b", sb)->required();
    sigma->add_option("c", sc)->required();
    sigma->add_flag("--fast", fast, "use the reciprocity recursion");
    sigma->add_option("--check-digits", check_digits,
                      "also run the high-precision numeric cross-check");
    sigma->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* classify_cmd = app.add_subcommand("classify", "admissibility of a triple");
    classify_cmd->add_option("a", sa)->required();
    classify_cmd->add_option("b", sb)->required();
    classify_cmd->add_option("c", sc)->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* bounds_cmd = app.add_subcommand("bounds", "lower/upper bounds and g");
    bounds_cmd->add_option("a", sa)->required();
    bounds_cmd->add_option("b", sb)->required();
    bounds_cmd->add_option("c", sc)->required();
    bounds_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    ExperimentConfig config;
    config.workers = default_workers();
    std::string out_dir = "experiment_out";
    std::string exp_format = "csv";
    double bin_width = 0.25;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo run over admissible triples");
    experiment->add_option("--n", config.n, "admissible triples to sample");
    experiment->add_option("--lo", config.lo);
    experiment->add_option("--hi", config.hi);
    experiment->add_option("--seed", config.seed);
    experiment->add_option("--workers", config.workers);
    experiment->add_option("--out", out_dir, "output directory");
    experiment->add_option("--format", exp_format)->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--bin-width", bin_width, "histogram bin width");

    std::int64_t verify_max = 40;
    auto* verify = app.add_subcommand("verify", "formula-vs-oracle verification suites");
    verify->add_option("--max", verify_max)->check(CLI::Range(2, 200));

    auto* table = app.add_subcommand("table", "reproduce the 24-row extreme-ratio table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(copt);
        if (count->parsed()) return run_count(t, parts, positive, oracle, format);
        if (sigma->parsed()) return run_sigma(t, sa, sb, sc, fast, check_digits, format);
        if (classify_cmd->parsed()) return run_classify(sa, sb, sc, format);
        if (bounds_cmd->parsed()) return run_bounds(sa, sb, sc, format);
        if (experiment->parsed())
            return run_experiment_cmd(config, out_dir, exp_format, bin_width);
        if (verify->parsed()) return run_verify(verify_max);
        if (table->parsed()) return run_table();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
