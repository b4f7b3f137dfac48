#include "frobex/experiment.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace frobex;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.n = 60;
    cfg.lo = 2;
    cfg.hi = 120;
    cfg.seed = 42;
    cfg.workers = 1;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.lo = 10;
    cfg.hi = 9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.lo = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sampling is deterministic and admissible") {
    ExperimentConfig cfg = small_config();
    SampleStats s1, s2;
    auto t1 = sample_triples(cfg, &s1);
    auto t2 = sample_triples(cfg, &s2);
    REQUIRE(t1.size() == 60);
    CHECK(s1.draws == s2.draws);
    CHECK(s1.rejected == s2.rejected);
    CHECK(s1.draws == s1.rejected + 60);
    CHECK(s1.rejected == s1.rejected_not_coprime + s1.rejected_member_representable +
                             s1.rejected_divides_sum + s1.rejected_almost_arithmetic);
    for (std::size_t i = 0; i < t1.size(); ++i) {
        CHECK(t1[i].a == t2[i].a);
        CHECK(t1[i].b == t2[i].b);
        CHECK(t1[i].c == t2[i].c);
        CHECK(t1[i].a >= cfg.lo);
        CHECK(t1[i].c <= cfg.hi);
        CHECK(classify(t1[i].a, t1[i].b, t1[i].c).admissible());
    }
    cfg.seed = 43;
    auto t3 = sample_triples(cfg);
    bool differs = false;
    for (std::size_t i = 0; i < t3.size(); ++i)
        if (t3[i].a != t1[i].a || t3[i].b != t1[i].b || t3[i].c != t1[i].c) differs = true;
    CHECK(differs);
}

TEST_CASE("run_experiment fields are consistent") {
    ExperimentConfig cfg = small_config();
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.records.size() == 60);
    const double sqrt3 = std::sqrt(3.0);
    for (const auto& r : res.records) {
        double z = std::sqrt(double(r.a) * r.b * r.c);
        CHECK(r.z == doctest::Approx(z).epsilon(1e-12));
        CHECK(r.sqrt3z == doctest::Approx(sqrt3 * z).epsilon(1e-12));
        CHECK(r.zpow == doctest::Approx(std::pow(z, 1.25)).epsilon(1e-12));
        CHECK(r.R == doctest::Approx(r.f / z).epsilon(1e-12));
        CHECK(r.R >= sqrt3);  // Davison floor for admissible triples
        std::int64_t g = r.f - (r.a + r.b + r.c);
        CHECK(frobenius_sieve({r.a, r.b, r.c}) == g);
    }
    CHECK(scan_conjecture(res.records).empty());
    CHECK(res.stats.n == 60);
    CHECK(tail_census(res.records, 0.0) == 60);
    CHECK(tail_census(res.records, 1e9) == 0);
}

TEST_CASE("record order is independent of the worker count") {
    ExperimentConfig cfg = small_config();
    ExperimentResult one = run_experiment(cfg);
    cfg.workers = 4;
    ExperimentResult four = run_experiment(cfg);
    REQUIRE(one.records.size() == four.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) {
        CHECK(one.records[i].a == four.records[i].a);
        CHECK(one.records[i].f == four.records[i].f);
        CHECK(one.records[i].R == four.records[i].R);
    }
}

TEST_CASE("summarize on a hand-checked sample") {
    std::vector<ExperimentRecord> recs;
    for (double r : {1.0, 2.0, 3.0, 4.0}) recs.push_back({0, 0, 0, 0, 0, 0, 0, r});
    SummaryStats s = summarize(recs);
    CHECK(s.n == 4);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.median == doctest::Approx(2.5));
    CHECK(s.min == doctest::Approx(1.0));
    CHECK(s.max == doctest::Approx(4.0));
    // linear interpolation between order statistics: h = p*(n-1)
    CHECK(s.q1 == doctest::Approx(1.75));
    CHECK(s.q3 == doctest::Approx(3.25));
    CHECK(s.stdev == doctest::Approx(std::sqrt(5.0 / 3.0)));

    recs.resize(1);
    s = summarize(recs);
    CHECK(s.median == doctest::Approx(1.0));
    CHECK(s.stdev == 0.0);

    CHECK(summarize({}).n == 0);
}

TEST_CASE("conjecture scan flags synthetic violations") {
    std::vector<ExperimentRecord> recs;
    recs.push_back({2, 3, 5, 200, 0, 0, 0, 0});  // 200^8 > 30^5
    recs.push_back({2, 3, 5, 4, 0, 0, 0, 0});    // 4^8 = 65536 < 30^5
    auto bad = scan_conjecture(recs);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].f == 200);
}

TEST_CASE("extreme table reproduces") {
    const auto& table = extreme_table();
    REQUIRE(table.size() == 24);
    CHECK(table[0].a == 487);
    CHECK(table[0].f == 121755);
    auto reports = reproduce_extremes();
    REQUIRE(reports.size() == 24);
    for (const auto& rep : reports) {
        CAPTURE(rep.expected.a);
        CAPTURE(rep.expected.b);
        CAPTURE(rep.expected.c);
        CHECK(rep.pass_f);
        CHECK(rep.pass_z);
        CHECK(rep.pass_sqrt3z);
        CHECK(rep.pass_zpow);
        CHECK(rep.pass_R);
    }
}

TEST_CASE("emit_data writes complete, deterministic files") {
    ExperimentConfig cfg = small_config();
    ExperimentResult res = run_experiment(cfg);
    auto dir = std::filesystem::temp_directory_path() / "frobex-test-emit";
    std::filesystem::remove_all(dir);

    emit_data(res, cfg, DataFormat::Csv, dir / "csv");
    std::string records = slurp(dir / "csv" / "records.csv");
    CHECK(records.substr(0, records.find('\n')) == "a,b,c,f,z,sqrt3z,zpow54,R");
    std::size_t lines = std::count(records.begin(), records.end(), '\n');
    CHECK(lines == 61);  // header + one row per record

    std::string hist = slurp(dir / "csv" / "histogram.csv");
    std::istringstream hin(hist);
    std::string line;
    std::getline(hin, line);
    CHECK(line == "bin_lo,bin_hi,count");
    std::int64_t total = 0;
    bool first = true;
    while (std::getline(hin, line)) {
        std::istringstream cells(line);
        std::string lo_s, hi_s, n_s;
        std::getline(cells, lo_s, ',');
        std::getline(cells, hi_s, ',');
        std::getline(cells, n_s, ',');
        if (first) {
            // bins anchored at 1.5 with width 0.25
            double lo = std::stod(lo_s);
            double anchored = (lo - 1.5) / 0.25;
            CHECK(anchored == doctest::Approx(std::round(anchored)).epsilon(1e-9));
            first = false;
        }
        total += std::stoll(n_s);
    }
    CHECK(total == 60);

    std::string summary = slurp(dir / "csv" / "summary.csv");
    CHECK(summary.find("n,mean,median,stdev,min,max,q1,q3") == 0);

    std::string meta = slurp(dir / "csv" / "meta.json");
    CHECK(meta.find("\"seed\"") != std::string::npos);
    CHECK(meta.find(kGeneratorName) != std::string::npos);
    CHECK(meta.find(kVersion) != std::string::npos);
    CHECK(meta.find("workers") == std::string::npos);

    // byte-identical across worker counts
    cfg.workers = 3;
    ExperimentResult res3 = run_experiment(cfg);
    emit_data(res3, cfg, DataFormat::Csv, dir / "csv3");
    CHECK(slurp(dir / "csv3" / "records.csv") == records);
    CHECK(slurp(dir / "csv3" / "histogram.csv") == hist);
    CHECK(slurp(dir / "csv3" / "summary.csv") == summary);
    CHECK(slurp(dir / "csv3" / "meta.json") == meta);

    emit_data(res, cfg, DataFormat::Json, dir / "json");
    CHECK(std::filesystem::exists(dir / "json" / "records.json"));
    CHECK(std::filesystem::exists(dir / "json" / "histogram.json"));
    CHECK(std::filesystem::exists(dir / "json" / "summary.json"));
    CHECK(std::filesystem::exists(dir / "json" / "meta.json"));

    std::filesystem::remove_all(dir);
}
