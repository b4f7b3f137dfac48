#pragma once

// Monte Carlo harness: random admissible triples, Frobenius computation,
// descriptive statistics of R = f/z, extreme-ratio table verification,
// conjecture scan and plot-ready data emission.

#include "frobex/frobenius.hpp"
#include "frobex/numtheory.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace frobex {

inline constexpr const char* kVersion = "1.0.0";
// Sampling draws independent uniform integers with mt19937_64; the raw
// 64-bit stream is mapped to [lo,hi] by rejection, so the triple stream is
// identical on every conforming platform.
inline constexpr const char* kGeneratorName = "mt19937_64+rejection";

struct ExperimentConfig {
    std::int64_t n = 10000;      // target admissible-triple count
    std::int64_t lo = 1, hi = 750;
    std::uint64_t seed = 0;
    int workers = 1;

    void validate() const;
};

struct ExperimentRecord {
    std::int64_t a, b, c;
    std::int64_t f;
    double z;       // sqrt(abc)
    double sqrt3z;  // sqrt(3) * z
    double zpow;    // z^{5/4}
    double R;       // f / z
};

struct SummaryStats {
    std::size_t n = 0;
    double mean = 0, median = 0, stdev = 0;
    double min = 0, max = 0, q1 = 0, q3 = 0;
};

// Rejection bookkeeping of one sampling pass, by exclusion family.
struct SampleStats {
    std::int64_t draws = 0;
    std::int64_t rejected = 0;
    std::int64_t rejected_not_coprime = 0;
    std::int64_t rejected_member_representable = 0;
    std::int64_t rejected_divides_sum = 0;
    std::int64_t rejected_almost_arithmetic = 0;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    SummaryStats stats;
    SampleStats sampling;
};

// Draws uniform triples from [lo,hi]^3 and keeps the admissible ones until
// n are collected.  Fully reproducible for a fixed seed; aborts after
// 10^6 * n rejected draws.
std::vector<Triple> sample_triples(const ExperimentConfig& config,
                                   SampleStats* stats = nullptr);

// One record per sampled triple, Frobenius numbers via frobenius_search
// fanned out over config.workers; record order is the draw order
// regardless of worker count.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Mean, sample standard deviation (n-1), median and quartiles by linear
// interpolation between order statistics (h = p*(n-1)).
SummaryStats summarize(const std::vector<ExperimentRecord>& records);

// Records with f >= z^{5/4}, decided by the exact comparison
// f^8 >= (abc)^5.  Expected empty on admissible samples.
std::vector<ExperimentRecord> scan_conjecture(const std::vector<ExperimentRecord>& records);

std::int64_t tail_census(const std::vector<ExperimentRecord>& records, double threshold);

// One row of the published 24-entry extreme-ratio table (R > 7.5).
struct ExtremeRow {
    std::int64_t a, b, c, f;
    double z, sqrt3z;
    std::int64_t zpow;  // z^{5/4} as printed, an integer
    double R;
};

const std::array<ExtremeRow, 24>& extreme_table();

struct ExtremeRowReport {
    ExtremeRow expected;
    std::int64_t f_computed;
    double z, sqrt3z, zpow, R;
    bool pass_f, pass_z, pass_sqrt3z, pass_zpow, pass_R;
    bool pass() const { return pass_f && pass_z && pass_sqrt3z && pass_zpow && pass_R; }
};

// Recomputes f for every table row via frobenius_search and checks f
// exactly, z and sqrt(3)z to 1 decimal, z^{5/4} to the printed integer and
// R to 5 decimals.
std::vector<ExtremeRowReport> reproduce_extremes();

enum class DataFormat { Csv, Json };

// Writes the record table, histogram (default bin width 0.25 anchored at
// 1.5), five-number summary and a metadata block into `dir`.  The data
// files are byte-identical for identical configs.
void emit_data(const ExperimentResult& result, const ExperimentConfig& config,
               DataFormat format, const std::filesystem::path& dir,
               double bin_width = 0.25);

}  // namespace frobex
