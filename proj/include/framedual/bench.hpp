#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "framedual/dual.hpp"

namespace framedual {

struct BenchConfig {
    int dim = 0;      ///< r
    int count = 0;    ///< N
    int erasures = 0; ///< k; the erased set is {1, ..., k}
    std::uint64_t seed = 1;
    int trials = 1;
    double tol = kDefaultTol;
    std::string out_path;                   ///< CSV destination; empty = no file
    std::optional<std::string> frame_file;  ///< FRM1 file replacing random frames
};

/// Throws ConfigError on invalid settings.
void validate_config(const BenchConfig& cfg);

/// One profiled instance. Timing and error cells are empty when the method
/// was not applicable (singular system or early iteration stop). Timings are
/// seconds of the dual-construction call alone; errors are duality errors of
/// the constructed family against the reduced frame.
///   t1/e1: rank-one iteration starting from the canonical dual
///   t2/e2: k-by-k system starting from the canonical dual
///   t3/e3: direct canonical dual of the reduced frame (SPD solve baseline)
///   t4/e4: k-by-k system starting from a non-canonical dual (z1, z2)
///   t5/e5: rank-one iteration starting from a non-canonical dual (z1, z2)
struct BenchRecord {
    std::string test;
    int count = 0;
    int dim = 0;
    int erasures = 0;
    std::uint64_t seed = 0;
    std::optional<double> t1, t2, t3, t4_z1, t5_z1, t4_z2, t5_z2;
    std::optional<double> e1, e2, e3, e4_z1, e5_z1, e4_z2, e5_z2;
    std::optional<StatementReport> statements; ///< evaluated against z1
};

extern const char* const kCsvHeader;

/// Appendix-style randomized benchmark: per trial, draw a Gaussian frame
/// (regenerating up to 10 times until the erasure set leaves a spanning
/// family; throws MrcUnattainable past the budget), profile the canonical
/// constructions, then two random duals. With frame_file set, the fixed
/// frame is profiled with fresh random duals per trial.
std::vector<BenchRecord> run_random_bench(const BenchConfig& cfg);

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path);

struct DemoReport {
    std::string name;
    std::vector<std::string> lines;
    bool ok = true;
    std::vector<BenchRecord> records;
};

/// Built-in fixed instances: "example31", "example34" (dimension defaults
/// to 10) and "test9" (block-repeated frame with an early-stop dual,
/// dimension defaults to 300). Each demo prints statement evaluations and
/// dual families and verifies the expected outcomes; failures set ok=false.
DemoReport run_fixed_demo(const std::string& name, std::optional<int> dim = std::nullopt);

struct VerifyReport {
    std::vector<std::string> lines;
    bool ok = true;
};

/// Statement-lattice self-check: fixed counterexamples plus randomized
/// implication-chain, canonical-equivalence, and cross-method agreement
/// sweeps of the given size.
VerifyReport run_verify(int trials, std::uint64_t seed, double tol = kDefaultTol);

/// "trial 3: fastest t5(z1) = 0.123456 s" — the qualitative speed report.
std::string fastest_method_line(const BenchRecord& rec);

/// Median of each populated timing column across records.
std::vector<std::string> median_summary(const std::vector<BenchRecord>& records);

} // namespace framedual
