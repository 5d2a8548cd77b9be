#pragma once

// Benchmark harness: repeated verified trials over the workload generators,
// per-trial counter capture, paired win-fraction significance, and CSV
// emission for offline plotting.

#include <blqs/counters.hpp>
#include <blqs/pivot.hpp>
#include <blqs/sort.hpp>
#include <blqs/workload.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blqs {

// One benchmarked sort column: a library algorithm with a pivot strategy,
// or the trusted reference sort.
struct AlgoSpec {
    std::string name;
    Algo algo = Algo::one_pivot;
    bool reference = false;
    PivotStrategy strategy = PivotStrategy::adaptive();
    std::string strategy_name = "adaptive";
};

// Accepted names: "classic", "L1", "L2", "reference"; the two-argument form
// takes a strategy-catalog name and rejects arity mismatches.
AlgoSpec algo_spec(std::string_view algo_name);
AlgoSpec algo_spec(std::string_view algo_name, std::string_view strategy_name);

struct BenchConfig {
    std::uint64_t seed = 1;
    std::size_t block_size = 1024;
    std::size_t insertion_cutoff = 20;
    bool counters = false;
    bool equal_guard = true;
};

struct BenchRecord {
    std::string algorithm;
    std::string strategy;
    Dist distribution = Dist::permutation;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t elapsed_ns = 0;
    bool has_counters = false;
    Counters counters{};
    std::size_t block_size = 0;
};

// A benchmarked sort produced wrong output; what() names the offending
// (algorithm, distribution, n, trial, seed).
class BenchVerificationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-trial seed; independent of the algorithm so every column sorts the
// same inputs.
std::uint64_t trial_seed(std::uint64_t master, Dist d, std::size_t n,
                         std::size_t trial);

// Runs trials for every (algorithm, distribution, n) cell: one discarded
// warm-up per cell, then `trials` timed runs, each verified (ascending and
// multiset-preserving) before its record is kept.
std::vector<BenchRecord> run_bench(const std::vector<AlgoSpec>& algorithms,
                                   const std::vector<Dist>& distributions,
                                   const std::vector<std::size_t>& sizes,
                                   std::size_t trials, const BenchConfig& cfg = {});

struct SummaryRow {
    std::string algorithm;
    std::string strategy;
    Dist distribution = Dist::permutation;
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean_elapsed_ns = 0.0;
    double mean_scaled_ns = 0.0;  // mean of elapsed_ns / (n ln n)
};

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

struct SignificanceReport {
    std::string algo_a;
    std::string algo_b;
    double win_fraction = 0.0;  // trials where a was strictly faster
    bool significant = false;   // win_fraction >= 0.95, decided in integers
};

// Pairs records of the two algorithms by (distribution, n, trial); both
// sides must cover exactly the same trials.
SignificanceReport significance(const std::vector<BenchRecord>& records,
                                std::string_view algo_a, std::string_view algo_b);

// CSV with '#'-prefixed metadata rows (seed, generator, config) and a fixed
// header; counter cells are left empty when counters were not collected.
std::string records_csv(const std::vector<BenchRecord>& records,
                        const BenchConfig& cfg);
std::string summary_csv(const std::vector<SummaryRow>& rows, const BenchConfig& cfg);

// Mean-time rows for the one- and two-pivot block sorts across block sizes.
std::string sweep_block_size(const std::vector<std::size_t>& block_sizes,
                             std::size_t n, Dist distribution, std::size_t trials,
                             const BenchConfig& cfg = {});

}  // namespace blqs
