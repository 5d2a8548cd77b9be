#pragma once

// Analytical cost model for sampled one- and two-pivot partitioning schemes
// and multiway sample-sort: expected leading-term constants of comparisons
// and array accesses, the optimal sample vector per sample budget, and an
// exact dynamic program for the full split recurrence.

#include <blqs/rational.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blqs {

// H1: one pivot, crossing-pointer partitioning.
// L1/L2: one-/two-pivot block partitioning.
// sample_sort: k-way splitting with 2^l pivots.
enum class Scheme { H1, L1, L2, sample_sort };

// cmp: element comparisons; ma: array accesses; cmp_ma: their sum.
enum class Measure { cmp, ma, cmp_ma };

std::string_view scheme_name(Scheme s);
std::string_view measure_name(Measure m);
std::optional<Scheme> scheme_from_name(std::string_view name);
std::optional<Measure> measure_from_name(std::string_view name);

// A sample vector t has k+1 gap entries for k pivots: a sample of
// kappa = k + sum(t) elements is sorted and the pivots are taken so that
// t[i] sample elements fall between consecutive pivots.
int pivot_count_of(const std::vector<int>& t);
int kappa_of(const std::vector<int>& t);

// Entropy-like normalizer of the split distribution:
// H(t) = sum_i ((t_i+1)/(kappa+1)) * (H_{kappa+1} - H_{t_i+1}).
// Exact form requires kappa <= 300; entropy_H_d works for any kappa.
rational entropy_H(const std::vector<int>& t);
double entropy_H_d(const std::vector<int>& t);

// Coefficient of n in the expected cost a*n + O(1) of one partitioning step.
struct CostConstant {
    Scheme scheme;
    Measure measure;
    rational a;
};

CostConstant partition_constant(Scheme scheme, Measure measure,
                                const std::vector<int>& t);

// Leading coefficient of n ln n in the expected total sorting cost: a(t)/H(t).
rational sorting_constant(Scheme scheme, Measure measure, const std::vector<int>& t);
double sorting_constant_d(Scheme scheme, Measure measure, const std::vector<int>& t);

struct CostRow {
    Scheme scheme;
    int additional_sample_size;  // kappa - k
    Measure measure;
    std::vector<int> best_t;
    double constant;     // minimized sorting constant
    std::string printed; // the constant at 2 decimals, rounded half away from zero
};

// Minimize the sorting constant over all t with sum(t) = additional_sample_size;
// ties go to the lexicographically smallest t. Defined for H1, L1, L2.
CostRow best_t(Scheme scheme, Measure measure, int additional_sample_size);

// The 36 reference cells: schemes H1, L1, L2 with sample budgets
// {0,2,4,10} (one pivot) and {0,3,5,11} (two pivots), each under
// cmp, ma, cmp+ma. Rows ordered by scheme, then budget, then measure.
std::vector<CostRow> table1();

// Exact expectation E(C_n) for n = 0..n_max under the split recurrence:
// cost a*(n-kappa) + O(1) per step, children drawn by sampling kappa
// elements without replacement; base_cost(n) applies for n <= kappa
// (default 0). Bounds: n_max <= 1e5 for one pivot, <= 2000 otherwise.
std::vector<double> solve_recurrence_exact(
    Scheme scheme, Measure measure, const std::vector<int>& t, std::size_t n_max,
    std::function<double(std::size_t)> base_cost = {});

}  // namespace blqs
