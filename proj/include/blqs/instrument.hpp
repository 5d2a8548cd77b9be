// Instrumented entry points: the same sorts and partitions bound to a
// Counters context, plus the exhaustive small-n expectation oracle.
#pragma once

#include <blqs/counters.hpp>
#include <blqs/partition.hpp>
#include <blqs/pivot.hpp>
#include <blqs/rational.hpp>
#include <blqs/sort.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace blqs {

// Full sort with counting. Instrumented and plain runs produce bit-identical
// arrays for identical inputs and configs.
template <class T>
Counters instrumented_sort(Algo algo, std::span<T> a, const SortConfig& cfg = {}) {
    cfg.validate(algo);
    Counters c;
    detail::CountRef ref{&c};
    detail::sort_driver(algo, a.data(), a.size(), cfg, ref);
    return c;
}

// Pivot selection plus exactly one partition over the whole slice, counted.
// The strategy is resolved against the slice length; requires
// a.size() > kappa(resolved).
template <class T>
Counters instrumented_partition(Algo algo, std::span<T> a,
                                const PivotStrategy& strategy,
                                std::size_t block_size = 1024) {
    Counters c;
    detail::CountRef ref{&c};
    const PivotStrategy s = strategy.for_arity(algo == Algo::two_pivot ? 2 : 1)
                                .resolve(a.size());
    if (a.size() <= static_cast<std::size_t>(s.kappa()))
        throw std::invalid_argument("slice not longer than the pivot sample");
    detail::select_core(a.data(), 0, a.size(), s, ref);
    std::vector<std::uint32_t> blk(detail::block_buffer_len(block_size, a.size()));
    switch (algo) {
        case Algo::classic:
            detail::lomuto_classic_core(a.data(), 0, a.size(), ref);
            break;
        case Algo::one_pivot:
            detail::block_one_core(a.data(), 0, a.size(), block_size, blk.data(), ref);
            break;
        case Algo::two_pivot:
            detail::block_two_core(a.data(), 0, a.size(), block_size, blk.data(), ref);
            break;
    }
    return c;
}

// Expected per-partition cost of one partition step: the exact average of the
// instrumented counters over all n! permutations of {1..n}. `cmp` averages
// the pivot comparisons; `ma` averages scanned/placed cells plus the boundary
// accesses, so the additive constant of the cost formulas is part of the
// result. Pivot-sample sorting work is excluded (it is not partitioning).
struct ExpectedPartitionCost {
    rational cmp;
    rational ma;
};

inline ExpectedPartitionCost brute_force_expected_partition_cost(
    Algo scheme, int n, const PivotStrategy& strategy) {
    if (n > 9) throw std::invalid_argument("brute force enumerates n! permutations; n must be <= 9");
    const PivotStrategy s =
        strategy.for_arity(scheme == Algo::two_pivot ? 2 : 1)
            .resolve(static_cast<std::size_t>(n));
    if (n <= s.kappa())
        throw std::invalid_argument("n not larger than the pivot sample");

    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;

    std::uint64_t cmp_sum = 0, ma_sum = 0, count = 0;
    std::vector<std::int64_t> work(perm.size());
    do {
        work = perm;
        Counters c = instrumented_partition(
            scheme, std::span<std::int64_t>(work), s, 1024);
        cmp_sum += c.partition_cmp;
        ma_sum += c.partition_ma + c.boundary_ma;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return {rational(cmp_sum) / count, rational(ma_sum) / count};
}

// Convenience overload: sample vector -> sorted-sample strategy.
inline ExpectedPartitionCost brute_force_expected_partition_cost(
    Algo scheme, int n, const std::vector<int>& t) {
    return brute_force_expected_partition_cost(scheme, n,
                                               PivotStrategy::sorted_sample(t));
}

}  // namespace blqs
