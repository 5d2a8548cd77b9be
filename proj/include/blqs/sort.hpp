// Sort drivers: quicksort loops over the partition cores with pivot
// selection, an insertion-sort cutoff, and (for the two-pivot variant) the
// equal-pivots guard that skips recursion into the middle group when both
// pivots compare equal — the duplicate-robustness device.
//
// Recursion is managed with an explicit work stack so heavily skewed inputs
// (which can nest ~n/kappa deep under front-of-slice sampling) cannot
// overflow the call stack; ranges are processed strictly left-to-right. The
// block offset buffer lives in a per-call workspace sized min(block_size, n)
// and is shared by every partition call of one sort.
#pragma once

#include <blqs/counters.hpp>
#include <blqs/partition.hpp>
#include <blqs/pivot.hpp>

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blqs {

enum class Algo { classic, one_pivot, two_pivot };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::classic: return "classic";
        case Algo::one_pivot: return "L1";
        case Algo::two_pivot: return "L2";
    }
    return "?";
}

struct SortConfig {
    std::size_t block_size = 1024;
    std::size_t insertion_cutoff = 20;
    bool equal_guard = true;
    PivotStrategy strategy = PivotStrategy::adaptive();

    // Throws std::invalid_argument when the configuration cannot drive the
    // given algorithm (pivot-count mismatch, cutoff too small for the sample,
    // unusable block size).
    void validate(Algo algo) const {
        const int arity = algo == Algo::two_pivot ? 2 : 1;
        if (block_size < 1 || block_size > (std::size_t{1} << 24))
            throw std::invalid_argument("block_size must be in [1, 2^24]");
        if (strategy.pivots != 0 && strategy.pivots != arity)
            throw std::invalid_argument("strategy pivot count does not match algorithm");
        if (strategy.kind == PivotStrategy::Kind::adaptive) {
            if (insertion_cutoff < static_cast<std::size_t>(arity))
                throw std::invalid_argument("insertion_cutoff below pivot count");
            // Each tier must only ever see slices longer than its sample.
            if (strategy.direct_below < 4 || strategy.three_below < 6 ||
                strategy.five_below < 26 ||
                strategy.direct_below > strategy.three_below ||
                strategy.three_below > strategy.five_below)
                throw std::invalid_argument("adaptive thresholds unusable");
        } else {
            if (insertion_cutoff < static_cast<std::size_t>(strategy.kappa()))
                throw std::invalid_argument(
                    "insertion_cutoff must be >= the strategy's sample size");
        }
    }
};

namespace detail {

struct Range {
    std::size_t lo, hi;
    std::uint64_t depth;
};

// One sort call's scratch state: pending ranges + shared block offsets.
struct Workspace {
    std::vector<Range> pending;
    std::vector<std::uint32_t> block;
};

template <class T, class C>
void sort_driver(Algo algo, T* a, std::size_t n, const SortConfig& cfg, C& ctr) {
    if (n <= 1) return;
    Workspace ws;
    ws.pending.reserve(64);
    ws.block.resize(block_buffer_len(cfg.block_size, n));
    const PivotStrategy strat =
        cfg.strategy.for_arity(algo == Algo::two_pivot ? 2 : 1);

    auto push = [&ws](std::size_t lo, std::size_t hi, std::uint64_t d) {
        if (hi - lo >= 2) ws.pending.push_back({lo, hi, d});
    };
    push(0, n, 1);
    while (!ws.pending.empty()) {
        const Range r = ws.pending.back();
        ws.pending.pop_back();
        ctr.depth(r.depth);
        const std::size_t len = r.hi - r.lo;
        if (len <= cfg.insertion_cutoff) {
            insertion_core(a + r.lo, len, SmallTap<C>{ctr});
            continue;
        }
        const PivotStrategy s = strat.resolve(len);
        select_core(a, r.lo, r.hi, s, ctr);
        if (algo == Algo::two_pivot) {
            const PartitionResult2 pr =
                block_two_core(a, r.lo, r.hi, cfg.block_size, ws.block.data(), ctr);
            bool skip_middle = false;
            if (cfg.equal_guard) {
                ctr.driver_cmp(1);
                ctr.driver_ma(2);
                skip_middle = !(a[pr.p_index] < a[pr.q_index]);
            }
            // Children pushed right-to-left so they pop left-to-right.
            push(pr.q_index + 1, r.hi, r.depth + 1);
            if (!skip_middle) push(pr.p_index + 1, pr.q_index, r.depth + 1);
            push(r.lo, pr.p_index, r.depth + 1);
        } else {
            const std::size_t pi =
                algo == Algo::one_pivot
                    ? block_one_core(a, r.lo, r.hi, cfg.block_size, ws.block.data(), ctr)
                    : lomuto_classic_core(a, r.lo, r.hi, ctr);
            push(pi + 1, r.hi, r.depth + 1);
            push(r.lo, pi, r.depth + 1);
        }
    }
}

}  // namespace detail

template <class T>
void sort_one_pivot(std::span<T> a, const SortConfig& cfg = {}) {
    cfg.validate(Algo::one_pivot);
    detail::NoCount nc;
    detail::sort_driver(Algo::one_pivot, a.data(), a.size(), cfg, nc);
}

template <class T>
void sort_two_pivot(std::span<T> a, const SortConfig& cfg = {}) {
    cfg.validate(Algo::two_pivot);
    detail::NoCount nc;
    detail::sort_driver(Algo::two_pivot, a.data(), a.size(), cfg, nc);
}

template <class T>
void sort_classic(std::span<T> a, const SortConfig& cfg = {}) {
    cfg.validate(Algo::classic);
    detail::NoCount nc;
    detail::sort_driver(Algo::classic, a.data(), a.size(), cfg, nc);
}

template <class T>
void run_sort(Algo algo, std::span<T> a, const SortConfig& cfg = {}) {
    switch (algo) {
        case Algo::classic: sort_classic(a, cfg); return;
        case Algo::one_pivot: sort_one_pivot(a, cfg); return;
        case Algo::two_pivot: sort_two_pivot(a, cfg); return;
    }
}

}  // namespace blqs
