// Cost counters and the counting-policy hooks threaded through the sort
// internals. Plain sorts instantiate the no-op policy, so they carry zero
// counting overhead; instrumented sorts bind a Counters context by reference.
#pragma once

#include <cstdint>

namespace blqs {

// Comparison / array-cell-access tallies for one sort (or partition) call.
//
// "ma" counts reach-events of the scanning and placement lines of the
// partition loops (one access per element classified, one per element placed
// by the left-block swap line). The compaction swaps of the two-pivot scheme
// move cells that the accounting deliberately excludes; raw swap totals are
// reported separately in total_swaps. Boundary work (pivot reads before the
// scan, final pivot placement swaps) is likewise kept in its own field so the
// additive constants stay visible instead of being folded into the per-call
// figures.
struct Counters {
    // Current (i.e. most recent) partition call.
    std::uint64_t partition_cmp = 0;  // pivot comparisons
    std::uint64_t partition_ma = 0;   // scanned/placed cell accesses

    // Whole-run accumulators.
    std::uint64_t total_cmp = 0;    // partitions + sample sorting + small ranges
    std::uint64_t total_ma = 0;     // counted accesses incl. boundary/sample/small
    std::uint64_t total_swaps = 0;  // every std::swap performed, incl. compaction

    // Itemized contributions (all already included in total_*).
    std::uint64_t boundary_ma = 0;    // per-partition pivot reads + final placements
    std::uint64_t sample_cmp = 0;     // pivot-sample sorting comparisons
    std::uint64_t sample_ma = 0;      // pivot-sample sorting cell accesses
    std::uint64_t smallsort_cmp = 0;  // below-cutoff insertion sort comparisons
    std::uint64_t smallsort_ma = 0;   // below-cutoff insertion sort cell accesses
    std::uint64_t driver_cmp = 0;     // recursion-driver comparisons (equal-pivots guard)
    std::uint64_t driver_ma = 0;      // cells the driver reads for those checks

    std::uint64_t partition_calls = 0;
    std::uint64_t max_depth = 0;  // deepest range processed; outermost = 1
};

namespace detail {

// No-op policy: every hook compiles away.
struct NoCount {
    static constexpr bool enabled = false;
    void pbegin() {}
    void cmp(std::uint64_t) {}
    void scan(std::uint64_t) {}
    void place(std::uint64_t) {}
    void swaps(std::uint64_t) {}
    void boundary(std::uint64_t) {}
    void sample_cmp(std::uint64_t) {}
    void sample_ma(std::uint64_t) {}
    void small_cmp(std::uint64_t) {}
    void small_ma(std::uint64_t) {}
    void driver_cmp(std::uint64_t) {}
    void driver_ma(std::uint64_t) {}
    void depth(std::uint64_t) {}
};

// Records into a Counters context.
struct CountRef {
    static constexpr bool enabled = true;
    Counters* c;

    void pbegin() {
        c->partition_cmp = 0;
        c->partition_ma = 0;
        ++c->partition_calls;
    }
    void cmp(std::uint64_t k) { c->partition_cmp += k; c->total_cmp += k; }
    void scan(std::uint64_t k) { c->partition_ma += k; c->total_ma += k; }
    void place(std::uint64_t k) { c->partition_ma += k; c->total_ma += k; }
    void swaps(std::uint64_t k) { c->total_swaps += k; }
    void boundary(std::uint64_t k) { c->boundary_ma += k; c->total_ma += k; }
    void sample_cmp(std::uint64_t k) { c->sample_cmp += k; c->total_cmp += k; }
    void sample_ma(std::uint64_t k) { c->sample_ma += k; c->total_ma += k; }
    void small_cmp(std::uint64_t k) { c->smallsort_cmp += k; c->total_cmp += k; }
    void small_ma(std::uint64_t k) { c->smallsort_ma += k; c->total_ma += k; }
    void driver_cmp(std::uint64_t k) { c->driver_cmp += k; c->total_cmp += k; }
    void driver_ma(std::uint64_t k) { c->driver_ma += k; c->total_ma += k; }
    void depth(std::uint64_t d) {
        if (d > c->max_depth) c->max_depth = d;
    }
};

// Channel adapters so the shared insertion-sort core can book its work either
// against the pivot-sample fields or the small-range fields.
template <class C>
struct SampleTap {
    C& inner;
    void cmp(std::uint64_t k) { inner.sample_cmp(k); }
    void touch(std::uint64_t k) { inner.sample_ma(k); }
};

template <class C>
struct SmallTap {
    C& inner;
    void cmp(std::uint64_t k) { inner.small_cmp(k); }
    void touch(std::uint64_t k) { inner.small_ma(k); }
};

}  // namespace detail
}  // namespace blqs
