// Pivot selection: direct endpoint pivots, pivots drawn from a sorted sample
// (sample vector t), median-of-25-medians, and a length-adaptive wrapper.
//
// Sample-vector convention: t = (t0, ..., tk) requests a sample of
// kappa = k + sum(t) elements taken from the front of the slice; after
// sorting the sample, pivot i (0-based) is the element at sorted position
// i + t0 + ... + t_{i-1}. The chosen pivots are swapped to the positions the
// partition routines expect (one pivot: back; two pivots: front and back),
// which takes a constant number of swaps and leaves the rest of the sample
// sorted at the slice front.
#pragma once

#include <blqs/counters.hpp>
#include <blqs/partition.hpp>

#include <cassert>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blqs {

struct PivotStrategy {
    enum class Kind { direct, sorted_sample, median_of_medians, adaptive };

    Kind kind = Kind::adaptive;
    int pivots = 0;      // 1 or 2; 0 = "match the sort's arity"
    std::vector<int> t;  // sorted_sample only, size pivots+1, entries >= 0

    // Adaptive tier thresholds (slice length n):
    //   n < direct_below          -> direct
    //   n < three_below           -> 3-sample   ((1,1) / (0,0,1))
    //   n < five_below            -> 5-sample   ((2,2) / (0,1,2))
    //   otherwise                 -> median of 25 medians
    std::size_t direct_below = 128;
    std::size_t three_below = 1024;
    std::size_t five_below = 65536;

    static PivotStrategy direct(int k) {
        PivotStrategy s;
        s.kind = Kind::direct;
        s.pivots = k;
        return s;
    }
    static PivotStrategy sorted_sample(std::vector<int> tv) {
        assert(tv.size() >= 2);
        PivotStrategy s;
        s.kind = Kind::sorted_sample;
        s.pivots = static_cast<int>(tv.size()) - 1;
        s.t = std::move(tv);
        return s;
    }
    static PivotStrategy median_of_medians(int k) {
        PivotStrategy s;
        s.kind = Kind::median_of_medians;
        s.pivots = k;
        return s;
    }
    static PivotStrategy adaptive(int k = 0) {
        PivotStrategy s;
        s.kind = Kind::adaptive;
        s.pivots = k;
        return s;
    }

    // Total sample size, pivots included. For the adaptive strategy this is
    // the largest sample any tier uses.
    int kappa() const {
        switch (kind) {
            case Kind::direct: return pivots;
            case Kind::sorted_sample:
                return static_cast<int>(t.size()) - 1 +
                       std::accumulate(t.begin(), t.end(), 0);
            case Kind::median_of_medians: return 25;
            case Kind::adaptive: return 25;
        }
        return 0;
    }

    // Concrete strategy for a slice of length n (identity for fixed kinds).
    PivotStrategy resolve(std::size_t n) const {
        if (kind != Kind::adaptive) return *this;
        assert(pivots == 1 || pivots == 2);
        if (n < direct_below) return direct(pivots);
        if (n < three_below)
            return sorted_sample(pivots == 1 ? std::vector<int>{1, 1}
                                             : std::vector<int>{0, 0, 1});
        if (n < five_below)
            return sorted_sample(pivots == 1 ? std::vector<int>{2, 2}
                                             : std::vector<int>{0, 1, 2});
        return median_of_medians(pivots);
    }

    // Same strategy bound to a concrete pivot count (resolves the 0 default).
    PivotStrategy for_arity(int k) const {
        PivotStrategy s = *this;
        if (s.pivots == 0) s.pivots = k;
        return s;
    }
};

namespace detail {

// Orders the sample / pivots in place for a *resolved* (non-adaptive)
// strategy; the partition routine can then run over the full slice with its
// pivots at the boundary.
template <class T, class C>
void select_core(T* a, std::size_t lo, std::size_t hi, const PivotStrategy& s,
                 C& ctr) {
    const std::size_t n = hi - lo;
    switch (s.kind) {
        case PivotStrategy::Kind::direct: {
            assert(n > static_cast<std::size_t>(s.pivots));
            if (s.pivots == 2) {
                ctr.sample_cmp(1);  // endpoint ordering test
                ctr.sample_ma(2);
                if (a[hi - 1] < a[lo]) {
                    std::swap(a[lo], a[hi - 1]);
                    ctr.swaps(1);
                }
            }
            return;
        }
        case PivotStrategy::Kind::sorted_sample: {
            const std::size_t kappa = static_cast<std::size_t>(s.kappa());
            assert(n > kappa);
            insertion_core(a + lo, kappa, SampleTap<C>{ctr});
            if (s.pivots == 1) {
                std::swap(a[lo + static_cast<std::size_t>(s.t[0])], a[hi - 1]);
                ctr.swaps(1);
            } else {
                const std::size_t pp = lo + static_cast<std::size_t>(s.t[0]);
                const std::size_t qq =
                    lo + static_cast<std::size_t>(s.t[0] + s.t[1]) + 1;
                std::swap(a[pp], a[lo]);
                std::swap(a[qq], a[hi - 1]);
                ctr.swaps(2);
            }
            return;
        }
        case PivotStrategy::Kind::median_of_medians: {
            assert(n > 25);
            struct Med {
                T value;
                std::size_t pos;
            };
            Med med[5];
            for (std::size_t g = 0; g < 5; ++g) {
                insertion_core(a + lo + 5 * g, 5, SampleTap<C>{ctr});
                med[g] = {a[lo + 5 * g + 2], lo + 5 * g + 2};
            }
            // Order the five medians by value (comparisons on copies: counted
            // as sample comparisons, no array cells touched).
            for (std::size_t i = 1; i < 5; ++i) {
                Med key = med[i];
                std::size_t j = i;
                while (j > 0) {
                    ctr.sample_cmp(1);
                    if (!(key.value < med[j - 1].value)) break;
                    med[j] = med[j - 1];
                    --j;
                }
                med[j] = key;
            }
            std::swap(a[med[2].pos], a[hi - 1]);
            ctr.swaps(1);
            if (s.pivots == 2) {
                std::swap(a[med[0].pos], a[lo]);
                ctr.swaps(1);
            }
            return;
        }
        case PivotStrategy::Kind::adaptive:
            assert(false && "select_core requires a resolved strategy");
            return;
    }
}

}  // namespace detail

// Orders the pivots of `strategy` (resolved against a.size() if adaptive)
// into the boundary positions the partition routines expect; returns the
// pivot count. Requires a.size() > kappa(resolved strategy).
template <class T>
int select_pivots(std::span<T> a, const PivotStrategy& strategy) {
    const PivotStrategy r = strategy.resolve(a.size());
    assert(a.size() > static_cast<std::size_t>(r.kappa()));
    detail::NoCount nc;
    detail::select_core(a.data(), 0, a.size(), r, nc);
    return r.pivots;
}

struct CatalogEntry {
    std::string name;
    PivotStrategy strategy;
};

// Named strategies; the names are the CLI vocabulary for --strategy.
// Reading rule: "<pivot count> (<sorted-sample positions> of <sample size>)",
// with * marking the median-of-25-medians variants.
inline const std::vector<CatalogEntry>& strategy_catalog() {
    static const std::vector<CatalogEntry> cat = {
        {"1 (direct)", PivotStrategy::direct(1)},
        {"2 (direct)", PivotStrategy::direct(2)},
        {"1 (2 of 3)", PivotStrategy::sorted_sample({1, 1})},
        {"2 (1,2 of 3)", PivotStrategy::sorted_sample({0, 0, 1})},
        {"1 (3 of 5)", PivotStrategy::sorted_sample({2, 2})},
        {"2 (1,3 of 5)", PivotStrategy::sorted_sample({0, 1, 2})},
        {"2 (2,4 of 5)", PivotStrategy::sorted_sample({1, 1, 1})},
        {"1 (3 of 5*)", PivotStrategy::median_of_medians(1)},
        {"2 (1,3 of 5*)", PivotStrategy::median_of_medians(2)},
        {"1 (adaptive)", PivotStrategy::adaptive(1)},
        {"2 (adaptive)", PivotStrategy::adaptive(2)},
        {"adaptive", PivotStrategy::adaptive(0)},
    };
    return cat;
}

// Whitespace-insensitive catalog lookup; nullptr when absent.
inline const PivotStrategy* find_strategy(std::string_view name) {
    auto squash = [](std::string_view v) {
        std::string out;
        for (char ch : v)
            if (ch != ' ' && ch != '\t') out.push_back(ch);
        return out;
    };
    const std::string want = squash(name);
    for (const auto& e : strategy_catalog())
        if (squash(e.name) == want) return &e.strategy;
    return nullptr;
}

}  // namespace blqs
