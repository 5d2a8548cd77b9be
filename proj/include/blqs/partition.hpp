// Partition cores: the classic single-scan one-pivot partition and its
// block-buffered one- and two-pivot variants. The block variants classify
// elements with branch-free indicator arithmetic — the loop bodies contain no
// branch that depends on element values:
//
//     block[num] = c; num += (element compares into the moving group);
//
// and then perform the buffered swaps in a second tight loop. All element
// ordering goes through operator< only.
#pragma once

#include <blqs/counters.hpp>

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace blqs {

struct PartitionResult1 {
    std::size_t pivot_index;
};

struct PartitionResult2 {
    std::size_t p_index;
    std::size_t q_index;
};

namespace detail {

// Insertion sort shared by the small-range path and pivot-sample sorting.
// Channel accounting: one touch per inserted element (key load) plus one
// comparison and one touch per probed predecessor.
template <class T, class Chan>
void insertion_core(T* a, std::size_t n, Chan&& ch) {
    for (std::size_t i = 1; i < n; ++i) {
        T key = std::move(a[i]);
        ch.touch(1);
        std::size_t j = i;
        while (j > 0) {
            ch.cmp(1);
            ch.touch(1);
            if (!(key < a[j - 1])) break;
            a[j] = std::move(a[j - 1]);
            --j;
        }
        a[j] = std::move(key);
    }
}

// Classic one-pivot scan (pivot = last element): elements strictly below the
// pivot are swapped to the growing left region; returns the pivot's final
// position. [lo, i) < pivot, a[i] = pivot, (i, hi) >= pivot.
template <class T, class C>
std::size_t lomuto_classic_core(T* a, std::size_t lo, std::size_t hi, C& ctr) {
    assert(hi > lo);
    ctr.pbegin();
    const T p = a[hi - 1];
    ctr.boundary(1);  // pivot read
    std::size_t i = lo;
    for (std::size_t j = lo; j + 1 < hi; ++j) {
        ctr.cmp(1);
        ctr.scan(1);
        if (a[j] < p) {
            std::swap(a[i], a[j]);
            ctr.place(1);
            ctr.swaps(1);
            ++i;
        }
    }
    std::swap(a[i], a[hi - 1]);
    ctr.boundary(1);  // final pivot placement
    ctr.swaps(1);
    return i;
}

// Block-buffered one-pivot partition (pivot = last element). Equivalent to
// lomuto_classic_core: same pivot destination and identical left segment; the
// right segment may be permuted differently. blk must hold at least
// min(bsz, hi-lo) entries.
template <class T, class C>
std::size_t block_one_core(T* a, std::size_t lo, std::size_t hi, std::size_t bsz,
                           std::uint32_t* blk, C& ctr) {
    assert(hi > lo && bsz >= 1);
    ctr.pbegin();
    const T p = a[hi - 1];
    ctr.boundary(1);
    std::size_t i = lo, j = lo;
    const std::size_t end = hi - 1;
    while (j < end) {
        const std::size_t t = bsz < end - j ? bsz : end - j;
        std::size_t num = 0;
        for (std::size_t c = 0; c < t; ++c) {
            blk[num] = static_cast<std::uint32_t>(c);
            num += static_cast<std::size_t>(a[j + c] < p);
        }
        ctr.cmp(t);
        ctr.scan(t);
        for (std::size_t c = 0; c < num; ++c) {
            std::swap(a[i], a[j + blk[c]]);
            ++i;
        }
        ctr.place(num);
        ctr.swaps(num);
        j += t;
    }
    std::swap(a[i], a[hi - 1]);
    ctr.boundary(1);
    ctr.swaps(1);
    return i;
}

// Block-buffered two-pivot partition with p = a[lo] <= q = a[hi-1] on entry
// (the caller is responsible for that ordering). Each window is classified
// against q (offsets of elements <= q buffered, then compacted leftward), and
// the compacted run is re-scanned against p (elements < p buffered, then
// swapped into the left region). Returns the pivots' final positions:
// [lo, pi) < p, a[pi] = p, (pi, qi) in [p, q], a[qi] = q, (qi, hi) > q.
template <class T, class C>
PartitionResult2 block_two_core(T* a, std::size_t lo, std::size_t hi,
                                std::size_t bsz, std::uint32_t* blk, C& ctr) {
    assert(hi - lo >= 2 && bsz >= 1);
    ctr.pbegin();
    const T p = a[lo];
    const T q = a[hi - 1];
    ctr.boundary(2);  // both pivot reads
    std::size_t i = lo + 1, j = lo + 1, k = lo + 1;
    const std::size_t end = hi - 1;
    while (k < end) {
        const std::size_t t = bsz < end - k ? bsz : end - k;
        std::size_t nq = 0;
        for (std::size_t c = 0; c < t; ++c) {
            blk[nq] = static_cast<std::uint32_t>(c);
            nq += static_cast<std::size_t>(!(q < a[k + c]));
        }
        ctr.cmp(t);
        ctr.scan(t);
        for (std::size_t c = 0; c < nq; ++c) std::swap(a[j + c], a[k + blk[c]]);
        ctr.swaps(nq);
        k += t;
        std::size_t np = 0;
        for (std::size_t c = 0; c < nq; ++c) {
            blk[np] = static_cast<std::uint32_t>(c);
            np += static_cast<std::size_t>(a[j + c] < p);
        }
        ctr.cmp(nq);
        ctr.scan(nq);
        for (std::size_t c = 0; c < np; ++c) {
            std::swap(a[i], a[j + blk[c]]);
            ++i;
        }
        ctr.place(np);
        ctr.swaps(np);
        j += nq;
    }
    std::swap(a[i - 1], a[lo]);
    std::swap(a[j], a[hi - 1]);
    ctr.boundary(2);  // both final pivot placements
    ctr.swaps(2);
    return {i - 1, j};
}

inline std::size_t block_buffer_len(std::size_t bsz, std::size_t n) {
    return bsz < n ? bsz : n;
}

}  // namespace detail

// --- Plain entry points (uninstrumented) ---

template <class T>
void insertion_sort(std::span<T> a) {
    detail::NoCount nc;
    detail::insertion_core(a.data(), a.size(), detail::SmallTap<detail::NoCount>{nc});
}

template <class T>
PartitionResult1 lomuto_classic(std::span<T> a) {
    assert(!a.empty());
    detail::NoCount nc;
    return {detail::lomuto_classic_core(a.data(), 0, a.size(), nc)};
}

template <class T>
PartitionResult1 block_partition_one(std::span<T> a, std::size_t block_size = 1024) {
    assert(!a.empty());
    std::vector<std::uint32_t> blk(detail::block_buffer_len(block_size, a.size()));
    detail::NoCount nc;
    return {detail::block_one_core(a.data(), 0, a.size(), block_size, blk.data(), nc)};
}

template <class T>
PartitionResult2 block_partition_two(std::span<T> a, std::size_t block_size = 1024) {
    assert(a.size() >= 2);
    assert(!(a.back() < a.front()));  // pivots must arrive ordered: p <= q
    std::vector<std::uint32_t> blk(detail::block_buffer_len(block_size, a.size()));
    detail::NoCount nc;
    return detail::block_two_core(a.data(), 0, a.size(), block_size, blk.data(), nc);
}

}  // namespace blqs
