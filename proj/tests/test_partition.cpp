#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <blqs/partition.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "test_util.hpp"

using blqs::block_partition_one;
using blqs::block_partition_two;
using blqs::insertion_sort;
using blqs::lomuto_classic;
using i64 = std::int64_t;
using vec = std::vector<i64>;

TEST_CASE("lomuto_classic: frozen small cases") {
    {
        vec a{3, 1, 2};
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 1);
        CHECK(a == vec{1, 2, 3});
    }
    {
        vec a{1, 2};  // pivot 2 stays last
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 1);
        CHECK(a == vec{1, 2});
    }
    {
        vec a{2, 1};  // pivot 1 ends up first
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 0);
        CHECK(a == vec{1, 2});
    }
    {
        vec a{2, 2, 2};  // no strictly-smaller element: pivot lands at 0
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 0);
        CHECK(a == vec{2, 2, 2});
    }
    {
        vec a{3, 1, 4, 1, 5, 2};
        vec before = a;
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 2);
        CHECK(a == vec{1, 1, 2, 3, 5, 4});
        CHECK(testutil::partitioned_one(a, r.pivot_index));
        CHECK(testutil::multiset_equal(a, before));
    }
    {
        vec a{7};  // length 1: trivially partitioned around itself
        auto r = lomuto_classic(std::span<i64>(a));
        CHECK(r.pivot_index == 0);
        CHECK(a == vec{7});
    }
}

TEST_CASE("block_partition_one: frozen trace, B=3") {
    vec a{5, 1, 4, 2, 3};
    auto r = block_partition_one(std::span<i64>(a), 3);
    CHECK(r.pivot_index == 2);
    CHECK(a == vec{1, 2, 3, 5, 4});
}

TEST_CASE("block_partition_one: length-2 slices behave like lomuto_classic") {
    {
        vec a{1, 2};
        auto r = block_partition_one(std::span<i64>(a), 4);
        CHECK(r.pivot_index == 1);
        CHECK(a == vec{1, 2});
    }
    {
        vec a{2, 1};
        auto r = block_partition_one(std::span<i64>(a), 4);
        CHECK(r.pivot_index == 0);
        CHECK(a == vec{1, 2});
    }
}

// The blocked variant must agree with the classic scan exactly: same pivot
// position, identical left segment (same order), right segment equal as a
// multiset.
static void check_against_classic(const vec& input, std::size_t B) {
    vec blocked = input, classic = input;
    auto rb = block_partition_one(std::span<i64>(blocked), B);
    auto rc = lomuto_classic(std::span<i64>(classic));
    REQUIRE(rb.pivot_index == rc.pivot_index);
    const std::size_t i = rb.pivot_index;
    CHECK(std::equal(blocked.begin(), blocked.begin() + static_cast<std::ptrdiff_t>(i),
                     classic.begin()));
    CHECK(blocked[i] == classic[i]);
    vec tail_b(blocked.begin() + static_cast<std::ptrdiff_t>(i), blocked.end());
    vec tail_c(classic.begin() + static_cast<std::ptrdiff_t>(i), classic.end());
    CHECK(testutil::multiset_equal(tail_b, tail_c));
    CHECK(testutil::partitioned_one(blocked, i));
}

TEST_CASE("block_partition_one: agrees with lomuto_classic on a permutation of 1..100") {
    vec base = testutil::rand_perm(100, 0xB10CB10Cull);
    check_against_classic(base, 4);
}

TEST_CASE("block_partition_one: tail window shorter than B (length 3B+1)") {
    const std::size_t B = 5;
    vec base = testutil::rand_perm(3 * B + 1, 0x7A117A11ull);
    check_against_classic(base, B);
}

TEST_CASE("block_partition_one: block size sweep incl. B=1 and B>=n") {
    for (std::size_t B : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{8}, std::size_t{64}, std::size_t{1000}}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            check_against_classic(testutil::rand_perm(57, seed), B);
            check_against_classic(testutil::rand_vals(57, 6, seed ^ 0xFF), B);
        }
    }
}

TEST_CASE("block_partition_two: frozen small cases") {
    {
        vec a{1, 2};  // already the two pivots; nothing to move
        auto r = block_partition_two(std::span<i64>(a), 4);
        CHECK(r.p_index == 0);
        CHECK(r.q_index == 1);
        CHECK(a == vec{1, 2});
    }
    {
        vec a{5, 5, 5, 5};  // all-equal: middle group swallows the interior
        auto r = block_partition_two(std::span<i64>(a), 4);
        CHECK(r.p_index == 0);
        CHECK(r.q_index == 3);
        CHECK(a == vec{5, 5, 5, 5});
        CHECK(testutil::partitioned_two(a, r.p_index, r.q_index));
    }
    {
        vec a{2, 8, 4, 6, 1, 3, 9, 5};  // hand-traced, B=4
        auto r = block_partition_two(std::span<i64>(a), 4);
        CHECK(r.p_index == 1);
        CHECK(r.q_index == 4);
        CHECK(a == vec{1, 2, 4, 3, 5, 6, 9, 8});
    }
}

TEST_CASE("block_partition_two: duplicate-heavy slice, B=7") {
    vec a = testutil::rand_vals(10'000, 32, 0xD0D0ull);
    if (a.back() < a.front()) std::swap(a.front(), a.back());
    vec before = a;
    auto r = block_partition_two(std::span<i64>(a), 7);
    CHECK(testutil::partitioned_two(a, r.p_index, r.q_index));
    CHECK(testutil::multiset_equal(a, before));
    auto want = testutil::two_pivot_indices(before);
    CHECK(r.p_index == want.p_index);
    CHECK(r.q_index == want.q_index);
}

TEST_CASE("block_partition_two: property sweep over sizes and block sizes") {
    for (std::size_t B : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{8}, std::size_t{64}, std::size_t{1000}}) {
        for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{7},
                              std::size_t{33}, std::size_t{200}}) {
            for (std::uint64_t seed : {11ull, 12ull}) {
                vec a = testutil::rand_perm(n, seed * 1000 + B);
                // Precondition of the raw partition call: front <= back.
                if (a.back() < a.front()) std::swap(a.front(), a.back());
                vec before = a;
                auto r = block_partition_two(std::span<i64>(a), B);
                CHECK(testutil::partitioned_two(a, r.p_index, r.q_index));
                CHECK(testutil::multiset_equal(a, before));
                auto want = testutil::two_pivot_indices(before);
                CHECK(r.p_index == want.p_index);
                CHECK(r.q_index == want.q_index);

                vec d = testutil::rand_vals(n, 4, seed * 977 + B);
                if (d.back() < d.front()) std::swap(d.front(), d.back());
                vec dbefore = d;
                auto rd = block_partition_two(std::span<i64>(d), B);
                CHECK(testutil::partitioned_two(d, rd.p_index, rd.q_index));
                CHECK(testutil::multiset_equal(d, dbefore));
            }
        }
    }
}

TEST_CASE("insertion_sort: sorts and preserves the multiset") {
    vec a{3, 1, 2};
    insertion_sort(std::span<i64>(a));
    CHECK(a == vec{1, 2, 3});

    vec b;
    insertion_sort(std::span<i64>(b));
    CHECK(b.empty());

    vec c{9};
    insertion_sort(std::span<i64>(c));
    CHECK(c == vec{9});

    vec d = testutil::rand_vals(300, 10, 42);
    vec want = d;
    std::sort(want.begin(), want.end());
    insertion_sort(std::span<i64>(d));
    CHECK(d == want);
}
