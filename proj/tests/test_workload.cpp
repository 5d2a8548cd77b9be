#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <blqs/instrument.hpp>
#include <blqs/workload.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

using namespace blqs;
using std::vector;

TEST_CASE("fixed patterns: frozen small arrays") {
    CHECK(generate({Dist::sawtooth, 16}) ==
          vector<std::int64_t>{0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3});
    CHECK(generate({Dist::sawtooth, 10}) ==
          vector<std::int64_t>{0, 1, 2, 0, 1, 2, 0, 1, 2, 0});
    CHECK(generate({Dist::equal, 5}) == vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(generate({Dist::sorted, 5}) == vector<std::int64_t>{0, 1, 2, 3, 4});
    CHECK(generate({Dist::reversed, 5}) == vector<std::int64_t>{4, 3, 2, 1, 0});
    CHECK(generate({Dist::eight_dup, 8}) ==
          vector<std::int64_t>{4, 5, 4, 5, 4, 5, 4, 5});
}

TEST_CASE("edge sizes: n = 0 and n = 1") {
    for (Dist d : all_distributions()) {
        CAPTURE(dist_name(d));
        CHECK(generate({d, 0, 7}).empty());
        CHECK(generate({d, 1, 7}).size() == 1);
    }
    CHECK(generate({Dist::permutation, 1, 3}) == vector<std::int64_t>{1});
    CHECK(generate({Dist::equal, 1}) == vector<std::int64_t>{1});
    CHECK(generate({Dist::sawtooth, 1}) == vector<std::int64_t>{0});
    CHECK(generate({Dist::eight_dup, 1}) == vector<std::int64_t>{0});
    CHECK(generate({Dist::random_dup, 1, 9}) == vector<std::int64_t>{0});
}

TEST_CASE("eight_dup: the median value floods when n is a power of two") {
    const std::size_t n = 1 << 14;
    auto a = generate({Dist::eight_dup, n});
    REQUIRE(a.size() == n);
    // i^8 mod 2^14 lands on 0 for every multiple of 4, so more than half of
    // all entries already equal n/2.
    const auto mid = static_cast<std::int64_t>(n / 2);
    const auto dup = static_cast<std::size_t>(std::count(a.begin(), a.end(), mid));
    CHECK(dup >= n / 4);
    for (std::int64_t v : a) {
        CHECK(v >= 0);
        CHECK(v < static_cast<std::int64_t>(n));
    }
}

TEST_CASE("eight_dup: agrees with a naive wide-integer evaluation") {
    for (std::size_t n : {7u, 100u, 1000u, 65536u}) {
        auto a = generate({Dist::eight_dup, n});
        for (std::size_t i = 0; i < n; i += 13) {
            unsigned __int128 p = 1;
            for (int r = 0; r < 8; ++r) p = p * (i % n) % n;
            const auto want = static_cast<std::int64_t>(
                (static_cast<std::uint64_t>(p) + n / 2) % n);
            CHECK(a[i] == want);
        }
    }
}

TEST_CASE("permutation: a shuffle of 1..n, sensitive to the seed") {
    const std::size_t n = 4096;
    auto a = generate({Dist::permutation, n, 42});
    auto b = generate({Dist::permutation, n, 42});
    auto c = generate({Dist::permutation, n, 43});
    CHECK(a == b);
    CHECK(a != c);
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i < n; ++i) a[i] -= static_cast<std::int64_t>(i + 1);
    CHECK(std::count(a.begin(), a.end(), 0) == static_cast<std::ptrdiff_t>(n));
}

TEST_CASE("random_dup: deterministic, seeded, bounded by the root") {
    const std::size_t n = 100'000;
    auto a = generate({Dist::random_dup, n, 7});
    CHECK(a == generate({Dist::random_dup, n, 7}));
    CHECK(a != generate({Dist::random_dup, n, 8}));
    const auto root = static_cast<std::int64_t>(316);  // isqrt(100000)
    for (std::int64_t v : a) {
        CHECK(v >= 0);
        CHECK(v < root);
    }
}

TEST_CASE("random_dup: per-value frequency within 5 sigma of uniform at n = 1e6") {
    const std::size_t n = 1'000'000;
    auto a = generate({Dist::random_dup, n, 1});
    const std::size_t root = 1000;  // isqrt(1e6)
    vector<std::size_t> freq(root, 0);
    for (std::int64_t v : a) ++freq[static_cast<std::size_t>(v)];
    // uniform(n) mod root is exactly uniform here since root divides n
    const double expect = static_cast<double>(n) / static_cast<double>(root);
    const double sigma = std::sqrt(expect * (1.0 - 1.0 / static_cast<double>(root)));
    for (std::size_t v = 0; v < root; ++v) {
        CAPTURE(v);
        CHECK(std::abs(static_cast<double>(freq[v]) - expect) < 5.0 * sigma);
    }
}

TEST_CASE("sawtooth and sorted patterns do not depend on the seed") {
    CHECK(generate({Dist::sawtooth, 1000, 1}) == generate({Dist::sawtooth, 1000, 2}));
    CHECK(generate({Dist::sorted, 1000, 1}) == generate({Dist::sorted, 1000, 2}));
    CHECK(generate({Dist::eight_dup, 1000, 1}) == generate({Dist::eight_dup, 1000, 2}));
}

TEST_CASE("names round-trip") {
    REQUIRE(all_distributions().size() == 7);
    for (Dist d : all_distributions()) {
        auto back = dist_from_name(dist_name(d));
        REQUIRE(back.has_value());
        CHECK(*back == d);
    }
    CHECK(!dist_from_name("Gaussian").has_value());
    CHECK(dist_from_name("permutation").has_value());
    CHECK(dist_uses_seed(Dist::permutation));
    CHECK(dist_uses_seed(Dist::random_dup));
    CHECK(!dist_uses_seed(Dist::sorted));
    CHECK(!dist_uses_seed(Dist::equal));
}

TEST_CASE("two-pivot sort keeps recursion shallow on unstructured inputs") {
    // Ascending-run inputs (sorted/reversed/sawtooth) defeat positional
    // sampling, so the depth bound is asserted on the value-mixing patterns.
    const std::size_t n = std::size_t{1} << 20;
    const auto bound =
        static_cast<std::uint64_t>(4.0 * std::log2(static_cast<double>(n)));
    for (Dist d : {Dist::permutation, Dist::random_dup, Dist::equal, Dist::eight_dup}) {
        CAPTURE(dist_name(d));
        auto a = generate({d, n, 11});
        Counters c = instrumented_sort(Algo::two_pivot, std::span<std::int64_t>(a));
        CHECK(std::is_sorted(a.begin(), a.end()));
        CHECK(c.max_depth <= bound);
    }
}
