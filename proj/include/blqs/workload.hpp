#pragma once

// Deterministic input generators: seven value distributions over 64-bit
// integers, reproducible bit-for-bit from (kind, n, seed).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace blqs {

enum class Dist {
    permutation,  // random shuffle of {1..n}
    sawtooth,     // i mod isqrt(n)
    random_dup,   // uniform(n) mod isqrt(n)
    sorted,       // i
    reversed,     // n-i-1
    equal,        // all ones
    eight_dup,    // (i^8 mod n + n/2) mod n
};

struct Distribution {
    Dist kind = Dist::permutation;
    std::size_t n = 0;
    std::uint64_t seed = 0;  // consumed by permutation and random_dup only
};

// Equal Distribution values yield bit-identical arrays, across runs and
// platforms (the generator engine is pinned by the C++ standard).
std::vector<std::int64_t> generate(const Distribution& d);

std::string_view dist_name(Dist d);
std::optional<Dist> dist_from_name(std::string_view name);
const std::vector<Dist>& all_distributions();
bool dist_uses_seed(Dist d);

// Name of the pinned generator, recorded in benchmark metadata.
std::string_view prng_name();

std::uint64_t isqrt_u64(std::uint64_t n);

namespace detail {
// SplitMix64 finalizer; the seed-spreading primitive shared with the bench
// harness's per-trial seed derivation.
std::uint64_t mix64(std::uint64_t x);
}  // namespace detail

}  // namespace blqs
