#include <blqs/workload.hpp>

#include <cassert>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace blqs {

namespace detail {

// Spreads small user seeds before they reach the engine.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

namespace {

using detail::mix64;

// Unbiased bounded draw (multiply-shift with rejection).
std::uint64_t bounded(std::mt19937_64& g, std::uint64_t s) {
    assert(s > 0);
    unsigned __int128 m = static_cast<unsigned __int128>(g()) * s;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < s) {
        const std::uint64_t cut = -s % s;
        while (lo < cut) {
            m = static_cast<unsigned __int128>(g()) * s;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow8_mod(std::uint64_t x, std::uint64_t n) {
    x %= n;
    x = mulmod(x, x, n);
    x = mulmod(x, x, n);
    return mulmod(x, x, n);
}

std::string normalized(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != '-')
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<std::int64_t> generate(const Distribution& d) {
    const std::size_t n = d.n;
    std::vector<std::int64_t> a(n);
    if (n == 0) return a;
    switch (d.kind) {
        case Dist::permutation: {
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>(i + 1);
            std::mt19937_64 g(mix64(d.seed));
            for (std::size_t i = n - 1; i > 0; --i)
                std::swap(a[i], a[bounded(g, static_cast<std::uint64_t>(i) + 1)]);
            break;
        }
        case Dist::sawtooth: {
            const std::uint64_t root = isqrt_u64(n);
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>(i % root);
            break;
        }
        case Dist::random_dup: {
            const std::uint64_t root = isqrt_u64(n);
            std::mt19937_64 g(mix64(d.seed));
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>(bounded(g, n) % root);
            break;
        }
        case Dist::sorted:
            for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(i);
            break;
        case Dist::reversed:
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>(n - i - 1);
            break;
        case Dist::equal:
            for (std::size_t i = 0; i < n; ++i) a[i] = 1;
            break;
        case Dist::eight_dup:
            for (std::size_t i = 0; i < n; ++i)
                a[i] = static_cast<std::int64_t>((pow8_mod(i, n) + n / 2) % n);
            break;
    }
    return a;
}

std::string_view dist_name(Dist d) {
    switch (d) {
        case Dist::permutation: return "Permutation";
        case Dist::sawtooth: return "Sawtooth";
        case Dist::random_dup: return "RandomDup";
        case Dist::sorted: return "Sorted";
        case Dist::reversed: return "Reversed";
        case Dist::equal: return "Equal";
        case Dist::eight_dup: return "EightDup";
    }
    return "?";
}

std::optional<Dist> dist_from_name(std::string_view name) {
    const std::string want = normalized(name);
    for (Dist d : all_distributions())
        if (normalized(dist_name(d)) == want) return d;
    return std::nullopt;
}

const std::vector<Dist>& all_distributions() {
    static const std::vector<Dist> all = {
        Dist::permutation, Dist::sawtooth, Dist::random_dup, Dist::sorted,
        Dist::reversed,    Dist::equal,    Dist::eight_dup,
    };
    return all;
}

bool dist_uses_seed(Dist d) {
    return d == Dist::permutation || d == Dist::random_dup;
}

std::string_view prng_name() {
    return "mt19937_64+splitmix64";
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace blqs
