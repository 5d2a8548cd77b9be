// Exact rational arithmetic helpers for the cost model: harmonic numbers and
// fixed-2-decimal formatting with round-half-away-from-zero.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

namespace blqs {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

// H_n = 1 + 1/2 + ... + 1/n, exact; cached (thread-safe).
inline rational harmonic(unsigned n) {
    static std::vector<rational> cache{rational(0)};  // cache[i] = H_i
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n)
        cache.push_back(cache.back() + rational(1, static_cast<unsigned>(cache.size())));
    return cache[n];
}

// Nearest hundredth, halves away from zero, rendered as "d.dd".
inline std::string format_fixed2(const rational& x) {
    const bool neg = x < 0;
    const rational mag = neg ? rational(-x) : x;
    const rational scaled = mag * 100;
    bigint whole = boost::multiprecision::numerator(scaled) /
                   boost::multiprecision::denominator(scaled);
    const rational frac = scaled - rational(whole);
    if (frac * 2 >= 1) ++whole;
    const bigint ip = whole / 100, fp = whole % 100;
    std::string out = neg ? "-" : "";
    out += ip.str();
    out += '.';
    const std::string f = fp.str();
    out += f.size() == 1 ? "0" + f : f;
    return out;
}

// Same rounding rule for plain doubles (used where exact arithmetic is
// out of reach); llround rounds halves away from zero.
inline std::string format_fixed2(double v) {
    const long long cents = std::llround(v * 100.0);
    const long long mag = cents < 0 ? -cents : cents;
    std::string out = cents < 0 ? "-" : "";
    out += std::to_string(mag / 100);
    out += '.';
    const std::string f = std::to_string(mag % 100);
    out += f.size() == 1 ? "0" + f : f;
    return out;
}

inline double to_double(const rational& x) {
    return static_cast<double>(x);
}

}  // namespace blqs
