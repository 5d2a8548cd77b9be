#include <blqs/cost_model.hpp>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace blqs {

namespace {

// Exact arithmetic stays fast for samples up to this size; larger samples
// use the double-precision paths.
constexpr int kExactKappaLimit = 300;

void validate_entries(const std::vector<int>& t) {
    if (t.size() < 2)
        throw std::invalid_argument("sample vector needs at least two gap entries");
    for (int x : t)
        if (x < 0) throw std::invalid_argument("negative sample vector entry");
}

// For 2^l pivots, returns l.
int log2_pivots(int k) {
    if (k < 2 || (k & (k - 1)) != 0)
        throw std::invalid_argument("sample-sort pivot count must be a power of two >= 2");
    int l = 0;
    while ((1 << l) < k) ++l;
    return l;
}

int expected_pivots(Scheme s) {
    switch (s) {
        case Scheme::H1:
        case Scheme::L1: return 1;
        case Scheme::L2: return 2;
        case Scheme::sample_sort: return 0;  // any power of two
    }
    return 0;
}

void validate_for_scheme(Scheme s, const std::vector<int>& t) {
    validate_entries(t);
    const int k = static_cast<int>(t.size()) - 1;
    const int want = expected_pivots(s);
    if (want != 0 && k != want)
        throw std::invalid_argument("sample vector arity does not match the scheme");
    if (s == Scheme::sample_sort) log2_pivots(k);
}

double harmonic_d(std::int64_t n) {
    double h = 0.0;
    for (std::int64_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::H1: return "H1";
        case Scheme::L1: return "L1";
        case Scheme::L2: return "L2";
        case Scheme::sample_sort: return "SampleSort";
    }
    return "?";
}

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::cmp: return "cmp";
        case Measure::ma: return "ma";
        case Measure::cmp_ma: return "cmp+ma";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    if (name == "H1") return Scheme::H1;
    if (name == "L1") return Scheme::L1;
    if (name == "L2") return Scheme::L2;
    if (name == "SampleSort" || name == "samplesort") return Scheme::sample_sort;
    return std::nullopt;
}

std::optional<Measure> measure_from_name(std::string_view name) {
    if (name == "cmp") return Measure::cmp;
    if (name == "ma") return Measure::ma;
    if (name == "cmp+ma" || name == "cmp_ma" || name == "cmpma") return Measure::cmp_ma;
    return std::nullopt;
}

int pivot_count_of(const std::vector<int>& t) {
    validate_entries(t);
    return static_cast<int>(t.size()) - 1;
}

int kappa_of(const std::vector<int>& t) {
    int kappa = pivot_count_of(t);
    for (int x : t) kappa += x;
    return kappa;
}

rational entropy_H(const std::vector<int>& t) {
    const int kappa = kappa_of(t);
    if (kappa > kExactKappaLimit)
        throw std::domain_error("sample too large for exact arithmetic, use entropy_H_d");
    const rational h_top = harmonic(static_cast<unsigned>(kappa) + 1);
    rational h(0);
    for (int ti : t)
        h += rational(ti + 1, kappa + 1) *
             (h_top - harmonic(static_cast<unsigned>(ti) + 1));
    return h;
}

double entropy_H_d(const std::vector<int>& t) {
    const int kappa = kappa_of(t);
    const double h_top = harmonic_d(kappa + 1);
    double h = 0.0;
    for (int ti : t)
        h += (static_cast<double>(ti + 1) / (kappa + 1)) * (h_top - harmonic_d(ti + 1));
    return h;
}

CostConstant partition_constant(Scheme s, Measure m, const std::vector<int>& t) {
    validate_for_scheme(s, t);
    const int kappa = kappa_of(t);
    rational cmp(0), ma(0);
    switch (s) {
        case Scheme::H1:
            cmp = 1;
            ma = 1;
            break;
        case Scheme::L1:
            cmp = 1;
            ma = rational(1) + rational(t[0] + 1, kappa + 1);
            break;
        case Scheme::L2:
            cmp = rational(1) + rational(t[0] + t[1] + 2, kappa + 1);
            ma = rational(1) + rational(2 * t[0] + t[1] + 3, kappa + 1);
            break;
        case Scheme::sample_sort:
            cmp = log2_pivots(static_cast<int>(t.size()) - 1);
            ma = 3;
            break;
    }
    rational a;
    switch (m) {
        case Measure::cmp: a = cmp; break;
        case Measure::ma: a = ma; break;
        case Measure::cmp_ma: a = cmp + ma; break;
    }
    assert(a > 0);
    return CostConstant{s, m, a};
}

rational sorting_constant(Scheme s, Measure m, const std::vector<int>& t) {
    return partition_constant(s, m, t).a / entropy_H(t);
}

double sorting_constant_d(Scheme s, Measure m, const std::vector<int>& t) {
    return to_double(partition_constant(s, m, t).a) / entropy_H_d(t);
}

CostRow best_t(Scheme s, Measure m, int additional_sample_size) {
    const int k = expected_pivots(s);
    if (k == 0)
        throw std::invalid_argument("best_t is defined for the fixed-arity schemes");
    if (additional_sample_size < 0)
        throw std::invalid_argument("negative sample budget");
    const int as = additional_sample_size;
    const bool exact = k + as <= kExactKappaLimit;

    std::vector<int> best;
    rational best_exact(0);
    double best_approx = std::numeric_limits<double>::infinity();
    auto consider = [&](const std::vector<int>& t) {
        if (exact) {
            const rational v = sorting_constant(s, m, t);
            if (best.empty() || v < best_exact) {
                best = t;
                best_exact = v;
            }
        } else {
            const double v = sorting_constant_d(s, m, t);
            if (v < best_approx) {
                best = t;
                best_approx = v;
            }
        }
    };
    // Lexicographic enumeration: strict improvement keeps the smallest tie.
    if (k == 1) {
        for (int t0 = 0; t0 <= as; ++t0) consider({t0, as - t0});
    } else {
        for (int t0 = 0; t0 <= as; ++t0)
            for (int t1 = 0; t1 + t0 <= as; ++t1) consider({t0, t1, as - t0 - t1});
    }
    CostRow row;
    row.scheme = s;
    row.additional_sample_size = as;
    row.measure = m;
    row.best_t = std::move(best);
    row.constant = exact ? to_double(best_exact) : best_approx;
    row.printed = exact ? format_fixed2(best_exact) : format_fixed2(best_approx);
    return row;
}

std::vector<CostRow> table1() {
    static constexpr int one_pivot_budgets[] = {0, 2, 4, 10};
    static constexpr int two_pivot_budgets[] = {0, 3, 5, 11};
    std::vector<CostRow> rows;
    rows.reserve(36);
    for (Scheme s : {Scheme::H1, Scheme::L1, Scheme::L2}) {
        const auto& budgets = s == Scheme::L2 ? two_pivot_budgets : one_pivot_budgets;
        for (int as : budgets)
            for (Measure m : {Measure::cmp, Measure::ma, Measure::cmp_ma})
                rows.push_back(best_t(s, m, as));
    }
    return rows;
}

std::vector<double> solve_recurrence_exact(Scheme s, Measure m,
                                           const std::vector<int>& t,
                                           std::size_t n_max,
                                           std::function<double(std::size_t)> base_cost) {
    const CostConstant cc = partition_constant(s, m, t);  // also validates t
    const int k = static_cast<int>(t.size()) - 1;
    const int kappa = kappa_of(t);
    const std::size_t limit = k == 1 ? 100'000 : 2'000;
    if (n_max > limit)
        throw std::invalid_argument("n_max exceeds the recurrence tractability bound");

    const double a = to_double(cc.a);
    // Fixed per-step tail beyond a*(n-kappa): the final pivot placements.
    double extra = 0.0;
    if (m != Measure::cmp) {
        if (s == Scheme::L1) extra = 2.0;
        if (s == Scheme::L2) extra = 4.0;
    }

    std::vector<double> e(n_max + 1, 0.0);
    for (std::size_t n = 0; n <= n_max && n <= static_cast<std::size_t>(kappa); ++n)
        e[n] = base_cost ? base_cost(n) : 0.0;
    if (n_max <= static_cast<std::size_t>(kappa)) return e;

    bool plain = k == 1 && t[0] == 0 && t[1] == 0;
    if (plain) {
        // Both children are uniform on sizes 0..n-1: prefix sums give O(n) total.
        double prefix = e[0] + e[1];
        for (std::size_t n = 2; n <= n_max; ++n) {
            e[n] = a * static_cast<double>(n - 1) + extra +
                   2.0 * prefix / static_cast<double>(n);
            prefix += e[n];
        }
        return e;
    }

    for (std::int64_t n = kappa + 1; n <= static_cast<std::int64_t>(n_max); ++n) {
        double total = a * static_cast<double>(n - kappa) + extra;
        for (int i = 0; i <= k; ++i) {
            const std::int64_t ti = t[static_cast<std::size_t>(i)];
            const std::int64_t rest = kappa - 1 - ti;
            // w(c) = C(c,t_i)*C(n-1-c,rest)/C(n,kappa) over child sizes c,
            // walked incrementally from c = t_i.
            double w = 1.0;
            for (std::int64_t j = 0; j <= ti; ++j)
                w *= static_cast<double>(rest + 1 + j) / static_cast<double>(n - ti + j);
            double acc = 0.0;
#ifndef NDEBUG
            double wsum = 0.0;
#endif
            for (std::int64_t c = ti; c <= n - 1 - rest; ++c) {
                acc += w * e[static_cast<std::size_t>(c)];
#ifndef NDEBUG
                wsum += w;
#endif
                w *= (static_cast<double>(c + 1) / static_cast<double>(c + 1 - ti)) *
                     (static_cast<double>(n - 1 - c - rest) /
                      static_cast<double>(n - 1 - c));
            }
            assert(std::abs(wsum - 1.0) < 1e-9);  // split weights are a distribution
            total += acc;
        }
        e[static_cast<std::size_t>(n)] = total;
    }
    return e;
}

}  // namespace blqs
