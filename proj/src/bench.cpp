#include <blqs/bench.hpp>
#include <blqs/instrument.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <tuple>

namespace blqs {

namespace {

int arity_of(Algo a) {
    return a == Algo::two_pivot ? 2 : 1;
}

SortConfig sort_config(const AlgoSpec& spec, const BenchConfig& cfg) {
    SortConfig sc;
    sc.block_size = cfg.block_size;
    sc.insertion_cutoff = cfg.insertion_cutoff;
    sc.equal_guard = cfg.equal_guard;
    sc.strategy = spec.strategy;
    return sc;
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

std::string quoted(const std::string& s) {
    return s.empty() ? s : "\"" + s + "\"";
}

}  // namespace

AlgoSpec algo_spec(std::string_view algo_name) {
    AlgoSpec spec;
    if (algo_name == "classic") {
        spec.algo = Algo::classic;
        spec.name = "classic";
    } else if (algo_name == "L1" || algo_name == "l1") {
        spec.algo = Algo::one_pivot;
        spec.name = "L1";
    } else if (algo_name == "L2" || algo_name == "l2") {
        spec.algo = Algo::two_pivot;
        spec.name = "L2";
    } else if (algo_name == "reference") {
        spec.reference = true;
        spec.strategy_name.clear();
        spec.name = "reference";
    } else {
        throw std::invalid_argument("unknown algorithm: " + std::string(algo_name));
    }
    return spec;
}

AlgoSpec algo_spec(std::string_view algo_name, std::string_view strategy_name) {
    AlgoSpec spec = algo_spec(algo_name);
    if (spec.reference)
        throw std::invalid_argument("the reference sort takes no pivot strategy");
    const PivotStrategy* s = find_strategy(strategy_name);
    if (s == nullptr)
        throw std::invalid_argument("unknown strategy: " + std::string(strategy_name));
    if (s->pivots != 0 && s->pivots != arity_of(spec.algo))
        throw std::invalid_argument("strategy pivot count does not match algorithm");
    spec.strategy = *s;
    spec.strategy_name = std::string(strategy_name);
    return spec;
}

std::uint64_t trial_seed(std::uint64_t master, Dist d, std::size_t n,
                         std::size_t trial) {
    std::uint64_t s = detail::mix64(master + 0x9E3779B97F4A7C15ull * (trial + 1));
    s = detail::mix64(s ^ detail::mix64(static_cast<std::uint64_t>(d) * 0x100000001B3ull +
                                        static_cast<std::uint64_t>(n)));
    return s;
}

std::vector<BenchRecord> run_bench(const std::vector<AlgoSpec>& algorithms,
                                   const std::vector<Dist>& distributions,
                                   const std::vector<std::size_t>& sizes,
                                   std::size_t trials, const BenchConfig& cfg) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<BenchRecord> out;
    out.reserve(algorithms.size() * distributions.size() * sizes.size() * trials);
    std::vector<std::int64_t> work, expected;

    for (const AlgoSpec& spec : algorithms) {
        const SortConfig sc = sort_config(spec, cfg);
        if (!spec.reference) sc.validate(spec.algo);
        for (Dist d : distributions) {
            for (std::size_t n : sizes) {
                // Warm-up on the first trial's input; result discarded.
                for (std::size_t trial = 0; trial <= trials; ++trial) {
                    const bool warmup = trial == 0;
                    const std::size_t t = warmup ? 0 : trial - 1;
                    const std::uint64_t seed = trial_seed(cfg.seed, d, n, t);
                    work = generate({d, n, seed});
                    expected = work;
                    std::sort(expected.begin(), expected.end());

                    BenchRecord rec;
                    rec.algorithm = spec.name;
                    rec.strategy = spec.strategy_name;
                    rec.distribution = d;
                    rec.n = n;
                    rec.trial = t;
                    rec.block_size = cfg.block_size;

                    const std::uint64_t t0 = now_ns();
                    if (spec.reference) {
                        std::sort(work.begin(), work.end());
                    } else if (cfg.counters) {
                        rec.counters = instrumented_sort(
                            spec.algo, std::span<std::int64_t>(work), sc);
                        rec.has_counters = true;
                    } else {
                        run_sort(spec.algo, std::span<std::int64_t>(work), sc);
                    }
                    const std::uint64_t t1 = now_ns();
                    rec.elapsed_ns = std::max<std::uint64_t>(1, t1 - t0);

                    if (work != expected) {
                        std::ostringstream msg;
                        msg << "verification failed: algorithm=" << spec.name
                            << " distribution=" << dist_name(d) << " n=" << n
                            << " trial=" << t << " seed=" << seed;
                        throw BenchVerificationError(msg.str());
                    }
                    if (!warmup) out.push_back(std::move(rec));
                }
            }
        }
    }
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
    std::vector<SummaryRow> rows;
    auto cell = [&rows](const BenchRecord& r) -> SummaryRow& {
        for (SummaryRow& s : rows)
            if (s.algorithm == r.algorithm && s.strategy == r.strategy &&
                s.distribution == r.distribution && s.n == r.n)
                return s;
        rows.push_back(SummaryRow{r.algorithm, r.strategy, r.distribution, r.n, 0, 0.0, 0.0});
        return rows.back();
    };
    for (const BenchRecord& r : records) {
        SummaryRow& s = cell(r);
        ++s.trials;
        s.mean_elapsed_ns += static_cast<double>(r.elapsed_ns);
    }
    for (SummaryRow& s : rows) {
        s.mean_elapsed_ns /= static_cast<double>(s.trials);
        const double nf = static_cast<double>(s.n);
        s.mean_scaled_ns = s.n >= 2 ? s.mean_elapsed_ns / (nf * std::log(nf)) : 0.0;
    }
    return rows;
}

SignificanceReport significance(const std::vector<BenchRecord>& records,
                                std::string_view algo_a, std::string_view algo_b) {
    using Key = std::tuple<int, std::size_t, std::size_t>;
    std::map<Key, std::pair<std::optional<std::uint64_t>, std::optional<std::uint64_t>>>
        pairs;
    for (const BenchRecord& r : records) {
        const bool is_a = r.algorithm == algo_a;
        const bool is_b = r.algorithm == algo_b;
        if (!is_a && !is_b) continue;
        auto& slot = pairs[{static_cast<int>(r.distribution), r.n, r.trial}];
        auto& side = is_a ? slot.first : slot.second;
        if (side.has_value())
            throw std::invalid_argument("duplicate trial in significance pairing");
        side = r.elapsed_ns;
    }
    if (pairs.empty()) throw std::invalid_argument("no trials for the named algorithms");
    std::size_t wins = 0;
    for (const auto& [key, slot] : pairs) {
        if (!slot.first.has_value() || !slot.second.has_value())
            throw std::invalid_argument("mismatched trial sets between algorithms");
        if (*slot.first < *slot.second) ++wins;
    }
    SignificanceReport rep;
    rep.algo_a = std::string(algo_a);
    rep.algo_b = std::string(algo_b);
    rep.win_fraction = static_cast<double>(wins) / static_cast<double>(pairs.size());
    rep.significant = wins * 100 >= pairs.size() * 95;  // inclusive 95% boundary
    return rep;
}

namespace {

void metadata(std::ostringstream& out, const BenchConfig& cfg) {
    out << "# seed=" << cfg.seed << "\n";
    out << "# prng=" << prng_name() << "\n";
    out << "# block_size=" << cfg.block_size << " cutoff=" << cfg.insertion_cutoff
        << " counters=" << (cfg.counters ? "on" : "off")
        << " equal_guard=" << (cfg.equal_guard ? "on" : "off") << "\n";
}

}  // namespace

std::string records_csv(const std::vector<BenchRecord>& records,
                        const BenchConfig& cfg) {
    std::ostringstream out;
    metadata(out, cfg);
    out << "algorithm,strategy,distribution,n,trial,elapsed_ns,block_size,"
           "total_cmp,total_ma,total_swaps,partition_calls,max_depth,"
           "sample_cmp,sample_ma,smallsort_cmp,smallsort_ma,boundary_ma,"
           "driver_cmp,driver_ma\n";
    for (const BenchRecord& r : records) {
        out << r.algorithm << ',' << quoted(r.strategy) << ',' << dist_name(r.distribution)
            << ',' << r.n << ',' << r.trial << ',' << r.elapsed_ns << ','
            << r.block_size << ',';
        if (r.has_counters) {
            const Counters& c = r.counters;
            out << c.total_cmp << ',' << c.total_ma << ',' << c.total_swaps << ','
                << c.partition_calls << ',' << c.max_depth << ',' << c.sample_cmp << ','
                << c.sample_ma << ',' << c.smallsort_cmp << ',' << c.smallsort_ma << ','
                << c.boundary_ma << ',' << c.driver_cmp << ',' << c.driver_ma;
        } else {
            out << ",,,,,,,,,,,";
        }
        out << '\n';
    }
    return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows, const BenchConfig& cfg) {
    std::ostringstream out;
    metadata(out, cfg);
    out << "algorithm,strategy,distribution,n,trials,mean_elapsed_ns,mean_scaled_ns\n";
    for (const SummaryRow& s : rows) {
        out << s.algorithm << ',' << quoted(s.strategy) << ','
            << dist_name(s.distribution) << ',' << s.n << ',' << s.trials << ','
            << s.mean_elapsed_ns << ',' << s.mean_scaled_ns << '\n';
    }
    return out.str();
}

std::string sweep_block_size(const std::vector<std::size_t>& block_sizes,
                             std::size_t n, Dist distribution, std::size_t trials,
                             const BenchConfig& cfg) {
    std::ostringstream out;
    metadata(out, cfg);
    out << "block_size,algorithm,n,distribution,trials,mean_elapsed_ns,mean_scaled_ns\n";
    for (std::size_t b : block_sizes) {
        BenchConfig c = cfg;
        c.block_size = b;
        for (const char* algo : {"L1", "L2"}) {
            auto rows =
                summarize(run_bench({algo_spec(algo)}, {distribution}, {n}, trials, c));
            for (const SummaryRow& s : rows)
                out << b << ',' << s.algorithm << ',' << s.n << ','
                    << dist_name(s.distribution) << ',' << s.trials << ','
                    << s.mean_elapsed_ns << ',' << s.mean_scaled_ns << '\n';
        }
    }
    return out.str();
}

}  // namespace blqs
