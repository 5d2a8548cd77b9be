// Command-line harness: benchmarking, parameter sweeps, cost-model tables,
// input generation, and sort verification.
#include <CLI11.hpp>

#include <blqs/bench.hpp>
#include <blqs/cost_model.hpp>
#include <blqs/instrument.hpp>
#include <blqs/workload.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace blqs;

void write_text(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
}

std::vector<Dist> parse_dists(const std::vector<std::string>& names) {
    std::vector<Dist> out;
    if (names.empty()) return all_distributions();
    for (const auto& s : names) {
        auto d = dist_from_name(s);
        if (!d) throw CLI::ValidationError("--dist", "unknown distribution: " + s);
        out.push_back(*d);
    }
    return out;
}

std::vector<AlgoSpec> parse_algos(const std::vector<std::string>& names,
                                  const std::string& strategy) {
    std::vector<std::string> use = names;
    if (use.empty()) use = {"L1", "L2", "reference"};
    std::vector<AlgoSpec> out;
    for (const auto& a : use) {
        if (a == "reference" || strategy.empty())
            out.push_back(algo_spec(a));
        else
            out.push_back(algo_spec(a, strategy));
    }
    return out;
}

std::string table1_text() {
    std::ostringstream out;
    out << "scheme  sample  measure  constant  t\n";
    for (const CostRow& r : table1()) {
        char line[128];
        std::string t = "(";
        for (std::size_t i = 0; i < r.best_t.size(); ++i)
            t += (i ? "," : "") + std::to_string(r.best_t[i]);
        t += ")";
        std::snprintf(line, sizeof line, "%-7s %6d  %-7s %8s  %s\n",
                      std::string(scheme_name(r.scheme)).c_str(),
                      r.additional_sample_size,
                      std::string(measure_name(r.measure)).c_str(), r.printed.c_str(),
                      t.c_str());
        out << line;
    }
    return out.str();
}

std::string table1_csv() {
    std::ostringstream out;
    out << "scheme,additional_sample_size,measure,constant,t\n";
    for (const CostRow& r : table1()) {
        std::string t;
        for (std::size_t i = 0; i < r.best_t.size(); ++i)
            t += (i ? " " : "") + std::to_string(r.best_t[i]);
        out << scheme_name(r.scheme) << ',' << r.additional_sample_size << ','
            << measure_name(r.measure) << ',' << r.printed << ",\"" << t << "\"\n";
    }
    return out.str();
}

std::string summary_text(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "algorithm  strategy         distribution  n          trials  ns/(n ln n)\n";
    for (const SummaryRow& s : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-10s %-16s %-13s %-10zu %-7zu %.3f\n",
                      s.algorithm.c_str(), s.strategy.c_str(),
                      std::string(dist_name(s.distribution)).c_str(), s.n, s.trials,
                      s.mean_scaled_ns);
        out << line;
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-partitioning quicksort bench and cost-model tool"};
    app.require_subcommand(1);

    std::vector<std::string> algo_names, dist_names;
    std::vector<std::size_t> sizes;
    std::string strategy_name, out_path, format = "txt";
    std::string scheme_str = "L2", measure_str = "cmp";
    std::size_t trials = 0, block_size = 1024, cutoff = 20, n_single = 0;
    std::uint64_t seed = 1;
    int sample_budget = 0;
    bool counters = false;

    auto add_common = [&](CLI::App* cmd, std::size_t default_trials) {
        trials = default_trials;
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--trials", trials, "trials per cell");
        cmd->add_option("--block-size", block_size, "partition block length");
        cmd->add_option("--cutoff", cutoff, "insertion-sort cutoff");
        cmd->add_option("--out", out_path, "write CSV here instead of stdout");
    };

    CLI::App* bench = app.add_subcommand("bench", "timed, verified sorting runs");
    bench->add_option("--algo", algo_names, "classic|L1|L2|reference (repeatable)");
    bench->add_option("--strategy", strategy_name, "pivot strategy catalog name");
    bench->add_option("--dist", dist_names, "input distribution (repeatable)");
    bench->add_option("--n", sizes, "input sizes (repeatable)");
    bench->add_flag("--counters", counters, "record instrumentation counters");
    add_common(bench, 600);

    CLI::App* sweep_b = app.add_subcommand("sweep-block", "block-size sweep for L1/L2");
    sweep_b->add_option("--dist", dist_names, "input distribution");
    sweep_b->add_option("--n", n_single, "input size");
    add_common(sweep_b, 5);

    CLI::App* sweep_p =
        app.add_subcommand("sweep-pivot", "pivot-strategy sweep over the catalog");
    sweep_p->add_option("--algo", algo_names, "L1|L2 (repeatable; default both)");
    sweep_p->add_option("--dist", dist_names, "input distribution");
    sweep_p->add_option("--n", n_single, "input size");
    sweep_p->add_flag("--counters", counters, "emit per-trial counter records");
    add_common(sweep_p, 5);

    CLI::App* analyze = app.add_subcommand("analyze", "print the cost-model table");
    analyze->add_option("--out", out_path, "also write the table as CSV here");

    CLI::App* bestt = app.add_subcommand("best-t", "optimal sample vector for a budget");
    bestt->add_option("--scheme", scheme_str, "H1|L1|L2")->required();
    bestt->add_option("--measure", measure_str, "cmp|ma|cmp+ma");
    bestt->add_option("--sample", sample_budget, "additional sample size (kappa - k)")
        ->required();

    CLI::App* gen = app.add_subcommand("gen", "write one generated input array");
    gen->add_option("--dist", dist_names, "input distribution")->required();
    gen->add_option("--n", n_single, "element count")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--format", format, "bin (little-endian int64) | txt (decimal lines)");
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run sorts and verify the output");
    verify->add_option("--algo", algo_names, "classic|L1|L2|reference (repeatable)");
    verify->add_option("--strategy", strategy_name, "pivot strategy catalog name");
    verify->add_option("--dist", dist_names, "input distribution (repeatable)");
    verify->add_option("--n", sizes, "input sizes (repeatable)");
    add_common(verify, 3);

    CLI11_PARSE(app, argc, argv);

    try {
        BenchConfig cfg;
        cfg.seed = seed;
        cfg.block_size = block_size;
        cfg.insertion_cutoff = cutoff;
        cfg.counters = counters;

        if (bench->parsed()) {
            if (sizes.empty())
                for (int e = 21; e <= 27; ++e) sizes.push_back(std::size_t{1} << e);
            auto records = run_bench(parse_algos(algo_names, strategy_name),
                                     parse_dists(dist_names), sizes, trials, cfg);
            write_text(out_path, records_csv(records, cfg));
            if (!out_path.empty()) std::cout << summary_text(summarize(records));
        } else if (sweep_b->parsed()) {
            if (n_single == 0) n_single = std::size_t{1} << 20;
            std::vector<std::size_t> blocks;
            for (int e = 1; e <= 14; ++e) blocks.push_back(std::size_t{1} << e);
            const Dist d = dist_names.empty() ? Dist::permutation
                                              : parse_dists(dist_names).front();
            write_text(out_path, sweep_block_size(blocks, n_single, d, trials, cfg));
        } else if (sweep_p->parsed()) {
            if (n_single == 0) n_single = std::size_t{1} << 20;
            if (algo_names.empty()) algo_names = {"L1", "L2"};
            const Dist d = dist_names.empty() ? Dist::permutation
                                              : parse_dists(dist_names).front();
            std::vector<AlgoSpec> specs;
            for (const std::string& a : algo_names) {
                const int arity = a == "L2" || a == "l2" ? 2 : 1;
                for (const CatalogEntry& e : strategy_catalog())
                    if (e.strategy.pivots == arity || e.strategy.pivots == 0)
                        specs.push_back(algo_spec(a, e.name));
            }
            // One shared config for the whole sweep; the largest fixed sample
            // in the catalog (25) dictates the smallest workable cutoff.
            std::size_t need = cfg.insertion_cutoff;
            for (const AlgoSpec& s : specs)
                if (s.strategy.kind != PivotStrategy::Kind::adaptive)
                    need = std::max(need, static_cast<std::size_t>(s.strategy.kappa()));
            if (need != cfg.insertion_cutoff) {
                std::cerr << "note: insertion cutoff raised to " << need
                          << " so every swept sample fits\n";
                cfg.insertion_cutoff = need;
            }
            auto records = run_bench(specs, {d}, {n_single}, trials, cfg);
            if (counters)
                write_text(out_path, records_csv(records, cfg));
            else
                write_text(out_path, summary_csv(summarize(records), cfg));
        } else if (analyze->parsed()) {
            std::cout << table1_text();
            if (!out_path.empty())
                write_text(out_path, table1_csv());
            else
                std::cout << '\n' << table1_csv();
        } else if (bestt->parsed()) {
            auto scheme = scheme_from_name(scheme_str);
            auto measure = measure_from_name(measure_str);
            if (!scheme) throw std::invalid_argument("unknown scheme: " + scheme_str);
            if (!measure) throw std::invalid_argument("unknown measure: " + measure_str);
            const CostRow r = best_t(*scheme, *measure, sample_budget);
            std::cout << scheme_name(r.scheme) << " " << measure_name(r.measure)
                      << " sample=" << r.additional_sample_size << "  t=(";
            for (std::size_t i = 0; i < r.best_t.size(); ++i)
                std::cout << (i ? "," : "") << r.best_t[i];
            std::cout << ")  constant=" << r.printed << "\n";
        } else if (gen->parsed()) {
            const Dist d = parse_dists(dist_names).front();
            auto a = generate({d, n_single, seed});
            if (format == "txt") {
                std::ostringstream body;
                for (std::int64_t v : a) body << v << '\n';
                write_text(out_path, body.str());
            } else if (format == "bin") {
                std::string body(a.size() * sizeof(std::int64_t), '\0');
                for (std::size_t i = 0; i < a.size(); ++i) {
                    std::uint64_t u = static_cast<std::uint64_t>(a[i]);
                    for (int b = 0; b < 8; ++b)
                        body[i * 8 + static_cast<std::size_t>(b)] =
                            static_cast<char>((u >> (8 * b)) & 0xFF);
                }
                write_text(out_path, body);
            } else {
                throw std::invalid_argument("unknown format: " + format);
            }
        } else if (verify->parsed()) {
            if (sizes.empty()) sizes = {0, 1, 2, 3, 10, 1000, 100000};
            cfg.counters = false;
            auto records = run_bench(parse_algos(algo_names, strategy_name),
                                     parse_dists(dist_names), sizes, trials, cfg);
            std::cout << "verified " << records.size() << " sorted outputs\n";
        }
    } catch (const BenchVerificationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
