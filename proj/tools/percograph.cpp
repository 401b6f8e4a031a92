#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "percograph/branching.hpp"
#include "percograph/components.hpp"
#include "percograph/degree_sequence.hpp"
#include "percograph/errors.hpp"
#include "percograph/experiments.hpp"
#include "percograph/graph.hpp"
#include "percograph/percolation.hpp"
#include "percograph/rng.hpp"
#include "percograph/run_config.hpp"
#include "percograph/serialization.hpp"

namespace {

using namespace percograph;

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_double(const std::string& text, const char* what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end == nullptr || *end != '\0')
        throw std::invalid_argument(std::string(what) + " is not a number: " + text);
    return value;
}

// Grid grammar: "0.1,0.2,0.5" or "lo:hi:steps" (inclusive, evenly spaced).
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("range grid must be lo:hi:steps: " + text);
        const double lo = parse_double(parts[0], "grid lo");
        const double hi = parse_double(parts[1], "grid hi");
        const long steps = std::strtol(parts[2].c_str(), nullptr, 10);
        if (steps < 1) throw std::invalid_argument("grid steps must be >= 1");
        if (steps == 1) {
            if (lo != hi)
                throw std::invalid_argument("one-step grid requires lo == hi");
            grid.push_back(lo);
            return grid;
        }
        for (long i = 0; i < steps; ++i)
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(steps - 1));
        return grid;
    }
    for (const std::string& item : split(text, ','))
        grid.push_back(parse_double(item, "grid value"));
    return grid;
}

int int_cast(double value, const char* what) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6 || rounded < -2e9 || rounded > 2e9)
        throw std::invalid_argument(std::string(what) + " is not a valid integer");
    return static_cast<int>(rounded);
}

// Routes a report to stdout or to --out (with the config sidecar that makes
// the run replayable).
void deliver(const std::string& text, const RunConfig& cfg) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + cfg.out);
    write_sidecar(cfg, cfg.out);
    std::cout << "wrote " << cfg.out << "\n";
}

SweepOptions sweep_options(const RunConfig& cfg) {
    SweepOptions options;
    options.burn_in = cfg.burn_in;
    options.threads = cfg.threads;
    options.force = cfg.force;
    return options;
}

SimpleGraph load_host(const RunConfig& cfg) {
    if (!cfg.graph_file.empty() && !cfg.seq.empty())
        throw std::invalid_argument("give either --graph or --seq, not both");
    if (!cfg.graph_file.empty()) return read_graph_file(cfg.graph_file);
    if (cfg.seq.empty())
        throw std::invalid_argument("a host graph is required: --graph or --seq");
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    RandomStream rng = derive_stream(cfg.seed, 0, 0);
    return sample_uniform(seq, rng, cfg.burn_in);
}

std::string graph_line(const SimpleGraph& g) {
    std::ostringstream line;
    bool first = true;
    for (long long e : g.canonical_edge_order()) {
        const Edge edge = g.edge(e);
        if (!first) line << ' ';
        line << std::min(edge.u, edge.v) << '-' << std::max(edge.u, edge.v);
        first = false;
    }
    return line.str();
}

int run_feasible(const RunConfig& cfg) {
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    const FeasibilityReport report = validate(seq);
    std::ostringstream text;
    if (report.feasible)
        text << "feasible\n";
    else
        text << "infeasible: " << to_string(report.reason) << ": " << report.detail
             << "\n";
    deliver(text.str(), cfg);
    return report.feasible ? 0 : 2;
}

int run_gen(const RunConfig& cfg) {
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    const SimpleGraph g = havel_hakimi(seq);
    if (cfg.out.empty()) {
        write_graph(g, std::cout);
        return 0;
    }
    write_graph_file(g, cfg.out);
    write_sidecar(cfg, cfg.out);
    std::cout << "wrote " << cfg.out << " (" << g.n() << " vertices, "
              << g.edge_count() << " edges)\n";
    return 0;
}

int run_sample(const RunConfig& cfg) {
    if (cfg.out.empty())
        throw std::invalid_argument("sample requires --out");
    if (cfg.samples < 1)
        throw std::invalid_argument("--samples must be >= 1");
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    for (int k = 0; k < cfg.samples; ++k) {
        RandomStream rng = derive_stream(cfg.seed, 0, static_cast<std::uint64_t>(k));
        const SimpleGraph g = sample_uniform(seq, rng, cfg.burn_in);
        const std::string path =
            cfg.samples == 1 ? cfg.out : cfg.out + "." + std::to_string(k);
        write_graph_file(g, path);
    }
    write_sidecar(cfg, cfg.out);
    std::cout << "wrote " << cfg.samples << " sample(s) at " << cfg.out
              << " (seed " << cfg.seed << ")\n";
    return 0;
}

int run_enumerate(const RunConfig& cfg) {
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    const std::vector<SimpleGraph> graphs = enumerate_all(seq);
    std::ostringstream text;
    text << "count: " << graphs.size() << "\n";
    for (const SimpleGraph& g : graphs) text << graph_line(g) << "\n";
    deliver(text.str(), cfg);
    return 0;
}

int run_percolate(const RunConfig& cfg) {
    SimpleGraph host = load_host(cfg);
    const bool two_stage_mode = cfg.p1 >= 0.0 || cfg.p2 >= 0.0;
    std::ostringstream text;
    if (two_stage_mode) {
        if (cfg.p1 < 0.0 || cfg.p2 < 0.0)
            throw std::invalid_argument("two-stage percolation needs both --p1 and --p2");
        RandomStream rng = derive_stream(cfg.seed, 1, 0);
        const TwoStageSample sample = two_stage(host, cfg.p1, cfg.p2, rng);
        const ComponentStats g1 = component_stats(sample.coloring, false);
        const ComponentStats g2 = component_stats(sample.coloring, true);
        text << "n: " << host.n() << "\nedges: " << host.edge_count()
             << "\np1: " << fmt(cfg.p1) << "\np2: " << fmt(cfg.p2)
             << "\ng1_edges: " << sample.g1_count()
             << "\ng2_edges: " << sample.g2_count() << "\ng1_L1: " << g1.l1
             << "\ng2_L1: " << g2.l1 << "\ng1_components: " << g1.count
             << "\ng2_components: " << g2.count << "\n";
        if (!cfg.out.empty()) {
            write_coloring_file(sample.coloring, cfg.out);
            write_sidecar(cfg, cfg.out);
        }
    } else {
        if (cfg.p < 0.0)
            throw std::invalid_argument("percolate needs --p (or --p1/--p2)");
        RandomStream rng = derive_stream(cfg.seed, 1, 0);
        const EdgeColoring coloring = percolate(host, cfg.p, rng);
        const ComponentStats stats = component_stats(coloring);
        text << "n: " << host.n() << "\nedges: " << host.edge_count()
             << "\np: " << fmt(cfg.p) << "\nblue_edges: " << coloring.blue_count
             << "\nL1: " << stats.l1 << "\ncomponents: " << stats.count
             << "\nsecond: " << stats.second() << "\n";
        if (!cfg.out.empty()) {
            write_coloring_file(coloring, cfg.out);
            write_sidecar(cfg, cfg.out);
        }
    }
    std::cout << text.str();
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("sweep requires --out");
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    const SweepResult sw = sweep(seq, cfg.p_grid, cfg.trials, cfg.seed,
                                 cfg.resample_graph, sweep_options(cfg));
    {
        std::ofstream out(cfg.out);
        if (!out) throw std::runtime_error("cannot open " + cfg.out + " for writing");
        write_sweep_csv(sw, out);
        if (!out) throw std::runtime_error("write failed: " + cfg.out);
    }
    if (!cfg.per_trial_out.empty()) {
        std::ofstream out(cfg.per_trial_out);
        if (!out)
            throw std::runtime_error("cannot open " + cfg.per_trial_out +
                                     " for writing");
        write_trial_csv(sw, out);
        if (!out) throw std::runtime_error("write failed: " + cfg.per_trial_out);
    }
    write_sidecar(cfg, cfg.out);
    std::cout << "wrote " << cfg.out << " (" << sw.points.size() << " points x "
              << cfg.trials << " trials, seed " << cfg.seed << ")\n";
    return 0;
}

int run_onion_curve(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("onion-curve requires --out");
    const SweepResult sw = onion_curve(cfg.n, cfg.k, cfg.alpha_grid, cfg.trials,
                                       cfg.seed, sweep_options(cfg));
    {
        std::ofstream out(cfg.out);
        if (!out) throw std::runtime_error("cannot open " + cfg.out + " for writing");
        write_sweep_csv(sw, out);
        if (!out) throw std::runtime_error("write failed: " + cfg.out);
    }
    if (!cfg.per_trial_out.empty()) {
        std::ofstream out(cfg.per_trial_out);
        if (!out)
            throw std::runtime_error("cannot open " + cfg.per_trial_out +
                                     " for writing");
        write_trial_csv(sw, out);
        if (!out) throw std::runtime_error("write failed: " + cfg.per_trial_out);
    }
    write_sidecar(cfg, cfg.out);
    std::cout << "wrote " << cfg.out << " (" << sw.points.size() << " points x "
              << cfg.trials << " trials, seed " << cfg.seed << ")\n";
    return 0;
}

int run_verify_threshold(const RunConfig& cfg) {
    const DegreeSequence seq = parse_sequence_spec(cfg.seq);
    const ThresholdReport report = verify_threshold(seq, cfg.d, cfg.factor,
                                                    cfg.trials, cfg.seed,
                                                    sweep_options(cfg));
    std::ostringstream text;
    text << "d: " << report.d << "\nfactor: " << fmt(report.factor)
         << "\np_lo: " << fmt(report.p_lo) << "\np_hi: " << fmt(report.p_hi)
         << "\ndelta_hat: " << fmt(report.delta_hat)
         << "\nmean_L1_frac_lo: " << fmt(report.mean_l1_frac_lo) << "\n";
    if (report.high_run) {
        text << "mean_L1_frac_hi: " << fmt(report.mean_l1_frac_hi)
             << "\nmean_S_fraction_hi: " << fmt(report.mean_s_fraction_hi) << "\n";
    } else {
        text << "high_p_side: skipped (no vertex of degree >= d)\n";
    }
    deliver(text.str(), cfg);
    return 0;
}

int run_predict(const RunConfig& cfg, const std::string& mode) {
    std::ostringstream text;
    if (mode == "multi-jump") {
        if (cfg.n < 2) throw std::invalid_argument("predict multi-jump needs --n >= 2");
        if (cfg.k < 1) throw std::invalid_argument("predict multi-jump needs --k >= 1");
        const auto rows = multi_jump_predict(cfg.n, cfg.k);
        text << "i, alpha, beta, gamma, threshold_exponent, order_exponent, "
                "p_threshold, predicted_order\n";
        for (const MultiJumpPrediction& row : rows) {
            text << row.i << ", " << fmt(row.alpha) << ", " << fmt(row.beta) << ", "
                 << fmt(row.gamma) << ", " << fmt(row.threshold_exponent) << ", "
                 << fmt(row.order_exponent) << ", " << fmt(row.p_threshold) << ", "
                 << fmt(row.predicted_order) << "\n";
        }
    } else if (mode == "pc") {
        const DegreeSequence seq = parse_sequence_spec(cfg.seq);
        text << "pc: " << fmt(molloy_reed_pc(seq)) << "\n";
    } else if (mode == "theorem6") {
        const DegreeSequence seq = parse_sequence_spec(cfg.seq);
        if (cfg.p < 0.0) throw std::invalid_argument("predict theorem6 needs --p");
        if (cfg.omega < 1.0)
            throw std::invalid_argument("predict theorem6 needs --omega >= 1");
        const Theorem6Result bounds = theorem6_bounds(seq, cfg.d, cfg.p, cfg.omega);
        text << "upper: " << fmt(bounds.upper) << "\nlower: " << fmt(bounds.lower)
             << "\n";
    } else if (mode == "theorem7") {
        const DegreeSequence seq = parse_sequence_spec(cfg.seq);
        if (cfg.p < 0.0) throw std::invalid_argument("predict theorem7 needs --p");
        const Theorem7Result result = theorem7_bound(seq, cfg.d, cfg.p);
        text << "applicable: " << (result.applicable ? "true" : "false")
             << "\nomega: " << fmt(result.omega) << "\nbound: " << fmt(result.bound)
             << "\n";
        if (!result.applicable) text << "reason: " << result.reason << "\n";
    } else {
        throw std::invalid_argument("unknown predict mode: " + mode);
    }
    deliver(text.str(), cfg);
    return 0;
}

int run_census(const RunConfig& cfg) {
    if (cfg.graph_file.empty())
        throw std::invalid_argument("census requires --graph");
    const SimpleGraph g = read_graph_file(cfg.graph_file);
    const long long census = two_cut_pair_census(g);
    std::ostringstream text;
    text << "census: " << census << "\nbound_8n2: "
         << 8LL * static_cast<long long>(g.n()) * static_cast<long long>(g.n())
         << "\n";
    deliver(text.str(), cfg);
    return 0;
}

int execute(const RunConfig& cfg) {
    const std::string& sub = cfg.subcommand;
    if (sub == "feasible") return run_feasible(cfg);
    if (sub == "gen") return run_gen(cfg);
    if (sub == "sample") return run_sample(cfg);
    if (sub == "enumerate") return run_enumerate(cfg);
    if (sub == "percolate") return run_percolate(cfg);
    if (sub == "sweep") return run_sweep(cfg);
    if (sub == "onion-curve") return run_onion_curve(cfg);
    if (sub == "verify-threshold") return run_verify_threshold(cfg);
    if (sub.rfind("predict:", 0) == 0) return run_predict(cfg, sub.substr(8));
    if (sub == "census") return run_census(cfg);
    throw std::invalid_argument("unknown subcommand: " + sub);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bond percolation experiments on uniform random graphs with "
                 "prescribed degree sequences"};
    app.require_subcommand(0, 1);

    std::string config_path;
    int replay_threads = -1;
    app.add_option("--config", config_path,
                   "replay a recorded run configuration sidecar");
    app.add_option("--threads", replay_threads,
                   "worker count override when replaying --config");

    RunConfig cfg;
    std::vector<CLI::Option*> seed_options;
    std::string p_grid_text, alpha_grid_text, predict_mode;
    double n_value = 0.0;

    const auto add_seq = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option(
            "--seq", cfg.seq,
            "degree sequence: inline list, regular:n,d, onion:n,k, multijump:n,k, "
            "counts:DxC,..., or a file path");
        if (required) opt->required();
    };
    const auto add_seed = [&](CLI::App* sub) {
        seed_options.push_back(
            sub->add_option("--seed", cfg.seed, "random seed (fresh if omitted)"));
    };
    const auto add_burn_in = [&](CLI::App* sub) {
        sub->add_option("--burn-in", cfg.burn_in,
                        "switch-chain burn-in (default 30 * degree sum)");
    };
    const auto add_out = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--out", cfg.out, "output file");
        if (required) opt->required();
    };
    const auto add_worker_flags = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads,
                        "worker count (default: available cores)");
        sub->add_flag("--force", cfg.force, "lift the resource guard");
    };

    auto* feasible = app.add_subcommand("feasible", "check graphicality");
    add_seq(feasible, true);
    add_out(feasible, false);

    auto* gen = app.add_subcommand("gen", "deterministic realization (Havel-Hakimi)");
    add_seq(gen, true);
    add_out(gen, false);

    auto* sample = app.add_subcommand("sample", "uniform sample via switch chain");
    add_seq(sample, true);
    add_seed(sample);
    add_burn_in(sample);
    sample->add_option("--samples", cfg.samples, "number of samples (default 1)");
    add_out(sample, true);

    auto* enumerate = app.add_subcommand("enumerate", "list all realizations (n <= 8)");
    add_seq(enumerate, true);
    add_out(enumerate, false);

    auto* percolate = app.add_subcommand("percolate", "percolate one host graph");
    add_seq(percolate, false);
    percolate->add_option("--graph", cfg.graph_file, "host graph file");
    percolate->add_option("--p", cfg.p, "edge retention probability");
    percolate->add_option("--p1", cfg.p1, "two-stage first probability");
    percolate->add_option("--p2", cfg.p2, "two-stage second probability");
    add_seed(percolate);
    add_burn_in(percolate);
    add_out(percolate, false);

    auto* sweep_cmd = app.add_subcommand("sweep", "percolation sweep over a p grid");
    add_seq(sweep_cmd, true);
    sweep_cmd->add_option("--p-grid", p_grid_text, "p grid: list or lo:hi:steps")
        ->required();
    sweep_cmd->add_option("--trials", cfg.trials, "trials per grid point")->required();
    sweep_cmd->add_flag("--resample-graph", cfg.resample_graph,
                        "fresh host graph per trial");
    add_seed(sweep_cmd);
    add_burn_in(sweep_cmd);
    add_worker_flags(sweep_cmd);
    add_out(sweep_cmd, true);
    sweep_cmd->add_option("--per-trial-out", cfg.per_trial_out,
                          "per-trial component CSV");

    auto* onion = app.add_subcommand("onion-curve",
                                     "onion-sequence sweep at p = n^(alpha-1)");
    onion->add_option("--n", n_value, "number of vertices")->required();
    onion->add_option("--k", cfg.k, "truncation depth")->required();
    onion->add_option("--alpha-grid", alpha_grid_text, "alpha grid: list or lo:hi:steps")
        ->required();
    onion->add_option("--trials", cfg.trials, "trials per grid point")->required();
    add_seed(onion);
    add_burn_in(onion);
    add_worker_flags(onion);
    add_out(onion, true);
    onion->add_option("--per-trial-out", cfg.per_trial_out,
                      "per-trial component CSV");

    auto* verify = app.add_subcommand("verify-threshold",
                                      "bracket the 1/d percolation threshold");
    add_seq(verify, true);
    verify->add_option("--d", cfg.d, "degree cutoff defining S_n(d)")->required();
    verify->add_option("--factor", cfg.factor, "bracketing factor (default 10)")
        ->default_val(10.0);
    verify->add_option("--trials", cfg.trials, "trials per side")->required();
    add_seed(verify);
    add_burn_in(verify);
    add_worker_flags(verify);
    add_out(verify, false);

    auto* predict = app.add_subcommand("predict", "closed-form predictions");
    predict->add_option("mode", predict_mode, "multi-jump | pc | theorem6 | theorem7")
        ->required()
        ->check(CLI::IsMember({"multi-jump", "pc", "theorem6", "theorem7"}));
    add_seq(predict, false);
    predict->add_option("--n", n_value, "number of vertices (multi-jump)");
    predict->add_option("--k", cfg.k, "jump count (multi-jump)");
    predict->add_option("--d", cfg.d, "degree cutoff (theorem6/theorem7)");
    predict->add_option("--p", cfg.p, "percolation probability");
    predict->add_option("--omega", cfg.omega, "lower-bound index (theorem6)");
    add_out(predict, false);

    auto* census = app.add_subcommand(
        "census", "ordered oriented switch pairs adding one component");
    census->add_option("--graph", cfg.graph_file, "host graph file")->required();
    add_out(census, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!config_path.empty()) {
            if (!app.get_subcommands().empty()) {
                std::cerr << "error: --config replaces the subcommand; give one or "
                             "the other\n";
                return 1;
            }
            RunConfig loaded = run_config_from_json_file(config_path);
            if (replay_threads >= 0) loaded.threads = replay_threads;
            return execute(loaded);
        }
        const auto subcommands = app.get_subcommands();
        if (subcommands.empty()) {
            std::cerr << app.help();
            return 1;
        }
        cfg.subcommand = subcommands.front()->get_name();
        if (cfg.subcommand == "predict") cfg.subcommand += ":" + predict_mode;
        if (cfg.subcommand == "onion-curve" || cfg.subcommand == "predict:multi-jump")
            cfg.n = int_cast(n_value, "--n");
        if (cfg.subcommand == "onion-curve")
            cfg.alpha_grid = parse_grid(alpha_grid_text);
        if (cfg.subcommand == "sweep") cfg.p_grid = parse_grid(p_grid_text);
        bool seed_given = false;
        for (const CLI::Option* opt : seed_options)
            if (opt->count() > 0) seed_given = true;
        if (!seed_given) cfg.seed = fresh_seed();
        return execute(cfg);
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
