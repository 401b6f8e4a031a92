#include "percograph/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "percograph/components.hpp"
#include "percograph/errors.hpp"
#include "percograph/percolation.hpp"
#include "percograph/rng.hpp"
#include "percograph/run_config.hpp"

namespace percograph {

namespace {

constexpr long long kEdgeGuard = 100'000'000; // edges x hosts without force

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Index-parallel loop: workers pull indices from a shared counter, each
// index's work writes only to its own output slot, so results never depend
// on the worker count.
void parallel_for(long long total, int threads,
                  const std::function<void(long long)>& body) {
    if (total <= 0) return;
    threads = static_cast<int>(std::min<long long>(threads, total));
    if (threads <= 1) {
        for (long long i = 0; i < total; ++i) body(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                const long long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= total) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(total, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (std::thread& worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
}

void check_grid(const std::vector<double>& grid, double lo, double hi,
                const char* name) {
    if (grid.empty())
        throw std::invalid_argument(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= lo) || grid[i] > hi)
            throw std::invalid_argument(std::string(name) + " grid value out of range");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument(std::string(name) +
                                        " grid must be strictly increasing");
    }
}

void check_host_budget(const DegreeSequence& seq, long long host_count,
                       bool force) {
    if (force) return;
    const long long edges = seq.edge_count();
    if (edges > kEdgeGuard)
        throw guard_error("resource guard: " + std::to_string(edges) +
                          " edges exceeds " + std::to_string(kEdgeGuard) +
                          " (use force to override)");
    if (edges > 0 && host_count > kEdgeGuard / edges)
        throw guard_error("resource guard: sampling " + std::to_string(host_count) +
                          " hosts of " + std::to_string(edges) +
                          " edges exceeds the edge budget (use force to override)");
}

} // namespace

SweepResult sweep(const DegreeSequence& seq, const std::vector<double>& p_grid,
                  int trials, std::uint64_t seed, bool resample_graph,
                  const SweepOptions& options) {
    if (seq.n() < 1) throw std::invalid_argument("sweep: empty degree sequence");
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    check_grid(p_grid, 0.0, 1.0, "p");
    if (!options.x_values.empty() && options.x_values.size() != p_grid.size())
        throw std::invalid_argument("sweep: x_values size != grid size");
    if (!options.predictions.empty() && options.predictions.size() != p_grid.size())
        throw std::invalid_argument("sweep: predictions size != grid size");
    if (!options.truncation_flags.empty() &&
        options.truncation_flags.size() != p_grid.size())
        throw std::invalid_argument("sweep: truncation_flags size != grid size");
    const FeasibilityReport feasibility = validate(seq);
    if (!feasibility.feasible)
        throw infeasible_error("sweep: infeasible degree sequence: " +
                               feasibility.detail);

    const int points = static_cast<int>(p_grid.size());
    const long long host_count =
        resample_graph ? static_cast<long long>(points) * trials : 1;
    check_host_budget(seq, host_count, options.force);

    SweepResult result;
    result.n = seq.n();
    result.seed = seed;
    result.sequence_descriptor = counts_descriptor(seq);
    result.resample_graph = resample_graph;
    result.burn_in = options.burn_in < 0 ? default_burn_in(seq) : options.burn_in;
    result.records.resize(static_cast<std::size_t>(points) * trials);

    SimpleGraph shared_host;
    if (!resample_graph) {
        RandomStream host_rng = derive_stream(seed, 0, 0);
        shared_host = sample_uniform(seq, host_rng, result.burn_in);
        shared_host.canonical_edge_order(); // build once, before workers share it
    }

    const int threads = resolve_threads(options.threads);
    parallel_for(static_cast<long long>(points) * trials, threads, [&](long long idx) {
        const int pi = static_cast<int>(idx / trials);
        const int ti = static_cast<int>(idx % trials);
        const double p = p_grid[static_cast<std::size_t>(pi)];
        ComponentStats stats;
        if (resample_graph) {
            RandomStream host_rng = derive_stream(
                seed, 0,
                1 + static_cast<std::uint64_t>(pi) * static_cast<std::uint64_t>(trials) +
                    static_cast<std::uint64_t>(ti));
            SimpleGraph host = sample_uniform(seq, host_rng, result.burn_in);
            RandomStream trial_rng =
                derive_stream(seed, 1 + static_cast<std::uint64_t>(pi),
                              static_cast<std::uint64_t>(ti));
            stats = component_stats(percolate(host, p, trial_rng));
        } else {
            RandomStream trial_rng =
                derive_stream(seed, 1 + static_cast<std::uint64_t>(pi),
                              static_cast<std::uint64_t>(ti));
            stats = component_stats(percolate(shared_host, p, trial_rng));
        }
        result.records[static_cast<std::size_t>(idx)] = {pi,       ti,
                                                         p,        stats.l1,
                                                         stats.count, stats.second()};
    });

    // Aggregation reads the records in fixed (point, trial) order: the
    // result is a pure function of (seed, inputs), not of scheduling.
    result.points.resize(static_cast<std::size_t>(points));
    const double n = static_cast<double>(result.n);
    for (int pi = 0; pi < points; ++pi) {
        SweepPoint& point = result.points[static_cast<std::size_t>(pi)];
        point.p = p_grid[static_cast<std::size_t>(pi)];
        point.x = options.x_values.empty() ? point.p
                                           : options.x_values[static_cast<std::size_t>(pi)];
        point.trials = trials;
        point.prediction = options.predictions.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : options.predictions[static_cast<std::size_t>(pi)];
        point.beyond_truncation =
            !options.truncation_flags.empty() &&
            options.truncation_flags[static_cast<std::size_t>(pi)] != 0;

        double sum = 0.0, sum_second = 0.0;
        point.min_l1_frac = std::numeric_limits<double>::infinity();
        point.max_l1_frac = 0.0;
        for (int ti = 0; ti < trials; ++ti) {
            const TrialRecord& record =
                result.records[static_cast<std::size_t>(pi) * trials + ti];
            const double frac = static_cast<double>(record.l1) / n;
            sum += frac;
            sum_second += static_cast<double>(record.second_largest) / n;
            point.min_l1_frac = std::min(point.min_l1_frac, frac);
            point.max_l1_frac = std::max(point.max_l1_frac, frac);
        }
        point.mean_l1_frac = sum / trials;
        point.mean_second_frac = sum_second / trials;
        double sq = 0.0;
        for (int ti = 0; ti < trials; ++ti) {
            const TrialRecord& record =
                result.records[static_cast<std::size_t>(pi) * trials + ti];
            const double dev = static_cast<double>(record.l1) / n - point.mean_l1_frac;
            sq += dev * dev;
        }
        point.std_l1_frac = trials > 1 ? std::sqrt(sq / (trials - 1)) : 0.0;
    }
    return result;
}

SweepResult onion_curve(int n, int k, const std::vector<double>& alpha_grid,
                        int trials, std::uint64_t seed,
                        const SweepOptions& options) {
    check_grid(alpha_grid, std::numeric_limits<double>::min(), 1.0, "alpha");
    const DegreeSequence seq = DegreeSequence::onion(n, k);

    SweepOptions forwarded = options;
    forwarded.x_values = alpha_grid;
    forwarded.predictions.clear();
    forwarded.truncation_flags.clear();
    std::vector<double> p_grid;
    const double truncation_alpha = std::exp2(static_cast<double>(-k));
    for (double alpha : alpha_grid) {
        p_grid.push_back(std::pow(static_cast<double>(n), alpha - 1.0));
        forwarded.predictions.push_back(step_f(alpha));
        forwarded.truncation_flags.push_back(alpha < truncation_alpha ? 1 : 0);
    }
    return sweep(seq, p_grid, trials, seed, false, forwarded);
}

JumpReport detect_jumps(const SweepResult& sw, double c) {
    if (!(c > 1.0)) throw std::invalid_argument("detect_jumps: requires c > 1");
    JumpReport report;
    report.c = c;
    for (std::size_t i = 0; i + 1 < sw.points.size(); ++i) {
        const double before = sw.points[i].mean_l1_frac;
        const double after = sw.points[i + 1].mean_l1_frac;
        double ratio;
        if (before > 0.0)
            ratio = after / before;
        else
            ratio = after > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        if (ratio >= c)
            report.jumps.push_back({sw.points[i].p, sw.points[i + 1].p, ratio});
    }
    return report;
}

Theorem7Result theorem7_bound(const DegreeSequence& seq, int d, double p) {
    if (d < 1) throw std::invalid_argument("theorem7_bound: d must be >= 1");
    if (!(p >= 0.0) || p > 1.0)
        throw std::invalid_argument("theorem7_bound: p outside [0,1]");
    const TailStats s = tail(seq, d);
    const double pd = p * static_cast<double>(d);
    const double p_mass = p * static_cast<double>(s.mass);

    Theorem7Result result;
    result.omega = std::min(
        pd > 0.0 ? 1.0 / pd : std::numeric_limits<double>::infinity(), p_mass);
    result.applicable = pd < 1.0 && p_mass > 1.0;
    if (!result.applicable) {
        if (!(pd < 1.0))
            result.reason = "p*d = " + std::to_string(pd) + " is not < 1";
        else
            result.reason =
                "p*d(S_n(d)) = " + std::to_string(p_mass) + " is not > 1";
    }
    if (result.omega > 1.0) {
        const double crowd = static_cast<double>(s.count) +
                             (1.0 + 2.0 * std::pow(result.omega, -1.0 / 3.0)) * p_mass;
        const double log_term =
            2.0 * std::log(static_cast<double>(seq.n())) / std::log(result.omega);
        result.bound = std::max(crowd, log_term);
    } else {
        result.bound = std::numeric_limits<double>::quiet_NaN();
    }
    return result;
}

Theorem6Result theorem6_bounds(const DegreeSequence& seq, int d, double p,
                               double omega) {
    if (!(omega >= 1.0))
        throw std::invalid_argument("theorem6_bounds: omega must be >= 1");
    const TailStats s = tail(seq, d);
    const int k_omega = static_cast<int>(std::ceil(omega));
    Theorem6Result result;
    result.upper = static_cast<double>(s.count) + n_k_stat(seq, d, p, 1);
    result.lower = static_cast<double>(s.count) + n_k_stat(seq, d, p, k_omega);
    return result;
}

std::vector<MultiJumpPrediction> multi_jump_predict(long long n, int k) {
    if (n < 2) throw std::invalid_argument("multi_jump_predict: n must be >= 2");
    if (k < 1 || k > 25)
        throw std::invalid_argument("multi_jump_predict: k outside [1, 25]");
    std::vector<MultiJumpPrediction> rows;
    long long pow5_i = 1; // 5^i
    for (int i = 1; i <= k; ++i) {
        pow5_i *= 5;
        const long long pow5_ip1 = pow5_i * 5;
        MultiJumpPrediction row;
        row.i = i;
        row.alpha = 1.0 - 11.0 / (8.0 * static_cast<double>(pow5_ip1));
        row.beta = 1.0 / static_cast<double>(pow5_ip1);
        row.gamma = 1.0 / (8.0 * static_cast<double>(pow5_i));
        // 1 - alpha - 2 beta collapses exactly to -gamma; using the closed
        // form avoids the cancellation in the literal subtraction.
        row.threshold_exponent = -row.gamma;
        row.order_exponent = 1.0 - row.beta;
        row.p_threshold = std::pow(static_cast<double>(n), row.threshold_exponent);
        row.predicted_order = std::pow(static_cast<double>(n), row.order_exponent);
        rows.push_back(row);
    }
    return rows;
}

ThresholdReport verify_threshold(const DegreeSequence& seq, int d,
                                 double factor, int trials, std::uint64_t seed,
                                 const SweepOptions& options) {
    if (d < 1) throw std::invalid_argument("verify_threshold: d must be >= 1");
    if (!(factor > 1.0))
        throw std::invalid_argument("verify_threshold: factor must be > 1");
    if (trials < 1)
        throw std::invalid_argument("verify_threshold: trials must be >= 1");
    const FeasibilityReport feasibility = validate(seq);
    if (!feasibility.feasible)
        throw infeasible_error("verify_threshold: infeasible degree sequence: " +
                               feasibility.detail);
    check_host_budget(seq, 1, options.force);

    ThresholdReport report;
    report.d = d;
    report.factor = factor;
    report.p_lo = 1.0 / (factor * static_cast<double>(d));
    report.p_hi = std::min(1.0, factor / static_cast<double>(d));
    const TailStats s = tail(seq, d);
    report.delta_hat = static_cast<double>(s.count) / static_cast<double>(seq.n());
    report.s_defined = s.count > 0;
    report.high_run = report.s_defined;

    const long long burn_in =
        options.burn_in < 0 ? default_burn_in(seq) : options.burn_in;
    RandomStream host_rng = derive_stream(seed, 0, 0);
    SimpleGraph host = sample_uniform(seq, host_rng, burn_in);
    host.canonical_edge_order();

    std::vector<std::uint8_t> in_s(static_cast<std::size_t>(seq.n()), 0);
    for (int v = 0; v < seq.n(); ++v)
        if (seq.degree(v) >= d) in_s[static_cast<std::size_t>(v)] = 1;

    std::vector<double> low_fracs(static_cast<std::size_t>(trials), 0.0);
    std::vector<double> high_fracs(static_cast<std::size_t>(trials), 0.0);
    report.s_fraction_hi.assign(report.high_run ? static_cast<std::size_t>(trials) : 0,
                                0.0);
    const long long total_tasks =
        report.high_run ? 2LL * trials : static_cast<long long>(trials);
    const double n = static_cast<double>(seq.n());
    parallel_for(total_tasks, resolve_threads(options.threads), [&](long long idx) {
        const int side = static_cast<int>(idx / trials); // 0 = low p, 1 = high p
        const int ti = static_cast<int>(idx % trials);
        const double p = side == 0 ? report.p_lo : report.p_hi;
        RandomStream trial_rng = derive_stream(
            seed, 1 + static_cast<std::uint64_t>(side), static_cast<std::uint64_t>(ti));
        const EdgeColoring coloring = percolate(host, p, trial_rng);
        const ComponentLabels labels = component_labels(coloring);
        if (side == 0) {
            low_fracs[static_cast<std::size_t>(ti)] = static_cast<double>(labels.l1) / n;
        } else {
            high_fracs[static_cast<std::size_t>(ti)] = static_cast<double>(labels.l1) / n;
            long long captured = 0;
            for (int v = 0; v < seq.n(); ++v)
                if (in_s[static_cast<std::size_t>(v)] &&
                    labels.root[static_cast<std::size_t>(v)] == labels.largest_root)
                    ++captured;
            report.s_fraction_hi[static_cast<std::size_t>(ti)] =
                static_cast<double>(captured) / static_cast<double>(s.count);
        }
    });

    double sum_low = 0.0;
    for (double f : low_fracs) sum_low += f;
    report.mean_l1_frac_lo = sum_low / trials;
    if (report.high_run) {
        double sum_high = 0.0, sum_s = 0.0;
        for (double f : high_fracs) sum_high += f;
        for (double f : report.s_fraction_hi) sum_s += f;
        report.mean_l1_frac_hi = sum_high / trials;
        report.mean_s_fraction_hi = sum_s / trials;
    }
    return report;
}

namespace {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

} // namespace

void write_sweep_csv(const SweepResult& sw, std::ostream& out) {
    out << "alpha_or_p, trials, mean_L1_frac, std_L1_frac, min, max, "
           "mean_second_frac, prediction\n";
    for (const SweepPoint& point : sw.points) {
        out << format_double(point.x) << ", " << point.trials << ", "
            << format_double(point.mean_l1_frac) << ", "
            << format_double(point.std_l1_frac) << ", "
            << format_double(point.min_l1_frac) << ", "
            << format_double(point.max_l1_frac) << ", "
            << format_double(point.mean_second_frac) << ", "
            << format_double(point.prediction) << "\n";
    }
}

void write_trial_csv(const SweepResult& sw, std::ostream& out) {
    out << "trial, p, L1, n_components, second_largest\n";
    for (const TrialRecord& record : sw.records) {
        out << record.trial << ", " << format_double(record.p) << ", " << record.l1
            << ", " << record.n_components << ", " << record.second_largest << "\n";
    }
}

} // namespace percograph
