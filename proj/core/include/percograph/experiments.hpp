#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "percograph/degree_sequence.hpp"
#include "percograph/graph.hpp"

namespace percograph {

// One percolation trial's component record.  trial is the index within its
// grid point.
struct TrialRecord {
    int point = 0;
    int trial = 0;
    double p = 0.0;
    long long l1 = 0;
    long long n_components = 0;
    long long second_largest = 0;
};

// Aggregated statistics for one grid point.  x is the sweep coordinate (p
// for plain sweeps, alpha for onion curves); prediction is NaN when no
// closed-form prediction applies.
struct SweepPoint {
    double x = 0.0;
    double p = 0.0;
    int trials = 0;
    double mean_l1_frac = 0.0;
    double std_l1_frac = 0.0;
    double min_l1_frac = 0.0;
    double max_l1_frac = 0.0;
    double mean_second_frac = 0.0;
    double prediction = 0.0;
    bool beyond_truncation = false; // onion curves: alpha < 2^-k
};

struct SweepResult {
    int n = 0;
    std::uint64_t seed = 0;
    std::string sequence_descriptor;
    bool resample_graph = false;
    long long burn_in = -1;
    std::vector<SweepPoint> points;
    std::vector<TrialRecord> records; // ordered by (point, trial)
};

struct SweepOptions {
    long long burn_in = -1;   // -1: default_burn_in(seq)
    int threads = 0;          // 0: hardware concurrency
    bool force = false;       // lift the m * trials resource guard
    // Optional per-point sweep coordinates and predictions (parallel to the
    // grid); used by onion_curve, ignored when empty.
    std::vector<double> x_values;
    std::vector<double> predictions;
    std::vector<std::uint8_t> truncation_flags;
};

// Percolation sweep over a strictly increasing p grid.  One host graph per
// sweep when resample_graph is false (default policy), an independent host
// per trial otherwise.  Per-trial streams derive from (seed, point index,
// trial index), and aggregation reads per-trial records in fixed order, so
// the result is identical for any worker count.
SweepResult sweep(const DegreeSequence& seq, const std::vector<double>& p_grid,
                  int trials, std::uint64_t seed, bool resample_graph = false,
                  const SweepOptions& options = {});

// Sweep of the depth-k onion sequence at p = n^(alpha-1) per grid alpha,
// paired with the predicted limit f(alpha) = 2^ceil(log2 alpha).  Points
// with alpha < 2^-k probe layers the truncation removed and are flagged
// beyond_truncation.
SweepResult onion_curve(int n, int k, const std::vector<double>& alpha_grid,
                        int trials, std::uint64_t seed,
                        const SweepOptions& options = {});

struct Jump {
    double p_lo = 0.0;
    double p_hi = 0.0;
    double l1_ratio = 0.0;
};

struct JumpReport {
    double c = 0.0;
    std::vector<Jump> jumps; // adjacent grid pairs with mean-L1 ratio >= c
};

// Adjacent grid pairs whose mean L1 grows by a factor >= c (c > 1).
JumpReport detect_jumps(const SweepResult& sw, double c);

struct Theorem7Result {
    bool applicable = false;
    std::string reason;     // set when not applicable
    double omega = 0.0;     // min{1/(dp), p*d(S_n(d))}
    double bound = 0.0;     // max{|S| + (1 + 2 omega^(-1/3)) p d(S), 2 ln n / ln omega}
};

// Largest-component upper bound in the sparse regime p*d < 1 < p*d(S_n(d));
// natural logarithms.  Outside the regime the result is flagged, not fatal.
Theorem7Result theorem7_bound(const DegreeSequence& seq, int d, double p);

struct Theorem6Result {
    double upper = 0.0; // |S_n(d)| + N_1(d, p)
    double lower = 0.0; // |S_n(d)| + N_omega(d, p)
};

// Plug-in values of the dense-regime component-size sandwich; callers
// compare empirical L1 against them with multiplicative slack.  A fractional
// omega rounds up: P(Bin >= omega) = P(Bin >= ceil(omega)) for integer
// counts.
Theorem6Result theorem6_bounds(const DegreeSequence& seq, int d, double p,
                               double omega);

struct MultiJumpPrediction {
    int i = 0;
    double alpha = 0.0;              // 1 - 11/(8*5^(i+1))
    double beta = 0.0;               // 5^-(i+1)
    double gamma = 0.0;              // alpha + 2 beta - 1 = 1/(8*5^i)
    double threshold_exponent = 0.0; // 1 - alpha - 2 beta = -gamma
    double order_exponent = 0.0;     // 1 - beta
    double p_threshold = 0.0;        // n^threshold_exponent
    double predicted_order = 0.0;    // n^order_exponent
};

// Jump thresholds and supercritical orders of the k-jump family, one row per
// i in [1, k], from the exact exponent formulas.
std::vector<MultiJumpPrediction> multi_jump_predict(long long n, int k);

struct ThresholdReport {
    int d = 0;
    double factor = 0.0;
    double p_lo = 0.0;  // 1 / (factor * d)
    double p_hi = 0.0;  // min(1, factor / d)
    double delta_hat = 0.0; // |S_n(d)| / n
    double mean_l1_frac_lo = 0.0;
    double mean_l1_frac_hi = 0.0;
    bool s_defined = false;              // |S_n(d)| > 0
    std::vector<double> s_fraction_hi;   // per high-p trial: |S ∩ largest| / |S|
    double mean_s_fraction_hi = 0.0;
    // High-p side is skipped when S is empty (nothing to verify there).
    bool high_run = false;
};

// Threshold bracketing: trials at p below and above 1/d by the given factor,
// reporting mean L1/n on both sides and, when S_n(d) is nonempty, how much
// of it the largest component captures at the high p.
ThresholdReport verify_threshold(const DegreeSequence& seq, int d,
                                 double factor, int trials,
                                 std::uint64_t seed,
                                 const SweepOptions& options = {});

// CSV with the fixed header
//   alpha_or_p, trials, mean_L1_frac, std_L1_frac, min, max, mean_second_frac, prediction
// one row per grid point, ", "-separated, numbers formatted reproducibly
// (%.12g).
void write_sweep_csv(const SweepResult& sw, std::ostream& out);

// Per-trial CSV: trial,p,L1,n_components,second_largest.
void write_trial_csv(const SweepResult& sw, std::ostream& out);

} // namespace percograph
