#pragma once

#include <utility>
#include <vector>

#include "percograph/rng.hpp"

namespace percograph {

// Total progeny (root counted) of a Galton-Watson tree with Bin(d, p)
// offspring, simulated generation-synchronously: a generation of size s
// draws its combined offspring as a single Bin(s*d, p), which is exact in
// distribution.  Truncated at cap: returns cap when total progeny reaches
// it (right-censoring sentinel).  Requires cap >= 1.
long long gw_progeny(int d, double p, long long cap, RandomStream& rng);

// Generation sizes X_0 = 1, X_1, ... of the same process, stopping at
// extinction or when the running total reaches cap.  Exposed for statistics
// on generation means (E[X_k] <= (dp)^k in the subcritical regime).
std::vector<long long> gw_generations(int d, double p, long long cap,
                                      RandomStream& rng);

// Large-deviation rate I_lambda = lambda - 1 - ln lambda; requires lambda > 0.
double poisson_ld_rate(double lambda);

// exp(-t * I_lambda) clamped to [0,1]: tail bound on P(total progeny >= t)
// for offspring mean lambda < 1.  Asymptotic in t — for lambda near 1 the
// first few t violate it arithmetically, so callers should apply it in its
// regime (moderately large t).
double progeny_tail_bound(double lambda, double t);

// Two-type branching process: a type-a individual begets Bin(t_a1, p)
// children of type 1 and Bin(t_a2, p) of type 2, all counts sharing one
// success probability; (x01, x02) is the initial population.
struct TwoTypeSpec {
    long long t11 = 0;
    long long t12 = 0;
    long long t21 = 0;
    long long t22 = 0;
    double p = 0.0;
    long long x01 = 1;
    long long x02 = 0;
};

struct MeanMatrix {
    double m11 = 0, m12 = 0, m21 = 0, m22 = 0;
};

// Exact offspring means m_ab = t_ab * p.
MeanMatrix mean_matrix(const TwoTypeSpec& spec);

// Largest eigenvalue of a nonnegative 2x2 matrix via the trace/determinant
// closed form (the discriminant (m11-m22)^2 + 4 m12 m21 is nonnegative).
double spectral_radius(const MeanMatrix& m);

// Criticality bands used by the classification checks: radii below/above
// these are treated as decisively sub/supercritical.
inline constexpr double kSubcriticalRadius = 0.9;
inline constexpr double kSupercriticalRadius = 1.5;

enum class Criticality { subcritical, near_critical, supercritical };

inline Criticality classify_radius(double radius) {
    if (radius < kSubcriticalRadius) return Criticality::subcritical;
    if (radius > kSupercriticalRadius) return Criticality::supercritical;
    return Criticality::near_critical;
}

// Total progeny per type (initial population counted), generation-
// synchronous with binomial bulk draws per type pair.  Truncated when the
// combined progeny reaches cap: the last generation's contribution is
// trimmed (type 2 first) so the pair sums to exactly cap, the censoring
// sentinel.  Requires cap >= 1.
std::pair<long long, long long> two_type_progeny(const TwoTypeSpec& spec,
                                                 long long cap,
                                                 RandomStream& rng);

} // namespace percograph
