#pragma once

#include <string>
#include <utility>
#include <vector>

#include "percograph/rng.hpp"

namespace percograph {

// Degree sequence of an n-vertex graph: degrees stored by vertex label.
// The family constructors (regular / onion / multi_jump) emit labels in
// non-increasing degree order; user-supplied sequences keep their input
// order, with sorted access available through sorted_degrees().
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    // d-regular sequence on n vertices.  Requires 0 <= d <= n-1 and n*d even.
    static DegreeSequence regular(int n, int d);

    // Layered heavy-tail sequence truncated at depth k: layer i in [1,k] has
    // floor(n/2^i) vertices of degree floor(n^(1-2^-i)); all leftover
    // vertices (the untruncated remainder plus floor rounding residue) are
    // merged into layer k.  Requires n >= 2^k.  Odd degree sums are fixed by
    // a +1 on one lowest-degree vertex.
    static DegreeSequence onion(int n, int k);

    // k-jump sequence: with alpha_i = 1 - 11/(8*5^(i+1)) and
    // beta_i = 5^-(i+1), vertices c_(i-1)..c_i-1 (c_0 = 0, c_i = floor(n^alpha_i))
    // get degree max(2, floor(n^beta_i)); the remaining n - c_k vertices get
    // degree 1.  Odd sums fixed as in onion().
    static DegreeSequence multi_jump(int n, int k);

    int n() const { return static_cast<int>(degrees_.size()); }
    long long m() const { return sum_; }                 // sum of degrees
    long long edge_count() const { return sum_ / 2; }
    int degree(int v) const { return degrees_[v]; }
    int max_degree() const;
    const std::vector<int>& degrees() const { return degrees_; }

    // Non-increasing copy of the degrees.
    std::vector<int> sorted_degrees() const;

    // (degree, multiplicity) pairs, degree descending.  This is the
    // serialization payload and the canonical descriptor of the multiset.
    std::vector<std::pair<int, long long>> degree_counts() const;

private:
    std::vector<int> degrees_;
    long long sum_ = 0;
};

enum class InfeasibleReason {
    none,
    degree_too_large, // some d_i > n-1
    odd_sum,          // sum of degrees is odd
    erdos_gallai      // fails the Erdos-Gallai inequality
};

struct FeasibilityReport {
    bool feasible = true;
    InfeasibleReason reason = InfeasibleReason::none;
    std::string detail; // human-readable; names the offending index/value
};

const char* to_string(InfeasibleReason reason);

// Graphicality check: degree bounds, parity, and the Erdos-Gallai
// inequalities evaluated with prefix sums in O(n log n) after sorting.
FeasibilityReport validate(const DegreeSequence& seq);

struct TailStats {
    long long count = 0; // |S_n(d)|: vertices of degree >= d
    long long mass = 0;  // d(S_n(d)): sum of their degrees
};

TailStats tail(const DegreeSequence& seq, int d);

// Critical percolation probability sum d_i / sum d_i(d_i - 1).  Throws
// std::domain_error when every degree is <= 1 (denominator zero).
double molloy_reed_pc(const DegreeSequence& seq);

// N_k(d, p) = sum over vertices v with degree(v) < d of P(Bin(degree(v), p) >= k).
double n_k_stat(const DegreeSequence& seq, int d, double p, int k);

// Per-vertex Bin(d_v, p) thinning, resampling the whole vector until the sum
// is even so the result can re-enter the sampling pipeline.  The result may
// contain zero degrees.
DegreeSequence thin(const DegreeSequence& seq, double p, RandomStream& rng);

// Step function 2^ceil(log2 alpha) on (0, 1]: the limiting largest-component
// fraction of the onion family at p = n^(alpha-1).
double step_f(double alpha);

} // namespace percograph
