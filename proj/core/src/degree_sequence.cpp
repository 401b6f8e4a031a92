#include "percograph/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "percograph/binomial.hpp"
#include "percograph/errors.hpp"

namespace percograph {

namespace {

// floor(base^exponent) with a small forgiveness band so that exactly-integer
// powers (16^(1/2), 16^(3/4), ...) are not knocked down by floating error.
long long floor_pow(double base, double exponent) {
    const long double value = std::pow(static_cast<long double>(base),
                                       static_cast<long double>(exponent));
    return static_cast<long long>(std::floor(value + 1e-9L));
}

// Adds one to a lowest-degree vertex and restores non-increasing order.
void fix_parity(std::vector<int>& degrees) {
    if (degrees.empty())
        throw infeasible_error("cannot fix parity of an empty sequence");
    degrees.back() += 1;
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : degrees_(std::move(degrees)) {
    for (int d : degrees_)
        if (d < 0) throw std::invalid_argument("negative degree");
    sum_ = std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

DegreeSequence DegreeSequence::regular(int n, int d) {
    if (n < 1) throw infeasible_error("regular: n must be >= 1");
    if (d < 0 || d > n - 1)
        throw infeasible_error("regular: need 0 <= d <= n-1");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw infeasible_error("regular: n*d must be even");
    return DegreeSequence(std::vector<int>(static_cast<std::size_t>(n), d));
}

DegreeSequence DegreeSequence::onion(int n, int k) {
    if (k < 1) throw infeasible_error("onion: k must be >= 1");
    if (k > 30 || n < (1 << k))
        throw infeasible_error("onion: n must be >= 2^k");

    // Layer i in [1,k]: floor(n/2^i) vertices of degree floor(n^(1-2^-i));
    // everything left over joins layer k.
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    long long assigned = 0;
    for (int i = 1; i <= k; ++i) {
        long long size = n >> i;
        const long long deg = floor_pow(n, 1.0 - std::ldexp(1.0, -i));
        if (deg < 1 || deg > n - 1)
            throw infeasible_error("onion: layer degree out of range for this n");
        if (i == k) size = n - assigned; // merge the leftover into the deepest layer
        for (long long j = 0; j < size; ++j)
            degrees.push_back(static_cast<int>(deg));
        assigned += size;
    }
    // Deepest layer has the largest degree; emit non-increasing.
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    if (std::accumulate(degrees.begin(), degrees.end(), 0LL) % 2 != 0)
        fix_parity(degrees);
    return DegreeSequence(std::move(degrees));
}

DegreeSequence DegreeSequence::multi_jump(int n, int k) {
    if (k < 1) throw infeasible_error("multi_jump: k must be >= 1");
    if (n < 2) throw infeasible_error("multi_jump: n must be >= 2");

    // Cumulative boundaries c_i = floor(n^alpha_i) with c_0 = 0: layer i
    // covers vertices [c_(i-1), c_i) at degree max(2, floor(n^beta_i)); the
    // remaining n - c_k vertices get degree 1.
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    long long boundary_prev = 0;
    long long pow5 = 5; // 5^i, starting at i = 1 -> denominator 5^(i+1)
    for (int i = 1; i <= k; ++i) {
        pow5 *= 5;
        const double alpha = 1.0 - 11.0 / (8.0 * static_cast<double>(pow5));
        const double beta = 1.0 / static_cast<double>(pow5);
        long long boundary = floor_pow(n, alpha);
        if (boundary > n) boundary = n;
        if (boundary < boundary_prev)
            throw infeasible_error("multi_jump: layer boundaries not monotone");
        long long deg = std::max<long long>(2, floor_pow(n, beta));
        if (deg > n - 1)
            throw infeasible_error("multi_jump: layer degree exceeds n-1");
        for (long long j = boundary_prev; j < boundary; ++j)
            degrees.push_back(static_cast<int>(deg));
        boundary_prev = boundary;
    }
    for (long long j = boundary_prev; j < n; ++j)
        degrees.push_back(1);
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    if (std::accumulate(degrees.begin(), degrees.end(), 0LL) % 2 != 0)
        fix_parity(degrees);
    return DegreeSequence(std::move(degrees));
}

int DegreeSequence::max_degree() const {
    int best = 0;
    for (int d : degrees_) best = std::max(best, d);
    return best;
}

std::vector<int> DegreeSequence::sorted_degrees() const {
    std::vector<int> sorted = degrees_;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

std::vector<std::pair<int, long long>> DegreeSequence::degree_counts() const {
    std::map<int, long long, std::greater<int>> counts;
    for (int d : degrees_) ++counts[d];
    return {counts.begin(), counts.end()};
}

const char* to_string(InfeasibleReason reason) {
    switch (reason) {
        case InfeasibleReason::none: return "none";
        case InfeasibleReason::degree_too_large: return "degree_too_large";
        case InfeasibleReason::odd_sum: return "odd_sum";
        case InfeasibleReason::erdos_gallai: return "erdos_gallai";
    }
    return "unknown";
}

FeasibilityReport validate(const DegreeSequence& seq) {
    const long long n = seq.n();
    for (int v = 0; v < n; ++v) {
        if (seq.degree(v) > n - 1)
            return {false, InfeasibleReason::degree_too_large,
                    "degree " + std::to_string(seq.degree(v)) +
                        " exceeds n-1 = " + std::to_string(n - 1)};
    }
    if (seq.m() % 2 != 0)
        return {false, InfeasibleReason::odd_sum,
                "degree sum " + std::to_string(seq.m()) + " is odd"};

    // Erdos-Gallai: with d sorted non-increasingly, for every k
    //   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
    // The suffix is split at the first index with d_i < k (two-pointer; the
    // split point only moves left as k grows), giving O(n) after the sort.
    const std::vector<int> d = seq.sorted_degrees();
    std::vector<long long> prefix(d.size() + 1, 0);
    for (std::size_t i = 0; i < d.size(); ++i)
        prefix[i + 1] = prefix[i] + d[i];
    std::size_t split = d.size(); // first index (0-based) with d[i] < k
    for (long long k = 1; k <= n; ++k) {
        while (split > 0 && d[split - 1] < k) --split;
        const std::size_t cut = std::max<std::size_t>(split, static_cast<std::size_t>(k));
        const long long lhs = prefix[static_cast<std::size_t>(k)];
        const long long big_tail = // indices in (k, cut): degree >= k, capped at k
            cut > static_cast<std::size_t>(k)
                ? static_cast<long long>(cut - static_cast<std::size_t>(k)) * k
                : 0;
        const long long small_tail = prefix[d.size()] - prefix[std::max(cut, static_cast<std::size_t>(k))];
        const long long rhs = k * (k - 1) + big_tail + small_tail;
        if (lhs > rhs)
            return {false, InfeasibleReason::erdos_gallai,
                    "Erdos-Gallai fails at k = " + std::to_string(k) + " (" +
                        std::to_string(lhs) + " > " + std::to_string(rhs) + ")"};
    }
    return {};
}

TailStats tail(const DegreeSequence& seq, int d) {
    TailStats stats;
    for (int v = 0; v < seq.n(); ++v) {
        if (seq.degree(v) >= d) {
            ++stats.count;
            stats.mass += seq.degree(v);
        }
    }
    return stats;
}

double molloy_reed_pc(const DegreeSequence& seq) {
    long double numerator = 0, denominator = 0;
    for (int v = 0; v < seq.n(); ++v) {
        const long double d = seq.degree(v);
        numerator += d;
        denominator += d * (d - 1);
    }
    if (denominator <= 0)
        throw std::domain_error(
            "molloy_reed_pc: no vertex of degree >= 2, threshold undefined");
    return static_cast<double>(numerator / denominator);
}

double n_k_stat(const DegreeSequence& seq, int d, double p, int k) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("n_k_stat: p outside [0,1]");
    // Group by degree value: the tail probability depends on the degree only.
    std::map<int, long long> counts;
    for (int v = 0; v < seq.n(); ++v)
        if (seq.degree(v) < d) ++counts[seq.degree(v)];
    double total = 0.0;
    for (const auto& [degree, count] : counts)
        total += static_cast<double>(count) * binomial_upper_tail(degree, p, k);
    return total;
}

DegreeSequence thin(const DegreeSequence& seq, double p, RandomStream& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("thin: p outside [0,1]");
    std::vector<int> thinned(static_cast<std::size_t>(seq.n()));
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        long long sum = 0;
        for (int v = 0; v < seq.n(); ++v) {
            thinned[static_cast<std::size_t>(v)] =
                static_cast<int>(binomial_draw(rng, seq.degree(v), p));
            sum += thinned[static_cast<std::size_t>(v)];
        }
        if (sum % 2 == 0) return DegreeSequence(thinned);
    }
    // P(even) >= some constant for every p < 1, so this is unreachable in
    // practice; p = 1 with odd m is the only true dead end.
    throw std::runtime_error("thin: no even-sum draw found");
}

double step_f(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("step_f: alpha must lie in (0, 1]");
    return std::exp2(std::ceil(std::log2(alpha)));
}

} // namespace percograph
