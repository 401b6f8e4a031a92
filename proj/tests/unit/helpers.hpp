#pragma once

// Shared test utilities.  Everything here is deliberately independent of the
// library's own algorithms: components come from a literal BFS, distributions
// from exact enumeration or textbook formulas, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace test_helpers {

// Connected-component sizes by breadth-first search over an explicit
// adjacency list, descending.
inline std::vector<long long> bfs_component_sizes(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<long long> sizes;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        long long size = 0;
        std::queue<int> frontier;
        frontier.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            ++size;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    frontier.push(w);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

// Total variation distance between two distributions given as key -> mass.
template <typename Key>
double total_variation(const std::map<Key, double>& a,
                       const std::map<Key, double>& b) {
    double tv = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            tv += std::abs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            tv += std::abs(ib->second);
            ++ib;
        } else {
            tv += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return tv / 2.0;
}

// Upper-tail p-value of a chi-square goodness-of-fit statistic.
inline double chi_squared_p_value(const std::vector<long long>& observed,
                                  const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi-square needs matched cells");
    double statistic = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw std::invalid_argument("empty expected cell");
        const double diff = static_cast<double>(observed[i]) - expected[i];
        statistic += diff * diff / expected[i];
    }
    boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Exact P(Bin(n, p) = k) via logarithms (stable for large n).
inline double binomial_pmf(long long n, double p, long long k) {
    if (k < 0 || k > n) return 0.0;
    if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1.0) return k == n ? 1.0 : 0.0;
    const double log_pmf = std::lgamma(static_cast<double>(n) + 1.0) -
                           std::lgamma(static_cast<double>(k) + 1.0) -
                           std::lgamma(static_cast<double>(n - k) + 1.0) +
                           static_cast<double>(k) * std::log(p) +
                           static_cast<double>(n - k) * std::log1p(-p);
    return std::exp(log_pmf);
}

// Total-progeny distribution of a Galton-Watson process with Bin(d, p)
// offspring, by the cycle lemma: P(T = t) = (1/t) P(Bin(t d, p) = t - 1).
inline double dwass_progeny_pmf(int d, double p, long long t) {
    if (t < 1) return 0.0;
    return binomial_pmf(t * d, p, t - 1) / static_cast<double>(t);
}

// Same distribution by a truncated convolution fixpoint, fully independent
// of the cycle lemma: T = 1 + sum of Bin(d, p) i.i.d. copies of T.  Masses
// beyond `support` are dropped; for subcritical (d*p < 1) parameters the
// truncation error is negligible once support is a few hundred.
inline std::vector<double> progeny_pmf_by_recursion(int d, double p,
                                                    int support,
                                                    int iterations = 400) {
    std::vector<double> offspring(static_cast<std::size_t>(d) + 1);
    for (int b = 0; b <= d; ++b) offspring[static_cast<std::size_t>(b)] = binomial_pmf(d, p, b);

    std::vector<double> current(static_cast<std::size_t>(support) + 1, 0.0);
    for (int step = 0; step < iterations; ++step) {
        // conv[b] holds the distribution of the sum of b subtree sizes.
        std::vector<double> conv(static_cast<std::size_t>(support) + 1, 0.0);
        conv[0] = 1.0;
        std::vector<double> next(static_cast<std::size_t>(support) + 1, 0.0);
        for (int t = 1; t <= support; ++t)
            next[static_cast<std::size_t>(t)] += offspring[0] * (t == 1 ? 1.0 : 0.0);
        for (int b = 1; b <= d; ++b) {
            std::vector<double> grown(static_cast<std::size_t>(support) + 1, 0.0);
            for (int s = 0; s <= support; ++s) {
                if (conv[static_cast<std::size_t>(s)] == 0.0) continue;
                for (int t = 1; s + t <= support; ++t)
                    grown[static_cast<std::size_t>(s + t)] +=
                        conv[static_cast<std::size_t>(s)] *
                        current[static_cast<std::size_t>(t)];
            }
            conv = grown;
            for (int s = 0; s + 1 <= support; ++s)
                next[static_cast<std::size_t>(s) + 1] +=
                    offspring[static_cast<std::size_t>(b)] *
                    conv[static_cast<std::size_t>(s)];
        }
        double delta = 0.0;
        for (int t = 0; t <= support; ++t)
            delta = std::max(delta, std::abs(next[static_cast<std::size_t>(t)] -
                                             current[static_cast<std::size_t>(t)]));
        current = std::move(next);
        if (delta < 1e-15) break;
    }
    return current;
}

} // namespace test_helpers
