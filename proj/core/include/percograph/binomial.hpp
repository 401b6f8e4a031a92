#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace percograph {

namespace detail {

// log C(d,k) + k log p + (d-k) log q
inline double log_binomial_pmf(long long d, long long k, double p) {
    const double q = 1.0 - p;
    return std::lgamma(double(d) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(d - k) + 1.0) +
           double(k) * std::log(p) + double(d - k) * std::log(q);
}

// pmf(d,k,p) by direct multiplication, interleaving the C(d,k) factors with
// the probability factors so intermediate values stay in range for d ≤ ~10^3.
inline double binomial_pmf_direct(long long d, long long k, double p) {
    const double q = 1.0 - p;
    const long long r = (k < d - k) ? k : d - k; // C(d,k) = C(d,d-k)
    double value = 1.0;
    // Attach one p and one q per C-factor first, then the leftovers.
    long long np = k, nq = d - k;
    for (long long i = 1; i <= r; ++i) {
        value *= double(d - r + i) / double(i);
        if (np > 0) { value *= p; --np; }
        if (nq > 0) { value *= q; --nq; }
    }
    while (np-- > 0) value *= p;
    while (nq-- > 0) value *= q;
    return value;
}

} // namespace detail

// P(Bin(d, p) >= k), by exact summation of pmf terms.  The first term is
// computed directly for small d and in log space for d > 10^3; subsequent
// terms follow from the multiplicative recurrence
//   pmf(j+1) = pmf(j) * (d-j)/(j+1) * p/(1-p).
// Summation always starts on the side of the mode with the smaller mass
// (upper tail for k past the mode, complement of the lower tail otherwise),
// so terms decay geometrically and O(sqrt(d)) of them suffice.
inline double binomial_upper_tail(long long d, double p, long long k) {
    if (d < 0) throw std::invalid_argument("binomial_upper_tail: d < 0");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("binomial_upper_tail: p outside [0,1]");
    if (k <= 0) return 1.0;
    if (k > d) return 0.0;
    if (p == 0.0) return 0.0; // k >= 1
    if (p == 1.0) return 1.0; // k <= d

    const double q = 1.0 - p;
    const long long mode = static_cast<long long>(std::floor(double(d + 1) * p));

    auto start_term = [&](long long j) {
        return d <= 1000 ? detail::binomial_pmf_direct(d, j, p)
                         : std::exp(detail::log_binomial_pmf(d, j, p));
    };

    if (k > mode) {
        // Sum pmf(k) + pmf(k+1) + ... ; terms decrease.
        double term = start_term(k);
        double sum = term;
        for (long long j = k; j < d; ++j) {
            term *= (double(d - j) / double(j + 1)) * (p / q);
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return sum < 1.0 ? sum : 1.0;
    }
    // Complement: 1 - P(X <= k-1), summing pmf(k-1) + pmf(k-2) + ... ;
    // below the mode the terms also decrease going down.
    double term = start_term(k - 1);
    double sum = term;
    for (long long j = k - 1; j > 0; --j) {
        term *= (double(j) / double(d - j + 1)) * (q / p);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    const double result = 1.0 - sum;
    return result > 0.0 ? result : 0.0;
}

} // namespace percograph
