#include "percograph/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace percograph {

namespace {

void check_gw_args(int d, double p, long long cap) {
    if (d < 0) throw std::invalid_argument("offspring trial count must be >= 0");
    if (!(p >= 0.0) || p > 1.0)
        throw std::invalid_argument("offspring probability outside [0,1]");
    if (cap < 1) throw std::invalid_argument("progeny cap must be >= 1");
}

} // namespace

long long gw_progeny(int d, double p, long long cap, RandomStream& rng) {
    check_gw_args(d, p, cap);
    long long total = 1; // the root
    long long generation = 1;
    while (generation > 0) {
        if (total >= cap) return cap;
        // A generation of size s has combined offspring Bin(s*d, p): exact in
        // distribution, one draw per generation.
        const long long offspring = binomial_draw(rng, generation * d, p);
        total += offspring;
        generation = offspring;
    }
    return std::min(total, cap);
}

std::vector<long long> gw_generations(int d, double p, long long cap,
                                      RandomStream& rng) {
    check_gw_args(d, p, cap);
    std::vector<long long> sizes{1};
    long long total = 1;
    while (sizes.back() > 0 && total < cap) {
        const long long offspring = binomial_draw(rng, sizes.back() * d, p);
        sizes.push_back(offspring);
        total += offspring;
    }
    return sizes;
}

double poisson_ld_rate(double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("poisson_ld_rate: lambda must be > 0");
    return lambda - 1.0 - std::log(lambda);
}

double progeny_tail_bound(double lambda, double t) {
    if (t < 0.0) throw std::domain_error("progeny_tail_bound: t must be >= 0");
    const double bound = std::exp(-t * poisson_ld_rate(lambda));
    return std::clamp(bound, 0.0, 1.0);
}

MeanMatrix mean_matrix(const TwoTypeSpec& spec) {
    if (spec.t11 < 0 || spec.t12 < 0 || spec.t21 < 0 || spec.t22 < 0)
        throw std::invalid_argument("offspring trial counts must be >= 0");
    if (!(spec.p >= 0.0) || spec.p > 1.0)
        throw std::invalid_argument("offspring probability outside [0,1]");
    return {static_cast<double>(spec.t11) * spec.p,
            static_cast<double>(spec.t12) * spec.p,
            static_cast<double>(spec.t21) * spec.p,
            static_cast<double>(spec.t22) * spec.p};
}

double spectral_radius(const MeanMatrix& m) {
    const double trace = m.m11 + m.m22;
    // (m11 - m22)^2 + 4 m12 m21: non-negative for non-negative entries, so
    // the largest eigenvalue is real.
    const double discriminant =
        (m.m11 - m.m22) * (m.m11 - m.m22) + 4.0 * m.m12 * m.m21;
    return 0.5 * (trace + std::sqrt(std::max(discriminant, 0.0)));
}

std::pair<long long, long long> two_type_progeny(const TwoTypeSpec& spec,
                                                 long long cap,
                                                 RandomStream& rng) {
    mean_matrix(spec); // validates trial counts and p
    if (cap < 1) throw std::invalid_argument("progeny cap must be >= 1");
    if (spec.x01 < 0 || spec.x02 < 0)
        throw std::invalid_argument("initial population must be >= 0");

    long long total1 = spec.x01;
    long long total2 = spec.x02;
    long long current1 = spec.x01;
    long long current2 = spec.x02;
    // Trim back to a combined total of exactly cap, shedding type 2 first.
    const auto censor = [&]() {
        long long excess = total1 + total2 - cap;
        const long long from2 = std::min(total2, excess);
        total2 -= from2;
        excess -= from2;
        total1 -= excess;
    };
    if (total1 + total2 >= cap) {
        censor();
        return {total1, total2};
    }
    while (current1 + current2 > 0) {
        const long long next1 = binomial_draw(rng, current1 * spec.t11, spec.p) +
                                binomial_draw(rng, current2 * spec.t21, spec.p);
        const long long next2 = binomial_draw(rng, current1 * spec.t12, spec.p) +
                                binomial_draw(rng, current2 * spec.t22, spec.p);
        total1 += next1;
        total2 += next2;
        current1 = next1;
        current2 = next2;
        if (total1 + total2 >= cap) {
            censor();
            break;
        }
    }
    return {total1, total2};
}

} // namespace percograph
