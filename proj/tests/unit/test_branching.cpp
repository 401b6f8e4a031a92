#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "percograph/branching.hpp"
#include "percograph/rng.hpp"

using namespace percograph;

TEST_CASE("progeny oracle cross-check: cycle lemma vs truncated recursion") {
    for (const auto& [d, p] : std::vector<std::pair<int, double>>{
             {2, 0.25}, {3, 0.3}, {1, 0.5}, {3, 0.1}}) {
        const auto recursion = test_helpers::progeny_pmf_by_recursion(d, p, 120);
        for (long long t = 1; t <= 60; ++t) {
            CHECK(recursion[static_cast<std::size_t>(t)] ==
                  doctest::Approx(test_helpers::dwass_progeny_pmf(d, p, t))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("mean total progeny matches 1/(1-dp) in the subcritical phase") {
    RandomStream rng = derive_stream(71);
    const int runs = 100000;
    double total = 0.0;
    for (int i = 0; i < runs; ++i)
        total += static_cast<double>(gw_progeny(2, 0.25, 1000000, rng));
    const double mean = total / runs;
    CHECK(std::abs(mean - 2.0) < 0.05); // E[T] = 1/(1 - 0.5) = 2
}

TEST_CASE("progeny distribution matches the exact recursion") {
    RandomStream rng = derive_stream(73);
    const int d = 3;
    const double p = 0.25;
    const int runs = 100000;
    const int support = 200;
    std::map<long long, double> empirical, exact;
    for (int i = 0; i < runs; ++i) {
        long long t = gw_progeny(d, p, 1000000, rng);
        if (t > support) t = support + 1; // lump the far tail
        empirical[t] += 1.0 / runs;
    }
    const auto pmf = test_helpers::progeny_pmf_by_recursion(d, p, support);
    double covered = 0.0;
    for (long long t = 1; t <= support; ++t) {
        exact[t] = pmf[static_cast<std::size_t>(t)];
        covered += pmf[static_cast<std::size_t>(t)];
    }
    exact[support + 1] = std::max(0.0, 1.0 - covered);
    CHECK(test_helpers::total_variation(empirical, exact) < 0.01);
}

TEST_CASE("generation sizes decay at rate dp in expectation") {
    RandomStream rng = derive_stream(79);
    const int d = 3, runs = 40000;
    const double p = 0.2; // dp = 0.6
    std::vector<double> sums(6, 0.0), squares(6, 0.0);
    for (int i = 0; i < runs; ++i) {
        const auto generations = gw_generations(d, p, 1000000, rng);
        for (std::size_t k = 0; k < sums.size(); ++k) {
            const double value =
                k < generations.size()
                    ? static_cast<double>(generations[k])
                    : 0.0;
            sums[k] += value;
            squares[k] += value * value;
        }
    }
    for (std::size_t k = 0; k < sums.size(); ++k) {
        const double mean = sums[k] / runs;
        const double variance =
            std::max(0.0, squares[k] / runs - mean * mean);
        const double se = std::sqrt(variance / runs);
        const double bound = std::pow(0.6, static_cast<double>(k));
        CHECK(mean <= bound + 3.0 * se);
        // The bound is exact in expectation here, so the mean also sits
        // within 3 standard errors below it.
        CHECK(mean >= bound - 3.0 * se - 1e-12);
    }
}

TEST_CASE("progeny generator validates its arguments") {
    RandomStream rng = derive_stream(83);
    CHECK_THROWS_AS(gw_progeny(-1, 0.5, 100, rng), std::invalid_argument);
    CHECK_THROWS_AS(gw_progeny(2, 1.5, 100, rng), std::invalid_argument);
    CHECK(gw_progeny(0, 0.5, 100, rng) == 1); // degenerate: the root alone
    CHECK_THROWS_AS(gw_progeny(2, 0.5, 0, rng), std::invalid_argument);
    CHECK(gw_progeny(2, 0.0, 100, rng) == 1);
}

TEST_CASE("large-deviation rate for the Poisson tail") {
    CHECK(poisson_ld_rate(0.1) == doctest::Approx(1.40259).epsilon(1e-5));
    CHECK(poisson_ld_rate(1.0) == doctest::Approx(0.0));
    CHECK(poisson_ld_rate(2.0) ==
          doctest::Approx(2.0 - 1.0 - std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(poisson_ld_rate(0.0), std::domain_error);
    CHECK_THROWS_AS(poisson_ld_rate(-1.0), std::domain_error);
}

TEST_CASE("empirical progeny tail sits under the asymptotic bound") {
    RandomStream rng = derive_stream(89);
    const int runs = 1000000;
    // lambda = dp = 0.1 with d = 1: T - 1 counts consecutive successes.
    long long hits = 0;
    for (int i = 0; i < runs; ++i)
        if (gw_progeny(1, 0.1, 1000, rng) >= 20) ++hits;
    const double empirical = static_cast<double>(hits) / runs;
    CHECK(empirical <= progeny_tail_bound(0.1, 20));
}

TEST_CASE("tail bound clamps into the unit interval and decays") {
    CHECK(progeny_tail_bound(0.5, 0) == 1.0);
    CHECK(progeny_tail_bound(0.5, 100) < progeny_tail_bound(0.5, 10));
    CHECK(progeny_tail_bound(0.5, 1000000) >= 0.0);
    CHECK_THROWS_AS(progeny_tail_bound(0.0, 10), std::domain_error);
    CHECK_THROWS_AS(progeny_tail_bound(0.5, -1), std::domain_error);
}

TEST_CASE("two-type mean matrix and spectral radius") {
    TwoTypeSpec spec;
    spec.t11 = 2;
    spec.t12 = 1;
    spec.t21 = 1;
    spec.t22 = 1;
    spec.p = 1.0;
    const MeanMatrix m = mean_matrix(spec);
    CHECK(m.m11 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(m.m12 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.m21 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.m22 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_radius(m) ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    spec.p = 0.25;
    const MeanMatrix quarter = mean_matrix(spec);
    CHECK(quarter.m11 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spectral_radius(quarter) ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 8.0).epsilon(1e-12));
}

TEST_CASE("criticality bands from the spectral radius") {
    CHECK(classify_radius(0.5) == Criticality::subcritical);
    CHECK(classify_radius(0.89) == Criticality::subcritical);
    CHECK(classify_radius(1.0) == Criticality::near_critical);
    CHECK(classify_radius(1.5) == Criticality::near_critical);
    CHECK(classify_radius(1.51) == Criticality::supercritical);
    CHECK(classify_radius(3.0) == Criticality::supercritical);
}

TEST_CASE("two-type survival behavior matches its classification") {
    RandomStream rng = derive_stream(97);
    const long long cap = 10000;
    const int runs = 10000;

    TwoTypeSpec sub; // radius 0.5: diag(2,2) scaled by p = 0.25
    sub.t11 = 2;
    sub.t12 = 0;
    sub.t21 = 0;
    sub.t22 = 2;
    sub.p = 0.25;
    REQUIRE(spectral_radius(mean_matrix(sub)) == doctest::Approx(0.5));
    int sub_hits = 0;
    for (int i = 0; i < runs; ++i) {
        const auto [n1, n2] = two_type_progeny(sub, cap, rng);
        if (n1 + n2 >= cap) ++sub_hits;
    }
    CHECK(static_cast<double>(sub_hits) / runs < 0.05);
    CHECK(static_cast<double>(sub_hits) / runs <= 0.01); // module example

    TwoTypeSpec super; // radius 2.0
    super.t11 = 4;
    super.t12 = 0;
    super.t21 = 0;
    super.t22 = 4;
    super.p = 0.5;
    REQUIRE(spectral_radius(mean_matrix(super)) == doctest::Approx(2.0));
    int super_hits = 0;
    for (int i = 0; i < runs; ++i) {
        const auto [n1, n2] = two_type_progeny(super, cap, rng);
        if (n1 + n2 >= cap) ++super_hits;
    }
    CHECK(static_cast<double>(super_hits) / runs > 0.05);
    CHECK(static_cast<double>(super_hits) / runs >= 0.1); // module example
}

TEST_CASE("two-type censoring caps the pair sum exactly") {
    RandomStream rng = derive_stream(101);
    TwoTypeSpec spec;
    spec.t11 = 4;
    spec.t12 = 2;
    spec.t21 = 2;
    spec.t22 = 4;
    spec.p = 0.6;
    const long long cap = 500;
    bool saw_cap = false;
    for (int i = 0; i < 500; ++i) {
        const auto [n1, n2] = two_type_progeny(spec, cap, rng);
        CHECK(n1 + n2 <= cap);
        CHECK(n1 >= 0);
        CHECK(n2 >= 0);
        if (n1 + n2 == cap) saw_cap = true;
    }
    CHECK(saw_cap);
}
