#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "percograph/rng.hpp"

using namespace percograph;

TEST_CASE("derived streams are deterministic and lane-separated") {
    RandomStream a = derive_stream(42, 1, 2);
    RandomStream b = derive_stream(42, 1, 2);
    for (int i = 0; i < 100; ++i) CHECK(a() == b());

    std::set<std::uint64_t> first_draws;
    for (std::uint64_t lane0 = 0; lane0 < 8; ++lane0)
        for (std::uint64_t lane1 = 0; lane1 < 8; ++lane1)
            first_draws.insert(derive_stream(42, lane0, lane1)());
    CHECK(first_draws.size() == 64); // no lane collisions
    CHECK(derive_stream(43, 1, 2)() != derive_stream(42, 1, 2)());
}

TEST_CASE("canonical_double lands in [0,1) and matches its 53-bit formula") {
    RandomStream rng = derive_stream(7);
    RandomStream mirror = derive_stream(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = canonical_double(rng);
        const double expected = static_cast<double>(mirror() >> 11) * 0x1.0p-53;
        CHECK(x == expected);
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("bernoulli hits degenerate probabilities exactly") {
    RandomStream rng = derive_stream(11);
    for (int i = 0; i < 100; ++i) {
        CHECK_FALSE(bernoulli(rng, 0.0));
        CHECK(bernoulli(rng, 1.0));
    }
}

TEST_CASE("uniform_index stays in range and is roughly uniform") {
    RandomStream rng = derive_stream(13);
    const std::uint64_t bound = 7;
    std::vector<long long> counts(bound, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
        const std::uint64_t v = uniform_index(rng, bound);
        REQUIRE(v < bound);
        ++counts[v];
    }
    const std::vector<double> expected(bound, draws / static_cast<double>(bound));
    CHECK(test_helpers::chi_squared_p_value(counts, expected) > 1e-4);
}

TEST_CASE("binomial_draw honors edge cases and the exact pmf") {
    RandomStream rng = derive_stream(17);
    CHECK(binomial_draw(rng, 0, 0.5) == 0);
    CHECK(binomial_draw(rng, 10, 0.0) == 0);
    CHECK(binomial_draw(rng, 10, 1.0) == 10);
    CHECK(binomial_draw(rng, -3, 0.5) == 0);

    const int trials = 50000;
    const int t = 8;
    const double p = 0.3;
    std::vector<long long> counts(t + 1, 0);
    for (int i = 0; i < trials; ++i) {
        const long long v = binomial_draw(rng, t, p);
        REQUIRE(v >= 0);
        REQUIRE(v <= t);
        ++counts[static_cast<std::size_t>(v)];
    }
    // Merge the sparse upper cells so every expected count is comfortable.
    std::vector<long long> observed(counts.begin(), counts.begin() + 6);
    observed.push_back(counts[6] + counts[7] + counts[8]);
    std::vector<double> expected;
    for (int k = 0; k < 6; ++k)
        expected.push_back(trials * test_helpers::binomial_pmf(t, p, k));
    expected.push_back(trials * (test_helpers::binomial_pmf(t, p, 6) +
                                 test_helpers::binomial_pmf(t, p, 7) +
                                 test_helpers::binomial_pmf(t, p, 8)));
    CHECK(test_helpers::chi_squared_p_value(observed, expected) > 1e-4);
}

TEST_CASE("fresh_seed varies between calls") {
    const std::uint64_t a = fresh_seed();
    const std::uint64_t b = fresh_seed();
    const std::uint64_t c = fresh_seed();
    CHECK((a != b || b != c));
}
