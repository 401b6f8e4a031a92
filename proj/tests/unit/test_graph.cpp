#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "percograph/errors.hpp"
#include "percograph/graph.hpp"

using namespace percograph;

namespace {

// Sorted (u, v) pairs with u < v — a canonical fingerprint for equality.
std::vector<std::pair<int, int>> edge_list(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edge(i);
        edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Literal brute force over all edge subsets of K_n: every simple graph whose
// degree vector matches, with no reliance on the library's pruning search.
std::vector<std::vector<std::pair<int, int>>> brute_force_realizations(
    const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<std::pair<int, int>>> found;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (mask & (1u << i)) {
                ++deg[static_cast<std::size_t>(slots[i].first)];
                ++deg[static_cast<std::size_t>(slots[i].second)];
                edges.push_back(slots[i]);
            }
        }
        if (deg == degrees) found.push_back(edges);
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace

TEST_CASE("graph construction validates edges") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument); // loop
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(g.add_edge(1, 4), std::out_of_range);
    CHECK(g.degrees() == std::vector<int>{1, 2, 1, 0});
}

TEST_CASE("canonical edge order is lexicographic and survives mutation") {
    SimpleGraph g(4);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(0, 1);
    std::vector<std::pair<int, int>> in_order;
    for (long long i : g.canonical_edge_order()) {
        const Edge e = g.edge(i);
        in_order.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    CHECK(in_order ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});

    g.add_edge(1, 2);
    CHECK(g.canonical_edge_order().size() == 4);
}

TEST_CASE("havel-hakimi realizes the sequence deterministically") {
    const SimpleGraph g = havel_hakimi(DegreeSequence({3, 3, 2, 2}));
    CHECK(edge_list(g) == std::vector<std::pair<int, int>>{
                              {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(havel_hakimi(DegreeSequence({3, 3, 1, 1})), infeasible_error);
    CHECK_THROWS_AS(havel_hakimi(DegreeSequence({2, 2, 1})), infeasible_error);

    // Degrees must match on a spread of feasible sequences.
    RandomStream rng = derive_stream(5);
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(uniform_index(rng, 10));
        std::vector<int> degrees(static_cast<std::size_t>(n));
        for (auto& d : degrees) d = static_cast<int>(uniform_index(rng, n));
        const DegreeSequence seq{degrees};
        if (!validate(seq).feasible) continue;
        CHECK(havel_hakimi(seq).degrees() == degrees);
    }
}

TEST_CASE("switch steps preserve the degree vector and simplicity") {
    RandomStream rng = derive_stream(21);
    SimpleGraph g = havel_hakimi(DegreeSequence::regular(12, 3));
    const std::vector<int> degrees = g.degrees();
    int accepted = 0;
    for (int i = 0; i < 5000; ++i) accepted += switch_step(g, rng) ? 1 : 0;
    CHECK(accepted > 0);
    CHECK(g.degrees() == degrees);
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < g.edge_count(); ++i) {
        const Edge e = g.edge(i);
        CHECK(e.u != e.v);
        CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
    }
}

TEST_CASE("configuration model matches degrees and flags multi-edges") {
    RandomStream rng = derive_stream(23);
    const DegreeSequence seq = DegreeSequence::regular(8, 3);
    bool saw_non_simple = false;
    for (int round = 0; round < 200; ++round) {
        const MultiGraph mg = configuration_multigraph(seq, rng);
        CHECK(mg.degrees() == seq.degrees());
        if (!mg.is_simple()) saw_non_simple = true;
    }
    CHECK(saw_non_simple); // collisions are the point of the model
}

TEST_CASE("uniform sampling produces simple graphs with the right degrees") {
    RandomStream rng = derive_stream(29);
    const DegreeSequence seq = DegreeSequence::onion(16, 2);
    const SimpleGraph g = sample_uniform(seq, rng);
    CHECK(g.degrees() == seq.degrees());
}

TEST_CASE("exhaustive enumeration agrees with a literal subset search") {
    RandomStream rng = derive_stream(31);
    for (int n = 2; n <= 5; ++n) {
        for (int round = 0; round < 40; ++round) {
            std::vector<int> degrees(static_cast<std::size_t>(n));
            for (auto& d : degrees) d = static_cast<int>(uniform_index(rng, n));
            const auto expected = brute_force_realizations(degrees);
            const auto got = enumerate_all(DegreeSequence{degrees});
            REQUIRE(got.size() == expected.size());
            std::vector<std::vector<std::pair<int, int>>> got_lists;
            for (const SimpleGraph& g : got) got_lists.push_back(edge_list(g));
            std::sort(got_lists.begin(), got_lists.end());
            CHECK(got_lists == expected);
        }
    }
}

TEST_CASE("enumeration handles the classic small cases") {
    CHECK(enumerate_all(DegreeSequence({1, 1, 1, 1})).size() == 3);
    CHECK(enumerate_all(DegreeSequence({2, 2, 2, 2})).size() == 3);
    CHECK(enumerate_all(DegreeSequence({3, 3, 3, 3})).size() == 1);
    CHECK(enumerate_all(DegreeSequence({3, 3, 2, 2})).size() == 1);
    CHECK(enumerate_all(DegreeSequence({2, 2, 1})).empty()); // infeasible
    CHECK_THROWS_AS(enumerate_all(DegreeSequence::regular(9, 2)), guard_error);
}

TEST_CASE("burn-in default is thirty times the degree sum") {
    CHECK(default_burn_in(DegreeSequence({3, 3, 2, 2})) == 300);
}
