#include "percograph/percolation.hpp"

#include <stdexcept>
#include <string>

namespace percograph {

namespace {

void check_probability(double p, const char* who) {
    if (!(p >= 0.0) || p > 1.0)
        throw std::invalid_argument(std::string(who) + ": probability outside [0,1]");
}

} // namespace

EdgeColoring make_coloring(SimpleGraph& host, std::vector<EdgeState> state,
                           double p) {
    if (static_cast<long long>(state.size()) != host.edge_count())
        throw std::invalid_argument("make_coloring: state size != edge count");
    EdgeColoring c;
    c.host = &host;
    c.state = std::move(state);
    c.p = p;
    for (long long e : host.canonical_edge_order()) {
        switch (c.state[static_cast<std::size_t>(e)]) {
            case EdgeState::blue:
                c.blue_edges.push_back(e);
                ++c.blue_count;
                break;
            case EdgeState::green: ++c.green_count; break;
            case EdgeState::red: break;
        }
    }
    return c;
}

EdgeColoring percolate(SimpleGraph& g, double p, RandomStream& rng) {
    check_probability(p, "percolate");
    EdgeColoring c;
    c.host = &g;
    c.p = p;
    c.state.assign(static_cast<std::size_t>(g.edge_count()), EdgeState::red);
    // One draw per edge, in canonical edge order: the outcome is a pure
    // function of (stream state, edge set), independent of edge insertion
    // history.
    for (long long e : g.canonical_edge_order()) {
        if (bernoulli(rng, p)) {
            c.state[static_cast<std::size_t>(e)] = EdgeState::blue;
            c.blue_edges.push_back(e);
            ++c.blue_count;
        }
    }
    return c;
}

TwoStageSample two_stage(SimpleGraph& g, double p1, double p2, RandomStream& rng) {
    check_probability(p1, "two_stage");
    check_probability(p2, "two_stage");
    if (p1 > p2)
        throw std::invalid_argument("two_stage: requires p1 <= p2");
    TwoStageSample sample;
    sample.p1 = p1;
    sample.p2 = p2;
    sample.coloring = percolate(g, p1, rng);
    // Upgrade each red edge independently with the conditional probability
    // that lifts the blue∪green marginal to an exact p2-percolation.
    if (p1 < 1.0 && p2 > p1) {
        const double upgrade = (p2 - p1) / (1.0 - p1);
        for (long long e : g.canonical_edge_order()) {
            auto& state = sample.coloring.state[static_cast<std::size_t>(e)];
            if (state == EdgeState::red && bernoulli(rng, upgrade)) {
                state = EdgeState::green;
                ++sample.coloring.green_count;
            }
        }
    }
    return sample;
}

bool colored_switch_step(EdgeColoring& c, RandomStream& rng) {
    if (c.host == nullptr)
        throw std::invalid_argument("colored_switch_step: coloring has no host");
    SimpleGraph& host = *c.host;
    const long long blue = c.blue_count;
    if (blue < 2) return false;
    const auto r1 = static_cast<std::size_t>(uniform_index(rng, static_cast<std::uint64_t>(blue)));
    const auto r2 = static_cast<std::size_t>(uniform_index(rng, static_cast<std::uint64_t>(blue)));
    const bool flip = uniform_index(rng, 2) != 0;
    if (r1 == r2) return false;
    const long long ei = c.blue_edges[r1];
    const long long ej = c.blue_edges[r2];
    const Edge first = host.edge(ei);
    const Edge second = host.edge(ej);
    const int a = first.u, b = first.v;
    const int cc = flip ? second.v : second.u;
    const int d = flip ? second.u : second.v;
    if (a == cc || a == d || b == cc || b == d) return false;
    // Replacement pairs must be absent from the host entirely — a red edge
    // in the way blocks the switch just as a blue one does.
    if (host.has_edge(a, d) || host.has_edge(cc, b)) return false;
    host.apply_switch(ei, ej, flip);
    // Edge indices are stable across apply_switch, so the coloring arrays
    // (state, blue_edges) and both counts carry over unchanged.
    return true;
}

SimpleGraph materialize(const EdgeColoring& c, bool include_green) {
    if (c.host == nullptr)
        throw std::invalid_argument("materialize: coloring has no host");
    std::vector<Edge> kept;
    kept.reserve(static_cast<std::size_t>(include_green ? c.g2_count() : c.blue_count));
    for (long long e : c.host->canonical_edge_order()) {
        const bool in = include_green ? c.g2(e) : c.blue(e);
        if (in) kept.push_back(c.host->edge(e));
    }
    return SimpleGraph::from_edges(c.host->n(), kept);
}

} // namespace percograph
