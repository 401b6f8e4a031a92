#pragma once

#include <cstdint>
#include <vector>

#include "percograph/graph.hpp"
#include "percograph/rng.hpp"

namespace percograph {

// Per-edge percolation state.  Blue = percolated, red = not.  Green marks
// edges added by the second stage of a two-stage exposure; views of the
// second-stage graph report green as blue.
enum class EdgeState : std::uint8_t { red = 0, blue = 1, green = 2 };

// A coloring of a host graph's edges.  Holds a non-owning pointer to the
// host: percolation only reads it, while colored switch steps rewire it in
// place (the chain owns its host by contract).  state is indexed by host
// edge index.
struct EdgeColoring {
    SimpleGraph* host = nullptr;
    std::vector<EdgeState> state;
    std::vector<long long> blue_edges; // indices with state == blue
    long long blue_count = 0;
    long long green_count = 0;
    double p = 0.0; // stage-1 probability that produced the coloring

    bool blue(long long e) const {
        return state[static_cast<std::size_t>(e)] == EdgeState::blue;
    }
    // Second-stage view: blue or green.
    bool g2(long long e) const {
        return state[static_cast<std::size_t>(e)] != EdgeState::red;
    }
    long long g2_count() const { return blue_count + green_count; }
};

// Wraps an externally supplied state vector (e.g. a deserialized coloring)
// around a host graph.
EdgeColoring make_coloring(SimpleGraph& host, std::vector<EdgeState> state,
                           double p = 0.0);

// Independent Bernoulli(p) per edge, one stream draw per edge in canonical
// edge order, so the coloring is reproducible from (seed, serialized graph).
// The host is taken by mutable reference only because the coloring keeps a
// host pointer for the switch chain; percolate itself never mutates it and
// hosts may be shared by concurrent percolation workers.
EdgeColoring percolate(SimpleGraph& g, double p, RandomStream& rng);

// Two-stage edge exposure: a p1-percolation (blue), then each red edge
// upgraded to green independently with probability (p2-p1)/(1-p1).  The
// blue∪green view is distributed exactly as a direct p2-percolation, and the
// blue view is the coupled p1-percolation inside it.
struct TwoStageSample {
    EdgeColoring coloring;
    double p1 = 0.0;
    double p2 = 0.0;

    bool in_g1(long long e) const { return coloring.blue(e); }
    bool in_g2(long long e) const { return coloring.g2(e); }
    long long g1_count() const { return coloring.blue_count; }
    long long g2_count() const { return coloring.g2_count(); }
};

TwoStageSample two_stage(SimpleGraph& g, double p1, double p2, RandomStream& rng);

// One attempted blue switching: draw an ordered pair of blue edges and an
// orientation, apply the switch if the four vertices are distinct and both
// replacement pairs are absent from the host entirely (neither blue nor
// red).  Rewires the host through c.host; blue_count and the host degree
// vector are invariant.  Returns whether the switch was applied; false when
// fewer than two blue edges exist.
bool colored_switch_step(EdgeColoring& c, RandomStream& rng);

// Copies the blue (optionally blue∪green) subgraph out as a standalone
// SimpleGraph on the same vertex set.  The cheap path for component analysis
// is the coloring-view overloads in components.hpp; this exists for callers
// that need a real graph (serialization, core extraction).
SimpleGraph materialize(const EdgeColoring& c, bool include_green = false);

} // namespace percograph
