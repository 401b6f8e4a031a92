#pragma once

#include <cstdint>
#include <vector>

#include "percograph/graph.hpp"
#include "percograph/percolation.hpp"

namespace percograph {

struct ComponentStats {
    std::vector<long long> sizes; // component orders, descending
    long long l1 = 0;             // sizes.front(), 0 for the empty graph
    long long count = 0;

    long long second() const { return sizes.size() > 1 ? sizes[1] : 0; }
};

// Exact component decomposition via union-find (path compression + union by
// size) over the edge array; O(n + m alpha(n)).  The coloring overloads scan
// blue (optionally blue∪green) edges only.
ComponentStats component_stats(const SimpleGraph& g);
ComponentStats component_stats(const EdgeColoring& c, bool include_green = false);

// Per-vertex component labels for membership queries (e.g. which fraction of
// a vertex set sits in the largest component).  Labels are root vertices;
// largest_root is the root of a maximum component, smallest root on ties.
struct ComponentLabels {
    std::vector<int> root;          // root[v]: representative of v's component
    std::vector<long long> size;    // size[v]: component order when v is a root
    int largest_root = -1;
    long long l1 = 0;
    long long count = 0;
};

ComponentLabels component_labels(const SimpleGraph& g);
ComponentLabels component_labels(const EdgeColoring& c, bool include_green = false);

struct VertexSet {
    std::vector<std::uint8_t> member; // 0/1 per vertex
    long long size = 0;

    bool contains(int v) const { return member[v] != 0; }
};

// Vertices whose blue degree is >= omega.
VertexSet v_omega(const EdgeColoring& c, double omega);

// Greedy minimum-degree core: repeatedly delete the smallest-labeled vertex
// of current degree < d0.  Returns the induced subgraph on the survivors,
// relabeled 0..h-1 in increasing original-label order (survivor labels
// available via extract_core_members).  Deterministic; may be empty.
SimpleGraph extract_core(const SimpleGraph& g, double d0);

// Original labels of the vertices extract_core keeps, ascending.
std::vector<int> extract_core_members(const SimpleGraph& g, double d0);

// Minimum crossing-edge count over all bipartitions whose smaller part has
// at least ceil(9n/20) vertices.  Exhaustive scan; guarded to n <= 20.
long long almost_balanced_min_cut(const SimpleGraph& g);

// Number of ordered pairs of oriented edges (uv, xy) whose switch
// (remove uv, xy; add uy, vx) is valid — four distinct vertices, both
// replacement pairs absent — and yields exactly one more component.  The
// validity rule matches the switching definition, so the count is the
// conservative (largest) one for which the 8n^2 bound is claimed.
// Quadratic-scan guard: m <= 10^3.
long long two_cut_pair_census(const SimpleGraph& g);

} // namespace percograph
