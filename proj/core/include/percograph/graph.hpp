#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "percograph/degree_sequence.hpp"
#include "percograph/edge_key_set.hpp"
#include "percograph/rng.hpp"

namespace percograph {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple labeled graph.  Storage is a flat edge array (O(1) uniform edge
// draws, in-place endpoint replacement for switches) plus a packed-key hash
// set for O(1) membership.  Neighbor lists are materialized lazily into a CSR
// layout on first use and invalidated by mutation; percolation and union-find
// never need them, so the switch chain stays allocation-free.
//
// Thread model: a fully built graph may be shared read-only across threads.
// The lazy caches (canonical edge order, CSR adjacency) are built under a
// mutex with an atomic ready flag, so concurrent readers are safe; mutation
// is single-threaded by contract.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(const SimpleGraph& other);
    SimpleGraph(SimpleGraph&& other) noexcept;
    SimpleGraph& operator=(const SimpleGraph& other);
    SimpleGraph& operator=(SimpleGraph&& other) noexcept;

    // Builds from an explicit edge list; rejects loops, duplicate edges, and
    // out-of-range endpoints.
    static SimpleGraph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    Edge edge(long long i) const { return edges_[static_cast<std::size_t>(i)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    DegreeSequence degree_sequence() const { return DegreeSequence(degrees_); }

    bool has_edge(int u, int v) const {
        return u != v && keys_.contains(EdgeKeySet::pack(u, v));
    }

    void add_edge(int u, int v);

    // Replaces edges ei=(a,b), ej=(c,d) by (a,d), (c,b); flip reverses the
    // stored orientation of ej first, selecting the other pairing.  The
    // caller must have verified switch validity (four distinct vertices, both
    // replacement pairs absent); debug builds re-check.  Degrees are
    // preserved by construction.
    void apply_switch(long long ei, long long ej, bool flip);

    // Edge indices sorted by (min endpoint, max endpoint): the deterministic
    // order used by percolation draws and by the text serialization.
    const std::vector<long long>& canonical_edge_order() const;

    // Neighbors of v in ascending order (CSR-backed).
    std::span<const int> neighbors(int v) const;

    // Byte-for-byte equality of vertex count and edge set (order-insensitive).
    bool same_graph(const SimpleGraph& other) const;

private:
    void invalidate_caches();
    void build_canonical() const;
    void build_csr() const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    EdgeKeySet keys_;

    mutable std::mutex cache_mutex_;
    mutable std::atomic<bool> canonical_ready_{false};
    mutable std::vector<long long> canonical_;
    mutable std::atomic<bool> csr_ready_{false};
    mutable std::vector<long long> csr_offsets_;
    mutable std::vector<int> csr_adjacency_;
};

// Multigraph produced by the configuration model: loops and parallel edges
// allowed, loops contributing 2 to the degree.  Edges are stored with
// u <= v.
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;

    bool is_simple() const;
    long long loop_count() const;
    std::vector<int> degrees() const;
};

// Deterministic Havel-Hakimi realization: repeatedly connect the
// highest-degree vertex to the next-highest ones (ties broken by smaller
// label).  Throws infeasible_error when the sequence is not graphical.
SimpleGraph havel_hakimi(const DegreeSequence& seq);

// Uniform random pairing of the degree stubs.  The natural sampler for the
// built-in sequence families is sample_uniform below; this one exists because
// the multigraph law (loops, parallel edges and all) is itself part of the
// model being studied.
MultiGraph configuration_multigraph(const DegreeSequence& seq, RandomStream& rng);

// One attempted switch: draw an ordered pair of edges and an orientation,
// replace (a,b),(c,d) by (a,d),(c,b) if the four vertices are distinct and
// both replacement pairs are absent.  Returns whether the switch was applied.
bool switch_step(SimpleGraph& g, RandomStream& rng);

inline long long default_burn_in(const DegreeSequence& seq) { return 30 * seq.m(); }

// Approximately uniform sample from the simple graphs realizing seq:
// Havel-Hakimi seed followed by burn_in attempted switches (default 30*m).
// Throws infeasible_error when validate(seq) fails.
SimpleGraph sample_uniform(const DegreeSequence& seq, RandomStream& rng,
                           long long burn_in = -1);

// Every simple graph realizing seq, deduplicated and sorted by the
// lexicographic encoding of their edge sets.  Exhaustive: guarded to n <= 8.
std::vector<SimpleGraph> enumerate_all(const DegreeSequence& seq);

} // namespace percograph
