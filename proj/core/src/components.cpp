#include "percograph/components.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "percograph/errors.hpp"

namespace percograph {

namespace {

// Union-find with path halving and union by size.
struct UnionFind {
    std::vector<int> parent;
    std::vector<long long> weight;

    explicit UnionFind(int n)
        : parent(static_cast<std::size_t>(n)), weight(static_cast<std::size_t>(n), 1) {
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (weight[static_cast<std::size_t>(a)] < weight[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        weight[static_cast<std::size_t>(a)] += weight[static_cast<std::size_t>(b)];
    }
};

template <typename EdgeVisitor>
ComponentStats stats_from_union(int n, EdgeVisitor&& visit) {
    UnionFind uf(n);
    visit(uf);
    ComponentStats stats;
    for (int v = 0; v < n; ++v)
        if (uf.find(v) == v) stats.sizes.push_back(uf.weight[static_cast<std::size_t>(v)]);
    std::sort(stats.sizes.begin(), stats.sizes.end(), std::greater<long long>());
    stats.count = static_cast<long long>(stats.sizes.size());
    stats.l1 = stats.sizes.empty() ? 0 : stats.sizes.front();
    return stats;
}

template <typename EdgeVisitor>
ComponentLabels labels_from_union(int n, EdgeVisitor&& visit) {
    UnionFind uf(n);
    visit(uf);
    ComponentLabels labels;
    labels.root.resize(static_cast<std::size_t>(n));
    labels.size.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const int r = uf.find(v);
        labels.root[static_cast<std::size_t>(v)] = r;
        if (r == v) {
            labels.size[static_cast<std::size_t>(v)] = uf.weight[static_cast<std::size_t>(v)];
            ++labels.count;
            if (uf.weight[static_cast<std::size_t>(v)] > labels.l1) {
                labels.l1 = uf.weight[static_cast<std::size_t>(v)];
                labels.largest_root = v; // roots scanned ascending: ties keep the smallest
            }
        }
    }
    return labels;
}

} // namespace

ComponentStats component_stats(const SimpleGraph& g) {
    return stats_from_union(g.n(), [&](UnionFind& uf) {
        for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    });
}

ComponentStats component_stats(const EdgeColoring& c, bool include_green) {
    if (c.host == nullptr)
        throw std::invalid_argument("component_stats: coloring has no host");
    const SimpleGraph& g = *c.host;
    return stats_from_union(g.n(), [&](UnionFind& uf) {
        for (long long i = 0; i < g.edge_count(); ++i) {
            const bool in = include_green ? c.g2(i) : c.blue(i);
            if (in) uf.unite(g.edge(i).u, g.edge(i).v);
        }
    });
}

ComponentLabels component_labels(const SimpleGraph& g) {
    return labels_from_union(g.n(), [&](UnionFind& uf) {
        for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    });
}

ComponentLabels component_labels(const EdgeColoring& c, bool include_green) {
    if (c.host == nullptr)
        throw std::invalid_argument("component_labels: coloring has no host");
    const SimpleGraph& g = *c.host;
    return labels_from_union(g.n(), [&](UnionFind& uf) {
        for (long long i = 0; i < g.edge_count(); ++i) {
            const bool in = include_green ? c.g2(i) : c.blue(i);
            if (in) uf.unite(g.edge(i).u, g.edge(i).v);
        }
    });
}

VertexSet v_omega(const EdgeColoring& c, double omega) {
    if (c.host == nullptr)
        throw std::invalid_argument("v_omega: coloring has no host");
    const SimpleGraph& g = *c.host;
    std::vector<long long> blue_degree(static_cast<std::size_t>(g.n()), 0);
    for (long long e : c.blue_edges) {
        ++blue_degree[static_cast<std::size_t>(g.edge(e).u)];
        ++blue_degree[static_cast<std::size_t>(g.edge(e).v)];
    }
    VertexSet set;
    set.member.assign(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (static_cast<double>(blue_degree[static_cast<std::size_t>(v)]) >= omega) {
            set.member[static_cast<std::size_t>(v)] = 1;
            ++set.size;
        }
    }
    return set;
}

namespace {

// Shared peeling loop: returns the alive mask after greedily deleting the
// smallest-labeled vertex of current degree < d0 until none remains.
std::vector<std::uint8_t> peel_to_core(const SimpleGraph& g, double d0) {
    std::vector<long long> degree(g.degrees().begin(), g.degrees().end());
    std::vector<std::uint8_t> alive(static_cast<std::size_t>(g.n()), 1);
    std::priority_queue<int, std::vector<int>, std::greater<int>> below;
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<double>(degree[static_cast<std::size_t>(v)]) < d0) below.push(v);
    while (!below.empty()) {
        const int v = below.top();
        below.pop();
        if (!alive[static_cast<std::size_t>(v)]) continue; // duplicate entry
        alive[static_cast<std::size_t>(v)] = 0;
        for (int w : g.neighbors(v)) {
            if (!alive[static_cast<std::size_t>(w)]) continue;
            const long long before = degree[static_cast<std::size_t>(w)]--;
            // Degrees only decrease, so w enters the queue at most once per
            // threshold crossing; duplicates are filtered by the alive check.
            if (static_cast<double>(before) >= d0 &&
                static_cast<double>(before - 1) < d0)
                below.push(w);
        }
    }
    return alive;
}

} // namespace

SimpleGraph extract_core(const SimpleGraph& g, double d0) {
    const std::vector<std::uint8_t> alive = peel_to_core(g, d0);
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    int kept = 0;
    for (int v = 0; v < g.n(); ++v)
        if (alive[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = kept++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (alive[static_cast<std::size_t>(e.u)] && alive[static_cast<std::size_t>(e.v)]) {
            const int u = relabel[static_cast<std::size_t>(e.u)];
            const int v = relabel[static_cast<std::size_t>(e.v)];
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    return SimpleGraph::from_edges(kept, edges);
}

std::vector<int> extract_core_members(const SimpleGraph& g, double d0) {
    const std::vector<std::uint8_t> alive = peel_to_core(g, d0);
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v)
        if (alive[static_cast<std::size_t>(v)]) members.push_back(v);
    return members;
}

long long almost_balanced_min_cut(const SimpleGraph& g) {
    const int n = g.n();
    if (n > 20)
        throw guard_error("almost_balanced_min_cut: exhaustive scan guarded to n <= 20");
    const int min_part = static_cast<int>((9LL * n + 19) / 20); // ceil(9n/20)
    if (n < 2 || min_part > n / 2)
        throw std::invalid_argument(
            "almost_balanced_min_cut: no bipartition has both parts >= ceil(9n/20)");

    std::vector<std::uint32_t> edge_bits;
    edge_bits.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        edge_bits.push_back((1u << e.u) | (1u << e.v));

    long long best = -1;
    // Vertex n-1 is fixed outside the mask: every bipartition is visited once.
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int side = std::popcount(mask);
        if (std::min(side, n - side) < min_part) continue;
        long long crossing = 0;
        for (const std::uint32_t bits : edge_bits) {
            const int inside = std::popcount(bits & mask);
            if (inside == 1) ++crossing;
        }
        if (best < 0 || crossing < best) best = crossing;
    }
    return best;
}

namespace {

// Counts the parts of one original component after removing two edges and
// adding two replacement pairs, via a scratch union-find over its vertices.
int patched_part_count(const SimpleGraph& g, const std::vector<long long>& comp_edges,
                       const std::vector<int>& comp_vertices,
                       std::vector<int>& local_index, long long skip1, long long skip2,
                       Edge add1, Edge add2) {
    UnionFind uf(static_cast<int>(comp_vertices.size()));
    for (long long e : comp_edges) {
        if (e == skip1 || e == skip2) continue;
        const Edge edge = g.edge(e);
        uf.unite(local_index[static_cast<std::size_t>(edge.u)],
                 local_index[static_cast<std::size_t>(edge.v)]);
    }
    uf.unite(local_index[static_cast<std::size_t>(add1.u)],
             local_index[static_cast<std::size_t>(add1.v)]);
    uf.unite(local_index[static_cast<std::size_t>(add2.u)],
             local_index[static_cast<std::size_t>(add2.v)]);
    int parts = 0;
    for (int i = 0; i < static_cast<int>(comp_vertices.size()); ++i)
        if (uf.find(i) == i) ++parts;
    return parts;
}

} // namespace

long long two_cut_pair_census(const SimpleGraph& g) {
    if (g.edge_count() > 1000)
        throw guard_error("two_cut_pair_census: quadratic scan guarded to m <= 1000");
    const ComponentLabels labels = component_labels(g);

    // Bucket edges and vertices by component: a switch across two components
    // merges them, so only same-component pairs can add a component.
    std::vector<std::vector<long long>> edges_of;
    std::vector<std::vector<int>> vertices_of;
    std::vector<int> comp_id(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        const int root = labels.root[static_cast<std::size_t>(v)];
        if (comp_id[static_cast<std::size_t>(root)] < 0) {
            comp_id[static_cast<std::size_t>(root)] = static_cast<int>(vertices_of.size());
            vertices_of.emplace_back();
            edges_of.emplace_back();
        }
        comp_id[static_cast<std::size_t>(v)] = comp_id[static_cast<std::size_t>(root)];
        vertices_of[static_cast<std::size_t>(comp_id[static_cast<std::size_t>(v)])].push_back(v);
    }
    for (long long e = 0; e < g.edge_count(); ++e)
        edges_of[static_cast<std::size_t>(comp_id[static_cast<std::size_t>(g.edge(e).u)])]
            .push_back(e);

    std::vector<int> local_index(static_cast<std::size_t>(g.n()), -1);
    long long total = 0;
    for (std::size_t comp = 0; comp < vertices_of.size(); ++comp) {
        const auto& vertices = vertices_of[comp];
        const auto& comp_edges = edges_of[comp];
        for (std::size_t i = 0; i < vertices.size(); ++i)
            local_index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        for (std::size_t i = 0; i < comp_edges.size(); ++i) {
            for (std::size_t j = i + 1; j < comp_edges.size(); ++j) {
                const Edge e1 = g.edge(comp_edges[i]);
                const Edge e2 = g.edge(comp_edges[j]);
                const int a = e1.u, b = e1.v, c = e2.u, d = e2.v;
                if (a == c || a == d || b == c || b == d) continue;
                // The unordered pair supports two replacement pairings; each
                // corresponds to 4 of the 8 ordered oriented draws.
                const Edge pairing1[2] = {{a, d}, {b, c}};
                const Edge pairing2[2] = {{a, c}, {b, d}};
                for (const auto& pairing : {pairing1, pairing2}) {
                    if (g.has_edge(pairing[0].u, pairing[0].v) ||
                        g.has_edge(pairing[1].u, pairing[1].v))
                        continue;
                    const int parts =
                        patched_part_count(g, comp_edges, vertices, local_index,
                                           comp_edges[i], comp_edges[j], pairing[0],
                                           pairing[1]);
                    if (parts == 2) total += 4;
                }
            }
        }
        for (int v : vertices) local_index[static_cast<std::size_t>(v)] = -1;
    }
    return total;
}

} // namespace percograph
