#include "percograph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "percograph/errors.hpp"

namespace percograph {

SimpleGraph::SimpleGraph(int n) : n_(n), degrees_(static_cast<std::size_t>(n), 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
}

SimpleGraph::SimpleGraph(const SimpleGraph& other)
    : n_(other.n_),
      edges_(other.edges_),
      degrees_(other.degrees_),
      keys_(other.keys_) {}

SimpleGraph::SimpleGraph(SimpleGraph&& other) noexcept
    : n_(other.n_),
      edges_(std::move(other.edges_)),
      degrees_(std::move(other.degrees_)),
      keys_(std::move(other.keys_)) {
    other.n_ = 0;
    other.invalidate_caches();
}

SimpleGraph& SimpleGraph::operator=(const SimpleGraph& other) {
    if (this != &other) {
        n_ = other.n_;
        edges_ = other.edges_;
        degrees_ = other.degrees_;
        keys_ = other.keys_;
        invalidate_caches();
    }
    return *this;
}

SimpleGraph& SimpleGraph::operator=(SimpleGraph&& other) noexcept {
    if (this != &other) {
        n_ = other.n_;
        edges_ = std::move(other.edges_);
        degrees_ = std::move(other.degrees_);
        keys_ = std::move(other.keys_);
        other.n_ = 0;
        other.invalidate_caches();
        invalidate_caches();
    }
    return *this;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    g.edges_.reserve(edges.size());
    g.keys_.reserve(edges.size());
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed in a simple graph");
    if (!keys_.insert(EdgeKeySet::pack(u, v)))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    edges_.push_back({u, v});
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    invalidate_caches();
}

void SimpleGraph::apply_switch(long long ei, long long ej, bool flip) {
    Edge& first = edges_[static_cast<std::size_t>(ei)];
    Edge& second = edges_[static_cast<std::size_t>(ej)];
    const int a = first.u, b = first.v;
    const int c = flip ? second.v : second.u;
    const int d = flip ? second.u : second.v;
    assert(ei != ej);
    assert(a != b && a != c && a != d && b != c && b != d && c != d);
    assert(!has_edge(a, d) && !has_edge(c, b));
    keys_.erase(EdgeKeySet::pack(a, b));
    keys_.erase(EdgeKeySet::pack(c, d));
    keys_.insert(EdgeKeySet::pack(a, d));
    keys_.insert(EdgeKeySet::pack(c, b));
    first = {a, d};
    second = {c, b};
    invalidate_caches();
}

const std::vector<long long>& SimpleGraph::canonical_edge_order() const {
    if (!canonical_ready_.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!canonical_ready_.load(std::memory_order_relaxed)) {
            build_canonical();
            canonical_ready_.store(true, std::memory_order_release);
        }
    }
    return canonical_;
}

std::span<const int> SimpleGraph::neighbors(int v) const {
    if (!csr_ready_.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!csr_ready_.load(std::memory_order_relaxed)) {
            build_csr();
            csr_ready_.store(true, std::memory_order_release);
        }
    }
    const auto begin = static_cast<std::size_t>(csr_offsets_[static_cast<std::size_t>(v)]);
    const auto end = static_cast<std::size_t>(csr_offsets_[static_cast<std::size_t>(v) + 1]);
    return {csr_adjacency_.data() + begin, end - begin};
}

bool SimpleGraph::same_graph(const SimpleGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (const Edge& e : other.edges_)
        if (!has_edge(e.u, e.v)) return false;
    return true;
}

void SimpleGraph::invalidate_caches() {
    canonical_ready_.store(false, std::memory_order_release);
    csr_ready_.store(false, std::memory_order_release);
    canonical_.clear();
    csr_offsets_.clear();
    csr_adjacency_.clear();
}

void SimpleGraph::build_canonical() const {
    canonical_.resize(edges_.size());
    std::iota(canonical_.begin(), canonical_.end(), 0LL);
    std::sort(canonical_.begin(), canonical_.end(), [this](long long i, long long j) {
        const Edge& a = edges_[static_cast<std::size_t>(i)];
        const Edge& b = edges_[static_cast<std::size_t>(j)];
        return EdgeKeySet::pack(a.u, a.v) < EdgeKeySet::pack(b.u, b.v);
    });
}

void SimpleGraph::build_csr() const {
    csr_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
        ++csr_offsets_[static_cast<std::size_t>(e.u) + 1];
        ++csr_offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (int v = 0; v < n_; ++v)
        csr_offsets_[static_cast<std::size_t>(v) + 1] +=
            csr_offsets_[static_cast<std::size_t>(v)];
    csr_adjacency_.resize(edges_.size() * 2);
    std::vector<long long> cursor(csr_offsets_.begin(), csr_offsets_.end() - 1);
    for (const Edge& e : edges_) {
        csr_adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = e.v;
        csr_adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = e.u;
    }
    for (int v = 0; v < n_; ++v) {
        auto begin = csr_adjacency_.begin() + csr_offsets_[static_cast<std::size_t>(v)];
        auto end = csr_adjacency_.begin() + csr_offsets_[static_cast<std::size_t>(v) + 1];
        std::sort(begin, end);
    }
}

bool MultiGraph::is_simple() const {
    EdgeKeySet seen;
    seen.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) return false;
        if (!seen.insert(EdgeKeySet::pack(e.u, e.v))) return false;
    }
    return true;
}

long long MultiGraph::loop_count() const {
    long long loops = 0;
    for (const Edge& e : edges)
        if (e.u == e.v) ++loops;
    return loops;
}

std::vector<int> MultiGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)]; // a loop contributes 2
    }
    return deg;
}

SimpleGraph havel_hakimi(const DegreeSequence& seq) {
    const FeasibilityReport report = validate(seq);
    if (!report.feasible)
        throw infeasible_error("havel_hakimi: " + report.detail);

    // Residual-degree pool ordered by (degree desc, label asc); each round
    // retires the top vertex by wiring it to the next d_v candidates.
    struct Slot {
        int degree;
        int label;
        bool operator<(const Slot& other) const {
            // priority_queue keeps the *largest*; smaller label wins ties.
            if (degree != other.degree) return degree < other.degree;
            return label > other.label;
        }
    };
    std::priority_queue<Slot> pool;
    for (int v = 0; v < seq.n(); ++v)
        if (seq.degree(v) > 0) pool.push({seq.degree(v), v});

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(seq.edge_count()));
    std::vector<Slot> round;
    while (!pool.empty()) {
        const Slot v = pool.top();
        pool.pop();
        if (static_cast<std::size_t>(v.degree) > pool.size())
            throw infeasible_error("havel_hakimi: ran out of attachment points");
        round.clear();
        for (int i = 0; i < v.degree; ++i) {
            round.push_back(pool.top());
            pool.pop();
        }
        for (Slot& w : round) {
            edges.push_back({std::min(v.label, w.label), std::max(v.label, w.label)});
            if (--w.degree > 0) pool.push(w);
        }
    }
    return SimpleGraph::from_edges(seq.n(), edges);
}

MultiGraph configuration_multigraph(const DegreeSequence& seq, RandomStream& rng) {
    if (seq.m() % 2 != 0)
        throw infeasible_error("configuration model: degree sum must be even");
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(seq.m()));
    for (int v = 0; v < seq.n(); ++v)
        for (int i = 0; i < seq.degree(v); ++i) stubs.push_back(v);

    MultiGraph g;
    g.n = seq.n();
    g.edges.reserve(stubs.size() / 2);
    // Pair the last active stub with a uniform other; swap-fill keeps the
    // active region contiguous.  Sequential uniform choices yield a uniform
    // perfect matching of the stubs.
    std::size_t active = stubs.size();
    while (active > 0) {
        const std::size_t r =
            static_cast<std::size_t>(uniform_index(rng, static_cast<std::uint64_t>(active - 1)));
        const int a = stubs[active - 1];
        const int b = stubs[r];
        g.edges.push_back({std::min(a, b), std::max(a, b)});
        stubs[r] = stubs[active - 2];
        active -= 2;
    }
    return g;
}

bool switch_step(SimpleGraph& g, RandomStream& rng) {
    const long long m = g.edge_count();
    if (m < 2) return false;
    const auto ei = static_cast<long long>(uniform_index(rng, static_cast<std::uint64_t>(m)));
    const auto ej = static_cast<long long>(uniform_index(rng, static_cast<std::uint64_t>(m)));
    const bool flip = uniform_index(rng, 2) != 0;
    if (ei == ej) return false;
    const Edge first = g.edge(ei);
    const Edge second = g.edge(ej);
    const int a = first.u, b = first.v;
    const int c = flip ? second.v : second.u;
    const int d = flip ? second.u : second.v;
    if (a == c || a == d || b == c || b == d) return false;
    if (g.has_edge(a, d) || g.has_edge(c, b)) return false;
    g.apply_switch(ei, ej, flip);
    return true;
}

SimpleGraph sample_uniform(const DegreeSequence& seq, RandomStream& rng,
                           long long burn_in) {
    SimpleGraph g = havel_hakimi(seq);
    if (burn_in < 0) burn_in = default_burn_in(seq);
    for (long long i = 0; i < burn_in; ++i) switch_step(g, rng);
    return g;
}

namespace {

// Backtracking over the lexicographic pair list: at each pair decide
// exclude-then-include, pruning on residual degrees and on the number of
// still-available pairs per vertex.
struct Enumerator {
    int n;
    std::vector<std::pair<int, int>> pairs; // lex order
    std::vector<int> residual;
    std::vector<int> remaining; // available future pairs touching each vertex
    std::vector<Edge> chosen;
    long long residual_sum = 0;
    std::vector<SimpleGraph> out;

    void run(std::size_t t) {
        if (residual_sum == 0) {
            out.push_back(SimpleGraph::from_edges(n, chosen));
            return;
        }
        if (t == pairs.size()) return;
        for (int v = 0; v < n; ++v)
            if (residual[static_cast<std::size_t>(v)] > remaining[static_cast<std::size_t>(v)])
                return;
        const auto [u, v] = pairs[t];
        --remaining[static_cast<std::size_t>(u)];
        --remaining[static_cast<std::size_t>(v)];
        run(t + 1); // exclude
        if (residual[static_cast<std::size_t>(u)] > 0 &&
            residual[static_cast<std::size_t>(v)] > 0) { // include
            --residual[static_cast<std::size_t>(u)];
            --residual[static_cast<std::size_t>(v)];
            residual_sum -= 2;
            chosen.push_back({u, v});
            run(t + 1);
            chosen.pop_back();
            residual_sum += 2;
            ++residual[static_cast<std::size_t>(u)];
            ++residual[static_cast<std::size_t>(v)];
        }
        ++remaining[static_cast<std::size_t>(u)];
        ++remaining[static_cast<std::size_t>(v)];
    }
};

} // namespace

std::vector<SimpleGraph> enumerate_all(const DegreeSequence& seq) {
    if (seq.n() > 8)
        throw guard_error("enumerate_all: exhaustive enumeration is guarded to n <= 8");
    if (!validate(seq).feasible) return {};

    Enumerator e;
    e.n = seq.n();
    for (int u = 0; u < e.n; ++u)
        for (int v = u + 1; v < e.n; ++v) e.pairs.emplace_back(u, v);
    e.residual = seq.degrees();
    e.remaining.assign(static_cast<std::size_t>(e.n), e.n - 1);
    e.residual_sum = seq.m();
    e.run(0);

    // Sort by the lexicographic encoding of the edge sets.  The DFS emits
    // each edge set once with edges already lex-sorted within a graph.
    std::sort(e.out.begin(), e.out.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
        return std::lexicographical_compare(
            a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
            [](const Edge& x, const Edge& y) {
                return EdgeKeySet::pack(x.u, x.v) < EdgeKeySet::pack(y.u, y.v);
            });
    });
    return e.out;
}

} // namespace percograph
