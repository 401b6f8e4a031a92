#include "percograph/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace percograph {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("parse error: " + what);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

} // namespace

void write_degree_sequence(const DegreeSequence& seq, std::ostream& out) {
    out << seq.n() << ' ' << seq.m() << '\n';
    for (const auto& [degree, count] : seq.degree_counts())
        out << degree << ' ' << count << '\n';
}

DegreeSequence read_degree_sequence(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) parse_fail("degree sequence header (want: n m)");
    if (n < 0 || m < 0) parse_fail("negative degree sequence header");
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    long long previous_degree = -1;
    long long mass = 0;
    while (static_cast<long long>(degrees.size()) < n) {
        long long degree = 0, count = 0;
        if (!(in >> degree >> count)) parse_fail("degree sequence row (want: degree count)");
        if (degree < 0 || count <= 0) parse_fail("degree sequence row out of range");
        if (previous_degree >= 0 && degree >= previous_degree)
            parse_fail("degree rows must be strictly descending");
        previous_degree = degree;
        if (static_cast<long long>(degrees.size()) + count > n)
            parse_fail("degree counts exceed n");
        for (long long i = 0; i < count; ++i)
            degrees.push_back(static_cast<int>(degree));
        mass += degree * count;
    }
    if (mass != m) parse_fail("degree mass does not match header m");
    return DegreeSequence(std::move(degrees));
}

void write_degree_sequence_file(const DegreeSequence& seq, const std::string& path) {
    auto out = open_out(path);
    write_degree_sequence(seq, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

DegreeSequence read_degree_sequence_file(const std::string& path) {
    auto in = open_in(path);
    return read_degree_sequence(in);
}

void write_graph(const SimpleGraph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (long long e : g.canonical_edge_order()) {
        const Edge edge = g.edge(e);
        out << std::min(edge.u, edge.v) << ' ' << std::max(edge.u, edge.v) << '\n';
    }
}

SimpleGraph read_graph(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) parse_fail("graph header (want: n m_edges)");
    if (n < 0 || m < 0) parse_fail("negative graph header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) parse_fail("graph edge row (want: u v)");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_fail("edge endpoint out of range");
        if (u >= v) parse_fail("edge rows must satisfy u < v");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    try {
        return SimpleGraph::from_edges(static_cast<int>(n), edges);
    } catch (const std::exception& e) {
        parse_fail(e.what()); // e.g. duplicate edge rows
    }
}

void write_graph_file(const SimpleGraph& g, const std::string& path) {
    auto out = open_out(path);
    write_graph(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

SimpleGraph read_graph_file(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void write_coloring(const EdgeColoring& c, std::ostream& out) {
    if (c.host == nullptr)
        throw std::invalid_argument("write_coloring: coloring has no host");
    const SimpleGraph& g = *c.host;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (long long e : g.canonical_edge_order()) {
        const Edge edge = g.edge(e);
        // Green encodes second-stage history, not a third edge state of the
        // percolated graph: files keep the blue/red dichotomy.
        const char state = c.g2(e) ? 'B' : 'R';
        out << std::min(edge.u, edge.v) << ' ' << std::max(edge.u, edge.v) << ' '
            << state << '\n';
    }
}

ColoredGraphFile read_coloring(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) parse_fail("coloring header (want: n m_edges)");
    if (n < 0 || m < 0) parse_fail("negative coloring header");
    std::vector<Edge> edges;
    std::vector<EdgeState> states;
    edges.reserve(static_cast<std::size_t>(m));
    states.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        std::string state;
        if (!(in >> u >> v >> state)) parse_fail("coloring row (want: u v B|R)");
        if (u < 0 || v < 0 || u >= n || v >= n) parse_fail("edge endpoint out of range");
        if (u >= v) parse_fail("edge rows must satisfy u < v");
        if (state != "B" && state != "R") parse_fail("edge state must be B or R");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        states.push_back(state == "B" ? EdgeState::blue : EdgeState::red);
    }
    ColoredGraphFile file;
    try {
        file.graph = SimpleGraph::from_edges(static_cast<int>(n), edges);
    } catch (const std::exception& e) {
        parse_fail(e.what());
    }
    file.state = std::move(states);
    return file;
}

void write_coloring_file(const EdgeColoring& c, const std::string& path) {
    auto out = open_out(path);
    write_coloring(c, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

ColoredGraphFile read_coloring_file(const std::string& path) {
    auto in = open_in(path);
    return read_coloring(in);
}

} // namespace percograph
