#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "percograph/degree_sequence.hpp"
#include "percograph/graph.hpp"
#include "percograph/percolation.hpp"

namespace percograph {

// Degree sequence text format:
//   n m
//   degree count        (one line per distinct degree, degree descending)
// Vertices are labeled in non-increasing degree order on read.
void write_degree_sequence(const DegreeSequence& seq, std::ostream& out);
DegreeSequence read_degree_sequence(std::istream& in);
void write_degree_sequence_file(const DegreeSequence& seq, const std::string& path);
DegreeSequence read_degree_sequence_file(const std::string& path);

// Graph text format:
//   n m_edges
//   u v                 (u < v, lexicographic order)
void write_graph(const SimpleGraph& g, std::ostream& out);
SimpleGraph read_graph(std::istream& in);
void write_graph_file(const SimpleGraph& g, const std::string& path);
SimpleGraph read_graph_file(const std::string& path);

// Coloring text format: the host edge list with a B/R state appended per
// line, same ordering as the graph serialization.  Green (second-stage)
// edges are reported as B.
//   n m_edges
//   u v B|R
void write_coloring(const EdgeColoring& c, std::ostream& out);

struct ColoredGraphFile {
    SimpleGraph graph;
    std::vector<EdgeState> state; // indexed by graph edge index
};

ColoredGraphFile read_coloring(std::istream& in);
void write_coloring_file(const EdgeColoring& c, const std::string& path);
ColoredGraphFile read_coloring_file(const std::string& path);

} // namespace percograph
