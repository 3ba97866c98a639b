#pragma once

#include <iosfwd>
#include <string>

#include "majority/digraph.hpp"
#include "majority/exact.hpp"
#include "majority/hardness.hpp"
#include "majority/verify.hpp"

namespace majority {

// Text formats. Lines starting with '#' and blank lines are ignored on
// input; output is LF-terminated and sorted. Malformed input raises
// Error(parse_error) naming the line.

/// "n m" then m lines "u v".
Digraph parse_digraph(std::istream& in);
std::string format_digraph(const Digraph& d);

/// One "v c" line per vertex. Vertices without a line stay uncoloured.
Coloring parse_coloring(std::istream& in, int n);
std::string format_coloring(const Coloring& c);

/// One "v c1 c2 ..." line per vertex.
ListAssignment parse_lists(std::istream& in, int n);
std::string format_lists(const ListAssignment& lists);

/// One "w : v1 v2 ..." line per weighted set.
FractionalColoring parse_fractional(std::istream& in);
std::string format_fractional(const FractionalColoring& f);

/// One "v part" line per vertex; parts are numbered from 0.
VertexPartition parse_partition(std::istream& in, int n);
std::string format_partition(const VertexPartition& p, int n);

/// "n m" then m lines of three vertex ids.
Hypergraph parse_hypergraph(std::istream& in);
std::string format_hypergraph(const Hypergraph& h);

/// One "e x1 x2 x3 y1 y2 y3 z1 z2 z3" line per hyperedge.
std::string format_layout(const GadgetLayout& layout);

/// Graphviz rendering.
std::string to_dot(const Digraph& d);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

} // namespace majority
