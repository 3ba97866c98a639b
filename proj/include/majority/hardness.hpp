#pragma once

#include <array>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/exact.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Gadget roles in order x1 x2 x3 y1 y2 y3 z1 z2 z3.
using GadgetRoles = std::array<Vertex, 9>;
using GadgetLayout = std::vector<GadgetRoles>; // one entry per hyperedge

/// Upward-oriented K3,3 (y -> x) plus a directed triangle on z pointing
/// at all six K3,3 vertices. x = 0..2, y = 3..5, z = 6..8; 30 arcs.
Digraph build_d9();

struct GadgetReport {
    /// extendable[mask]: x_i gets colour 2 iff bit i of mask is set.
    std::array<bool, 8> extendable{};
    /// A valid extension for each extendable precolouring.
    std::array<Coloring, 8> witness{};
    bool matches = false; // extendable exactly for the non-constant masks
};

/// Tries all 2^6 colourings of y,z for every sink precolouring of x.
GadgetReport d9_report();
bool check_d9_observation();

struct Reduction {
    Digraph digraph;
    GadgetLayout layout;
};

/// One gadget per hyperedge, x-roles identified with the edge's vertices
/// (ids 0..n-1), fresh y and z vertices appended edge by edge.
/// Throws Error(malformed_edge).
Reduction reduce_hypergraph(const Hypergraph& h);

/// Restriction to the hypergraph vertices.
Coloring pull_back(const Coloring& c, int n);

/// Majority 2-colouring of the reduction from a proper 2-colouring of h
/// (colours 1,2): y takes the minority colour of its edge, z the majority.
Coloring lift(const Hypergraph& h, const Reduction& r, const Coloring& hyp_coloring);

/// True iff no edge of h is monochromatic under c.
bool is_proper_2coloring(const Hypergraph& h, const Coloring& c);

} // namespace majority
