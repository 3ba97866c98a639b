#pragma once

#include <array>
#include <optional>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/lp.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Vertex -> colour list. Lists are kept sorted and duplicate free.
using ListAssignment = std::vector<std::vector<Color>>;

/// Size caps for the exhaustive searches. Exceeding one raises
/// Error(instance_too_large).
struct OracleLimits {
    int max_vertices_two_colors = 24;
    int max_vertices_three_colors = 14;
    int max_vertices_many_colors = 12;
    int max_vertices_od3 = 20;
    int max_vertices_stable_sets = 20;
    int max_vertices_hypergraph = 24;
};

/// Backtracking search for a majority colouring with colours 1..k.
/// Vertices are coloured in input order, colours tried ascending.
std::optional<Coloring> exact_majority_colorable(const Digraph& d, int k, const MajorityParam& alpha,
                                                 const OracleLimits& limits = {});

/// Same search restricted to c(v) in lists[v].
std::optional<Coloring> exact_list_majority(const Digraph& d, const ListAssignment& lists,
                                            const MajorityParam& alpha, const OracleLimits& limits = {});

/// Plain k^n enumeration; the independent cross-check for the pruned search.
std::optional<Coloring> brute_force_majority(const Digraph& d, int k, const MajorityParam& alpha);

/// Choice c(v) in lists[v] such that no odd directed cycle is monochromatic.
std::optional<Coloring> exact_od3_choice(const Digraph& d, const ListAssignment& lists,
                                         const OracleLimits& limits = {});

/// All stable sets, ordered by size and then lexicographically.
std::vector<VertexSet> enumerate_stable_sets(const Digraph& d, const OracleLimits& limits = {});

struct FractionalOptimum {
    double primal_value = 0.0;
    double dual_value = 0.0;
    FractionalColoring primal;      // positive-weight stable sets only
    std::vector<double> dual_weights;
    bool certified = false;         // optimum confirmed in rational arithmetic
    std::string exact_value;
};

/// Minimum total weight of a fractional majority colouring, solved over all
/// stable sets together with the vertex-weight packing dual.
FractionalOptimum exact_fractional_weight(const Digraph& d, const OracleLimits& limits = {});

/// Coverage and stability of a fractional colouring with rational weights,
/// checked without rounding.
bool verify_fractional_exact(const Digraph& d, const std::vector<VertexSet>& sets, const std::vector<Rational>& weights);

struct Hypergraph {
    int n = 0;
    std::vector<std::array<Vertex, 3>> edges;
};

/// Throws Error(malformed_edge) unless every edge has three distinct
/// in-range vertices.
void validate(const Hypergraph& h);

/// 2-colouring (colours 1,2) with no monochromatic edge, or nullopt.
std::optional<Coloring> hyp2col_exact(const Hypergraph& h, const OracleLimits& limits = {});

} // namespace majority
