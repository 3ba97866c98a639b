#pragma once

#include <map>
#include <optional>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/exact.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Partial map sink -> colour.
using SinkPrecoloring = std::map<Vertex, Color>;

struct ConstructLimits {
    /// Largest underlying-graph component coloured by exhaustive list
    /// colouring when it is 6-regular and not K7.
    int max_hard_component = 64;
    /// Search-node budget of that list colouring.
    long long list_coloring_nodes = 20'000'000;
    /// Exact proper colouring fallback of partition_chromatic6.
    int max_exact_chromatic_vertices = 64;
    long long exact_chromatic_nodes = 20'000'000;
    /// Exhaustive search of partition_dichromatic.
    int max_dichromatic_vertices = 20;
    OracleLimits oracle;
};

/// Least-frequent-colour greedy along a topological order (out-neighbours
/// first). Colours come from `palette`; ties go to the earliest palette
/// entry. Result is a 1/|palette|-majority colouring extending `precolored`.
/// Throws Error(cyclic_input) or Error(precolored_non_sink).
Coloring color_acyclic(const Digraph& d, const std::vector<Color>& palette, const SinkPrecoloring& precolored = {});

/// color_acyclic with palette 1..k.
Coloring color_acyclic_alpha(const Digraph& d, int k, const SinkPrecoloring& precolored = {});

/// Majority 2-colouring (colours 1,2) of a digraph without odd directed
/// cycles, extending a precolouring of its sinks. Throws
/// Error(odd_dicycle) with the cycle as witness, or
/// Error(precolored_non_sink).
Coloring majority2_no_odd_cycles(const Digraph& d, const SinkPrecoloring& precolored = {});

/// Majority colouring with c(v) in lists[v], |lists[v]| == 2, provided no
/// odd directed cycle has all its vertices on the same list. Throws
/// Error(monochromatic_list_odd_dicycle) with the cycle as witness.
Coloring list_majority2(const Digraph& d, const ListAssignment& lists);

/// Majority 3-colouring from a partition into three parts none of which
/// induces an odd directed cycle. Throws Error(bad_partition).
Coloring majority3_from_odd_partition(const Digraph& d, const VertexPartition& partition);

/// Three parts, each the union of two colour classes of a proper colouring
/// of U(D) with at most six colours. Throws
/// Error(chromatic_too_high_or_unknown).
VertexPartition partition_chromatic6(const Digraph& d, const ConstructLimits& limits = {});

/// Partition into `parts` (2 or 3) sets each inducing an acyclic digraph,
/// or nullopt. Always returns exactly `parts` sets, some possibly empty.
std::optional<VertexPartition> partition_dichromatic(const Digraph& d, int parts, const ConstructLimits& limits = {});

/// Choice c(v) in lists[v] (|lists[v]| >= 3) with no monochromatic odd
/// directed cycle. Works when every vertex has d+ <= 3 or d- <= 2, when
/// U(D) is 5-degenerate, or when U(D) has maximum degree at most 6.
/// Throws Error(precondition_violated) or Error(component_too_hard).
Coloring od3_choose(const Digraph& d, const ListAssignment& lists, const ConstructLimits& limits = {});

/// Majority colouring from 3-lists via a choice of colour pairs without
/// monochromatic odd directed cycles (pairs chosen with od3_choose), then
/// list_majority2 on the chosen pairs.
Coloring majority3_via_pair_choice(const Digraph& d, const ListAssignment& lists, const ConstructLimits& limits = {});

/// Majority colouring from lists of size >= 3 (the three smallest entries
/// are used) when max out-degree <= 4, max degree <= 7 or U(D) has maximum
/// degree <= 6.
Coloring majority3_choose(const Digraph& d, const ListAssignment& lists, const ConstructLimits& limits = {});

/// 1/k-majority colouring with colours 1..2k-1 from a partition into two
/// parts inducing acyclic digraphs. Throws Error(bad_partition).
Coloring alpha_majority_dichrom2(const Digraph& d, const VertexPartition& partition, int k);

/// Proper colouring of g with c(v) in lists[v] by most-constrained-first
/// backtracking. nullopt when none exists; throws
/// Error(component_too_hard) if the node budget runs out.
std::optional<Coloring> proper_list_coloring(const UndirectedGraph& g, const ListAssignment& lists, long long node_budget);

} // namespace majority
