#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "majority/error.hpp"

namespace majority {

using Arc = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>; // sorted, duplicate free

/// Loopless simple digraph on vertices 0..n-1. Digons are two arcs.
/// Immutable once built; adjacency lists are sorted ascending.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    /// Throws Error(malformed_edge) on loops, out-of-range endpoints or
    /// repeated ordered pairs.
    Digraph(int n, std::span<const Arc> arcs);

    int size() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arc_count_; }

    const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(Vertex u, Vertex v) const;

    /// All arcs sorted lexicographically.
    std::vector<Arc> arcs() const;

    int max_out_degree() const;
    int min_out_degree() const;
    int max_in_degree() const;
    /// max over v of d+(v) + d-(v)
    int max_degree() const;

    bool operator==(const Digraph& other) const { return n_ == other.n_ && out_ == other.out_; }

private:
    static std::uint64_t key(Vertex u, Vertex v)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::unordered_set<std::uint64_t> arc_set_;
};

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : adj_(n) {}

    /// Adds {u,v}; ignores a repeat. Loops are rejected.
    void add_edge(Vertex u, Vertex v);

    int size() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    std::vector<VertexSet> components() const;

private:
    std::vector<std::vector<Vertex>> adj_; // kept sorted
    std::size_t edge_count_ = 0;
};

struct VertexPartition {
    std::vector<VertexSet> parts;

    /// True iff parts are disjoint, sorted, in range and cover 0..n-1.
    bool is_partition_of(int n) const;
    /// part index per vertex, -1 where not covered
    std::vector<int> part_of(int n) const;
};

struct StrongComponents {
    /// Components in topological order of the condensation: every arc
    /// between two components goes from an earlier one to a later one.
    std::vector<VertexSet> components;
    std::vector<int> component_of;

    VertexPartition partition() const { return VertexPartition{components}; }
};

StrongComponents strong_components(const Digraph& d);

/// Some odd directed cycle of d (as its vertex sequence, each vertex
/// pointing at the next and the last at the first), or nullopt.
std::optional<std::vector<Vertex>> find_odd_dicycle(const Digraph& d);
inline bool has_odd_dicycle(const Digraph& d) { return find_odd_dicycle(d).has_value(); }

/// Order in which every vertex comes after all of its out-neighbours.
/// Throws Error(cyclic_input) with a directed cycle as witness.
std::vector<Vertex> topological_order(const Digraph& d);

/// Some directed cycle of d, or nullopt when d is acyclic.
std::optional<std::vector<Vertex>> find_dicycle(const Digraph& d);
inline bool is_acyclic(const Digraph& d) { return !find_dicycle(d).has_value(); }

UndirectedGraph underlying_graph(const Digraph& d);

struct DegeneracyOrder {
    std::vector<Vertex> order; // elimination order
    int degeneracy = 0;
};

/// Repeated removal of a minimum-degree vertex (ties: smallest id).
DegeneracyOrder degeneracy_order(const UndirectedGraph& g);

/// Two-colouring (0/1) of g, or nullopt if g has an odd cycle. Every
/// component's smallest vertex gets side 0.
std::optional<std::vector<int>> bipartition(const UndirectedGraph& g);

struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> to_global; // local id -> original id
};

/// D[vertices]; local ids follow the order of `vertices`.
InducedSubgraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices);

/// D[inside] plus every arc leaving `inside` together with its head. Heads
/// outside `inside` are sinks of the result and are listed after the
/// members of `inside` in the local numbering.
InducedSubgraph out_closure(const Digraph& d, std::span<const Vertex> inside);

/// D without the listed arcs (arcs not in D are ignored).
Digraph remove_arcs(const Digraph& d, std::span<const Arc> removed);

} // namespace majority
