#include "majority/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace majority {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::cyclic_input: return "CyclicInput";
    case ErrorKind::partial_coloring: return "PartialColoring";
    case ErrorKind::instance_too_large: return "InstanceTooLarge";
    case ErrorKind::precolored_non_sink: return "PrecoloredNonSink";
    case ErrorKind::odd_dicycle: return "OddDicycle";
    case ErrorKind::monochromatic_list_odd_dicycle: return "MonochromaticListOddDicycle";
    case ErrorKind::bad_partition: return "BadPartition";
    case ErrorKind::chromatic_too_high_or_unknown: return "ChromaticTooHighOrUnknown";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::component_too_hard: return "ComponentTooHard";
    case ErrorKind::param_out_of_range: return "ParamOutOfRange";
    case ErrorKind::degree_too_low: return "DegreeTooLow";
    case ErrorKind::coverage_failure: return "CoverageFailure";
    case ErrorKind::malformed_edge: return "MalformedEdge";
    case ErrorKind::generation_failed: return "GenerationFailed";
    case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : n_(n), out_(n), in_(n)
{
    if (n < 0)
        throw Error(ErrorKind::malformed_edge, "negative vertex count");
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n)
{
    arc_set_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::malformed_edge,
                        "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error(ErrorKind::malformed_edge, "loop at vertex " + std::to_string(u));
        if (!arc_set_.insert(key(u, v)).second)
            throw Error(ErrorKind::malformed_edge,
                        "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : out_)
        std::sort(a.begin(), a.end());
    for (auto& a : in_)
        std::sort(a.begin(), a.end());
    arc_count_ = arcs.size();
}

bool Digraph::has_arc(Vertex u, Vertex v) const
{
    return arc_set_.count(key(u, v)) != 0;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : out_[u])
            result.emplace_back(u, v);
    return result;
}

int Digraph::max_out_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, out_degree(v));
    return best;
}

int Digraph::min_out_degree() const
{
    if (n_ == 0)
        return 0;
    int best = out_degree(0);
    for (Vertex v = 1; v < n_; ++v)
        best = std::min(best, out_degree(v));
    return best;
}

int Digraph::max_in_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, in_degree(v));
    return best;
}

int Digraph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, out_degree(v) + in_degree(v));
    return best;
}

// ---------------------------------------------------------------------------
// UndirectedGraph

void UndirectedGraph::add_edge(Vertex u, Vertex v)
{
    if (u == v)
        throw Error(ErrorKind::malformed_edge, "loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

int UndirectedGraph::max_degree() const
{
    int best = 0;
    for (const auto& a : adj_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

bool UndirectedGraph::adjacent(Vertex u, Vertex v) const
{
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

std::vector<VertexSet> UndirectedGraph::components() const
{
    std::vector<VertexSet> result;
    std::vector<char> seen(adj_.size(), 0);
    for (Vertex s = 0; s < size(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

// ---------------------------------------------------------------------------
// VertexPartition

std::vector<int> VertexPartition::part_of(int n) const
{
    std::vector<int> result(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            if (v >= 0 && v < n)
                result[v] = static_cast<int>(i);
    return result;
}

bool VertexPartition::is_partition_of(int n) const
{
    std::vector<char> seen(n, 0);
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (!std::is_sorted(part.begin(), part.end()))
            return false;
        for (Vertex v : part) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = 1;
            ++total;
        }
    }
    return total == static_cast<std::size_t>(n);
}

// ---------------------------------------------------------------------------
// Strong components (iterative Tarjan)

StrongComponents strong_components(const Digraph& d)
{
    const int n = d.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<VertexSet> found; // emitted sinks-first
    int counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = d.out(f.v);
            if (f.next < succ.size()) {
                Vertex w = succ[f.next++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                VertexSet comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
        }
    }

    StrongComponents result;
    result.components.assign(found.rbegin(), found.rend());
    result.component_of.assign(n, -1);
    for (std::size_t i = 0; i < result.components.size(); ++i)
        for (Vertex v : result.components[i])
            result.component_of[v] = static_cast<int>(i);
    return result;
}

// ---------------------------------------------------------------------------
// Odd directed cycles

namespace {

// Splits a closed walk into simple cycles and returns the first odd one.
// `walk` lists the vertices; the walk returns from the last to the first.
std::optional<std::vector<Vertex>> odd_cycle_in_closed_walk(const std::vector<Vertex>& walk, int n)
{
    std::vector<int> pos(n, -1);
    std::vector<Vertex> stack;
    auto visit = [&](Vertex v) -> std::optional<std::vector<Vertex>> {
        if (pos[v] >= 0) {
            std::size_t p = static_cast<std::size_t>(pos[v]);
            std::size_t len = stack.size() - p;
            if (len % 2 == 1)
                return std::vector<Vertex>(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.end());
            for (std::size_t i = p + 1; i < stack.size(); ++i)
                pos[stack[i]] = -1;
            stack.resize(p + 1);
            return std::nullopt;
        }
        pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        return std::nullopt;
    };
    for (Vertex v : walk)
        if (auto c = visit(v))
            return c;
    return visit(walk.front());
}

std::vector<int> bfs_distances(const Digraph& d, Vertex root, const std::vector<char>& inside, bool forward,
                               std::vector<Vertex>& pred)
{
    std::vector<int> dist(d.size(), -1);
    pred.assign(d.size(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        const auto& next = forward ? d.out(v) : d.in(v);
        for (Vertex w : next) {
            if (!inside[w] || dist[w] != -1)
                continue;
            dist[w] = dist[v] + 1;
            pred[w] = v;
            queue.push_back(w);
        }
    }
    return dist;
}

} // namespace

std::optional<std::vector<Vertex>> find_odd_dicycle(const Digraph& d)
{
    const auto sccs = strong_components(d);
    std::vector<const VertexSet*> by_root;
    for (const auto& c : sccs.components)
        by_root.push_back(&c);
    std::sort(by_root.begin(), by_root.end(), [](auto* a, auto* b) { return a->front() < b->front(); });

    std::vector<char> inside(d.size(), 0);
    for (const VertexSet* comp : by_root) {
        if (comp->size() < 2)
            continue;
        for (Vertex v : *comp)
            inside[v] = 1;
        const Vertex root = comp->front();
        std::vector<Vertex> parent, toward_root;
        auto df = bfs_distances(d, root, inside, true, parent);
        auto db = bfs_distances(d, root, inside, false, toward_root);

        // Strongly connected: the component is bipartite iff every inner
        // arc (u,v) has d(u)+1-d(v) even.
        std::optional<Arc> odd_arc;
        for (Vertex u : *comp) {
            for (Vertex v : d.out(u))
                if (inside[v] && (df[u] + 1 - df[v]) % 2 != 0) {
                    odd_arc = Arc{u, v};
                    break;
                }
            if (odd_arc)
                break;
        }
        if (odd_arc) {
            auto [u, v] = *odd_arc;
            auto path_from_root = [&](Vertex t) {
                std::vector<Vertex> p;
                for (Vertex x = t; x != -1; x = parent[x])
                    p.push_back(x);
                std::reverse(p.begin(), p.end());
                return p; // root .. t
            };
            auto path_to_root = [&](Vertex s) {
                std::vector<Vertex> p;
                for (Vertex x = s; x != root; x = toward_root[x])
                    p.push_back(x);
                return p; // s .. (excluding root)
            };
            std::vector<Vertex> walk;
            if ((df[u] + 1 + db[v]) % 2 == 1) {
                walk = path_from_root(u);
                auto back = path_to_root(v);
                walk.insert(walk.end(), back.begin(), back.end());
            } else {
                walk = path_from_root(v);
                auto back = path_to_root(v);
                if (!back.empty())
                    walk.insert(walk.end(), back.begin() + 1, back.end());
            }
            if (auto c = odd_cycle_in_closed_walk(walk, d.size()))
                return c;
        }
        for (Vertex v : *comp)
            inside[v] = 0;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Acyclicity

std::optional<std::vector<Vertex>> find_dicycle(const Digraph& d)
{
    const int n = d.size();
    std::vector<char> state(n, 0); // 0 new, 1 on path, 2 done
    std::vector<Vertex> path;
    std::vector<std::size_t> next;
    for (Vertex root = 0; root < n; ++root) {
        if (state[root])
            continue;
        path = {root};
        next = {0};
        state[root] = 1;
        while (!path.empty()) {
            Vertex v = path.back();
            if (next.back() < d.out(v).size()) {
                Vertex w = d.out(v)[next.back()++];
                if (state[w] == 1) {
                    auto it = std::find(path.begin(), path.end(), w);
                    return std::vector<Vertex>(it, path.end());
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    path.push_back(w);
                    next.push_back(0);
                }
            } else {
                state[v] = 2;
                path.pop_back();
                next.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::vector<Vertex> topological_order(const Digraph& d)
{
    const int n = d.size();
    std::vector<int> remaining(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        remaining[v] = d.out_degree(v);
        if (remaining[v] == 0)
            ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex u : d.in(v))
            if (--remaining[u] == 0)
                ready.push(u);
    }
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::cyclic_input, "digraph has a directed cycle", find_dicycle(d).value_or(std::vector<Vertex>{}));
    return order;
}

// ---------------------------------------------------------------------------
// Undirected views

UndirectedGraph underlying_graph(const Digraph& d)
{
    UndirectedGraph g(d.size());
    for (auto [u, v] : d.arcs())
        g.add_edge(u, v);
    return g;
}

DegeneracyOrder degeneracy_order(const UndirectedGraph& g)
{
    const int n = g.size();
    std::vector<int> degree(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(n, 0);
    DegeneracyOrder result;
    result.order.reserve(n);
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, deg);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase({degree[w], w});
            queue.emplace(--degree[w], w);
        }
    }
    return result;
}

std::optional<std::vector<int>> bipartition(const UndirectedGraph& g)
{
    std::vector<int> side(g.size(), -1);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

// ---------------------------------------------------------------------------
// Subgraphs

InducedSubgraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices)
{
    std::vector<int> local(d.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (Vertex u : vertices)
        for (Vertex v : d.out(u))
            if (local[v] != -1)
                arcs.emplace_back(local[u], local[v]);
    return {Digraph(static_cast<int>(vertices.size()), arcs), {vertices.begin(), vertices.end()}};
}

InducedSubgraph out_closure(const Digraph& d, std::span<const Vertex> inside)
{
    std::vector<int> local(d.size(), -1);
    std::vector<Vertex> to_global(inside.begin(), inside.end());
    for (std::size_t i = 0; i < inside.size(); ++i)
        local[inside[i]] = static_cast<int>(i);
    std::vector<char> member(d.size(), 0);
    for (Vertex v : inside)
        member[v] = 1;
    std::vector<Vertex> heads;
    for (Vertex u : inside)
        for (Vertex v : d.out(u))
            if (!member[v])
                heads.push_back(v);
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    for (Vertex h : heads) {
        local[h] = static_cast<int>(to_global.size());
        to_global.push_back(h);
    }
    std::vector<Arc> arcs;
    for (Vertex u : inside)
        for (Vertex v : d.out(u))
            arcs.emplace_back(local[u], local[v]);
    return {Digraph(static_cast<int>(to_global.size()), arcs), std::move(to_global)};
}

Digraph remove_arcs(const Digraph& d, std::span<const Arc> removed)
{
    std::set<Arc> drop(removed.begin(), removed.end());
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs())
        if (!drop.count(a))
            kept.push_back(a);
    return Digraph(d.size(), kept);
}

} // namespace majority
