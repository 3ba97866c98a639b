#include "majority/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace majority {

namespace {

std::string describe(const std::vector<Vertex>& cycle)
{
    std::string s;
    for (Vertex v : cycle)
        s += std::to_string(v) + "->";
    if (!cycle.empty())
        s += std::to_string(cycle.front());
    return s;
}

std::vector<Vertex> to_global(const std::vector<Vertex>& local, const std::vector<Vertex>& map)
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(map[v]);
    return out;
}

void check_precoloring(const Digraph& d, const SinkPrecoloring& precolored)
{
    for (auto [v, color] : precolored) {
        if (v < 0 || v >= d.size())
            throw Error(ErrorKind::precolored_non_sink, "precolored vertex " + std::to_string(v) + " out of range", {v});
        if (d.out_degree(v) != 0)
            throw Error(ErrorKind::precolored_non_sink, "vertex " + std::to_string(v) + " is not a sink", {v});
    }
}

ListAssignment sorted_lists(const Digraph& d, const ListAssignment& lists)
{
    if (static_cast<int>(lists.size()) != d.size())
        throw Error(ErrorKind::precondition_violated,
                    "list assignment has " + std::to_string(lists.size()) + " entries for " + std::to_string(d.size()) +
                        " vertices");
    ListAssignment out = lists;
    for (auto& l : out) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return out;
}

UndirectedGraph induced_undirected(const UndirectedGraph& g, const std::vector<Vertex>& vertices)
{
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    UndirectedGraph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (local[w] > static_cast<int>(i))
                h.add_edge(static_cast<Vertex>(i), local[w]);
    return h;
}

bool directed_triangle(const Digraph& d, Vertex a, Vertex b, Vertex c)
{
    return (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) ||
           (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a));
}

// Largest-saturation-first greedy colouring; colours are 0,1,...
std::vector<int> dsatur(const UndirectedGraph& g)
{
    const int n = g.size();
    std::vector<int> color(n, -1);
    std::vector<std::set<int>> seen(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] != -1)
                continue;
            if (best == -1 || seen[v].size() > seen[best].size() ||
                (seen[v].size() == seen[best].size() && g.degree(v) > g.degree(best)))
                best = v;
        }
        int c = 0;
        while (seen[best].count(c))
            ++c;
        color[best] = c;
        for (Vertex w : g.neighbors(best))
            seen[w].insert(c);
    }
    return color;
}

} // namespace

// ---------------------------------------------------------------------------

Coloring color_acyclic(const Digraph& d, const std::vector<Color>& palette, const SinkPrecoloring& precolored)
{
    if (palette.empty())
        throw Error(ErrorKind::param_out_of_range, "empty palette");
    check_precoloring(d, precolored);
    const auto order = topological_order(d);
    Coloring c(d.size(), kUncolored);
    std::vector<int> freq(palette.size());
    for (Vertex v : order) {
        if (auto it = precolored.find(v); it != precolored.end()) {
            c[v] = it->second;
            continue;
        }
        std::fill(freq.begin(), freq.end(), 0);
        for (Vertex w : d.out(v))
            for (std::size_t i = 0; i < palette.size(); ++i)
                if (palette[i] == c[w])
                    ++freq[i];
        c[v] = palette[std::min_element(freq.begin(), freq.end()) - freq.begin()];
    }
    return c;
}

Coloring color_acyclic_alpha(const Digraph& d, int k, const SinkPrecoloring& precolored)
{
    if (k < 1)
        throw Error(ErrorKind::param_out_of_range, "palette size must be positive");
    std::vector<Color> palette(k);
    for (int i = 0; i < k; ++i)
        palette[i] = i + 1;
    return color_acyclic(d, palette, precolored);
}

// ---------------------------------------------------------------------------

Coloring majority2_no_odd_cycles(const Digraph& d, const SinkPrecoloring& precolored)
{
    check_precoloring(d, precolored);
    for (auto [v, color] : precolored)
        if (color != 1 && color != 2)
            throw Error(ErrorKind::param_out_of_range, "sink precoloring must use colors 1 and 2", {v});
    if (auto cycle = find_odd_dicycle(d))
        throw Error(ErrorKind::odd_dicycle, "odd directed cycle " + describe(*cycle), *cycle);

    const auto sccs = strong_components(d);
    Coloring c(d.size(), kUncolored);
    std::vector<char> in_w(d.size(), 0);
    std::vector<std::array<int, 2>> outside(d.size(), {0, 0});

    // Components are handled sinks-side first, so everything a component
    // points to is already coloured when it is reached.
    for (auto comp = sccs.components.rbegin(); comp != sccs.components.rend(); ++comp) {
        const VertexSet& x = *comp;
        if (x.size() == 1 && d.out_degree(x.front()) == 0) {
            auto it = precolored.find(x.front());
            c[x.front()] = it == precolored.end() ? 1 : it->second;
            continue;
        }
        for (Vertex v : x) {
            in_w[v] = 1;
            outside[v] = {0, 0};
        }
        for (Vertex v : x)
            for (Vertex w : d.out(v))
                if (!in_w[w])
                    ++outside[v][c[w] - 1];

        // W-procedure: release a vertex that already sees at least half of
        // its out-neighbours in one colour and give it the rarer colour.
        for (;;) {
            Vertex chosen = -1;
            for (Vertex v : x)
                if (in_w[v] && 2 * std::max(outside[v][0], outside[v][1]) >= d.out_degree(v)) {
                    chosen = v;
                    break;
                }
            if (chosen == -1)
                break;
            in_w[chosen] = 0;
            c[chosen] = outside[chosen][0] < outside[chosen][1] ? 1 : 2;
            for (Vertex u : d.in(chosen))
                if (in_w[u])
                    ++outside[u][c[chosen] - 1];
        }

        const auto inner = induced_subgraph(d, x);
        const auto sides = bipartition(underlying_graph(inner.graph));
        // Unreachable: find_odd_dicycle already ruled out odd cycles.
        if (!sides)
            throw Error(ErrorKind::odd_dicycle, "strong component is not bipartite", x);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (in_w[x[i]]) {
                c[x[i]] = (*sides)[i] == 0 ? 1 : 2;
                in_w[x[i]] = 0;
            }
    }
    return c;
}

// ---------------------------------------------------------------------------

Coloring list_majority2(const Digraph& d, const ListAssignment& lists_in)
{
    const auto lists = sorted_lists(d, lists_in);
    std::map<std::pair<Color, Color>, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < d.size(); ++v) {
        if (lists[v].size() != 2)
            throw Error(ErrorKind::precondition_violated,
                        "vertex " + std::to_string(v) + " needs a list of exactly two colors", {v});
        groups[{lists[v][0], lists[v][1]}].push_back(v);
    }
    for (const auto& [pair, members] : groups) {
        const auto sub = induced_subgraph(d, members);
        if (auto cycle = find_odd_dicycle(sub.graph)) {
            auto witness = to_global(*cycle, sub.to_global);
            throw Error(ErrorKind::monochromatic_list_odd_dicycle,
                        "odd directed cycle " + describe(witness) + " with every list {" + std::to_string(pair.first) +
                            "," + std::to_string(pair.second) + "}",
                        witness);
        }
    }

    // Arcs between disjoint lists can never join equal colours.
    std::vector<Arc> disjoint;
    for (auto [u, v] : d.arcs()) {
        const auto& a = lists[u];
        const auto& b = lists[v];
        if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1])
            disjoint.emplace_back(u, v);
    }
    const Digraph reduced = remove_arcs(d, disjoint);

    Coloring c(d.size(), kUncolored);
    for (const auto& [pair, members] : groups) {
        const auto [a, b] = pair;
        const auto closure = out_closure(reduced, members);
        SinkPrecoloring pre;
        for (std::size_t i = members.size(); i < closure.to_global.size(); ++i) {
            const auto& l = lists[closure.to_global[i]];
            pre[static_cast<Vertex>(i)] = std::binary_search(l.begin(), l.end(), a) ? 1 : 2;
        }
        const auto local = majority2_no_odd_cycles(closure.graph, pre);
        for (std::size_t i = 0; i < members.size(); ++i)
            c[members[i]] = local[i] == 1 ? a : b;
    }
    return c;
}

// ---------------------------------------------------------------------------

Coloring majority3_from_odd_partition(const Digraph& d, const VertexPartition& partition)
{
    if (partition.parts.size() != 3 || !partition.is_partition_of(d.size()))
        throw Error(ErrorKind::bad_partition, "expected a partition of all vertices into three sorted parts");
    ListAssignment lists(d.size());
    static const std::array<std::vector<Color>, 3> pair_of_part{{{2, 3}, {1, 3}, {1, 2}}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto sub = induced_subgraph(d, partition.parts[i]);
        if (auto cycle = find_odd_dicycle(sub.graph)) {
            auto witness = to_global(*cycle, sub.to_global);
            throw Error(ErrorKind::bad_partition,
                        "part " + std::to_string(i) + " contains odd directed cycle " + describe(witness), witness);
        }
        for (Vertex v : partition.parts[i])
            lists[v] = pair_of_part[i];
    }
    return list_majority2(d, lists);
}

// ---------------------------------------------------------------------------

std::optional<Coloring> proper_list_coloring(const UndirectedGraph& g, const ListAssignment& lists, long long node_budget)
{
    const int n = g.size();
    if (static_cast<int>(lists.size()) != n)
        throw Error(ErrorKind::precondition_violated, "list assignment size mismatch");
    // blocked[v][i]: coloured neighbours of v using lists[v][i]
    std::vector<std::vector<int>> blocked(n);
    for (Vertex v = 0; v < n; ++v)
        blocked[v].assign(lists[v].size(), 0);
    Coloring c(n, kUncolored);
    long long nodes = 0;

    auto available = [&](Vertex v) {
        return static_cast<int>(std::count(blocked[v].begin(), blocked[v].end(), 0));
    };
    auto touch = [&](Vertex v, Color color, int delta) {
        for (Vertex w : g.neighbors(v))
            for (std::size_t i = 0; i < lists[w].size(); ++i)
                if (lists[w][i] == color)
                    blocked[w][i] += delta;
    };
    auto extend = [&](auto&& self, int colored) -> bool {
        if (colored == n)
            return true;
        if (++nodes > node_budget)
            throw Error(ErrorKind::component_too_hard, "list coloring search exceeded its node budget");
        Vertex pick = -1;
        int pick_free = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (c[v] != kUncolored)
                continue;
            int free = available(v);
            if (pick == -1 || free < pick_free) {
                pick = v;
                pick_free = free;
            }
        }
        if (pick_free == 0)
            return false;
        for (std::size_t i = 0; i < lists[pick].size(); ++i) {
            if (blocked[pick][i])
                continue;
            c[pick] = lists[pick][i];
            touch(pick, c[pick], +1);
            if (self(self, colored + 1))
                return true;
            touch(pick, c[pick], -1);
            c[pick] = kUncolored;
        }
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return c;
}

VertexPartition partition_chromatic6(const Digraph& d, const ConstructLimits& limits)
{
    const auto u = underlying_graph(d);
    std::vector<int> classes = dsatur(u);
    const int used = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
    if (used > 6) {
        if (u.size() > limits.max_exact_chromatic_vertices)
            throw Error(ErrorKind::chromatic_too_high_or_unknown,
                        "greedy coloring needs " + std::to_string(used) + " colors and the graph is too large for exact search");
        std::optional<Coloring> exact;
        try {
            exact = proper_list_coloring(u, ListAssignment(u.size(), {0, 1, 2, 3, 4, 5}), limits.exact_chromatic_nodes);
        } catch (const Error& e) {
            throw Error(ErrorKind::chromatic_too_high_or_unknown, "exact 6-coloring search gave up");
        }
        if (!exact)
            throw Error(ErrorKind::chromatic_too_high_or_unknown, "underlying graph is not 6-colorable");
        classes.assign(exact->begin(), exact->end());
    }
    VertexPartition p{std::vector<VertexSet>(3)};
    for (Vertex v = 0; v < d.size(); ++v)
        p.parts[classes[v] / 2].push_back(v);
    return p;
}

std::optional<VertexPartition> partition_dichromatic(const Digraph& d, int parts, const ConstructLimits& limits)
{
    if (parts < 1)
        throw Error(ErrorKind::param_out_of_range, "need at least one part");
    if (d.size() > limits.max_dichromatic_vertices)
        throw Error(ErrorKind::instance_too_large,
                    "partition_dichromatic: " + std::to_string(d.size()) + " vertices exceeds cap " +
                        std::to_string(limits.max_dichromatic_vertices));
    const int n = d.size();
    std::vector<int> part(n, -1);

    // Does v close a directed cycle inside its (partially built) part?
    auto closes_cycle = [&](Vertex v) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack;
        for (Vertex w : d.out(v))
            if (part[w] == part[v]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if (x == v)
                return true;
            for (Vertex w : d.out(x))
                if (part[w] == part[v] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    };
    auto extend = [&](auto&& self, Vertex v, int max_used) -> bool {
        if (v == n)
            return true;
        for (int p = 0; p < parts && p <= max_used + 1; ++p) {
            part[v] = p;
            if (!closes_cycle(v) && self(self, v + 1, std::max(max_used, p)))
                return true;
        }
        part[v] = -1;
        return false;
    };
    if (!extend(extend, 0, -1))
        return std::nullopt;
    VertexPartition result{std::vector<VertexSet>(parts)};
    for (Vertex v = 0; v < n; ++v)
        result.parts[part[v]].push_back(v);
    return result;
}

// ---------------------------------------------------------------------------

Coloring od3_choose(const Digraph& d, const ListAssignment& lists_in, const ConstructLimits& limits)
{
    const auto lists = sorted_lists(d, lists_in);
    for (Vertex v = 0; v < d.size(); ++v)
        if (lists[v].size() < 3)
            throw Error(ErrorKind::precondition_violated, "vertex " + std::to_string(v) + " has fewer than 3 colors", {v});

    const int n = d.size();
    bool low_degree = true;
    for (Vertex v = 0; v < n; ++v)
        low_degree = low_degree && (d.out_degree(v) <= 3 || d.in_degree(v) <= 2);
    if (!low_degree) {
        const auto u = underlying_graph(d);
        if (degeneracy_order(u).degeneracy > 5 && u.max_degree() > 6)
            throw Error(ErrorKind::precondition_violated,
                        "need d+ <= 3 or d- <= 2 everywhere, a 5-degenerate or a max-degree-6 underlying graph");
    }

    // Peel vertices of in-degree <= 2; re-inserted last, each avoids the
    // colours of its in-neighbours so no cycle through it is monochromatic.
    std::vector<int> indeg(n);
    std::vector<char> present(n, 1);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = d.in_degree(v);
        if (indeg[v] <= 2)
            ready.push(v);
    }
    std::vector<Vertex> peeled;
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        if (!present[v])
            continue;
        present[v] = 0;
        peeled.push_back(v);
        for (Vertex w : d.out(v))
            if (present[w] && --indeg[w] == 2)
                ready.push(w);
    }

    Coloring c(n, kUncolored);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (present[v])
            rest.push_back(v);

    if (!rest.empty()) {
        // Colour the remainder through its underlying graph with doubled
        // lists: colour index i stands for lists-colour palette[i/2].
        std::vector<Color> palette;
        for (Vertex v : rest)
            palette.insert(palette.end(), lists[v].begin(), lists[v].end());
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        auto index_of = [&](Color col) {
            return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), col) - palette.begin());
        };

        const auto remainder = induced_subgraph(d, rest);
        const auto u = underlying_graph(remainder.graph);
        for (const VertexSet& comp : u.components()) {
            const auto cu = induced_undirected(u, comp);
            ListAssignment doubled(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Color col : lists[rest[comp[i]]]) {
                    doubled[i].push_back(2 * index_of(col));
                    doubled[i].push_back(2 * index_of(col) + 1);
                }

            const auto degen = degeneracy_order(cu);
            std::optional<Coloring> local;
            if (degen.degeneracy <= 5) {
                Coloring greedy(comp.size(), kUncolored);
                for (auto it = degen.order.rbegin(); it != degen.order.rend(); ++it) {
                    Vertex v = *it;
                    for (Color col : doubled[v]) {
                        bool clash = std::any_of(cu.neighbors(v).begin(), cu.neighbors(v).end(),
                                                 [&](Vertex w) { return greedy[w] == col; });
                        if (!clash) {
                            greedy[v] = col;
                            break;
                        }
                    }
                }
                for (Color& col : greedy)
                    col = palette[col / 2];
                local = greedy;
            } else if (comp.size() == 7 && cu.edge_count() == 21) {
                std::vector<Vertex> members;
                ListAssignment sub_lists;
                for (Vertex i : comp) {
                    members.push_back(rest[i]);
                    sub_lists.push_back(lists[rest[i]]);
                }
                local = exact_od3_choice(induced_subgraph(d, members).graph, sub_lists, limits.oracle);
                if (!local)
                    throw Error(ErrorKind::component_too_hard, "K7 component has no admissible choice", members);
            } else if (cu.max_degree() <= 6) {
                if (static_cast<int>(comp.size()) > limits.max_hard_component)
                    throw Error(ErrorKind::component_too_hard,
                                "6-regular component with " + std::to_string(comp.size()) + " vertices exceeds cap");
                local = proper_list_coloring(cu, doubled, limits.list_coloring_nodes);
                if (!local)
                    throw Error(ErrorKind::component_too_hard, "6-regular component has no list coloring");
                for (Color& col : *local)
                    col = palette[col / 2];
            } else {
                throw Error(ErrorKind::precondition_violated, "remainder component is neither 5-degenerate nor of max degree 6");
            }
            for (std::size_t i = 0; i < comp.size(); ++i)
                c[rest[comp[i]]] = (*local)[i];
        }
    }

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        Vertex v = *it;
        for (Color col : lists[v]) {
            bool clash = std::any_of(d.in(v).begin(), d.in(v).end(), [&](Vertex w) { return c[w] == col; });
            if (!clash) {
                c[v] = col;
                break;
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

ListAssignment three_smallest(const Digraph& d, const ListAssignment& lists_in)
{
    auto lists = sorted_lists(d, lists_in);
    for (Vertex v = 0; v < d.size(); ++v) {
        if (lists[v].size() < 3)
            throw Error(ErrorKind::precondition_violated, "vertex " + std::to_string(v) + " has fewer than 3 colors", {v});
        lists[v].resize(3);
    }
    return lists;
}

// The maximum-degree argument for a component whose underlying graph is K7.
Coloring color_k7(const Digraph& k7, const ListAssignment& lists)
{
    const bool equal = std::all_of(lists.begin(), lists.end(), [&](const auto& l) { return l == lists.front(); });
    if (equal) {
        const auto& pal = lists.front();
        for (Vertex v = 0; v < 7; ++v) {
            int digons = 0;
            for (Vertex w : k7.out(v))
                digons += k7.has_arc(w, v);
            if (digons > 3)
                continue;
            for (Vertex a = 0; a < 7; ++a)
                for (Vertex b = a + 1; b < 7; ++b) {
                    if (a == v || b == v || directed_triangle(k7, v, a, b))
                        continue;
                    VertexSet first{v, a, b};
                    std::sort(first.begin(), first.end());
                    VertexSet others;
                    for (Vertex w = 0; w < 7; ++w)
                        if (w != v && w != a && w != b)
                            others.push_back(w);
                    VertexPartition p{{first, {others[0], others[1]}, {others[2], others[3]}}};
                    auto c = majority3_from_odd_partition(k7, p);
                    for (Color& col : c)
                        col = pal[col - 1];
                    return c;
                }
        }
        // Every vertex lies on at least four digons, so d+ >= 4 everywhere.
        return {pal[0], pal[0], pal[1], pal[1], pal[2], pal[2], pal[2]};
    }

    // Unequal lists: pick 2-sublists used by at most two vertices each,
    // preferring few adjacent vertices on the same sublist.
    auto sublist = [&](Vertex v, int choice) {
        static constexpr std::array<std::array<int, 2>, 3> pick{{{0, 1}, {0, 2}, {1, 2}}};
        return std::vector<Color>{lists[v][pick[choice][0]], lists[v][pick[choice][1]]};
    };
    int best_cost = -1;
    std::array<int, 7> best{};
    std::array<int, 7> choice{};
    for (int code = 0; code < 2187; ++code) {
        int rest = code;
        for (int v = 6; v >= 0; --v) {
            choice[v] = rest % 3;
            rest /= 3;
        }
        std::map<std::vector<Color>, int> uses;
        bool ok = true;
        for (Vertex v = 0; v < 7 && ok; ++v)
            ok = ++uses[sublist(v, choice[v])] <= 2;
        if (!ok)
            continue;
        int cost = 0;
        for (Vertex a = 0; a < 7; ++a)
            for (Vertex b = a + 1; b < 7; ++b)
                cost += sublist(a, choice[a]) == sublist(b, choice[b]);
        if (best_cost == -1 || cost < best_cost) {
            best_cost = cost;
            best = choice;
        }
    }
    if (best_cost == -1)
        throw Error(ErrorKind::component_too_hard, "no admissible 2-sublists for K7 component");
    ListAssignment pairs(7);
    for (Vertex v = 0; v < 7; ++v)
        pairs[v] = sublist(v, best[v]);
    return list_majority2(k7, pairs);
}

} // namespace

Coloring majority3_via_pair_choice(const Digraph& d, const ListAssignment& lists_in, const ConstructLimits& limits)
{
    const auto lists = three_smallest(d, lists_in);
    std::vector<std::pair<Color, Color>> pairs;
    for (const auto& l : lists) {
        pairs.emplace_back(l[0], l[1]);
        pairs.emplace_back(l[0], l[2]);
        pairs.emplace_back(l[1], l[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    auto id = [&](Color a, Color b) {
        return static_cast<Color>(std::lower_bound(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
    };
    ListAssignment pair_lists(d.size());
    for (Vertex v = 0; v < d.size(); ++v) {
        const auto& l = lists[v];
        pair_lists[v] = {id(l[0], l[1]), id(l[0], l[2]), id(l[1], l[2])};
    }
    const auto chosen = od3_choose(d, pair_lists, limits);
    ListAssignment two(d.size());
    for (Vertex v = 0; v < d.size(); ++v)
        two[v] = {pairs[chosen[v]].first, pairs[chosen[v]].second};
    return list_majority2(d, two);
}

Coloring majority3_choose(const Digraph& d, const ListAssignment& lists_in, const ConstructLimits& limits)
{
    const auto lists = three_smallest(d, lists_in);
    if (!(d.max_out_degree() <= 4 || d.max_degree() <= 7 || underlying_graph(d).max_degree() <= 6))
        throw Error(ErrorKind::precondition_violated, "need max out-degree <= 4, max degree <= 7 or max underlying degree <= 6");

    // A vertex of out-degree 4 keeps at most one equal colour among three
    // remaining out-neighbours, hence at most two once the arc is restored.
    std::vector<Arc> removed;
    for (Vertex v = 0; v < d.size(); ++v)
        if (d.out_degree(v) == 4)
            removed.emplace_back(v, d.out(v).front());
    const Digraph reduced = remove_arcs(d, removed);

    Coloring c(d.size(), kUncolored);
    const auto u = underlying_graph(reduced);
    std::vector<Vertex> rest;
    for (const VertexSet& comp : u.components()) {
        bool k7 = u.max_degree() <= 6 && comp.size() == 7 &&
                  std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return u.degree(v) == 6; });
        if (!k7) {
            rest.insert(rest.end(), comp.begin(), comp.end());
            continue;
        }
        ListAssignment sub_lists;
        for (Vertex v : comp)
            sub_lists.push_back(lists[v]);
        const auto local = color_k7(induced_subgraph(reduced, comp).graph, sub_lists);
        for (std::size_t i = 0; i < comp.size(); ++i)
            c[comp[i]] = local[i];
    }
    std::sort(rest.begin(), rest.end());
    if (!rest.empty()) {
        const auto sub = induced_subgraph(reduced, rest);
        ListAssignment sub_lists;
        for (Vertex v : rest)
            sub_lists.push_back(lists[v]);
        const auto local = majority3_via_pair_choice(sub.graph, sub_lists, limits);
        for (std::size_t i = 0; i < rest.size(); ++i)
            c[rest[i]] = local[i];
    }
    return c;
}

// ---------------------------------------------------------------------------

Coloring alpha_majority_dichrom2(const Digraph& d, const VertexPartition& partition, int k)
{
    if (k < 2)
        throw Error(ErrorKind::param_out_of_range, "k must be at least 2");
    if (partition.parts.size() != 2 || !partition.is_partition_of(d.size()))
        throw Error(ErrorKind::bad_partition, "expected a partition of all vertices into two sorted parts");

    std::array<std::vector<Color>, 2> palettes;
    for (int i = 1; i <= k; ++i)
        palettes[0].push_back(i);
    palettes[1].push_back(1);
    for (int i = k + 1; i <= 2 * k - 1; ++i)
        palettes[1].push_back(i);

    Coloring c(d.size(), kUncolored);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& part = partition.parts[i];
        const auto inner = induced_subgraph(d, part);
        if (auto cycle = find_dicycle(inner.graph)) {
            auto witness = to_global(*cycle, inner.to_global);
            throw Error(ErrorKind::bad_partition, "part " + std::to_string(i) + " contains directed cycle " + describe(witness),
                        witness);
        }
        // Outside heads become sinks of colour 1, the colour shared by both
        // palettes; so do the part's own sinks.
        const auto closure = out_closure(d, part);
        SinkPrecoloring pre;
        for (Vertex v = 0; v < closure.graph.size(); ++v)
            if (closure.graph.out_degree(v) == 0)
                pre[v] = 1;
        const auto local = color_acyclic(closure.graph, palettes[i], pre);
        for (std::size_t j = 0; j < part.size(); ++j)
            c[part[j]] = local[j];
    }
    return c;
}

} // namespace majority
