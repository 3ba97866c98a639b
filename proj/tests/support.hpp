#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/verify.hpp"

namespace testing {

using namespace majority;

inline Digraph make(int n, std::initializer_list<Arc> arcs)
{
    std::vector<Arc> a(arcs);
    return Digraph(n, a);
}

inline Digraph dicycle(int n)
{
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i)
        a.emplace_back(i, (i + 1) % n);
    return Digraph(n, a);
}

inline Digraph complete_bidirected(int n)
{
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                a.emplace_back(i, j);
    return Digraph(n, a);
}

inline Digraph random_digraph(int n, double p, std::mt19937_64& gen)
{
    std::bernoulli_distribution coin(p);
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(gen))
                a.emplace_back(i, j);
    return Digraph(n, a);
}

/// Random digraph whose out-degrees never exceed max_out.
inline Digraph random_bounded_out(int n, int max_out, std::mt19937_64& gen)
{
    std::vector<Arc> a;
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
        others.clear();
        for (int w = 0; w < n; ++w)
            if (w != v)
                others.push_back(w);
        std::shuffle(others.begin(), others.end(), gen);
        int deg = std::uniform_int_distribution<int>(0, std::min(max_out, n - 1))(gen);
        for (int i = 0; i < deg; ++i)
            a.emplace_back(v, others[i]);
    }
    return Digraph(n, a);
}

/// Every simple directed cycle, each reported once from its smallest vertex.
inline void for_each_simple_cycle(const Digraph& d, const std::function<void(const std::vector<Vertex>&)>& visit)
{
    const int n = d.size();
    std::vector<Vertex> path;
    std::vector<char> on(n, 0);
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
        for (Vertex w : d.out(v)) {
            if (w == start)
                visit(path);
            else if (w > start && !on[w]) {
                on[w] = 1;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                on[w] = 0;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        on[s] = 1;
        dfs(s, s);
        on[s] = 0;
    }
}

inline bool odd_cycle_by_enumeration(const Digraph& d)
{
    bool found = false;
    for_each_simple_cycle(d, [&](const std::vector<Vertex>& c) { found = found || c.size() % 2 == 1; });
    return found;
}

inline bool is_directed_cycle(const Digraph& d, const std::vector<Vertex>& c)
{
    if (c.empty())
        return false;
    std::vector<Vertex> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!d.has_arc(c[i], c[(i + 1) % c.size()]))
            return false;
    return true;
}

/// Largest minimum degree over all induced subgraphs.
inline int degeneracy_by_subsets(const UndirectedGraph& g)
{
    const int n = g.size();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int low = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1))
                continue;
            int deg = 0;
            for (Vertex w : g.neighbors(v))
                deg += mask >> w & 1;
            low = std::min(low, deg);
        }
        best = std::max(best, low);
    }
    return best;
}

/// No colour class of `choice` induces an odd directed cycle.
inline bool no_monochromatic_odd_cycle(const Digraph& d, const Coloring& choice)
{
    std::vector<Color> colors(choice);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (Color c : colors) {
        std::vector<Vertex> cls;
        for (Vertex v = 0; v < d.size(); ++v)
            if (choice[v] == c)
                cls.push_back(v);
        if (has_odd_dicycle(induced_subgraph(d, cls).graph))
            return false;
    }
    return true;
}

inline std::vector<std::vector<Color>> random_lists(int n, int size, int palette, std::mt19937_64& gen)
{
    std::vector<Color> all(palette);
    for (int i = 0; i < palette; ++i)
        all[i] = i + 1;
    std::vector<std::vector<Color>> lists(n);
    for (auto& l : lists) {
        std::shuffle(all.begin(), all.end(), gen);
        l.assign(all.begin(), all.begin() + size);
        std::sort(l.begin(), l.end());
    }
    return lists;
}

inline bool within_lists(const Coloring& c, const std::vector<std::vector<Color>>& lists)
{
    for (std::size_t v = 0; v < c.size(); ++v)
        if (std::find(lists[v].begin(), lists[v].end(), c[v]) == lists[v].end())
            return false;
    return true;
}

} // namespace testing
