#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("digraph rejects loops, duplicates and out-of-range arcs")
{
    CHECK_THROWS_AS(make(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(make(2, {{0, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(make(2, {{0, 2}}), Error);
    try {
        make(2, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::malformed_edge);
    }
    const auto digon = make(2, {{0, 1}, {1, 0}});
    CHECK(digon.arc_count() == 2);
    CHECK(digon.has_arc(0, 1));
    CHECK(digon.has_arc(1, 0));
}

TEST_CASE("degree sums match the arc count")
{
    std::mt19937_64 gen(3);
    for (int t = 0; t < 50; ++t) {
        const auto d = random_digraph(9, 0.3, gen);
        std::size_t out = 0, in = 0;
        for (Vertex v = 0; v < d.size(); ++v) {
            out += d.out_degree(v);
            in += d.in_degree(v);
            for (Vertex w : d.out(v))
                CHECK(std::find(d.in(w).begin(), d.in(w).end(), v) != d.in(w).end());
        }
        CHECK(out == d.arc_count());
        CHECK(in == d.arc_count());
    }
}

TEST_CASE("strong components")
{
    auto sc = strong_components(dicycle(3));
    REQUIRE(sc.components.size() == 1);
    CHECK(sc.components[0] == VertexSet{0, 1, 2});

    sc = strong_components(make(3, {{0, 1}, {1, 2}}));
    CHECK(sc.components == std::vector<VertexSet>{{0}, {1}, {2}});

    sc = strong_components(make(3, {{0, 1}, {1, 0}, {1, 2}}));
    CHECK(sc.components == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("condensation order has arcs only from earlier to later components")
{
    std::mt19937_64 gen(7);
    for (int t = 0; t < 200; ++t) {
        const auto d = random_digraph(10, 0.15, gen);
        const auto sc = strong_components(d);
        CHECK(sc.partition().is_partition_of(d.size()));
        for (auto [u, v] : d.arcs())
            CHECK(sc.component_of[u] <= sc.component_of[v]);
    }
}

TEST_CASE("odd dicycle detection")
{
    auto w = find_odd_dicycle(dicycle(3));
    REQUIRE(w);
    CHECK(w->size() == 3);
    CHECK_FALSE(has_odd_dicycle(dicycle(4)));
    CHECK_FALSE(has_odd_dicycle(make(2, {{0, 1}, {1, 0}})));
    CHECK(has_odd_dicycle(dicycle(5)));
}

TEST_CASE("odd dicycle detection agrees with cycle enumeration")
{
    std::mt19937_64 gen(11);
    for (int t = 0; t < 1500; ++t) {
        const int n = 1 + t % 6;
        const auto d = random_digraph(n, 0.1 + 0.1 * (t % 5), gen);
        const auto w = find_odd_dicycle(d);
        CHECK(w.has_value() == odd_cycle_by_enumeration(d));
        if (w) {
            CHECK(w->size() % 2 == 1);
            CHECK(is_directed_cycle(d, *w));
        }
    }
}

TEST_CASE("odd dicycle witnesses on larger digraphs")
{
    std::mt19937_64 gen(12);
    for (int t = 0; t < 300; ++t) {
        const auto d = random_digraph(25, 0.08, gen);
        if (auto w = find_odd_dicycle(d)) {
            CHECK(w->size() % 2 == 1);
            CHECK(is_directed_cycle(d, *w));
        }
    }
}

TEST_CASE("topological order puts out-neighbours first")
{
    CHECK(topological_order(make(3, {{0, 1}, {1, 2}})) == std::vector<Vertex>{2, 1, 0});
    CHECK(topological_order(Digraph(1)) == std::vector<Vertex>{0});
    try {
        topological_order(dicycle(3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::cyclic_input);
        CHECK(is_directed_cycle(dicycle(3), e.witness()));
    }

    std::mt19937_64 gen(5);
    for (int t = 0; t < 100; ++t) {
        std::vector<Arc> arcs;
        for (auto [u, v] : random_digraph(12, 0.3, gen).arcs())
            if (u > v)
                arcs.emplace_back(u, v);
        const Digraph d(12, arcs);
        const auto order = topological_order(d);
        std::vector<int> pos(12);
        for (int i = 0; i < 12; ++i)
            pos[order[i]] = i;
        for (auto [u, v] : d.arcs())
            CHECK(pos[u] > pos[v]);
    }
}

TEST_CASE("underlying graph collapses digons")
{
    auto u = underlying_graph(make(2, {{0, 1}, {1, 0}}));
    CHECK(u.edge_count() == 1);
    u = underlying_graph(dicycle(3));
    CHECK(u.edge_count() == 3);
    CHECK(u.adjacent(2, 0));
    CHECK(underlying_graph(Digraph(4)).edge_count() == 0);
}

TEST_CASE("degeneracy")
{
    UndirectedGraph tree(5);
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
    tree.add_edge(3, 4);
    CHECK(degeneracy_order(tree).degeneracy == 1);
    CHECK(degeneracy_order(underlying_graph(complete_bidirected(7))).degeneracy == 6);

    std::vector<Arc> circ;
    for (int i = 0; i < 5; ++i)
        for (int j = 1; j < 3; ++j)
            circ.emplace_back(i, (i + j) % 5);
    CHECK(degeneracy_order(underlying_graph(Digraph(5, circ))).degeneracy == 4);
}

TEST_CASE("degeneracy order matches subset search")
{
    std::mt19937_64 gen(17);
    for (int t = 0; t < 300; ++t) {
        const auto u = underlying_graph(random_digraph(1 + t % 7, 0.3, gen));
        const auto dg = degeneracy_order(u);
        CHECK(dg.degeneracy == degeneracy_by_subsets(u));
        std::vector<int> pos(u.size());
        for (int i = 0; i < u.size(); ++i)
            pos[dg.order[i]] = i;
        for (Vertex v = 0; v < u.size(); ++v) {
            int later = 0;
            for (Vertex w : u.neighbors(v))
                later += pos[w] > pos[v];
            CHECK(later <= dg.degeneracy);
        }
    }
}

TEST_CASE("out-closure appends external heads as sinks")
{
    const auto d = make(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
    const auto cl = out_closure(d, std::vector<Vertex>{0, 1});
    CHECK(cl.to_global == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(cl.graph.arc_count() == 3);
    CHECK(cl.graph.out_degree(2) == 0);
    CHECK(cl.graph.out_degree(3) == 0);
}
