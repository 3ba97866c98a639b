#include "majority/hardness.hpp"

#include <string>

namespace majority {

namespace {

constexpr int kGadgetArcs = 30;

void add_gadget(std::vector<Arc>& arcs, const GadgetRoles& r)
{
    for (int j = 3; j < 6; ++j)
        for (int i = 0; i < 3; ++i)
            arcs.emplace_back(r[j], r[i]);
    arcs.emplace_back(r[6], r[7]);
    arcs.emplace_back(r[7], r[8]);
    arcs.emplace_back(r[8], r[6]);
    for (int k = 6; k < 9; ++k)
        for (int i = 0; i < 6; ++i)
            arcs.emplace_back(r[k], r[i]);
}

} // namespace

Digraph build_d9()
{
    std::vector<Arc> arcs;
    arcs.reserve(kGadgetArcs);
    add_gadget(arcs, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    return Digraph(9, arcs);
}

GadgetReport d9_report()
{
    const Digraph d = build_d9();
    const auto half = MajorityParam::half();
    GadgetReport report;
    for (int mask = 0; mask < 8; ++mask) {
        Coloring c(9);
        for (int i = 0; i < 3; ++i)
            c[i] = (mask >> i & 1) ? 2 : 1;
        for (int ext = 0; ext < 64 && !report.extendable[mask]; ++ext) {
            for (int j = 0; j < 6; ++j)
                c[3 + j] = (ext >> j & 1) ? 2 : 1;
            if (is_majority_coloring(d, c, half)) {
                report.extendable[mask] = true;
                report.witness[mask] = c;
            }
        }
    }
    report.matches = true;
    for (int mask = 0; mask < 8; ++mask)
        report.matches = report.matches && report.extendable[mask] == (mask != 0 && mask != 7);
    return report;
}

bool check_d9_observation()
{
    return d9_report().matches;
}

Reduction reduce_hypergraph(const Hypergraph& h)
{
    validate(h);
    Reduction r;
    std::vector<Arc> arcs;
    arcs.reserve(h.edges.size() * kGadgetArcs);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        GadgetRoles roles{};
        for (int i = 0; i < 3; ++i)
            roles[i] = h.edges[e][i];
        for (int i = 0; i < 6; ++i)
            roles[3 + i] = h.n + 6 * static_cast<int>(e) + i;
        add_gadget(arcs, roles);
        r.layout.push_back(roles);
    }
    r.digraph = Digraph(h.n + 6 * static_cast<int>(h.edges.size()), arcs);
    return r;
}

Coloring pull_back(const Coloring& c, int n)
{
    if (static_cast<int>(c.size()) < n)
        throw Error(ErrorKind::partial_coloring, "coloring shorter than the hypergraph");
    return Coloring(c.begin(), c.begin() + n);
}

Coloring lift(const Hypergraph& h, const Reduction& r, const Coloring& hyp_coloring)
{
    if (static_cast<int>(hyp_coloring.size()) != h.n)
        throw Error(ErrorKind::partial_coloring, "hypergraph coloring has the wrong size");
    Coloring c(r.digraph.size(), kUncolored);
    std::copy(hyp_coloring.begin(), hyp_coloring.end(), c.begin());
    for (const auto& roles : r.layout) {
        int ones = 0;
        for (int i = 0; i < 3; ++i)
            ones += c[roles[i]] == 1;
        const Color major = ones >= 2 ? 1 : 2;
        for (int i = 3; i < 6; ++i)
            c[roles[i]] = 3 - major;
        for (int i = 6; i < 9; ++i)
            c[roles[i]] = major;
    }
    return c;
}

bool is_proper_2coloring(const Hypergraph& h, const Coloring& c)
{
    for (const auto& e : h.edges)
        if (c[e[0]] == c[e[1]] && c[e[1]] == c[e[2]])
            return false;
    return true;
}

} // namespace majority
