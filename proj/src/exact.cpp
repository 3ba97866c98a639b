#include "majority/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace majority {

namespace {

void require_size(int n, int cap, const char* what)
{
    if (n > cap)
        throw Error(ErrorKind::instance_too_large,
                    std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
}

int majority_cap(int colors, const OracleLimits& limits)
{
    if (colors <= 2)
        return limits.max_vertices_two_colors;
    if (colors == 3)
        return limits.max_vertices_three_colors;
    return limits.max_vertices_many_colors;
}

// Backtracking over colour choices with the majority condition checked
// incrementally: counts[v][i] is the number of coloured out-neighbours of v
// carrying palette colour i.
class MajoritySearch {
public:
    MajoritySearch(const Digraph& d, std::vector<Color> palette, std::vector<std::vector<int>> allowed,
                   const MajorityParam& alpha, bool interchangeable)
        : d_(d),
          palette_(std::move(palette)),
          allowed_(std::move(allowed)),
          alpha_(alpha),
          interchangeable_(interchangeable),
          counts_(d.size(), std::vector<int>(palette_.size(), 0)),
          assigned_(d.size(), -1)
    {
    }

    std::optional<Coloring> run()
    {
        if (!extend(0, -1))
            return std::nullopt;
        Coloring c(d_.size());
        for (Vertex v = 0; v < d_.size(); ++v)
            c[v] = palette_[assigned_[v]];
        return c;
    }

private:
    bool admissible(Vertex u) const
    {
        return std::any_of(allowed_[u].begin(), allowed_[u].end(),
                           [&](int i) { return alpha_.allows(counts_[u][i], d_.out_degree(u)); });
    }

    bool assign(Vertex v, int i)
    {
        assigned_[v] = i;
        bool ok = true;
        for (Vertex u : d_.in(v)) {
            ++counts_[u][i];
            if (!ok)
                continue;
            if (assigned_[u] == i)
                ok = alpha_.allows(counts_[u][i], d_.out_degree(u));
            else if (assigned_[u] == -1)
                ok = admissible(u);
        }
        return ok;
    }

    void unassign(Vertex v, int i)
    {
        for (Vertex u : d_.in(v))
            --counts_[u][i];
        assigned_[v] = -1;
    }

    bool extend(Vertex v, int max_used)
    {
        if (v == d_.size())
            return true;
        for (int i : allowed_[v]) {
            if (interchangeable_ && i > max_used + 1)
                break;
            if (!alpha_.allows(counts_[v][i], d_.out_degree(v)))
                continue;
            if (assign(v, i) && extend(v + 1, std::max(max_used, i)))
                return true;
            unassign(v, i);
        }
        return false;
    }

    const Digraph& d_;
    std::vector<Color> palette_;
    std::vector<std::vector<int>> allowed_;
    MajorityParam alpha_;
    bool interchangeable_;
    std::vector<std::vector<int>> counts_;
    std::vector<int> assigned_;
};

ListAssignment normalized(const ListAssignment& lists)
{
    ListAssignment out = lists;
    for (auto& l : out) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return out;
}

} // namespace

std::optional<Coloring> exact_majority_colorable(const Digraph& d, int k, const MajorityParam& alpha,
                                                 const OracleLimits& limits)
{
    if (k < 1)
        throw Error(ErrorKind::param_out_of_range, "need at least one color");
    require_size(d.size(), majority_cap(k, limits), "exact_majority_colorable");
    std::vector<Color> palette(k);
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) {
        palette[i] = i + 1;
        all[i] = i;
    }
    return MajoritySearch(d, palette, std::vector<std::vector<int>>(d.size(), all), alpha, true).run();
}

std::optional<Coloring> exact_list_majority(const Digraph& d, const ListAssignment& lists, const MajorityParam& alpha,
                                            const OracleLimits& limits)
{
    if (static_cast<int>(lists.size()) != d.size())
        throw Error(ErrorKind::precondition_violated, "list assignment size mismatch");
    auto sorted = normalized(lists);
    std::size_t widest = 0;
    std::vector<Color> palette;
    for (const auto& l : sorted) {
        if (l.empty())
            throw Error(ErrorKind::precondition_violated, "empty color list");
        widest = std::max(widest, l.size());
        palette.insert(palette.end(), l.begin(), l.end());
    }
    require_size(d.size(), majority_cap(static_cast<int>(widest), limits), "exact_list_majority");
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<std::vector<int>> allowed(d.size());
    for (Vertex v = 0; v < d.size(); ++v)
        for (Color c : sorted[v])
            allowed[v].push_back(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    return MajoritySearch(d, palette, allowed, alpha, false).run();
}

std::optional<Coloring> brute_force_majority(const Digraph& d, int k, const MajorityParam& alpha)
{
    const int n = d.size();
    double space = std::pow(static_cast<double>(k), n);
    if (space > 5e7)
        throw Error(ErrorKind::instance_too_large, "brute force space too large");
    Coloring c(n, 1);
    for (;;) {
        if (verify_majority(d, c, alpha).empty())
            return c;
        int i = 0;
        while (i < n && c[i] == k)
            c[i++] = 1;
        if (i == n)
            return std::nullopt;
        ++c[i];
    }
}

// ---------------------------------------------------------------------------

std::optional<Coloring> exact_od3_choice(const Digraph& d, const ListAssignment& lists, const OracleLimits& limits)
{
    if (static_cast<int>(lists.size()) != d.size())
        throw Error(ErrorKind::precondition_violated, "list assignment size mismatch");
    require_size(d.size(), limits.max_vertices_od3, "exact_od3_choice");
    auto sorted = normalized(lists);
    for (const auto& l : sorted)
        if (l.empty())
            throw Error(ErrorKind::precondition_violated, "empty color list");

    const int n = d.size();
    Coloring c(n, kUncolored);
    // A new odd cycle must pass through v, so only v's colour class needs
    // re-checking.
    auto class_has_odd_cycle = [&](Color color) {
        std::vector<Vertex> members;
        for (Vertex u = 0; u < n; ++u)
            if (c[u] == color)
                members.push_back(u);
        return has_odd_dicycle(induced_subgraph(d, members).graph);
    };
    auto extend = [&](auto&& self, Vertex v) -> bool {
        if (v == n)
            return true;
        for (Color color : sorted[v]) {
            c[v] = color;
            if (!class_has_odd_cycle(color) && self(self, v + 1))
                return true;
        }
        c[v] = kUncolored;
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> enumerate_stable_sets(const Digraph& d, const OracleLimits& limits)
{
    require_size(d.size(), limits.max_vertices_stable_sets, "enumerate_stable_sets");
    const int n = d.size();
    std::vector<std::uint32_t> found;
    std::vector<int> inside(n, 0); // out-neighbours currently in S
    std::vector<char> in_s(n, 0);

    auto popular = [&](Vertex u) { return in_s[u] && 2 * inside[u] > d.out_degree(u); };

    // Adding vertices never makes a popular vertex unpopular, so a branch
    // whose prefix already holds a popular vertex is dead.
    auto dfs = [&](auto&& self, Vertex v, std::uint32_t mask) -> void {
        if (v == n) {
            found.push_back(mask);
            return;
        }
        self(self, v + 1, mask);
        in_s[v] = 1;
        for (Vertex u : d.in(v))
            ++inside[u];
        bool ok = !popular(v);
        for (Vertex u : d.in(v))
            ok = ok && !popular(u);
        if (ok)
            self(self, v + 1, mask | (std::uint32_t{1} << v));
        for (Vertex u : d.in(v))
            --inside[u];
        in_s[v] = 0;
    };
    dfs(dfs, 0, 0);

    std::vector<VertexSet> sets;
    sets.reserve(found.size());
    for (std::uint32_t mask : found) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1U)
                s.push_back(v);
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return sets;
}

FractionalOptimum exact_fractional_weight(const Digraph& d, const OracleLimits& limits)
{
    auto sets = enumerate_stable_sets(d, limits);
    sets.erase(std::remove_if(sets.begin(), sets.end(), [](const VertexSet& s) { return s.empty(); }), sets.end());

    const int n = d.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(sets.size(), 0.0));
    for (std::size_t j = 0; j < sets.size(); ++j)
        for (Vertex v : sets[j])
            rows[v][j] = 1.0;
    auto lp = solve_covering_lp(rows, std::vector<double>(n, 1.0), std::vector<double>(sets.size(), 1.0));

    FractionalOptimum result;
    result.primal_value = lp.value;
    result.dual_value = lp.dual_value;
    result.dual_weights = lp.dual;
    result.certified = lp.certified;
    result.exact_value = lp.exact_value;
    for (std::size_t j = 0; j < sets.size(); ++j)
        if (lp.primal[j] > 0.0)
            result.primal.push_back({sets[j], lp.primal[j]});
    if (lp.certified) {
        std::vector<VertexSet> chosen;
        std::vector<Rational> weights;
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (lp.exact_primal[j] > 0) {
                chosen.push_back(sets[j]);
                weights.push_back(lp.exact_primal[j]);
            }
        result.certified = verify_fractional_exact(d, chosen, weights);
    }
    return result;
}

bool verify_fractional_exact(const Digraph& d, const std::vector<VertexSet>& sets, const std::vector<Rational>& weights)
{
    if (sets.size() != weights.size())
        return false;
    std::vector<Rational> coverage(d.size(), Rational(0));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (weights[i] < 0 || !is_stable(d, sets[i]))
            return false;
        for (Vertex v : sets[i])
            coverage[v] += weights[i];
    }
    return std::all_of(coverage.begin(), coverage.end(), [](const Rational& c) { return c >= 1; });
}

// ---------------------------------------------------------------------------

void validate(const Hypergraph& h)
{
    if (h.n < 0)
        throw Error(ErrorKind::malformed_edge, "negative hypergraph order");
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        for (Vertex v : e)
            if (v < 0 || v >= h.n)
                throw Error(ErrorKind::malformed_edge, "edge " + std::to_string(i) + " has vertex out of range");
        if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2])
            throw Error(ErrorKind::malformed_edge, "edge " + std::to_string(i) + " repeats a vertex");
    }
}

std::optional<Coloring> hyp2col_exact(const Hypergraph& h, const OracleLimits& limits)
{
    validate(h);
    require_size(h.n, limits.max_vertices_hypergraph, "hyp2col_exact");
    std::vector<std::vector<std::size_t>> closing(h.n); // edges whose largest vertex is v
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        closing[*std::max_element(e.begin(), e.end())].push_back(i);
    }
    Coloring c(h.n, kUncolored);
    auto extend = [&](auto&& self, Vertex v) -> bool {
        if (v == h.n)
            return true;
        for (Color color : {1, 2}) {
            c[v] = color;
            bool ok = std::none_of(closing[v].begin(), closing[v].end(), [&](std::size_t i) {
                const auto& e = h.edges[i];
                return c[e[0]] == c[e[1]] && c[e[1]] == c[e[2]];
            });
            if (ok && self(self, v + 1))
                return true;
        }
        c[v] = kUncolored;
        return false;
    };
    if (!extend(extend, 0))
        return std::nullopt;
    return c;
}

} // namespace majority
