// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "majority/construct.hpp"
#include "majority/exact.hpp"
#include "majority/fractional.hpp"
#include "majority/generate.hpp"
#include "majority/hardness.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

const MajorityParam half = MajorityParam::half();

// --- 1 ---------------------------------------------------------------------

Outcome gadget_exactness()
{
    const auto report = d9_report();
    std::string pattern;
    for (bool e : report.extendable)
        pattern += e ? '1' : '0';
    return {report.matches, "extendable by mask " + pattern};
}

// --- 2 ---------------------------------------------------------------------

using EdgeSet = std::vector<std::array<Vertex, 3>>;

EdgeSet canonical(const EdgeSet& edges, int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeSet best;
    bool first = true;
    do {
        EdgeSet mapped;
        for (const auto& e : edges) {
            std::array<Vertex, 3> m{perm[e[0]], perm[e[1]], perm[e[2]]};
            std::sort(m.begin(), m.end());
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = mapped;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Outcome reduction_equivalence()
{
    int classes = 0, colorable = 0, mismatches = 0;
    for (int n = 1; n <= 5; ++n) {
        EdgeSet triples;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    triples.push_back({a, b, c});
        std::set<EdgeSet> seen;
        const int t = static_cast<int>(triples.size());
        std::function<void(int, EdgeSet&)> grow = [&](int from, EdgeSet& chosen) {
            auto canon = canonical(chosen, n);
            if (seen.insert(canon).second) {
                const Hypergraph h{n, canon};
                const bool dig = exact_majority_colorable(reduce_hypergraph(h).digraph, 2, half).has_value();
                const bool hyp = hyp2col_exact(h).has_value();
                ++classes;
                colorable += hyp;
                mismatches += dig != hyp;
            }
            if (chosen.size() == 3)
                return;
            for (int i = from; i < t; ++i) {
                chosen.push_back(triples[i]);
                grow(i + 1, chosen);
                chosen.pop_back();
            }
        };
        EdgeSet chosen;
        grow(0, chosen);
    }
    std::ostringstream s;
    s << classes << " hypergraphs up to isomorphism, " << colorable << " 2-colorable, " << mismatches
      << " mismatches";
    return {mismatches == 0, s.str()};
}

// --- 3 ---------------------------------------------------------------------

Outcome odd_cycle_free_two_coloring()
{
    std::mt19937_64 gen(20240301);
    int ok = 0, cross_checked = 0, cross_ok = 0;
    const int total = 500;
    for (int t = 0; t < total; ++t) {
        const int n = 2 + static_cast<int>(gen() % 11);
        Digraph d = random_digraph(n, 0.3, gen);
        while (auto w = find_odd_dicycle(d)) {
            const Arc arc{(*w)[0], (*w)[1]};
            d = remove_arcs(d, std::span<const Arc>(&arc, 1));
        }
        SinkPrecoloring pre;
        for (Vertex v = 0; v < n; ++v)
            if (d.out_degree(v) == 0 && gen() % 2)
                pre[v] = 1 + static_cast<int>(gen() % 2);
        const auto c = majority2_no_odd_cycles(d, pre);
        bool good = is_majority_coloring(d, c, half);
        for (auto [v, col] : pre)
            good = good && c[v] == col;
        ok += good;
        if (n <= 8) {
            ListAssignment lists(n, {1, 2});
            for (auto [v, col] : pre)
                lists[v] = {col};
            ++cross_checked;
            cross_ok += exact_list_majority(d, lists, half).has_value();
        }
    }
    std::ostringstream s;
    s << ok << "/" << total << " valid and extending the precoloring; oracle agrees on " << cross_ok << "/"
      << cross_checked << " with n <= 8";
    return {ok == total && cross_ok == cross_checked, s.str()};
}

// --- 4 ---------------------------------------------------------------------

Outcome three_list_coloring()
{
    std::mt19937_64 gen(20240302);
    int bounded_ok = 0, regular_ok = 0;
    std::string first_error;
    auto attempt = [&](const Digraph& d) {
        const int palette = 3 + static_cast<int>(gen() % 4);
        const auto lists = random_lists(d.size(), 3, palette, gen);
        try {
            const auto c = majority3_choose(d, lists);
            return is_majority_coloring(d, c, half) && within_lists(c, lists);
        } catch (const Error& e) {
            if (first_error.empty())
                first_error = e.what();
            return false;
        }
    };
    for (int t = 0; t < 500; ++t)
        bounded_ok += attempt(random_bounded_out(2 + static_cast<int>(gen() % 29), 4, gen));
    for (int t = 0; t < 200; ++t)
        regular_ok += attempt(gen_regular(4 + static_cast<int>(gen() % 27), 3, gen()));
    std::ostringstream s;
    s << bounded_ok << "/500 max out-degree 4, " << regular_ok << "/200 3-regular";
    if (!first_error.empty())
        s << "; first error: " << first_error;
    return {bounded_ok == 500 && regular_ok == 200, s.str()};
}

// --- 5 ---------------------------------------------------------------------

Outcome fractional_constants()
{
    const auto b = case_lower_bounds();
    std::ostringstream s;
    s.precision(7);
    s << "min " << b.minimum << " (" << b.attained_by << "), reciprocal " << 1 / b.minimum;
    return {std::abs(b.minimum - 0.252513) <= 1e-6 && 1 / b.minimum < 3.9602, s.str()};
}

// --- 6 ---------------------------------------------------------------------

Outcome binomial_proposition()
{
    const auto t = binomial_tail_check(0.4594, 41);
    long double worst = 0;
    int at = 0;
    for (int k = 0; k <= 41; ++k)
        if (k != 1 && t.tail[k] > worst) {
            worst = t.tail[k];
            at = k;
        }
    std::ostringstream s;
    s.precision(9);
    s << "k=3 value " << static_cast<double>(t.three) << ", largest k != 1 tail at k=" << at;
    return {t.holds && at == 3 && std::abs(static_cast<double>(t.three) - 0.439234) <= 1e-6, s.str()};
}

// --- 7 ---------------------------------------------------------------------

// 25 out-degree-1 vertices in triangles, digons, longer cycles and chains,
// plus 25 vertices of assorted other out-degrees.
Digraph mixed_test_digraph()
{
    std::vector<Arc> a{{0, 1},  {1, 2},   {2, 0},             // triangle
                       {3, 4},  {4, 3},                       // digon
                       {5, 6},  {6, 7},   {7, 8},   {8, 9}, {9, 5}, // 5-cycle
                       {10, 11}, {11, 12}, {12, 13}, {13, 25},  // chain into a blue vertex
                       {14, 15}, {15, 26},                      // short chain
                       {16, 27}, {17, 0}, {18, 10}, {19, 3}, {20, 21}, {21, 22}, {22, 20}, {23, 28}, {24, 14}};
    std::mt19937_64 gen(7);
    const std::vector<int> degrees{0, 2, 3, 3, 3, 4, 5, 6, 8, 2, 3, 3, 0, 3, 2, 5, 3, 4, 3, 7, 3, 2, 3, 9, 3};
    for (int i = 0; i < 25; ++i) {
        const Vertex v = 25 + i;
        std::vector<Vertex> pool;
        for (Vertex w = 0; w < 50; ++w)
            if (w != v && (i % 2 == 0 ? w < 25 : true))
                pool.push_back(w);
        std::shuffle(pool.begin(), pool.end(), gen);
        for (int j = 0; j < degrees[i]; ++j)
            a.emplace_back(v, pool[j]);
    }
    return Digraph(50, a);
}

Outcome sampler_soundness()
{
    const auto d = mixed_test_digraph();
    const long long trials = 100000;
    long long stable = 0;
    std::vector<long long> hits(d.size(), 0);
    for (long long t = 0; t < trials; ++t) {
        const auto s = sample_X_4c(d, {}, 2024, static_cast<std::uint64_t>(t));
        stable += is_stable(d, s.stable);
        for (Vertex v : s.stable)
            ++hits[v];
    }
    int below = 0;
    double lowest = 1, lowest_margin = 1;
    for (Vertex v = 0; v < d.size(); ++v) {
        const double f = static_cast<double>(hits[v]) / trials;
        const double se = std::sqrt(f * (1 - f) / trials);
        below += f < 0.252513 - 3 * se;
        lowest = std::min(lowest, f);
        lowest_margin = std::min(lowest_margin, (f - 0.252513) / se);
    }
    int red = 0;
    for (Vertex v = 0; v < d.size(); ++v)
        red += d.out_degree(v) == 1;
    std::ostringstream s;
    s << stable << "/" << trials << " stable; " << red << " red vertices; lowest frequency " << lowest
      << " (" << lowest_margin << " standard errors from 0.252513); " << below << " vertices below bound";
    return {stable == trials && below == 0, s.str()};
}

// --- 8 ---------------------------------------------------------------------

Outcome exact_lp()
{
    struct Case {
        const char* name;
        Digraph d;
        double expected;
    };
    const std::vector<Case> cases{{"C3", dicycle(3), 3.0}, {"K1", Digraph(1), 1.0}, {"C4", dicycle(4), 2.0}};
    bool ok = true;
    std::ostringstream s;
    for (const auto& c : cases) {
        const auto opt = exact_fractional_weight(c.d);
        ok = ok && std::abs(opt.primal_value - c.expected) <= 1e-7 &&
             std::abs(opt.primal_value - opt.dual_value) <= 1e-7 && verify_fractional(c.d, opt.primal).ok;
        s << c.name << "=" << opt.primal_value << " (dual " << opt.dual_value << ") ";
    }
    return {ok, s.str()};
}

// --- 9 ---------------------------------------------------------------------

Outcome alpha_tightness()
{
    bool ok = true;
    std::ostringstream s;
    for (int k = 2; k <= 4; ++k) {
        const auto d = gen_circulant(2 * k - 1, k);
        VertexPartition p{std::vector<VertexSet>(2)};
        for (Vertex v = 0; v < 2 * k - 1; ++v)
            p.parts[v < k ? 0 : 1].push_back(v);
        const auto c = alpha_majority_dichrom2(d, p, k);
        const std::set<Color> distinct(c.begin(), c.end());
        const bool valid = is_majority_coloring(d, c, MajorityParam::one_over(k));
        const bool all_distinct = static_cast<int>(distinct.size()) == 2 * k - 1;
        ok = ok && valid && all_distinct;
        s << "k=" << k << (valid && all_distinct ? " distinct" : " FAILED");
        if (k <= 3) {
            const bool fewer = exact_majority_colorable(d, 2 * k - 2, MajorityParam::one_over(k)).has_value();
            ok = ok && !fewer;
            s << (fewer ? ", fewer colors possible" : ", no " + std::to_string(2 * k - 2) + "-coloring");
        }
        s << "; ";
    }
    return {ok, s.str()};
}

// --- 10 --------------------------------------------------------------------

Outcome high_degree_sampler()
{
    const auto d = complete_bidirected(200);
    const int N = 199;
    const double p = highdeg_probability(N);
    const double q = 1.0 / (static_cast<double>(N) * N);
    const long long trials = 100000;
    long long stable = 0;
    std::vector<long long> hits(d.size(), 0);
    for (long long t = 0; t < trials; ++t) {
        const auto s = sample_X_highdeg(d, N, 2025, static_cast<std::uint64_t>(t));
        stable += is_stable(d, s.stable);
        for (Vertex v : s.stable)
            ++hits[v];
    }
    int below = 0;
    double lowest = 1, lowest_margin = 1e9;
    for (Vertex v = 0; v < d.size(); ++v) {
        const double f = static_cast<double>(hits[v]) / trials;
        const double se = std::sqrt(f * (1 - f) / trials);
        below += f < p - q - 3 * se;
        lowest = std::min(lowest, f);
        lowest_margin = std::min(lowest_margin, (f - (p - q)) / se);
    }
    std::ostringstream s;
    s.precision(6);
    s << "p=" << p << " q=" << q << "; " << stable << "/" << trials << " stable; lowest frequency " << lowest << " ("
      << lowest_margin << " standard errors from p-q); " << below << " vertices below bound";
    return {stable == trials && below == 0, s.str()};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "gadget exactness", 1, gadget_exactness},
        {2, "reduction equivalence", 300, reduction_equivalence},
        {3, "odd-cycle-free 2-coloring", 0, odd_cycle_free_two_coloring},
        {4, "3-list majority coloring", 0, three_list_coloring},
        {5, "fractional constants", 1, fractional_constants},
        {6, "binomial proposition", 1, binomial_proposition},
        {7, "sampler soundness", 120, sampler_soundness},
        {8, "exact LP", 0, exact_lp},
        {9, "alpha-majority tightness", 60, alpha_tightness},
        {10, "high-degree sampler", 0, high_degree_sampler},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += "; over time budget";
        }
        failed += !o.pass;
        std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
