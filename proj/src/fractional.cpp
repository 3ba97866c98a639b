#include "majority/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <thread>

#include "majority/lp.hpp"
#include "majority/rng.hpp"

namespace majority {

namespace {

enum Stream : std::uint64_t { indicator = 0, cycle_victim = 1 };

VertexSet strip_popular(const Digraph& d, const std::vector<char>& in_x, VertexSet& x)
{
    x.clear();
    for (Vertex v = 0; v < d.size(); ++v)
        if (in_x[v])
            x.push_back(v);
    VertexSet stable;
    for (Vertex v : x)
        if (!is_popular(d, in_x, v))
            stable.push_back(v);
    return stable;
}

} // namespace

void SamplerParams::validate() const
{
    if (!(p1 > 0 && p1 < 1 && p2 > 0 && p2 < 1))
        throw Error(ErrorKind::param_out_of_range, "sampler probabilities must lie in (0,1)");
}

StableSample sample_X_4c(const Digraph& d, const SamplerParams& params, std::uint64_t seed, std::uint64_t trial)
{
    params.validate();
    const CounterRng rng(seed);
    const int n = d.size();
    std::vector<char> in_x(n, 0);
    std::vector<char> red(n, 0); // red and indicated, still undecided
    for (Vertex v = 0; v < n; ++v) {
        const bool is_red = d.out_degree(v) == 1;
        if (rng.uniform(trial, indicator, v) >= (is_red ? params.p1 : params.p2))
            continue;
        if (is_red)
            red[v] = 1;
        else
            in_x[v] = 1;
    }
    auto next = [&](Vertex v) { return d.out(v).front(); };

    // Indicated red vertices form a functional graph; its cycles are
    // disjoint. Each loses one uniformly chosen vertex.
    std::vector<VertexSet> cycles;
    std::vector<char> state(n, 0); // 0 new, 1 on current path, 2 done
    for (Vertex s = 0; s < n; ++s) {
        if (!red[s] || state[s])
            continue;
        std::vector<Vertex> path;
        Vertex v = s;
        while (red[v] && state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = next(v);
        }
        if (red[v] && state[v] == 1) {
            VertexSet cycle(std::find(path.begin(), path.end(), v), path.end());
            std::sort(cycle.begin(), cycle.end());
            cycles.push_back(std::move(cycle));
        }
        for (Vertex p : path)
            state[p] = 2;
    }
    std::sort(cycles.begin(), cycles.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& cycle = cycles[i];
        auto pick = static_cast<std::size_t>(rng.uniform(trial, cycle_victim, i) * static_cast<double>(cycle.size()));
        red[cycle[std::min(pick, cycle.size() - 1)]] = 0;
    }

    // Heads before tails: a red vertex joins X iff its out-neighbour did not.
    std::vector<std::vector<Vertex>> waiting(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (!red[v])
            continue;
        if (red[next(v)])
            waiting[next(v)].push_back(v);
        else
            ready.push(v);
    }
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        in_x[v] = !in_x[next(v)];
        for (Vertex u : waiting[v])
            ready.push(u);
    }

    StableSample out;
    out.stable = strip_popular(d, in_x, out.x);
    return out;
}

double highdeg_probability(int min_degree)
{
    const double p = min_degree > 1 ? 0.5 - std::sqrt(std::log(min_degree) / min_degree) : 0.0;
    if (!(p > 0))
        throw Error(ErrorKind::param_out_of_range,
                    "N = " + std::to_string(min_degree) + " gives a non-positive inclusion probability");
    return p;
}

StableSample sample_X_highdeg(const Digraph& d, int min_degree, std::uint64_t seed, std::uint64_t trial)
{
    const double p = highdeg_probability(min_degree);
    if (d.size() > 0 && d.min_out_degree() < min_degree)
        throw Error(ErrorKind::degree_too_low, "minimum out-degree " + std::to_string(d.min_out_degree()) +
                                                   " is below N = " + std::to_string(min_degree));
    const CounterRng rng(seed);
    std::vector<char> in_x(d.size(), 0);
    for (Vertex v = 0; v < d.size(); ++v)
        in_x[v] = rng.uniform(trial, indicator, v) < p;
    StableSample out;
    out.stable = strip_popular(d, in_x, out.x);
    return out;
}

StableSample SamplerChoice::draw(const Digraph& d, std::uint64_t seed, std::uint64_t trial) const
{
    if (kind == SamplerKind::four_c)
        return sample_X_4c(d, params, seed, trial);
    return sample_X_highdeg(d, min_degree, seed, trial);
}

InclusionEstimate estimate_nonpopular_inclusion(const Digraph& d, const SamplerChoice& sampler, long long trials,
                                                std::uint64_t seed, int workers)
{
    if (trials < 1)
        throw Error(ErrorKind::param_out_of_range, "need at least one trial");
    // Fail early, on the calling thread, for bad parameters.
    sampler.draw(Digraph(0), seed, 0);
    if (sampler.kind == SamplerKind::high_degree && d.size() > 0 && d.min_out_degree() < sampler.min_degree)
        sampler.draw(d, seed, 0);

    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<long long>(workers, trials));
    const int n = d.size();
    std::vector<std::vector<long long>> counts(workers, std::vector<long long>(n, 0));
    auto run = [&](int w) {
        const long long begin = trials * w / workers;
        const long long end = trials * (w + 1) / workers;
        for (long long t = begin; t < end; ++t)
            for (Vertex v : sampler.draw(d, seed, static_cast<std::uint64_t>(t)).stable)
                ++counts[w][v];
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool)
        t.join();

    InclusionEstimate est;
    est.trials = trials;
    est.hits.assign(n, 0);
    for (const auto& c : counts)
        for (Vertex v = 0; v < n; ++v)
            est.hits[v] += c[v];
    for (Vertex v = 0; v < n; ++v) {
        const double f = static_cast<double>(est.hits[v]) / static_cast<double>(trials);
        est.frequency.push_back(f);
        est.standard_error.push_back(std::sqrt(f * (1 - f) / static_cast<double>(trials)));
    }
    return est;
}

CaseBounds case_lower_bounds(const SamplerParams& params)
{
    const double p1 = params.p1;
    const double p2 = params.p2;
    CaseBounds b;
    b.cases = {{
        {"red_to_blue", p1 * (1 - p2)},
        {"red_to_red_to_blue", p1 * (1 - p1) + p1 * p1 * p2},
        {"red_path", p1 * (1 - p1) + p1 * p1 * p1 * (1 - p1)},
        {"red_triangle", p1 * (1 - p1) + p1 * p1 * p1 / 3},
        {"blue", p2 * (1 - 3 * p1 * p1 + 2 * p1 * p1 * p1)},
    }};
    auto lowest = std::min_element(b.cases.begin(), b.cases.end(),
                                   [](const NamedBound& x, const NamedBound& y) { return x.value < y.value; });
    b.minimum = lowest->value;
    b.attained_by = lowest->name;
    return b;
}

BinomialTails binomial_tail_check(double p_in, int k_max)
{
    if (!(p_in > 0 && p_in < 0.5))
        throw Error(ErrorKind::param_out_of_range, "p must lie in (0, 1/2)");
    if (k_max < 0 || k_max > 60)
        throw Error(ErrorKind::param_out_of_range, "k_max must lie in [0, 60]");
    const long double p = p_in;
    const long double q = 1 - p;
    auto choose = [](int k, int j) {
        unsigned long long c = 1;
        for (int i = 1; i <= j; ++i)
            c = c * static_cast<unsigned long long>(k - j + i) / static_cast<unsigned long long>(i);
        return static_cast<long double>(c);
    };
    auto tail = [&](int k) {
        long double s = 0;
        for (int j = k / 2 + 1; j <= k; ++j)
            s += choose(k, j) * std::pow(p, static_cast<long double>(j)) * std::pow(q, static_cast<long double>(k - j));
        return s;
    };

    BinomialTails t;
    for (int k = 0; k <= k_max; ++k)
        t.tail.push_back(tail(k));
    t.three = tail(3);
    bool ok = true;
    for (int k = 0; k <= k_max; ++k)
        if (k != 1)
            ok = ok && t.tail[k] <= t.three;
    t.odd_step.assign(2, 0);
    t.odd_step_formula.assign(2, 0);
    for (int j = 2; 2 * j + 1 <= k_max; ++j) {
        const long double step = t.tail[2 * j - 1] - t.tail[2 * j + 1];
        const long double formula = choose(2 * j - 1, j) * std::pow(p * q, static_cast<long double>(j)) * (1 - 2 * p);
        t.odd_step.push_back(step);
        t.odd_step_formula.push_back(formula);
        ok = ok && step > 0 && std::fabs(step - formula) <= 1e-12L * std::max(formula, 1e-300L) + 1e-18L;
    }
    t.holds = ok;
    return t;
}

SampledFractional fractional_from_samples(const Digraph& d, const SamplerChoice& sampler, long long batch,
                                          std::uint64_t seed, int max_doublings)
{
    if (batch < 1)
        throw Error(ErrorKind::param_out_of_range, "batch must be at least 1");
    const int n = d.size();
    SampledFractional out;
    if (n == 0)
        return out;

    std::set<VertexSet> family;
    std::vector<char> covered(n, 0);
    long long drawn = 0;
    long long target = batch;
    for (int round = 0;; ++round) {
        for (; drawn < target; ++drawn) {
            auto s = sampler.draw(d, seed, static_cast<std::uint64_t>(drawn)).stable;
            if (s.empty())
                continue;
            for (Vertex v : s)
                covered[v] = 1;
            family.insert(std::move(s));
        }
        auto gap = std::find(covered.begin(), covered.end(), 0);
        if (gap == covered.end())
            break;
        if (round == max_doublings)
            throw Error(ErrorKind::coverage_failure,
                        "vertex " + std::to_string(gap - covered.begin()) + " uncovered after " + std::to_string(drawn) +
                            " samples",
                        {static_cast<Vertex>(gap - covered.begin())});
        target *= 2;
    }

    const std::vector<VertexSet> sets(family.begin(), family.end());
    std::vector<std::vector<double>> rows(n, std::vector<double>(sets.size(), 0.0));
    for (std::size_t j = 0; j < sets.size(); ++j)
        for (Vertex v : sets[j])
            rows[v][j] = 1.0;
    const auto sol = solve_covering_lp(rows, std::vector<double>(n, 1.0), std::vector<double>(sets.size(), 1.0));
    for (std::size_t j = 0; j < sets.size(); ++j)
        if (sol.primal[j] > 0)
            out.coloring.push_back({sets[j], sol.primal[j]});
    out.weight = total_weight(out.coloring);
    out.certified = sol.certified;
    out.family_size = sets.size();
    out.samples = drawn;
    return out;
}

} // namespace majority
