#include "majority/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace majority {

Digraph gen_circulant(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw Error(ErrorKind::param_out_of_range, "circulant needs 1 <= k <= n");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < k; ++j)
            arcs.emplace_back(i, (i + j) % n);
    return Digraph(n, arcs);
}

Digraph gen_tournament(int n, std::uint64_t seed)
{
    if (n < 0)
        throw Error(ErrorKind::param_out_of_range, "negative vertex count");
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arcs.push_back(coin(gen) ? Arc{i, j} : Arc{j, i});
    return Digraph(n, arcs);
}

Digraph gen_regular(int n, int r, std::uint64_t seed, int max_attempts)
{
    if (n < 1 || r < 0)
        throw Error(ErrorKind::param_out_of_range, "regular digraph needs n >= 1 and r >= 0");
    if (r >= n)
        throw Error(ErrorKind::precondition_violated,
                    "r = " + std::to_string(r) + " must be smaller than n = " + std::to_string(n));
    std::mt19937_64 gen(seed);
    std::vector<int> perm(n);
    // Each layer is redrawn until it is a derangement avoiding earlier
    // arcs; a layer that keeps failing restarts the whole attempt.
    int draws = 0;
    const int draw_cap = max_attempts * std::max(1, r) * 100;
    for (int attempt = 0; attempt < max_attempts && draws < draw_cap; ++attempt) {
        std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
        std::vector<Arc> arcs;
        int layer = 0;
        for (int tries = 0; layer < r && tries < 200 && draws < draw_cap; ++tries, ++draws) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), gen);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                ok = perm[i] != i && !used[static_cast<std::size_t>(i) * n + perm[i]];
            if (!ok)
                continue;
            for (int i = 0; i < n; ++i) {
                used[static_cast<std::size_t>(i) * n + perm[i]] = 1;
                arcs.emplace_back(i, perm[i]);
            }
            ++layer;
            tries = -1;
        }
        if (layer == r)
            return Digraph(n, arcs);
    }
    throw Error(ErrorKind::generation_failed,
                "no " + std::to_string(r) + "-regular digraph on " + std::to_string(n) + " vertices after " +
                    std::to_string(max_attempts) + " attempts");
}

Digraph gen_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 0 || !(p >= 0 && p <= 1))
        throw Error(ErrorKind::param_out_of_range, "gnp needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(gen))
                arcs.emplace_back(i, j);
    return Digraph(n, arcs);
}

} // namespace majority
