#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/verify.hpp"

namespace majority {

/// Inclusion probabilities: p1 for out-degree-1 ("red") vertices, p2 for
/// the rest ("blue").
struct SamplerParams {
    double p1 = 0.4594;
    double p2 = 0.4503;

    /// Throws Error(param_out_of_range) unless both lie in (0,1).
    void validate() const;
};

struct StableSample {
    VertexSet x;       // the altered random set
    VertexSet stable;  // x without its popular vertices
};

/// Random set with red-cycle and red-chain alterations, then popular
/// vertices removed. `trial` selects an independent draw under `seed`.
StableSample sample_X_4c(const Digraph& d, const SamplerParams& params, std::uint64_t seed, std::uint64_t trial = 0);

/// 1/2 - sqrt(ln N / N). Throws Error(param_out_of_range) when not positive.
double highdeg_probability(int min_degree);

/// Independent inclusion with highdeg_probability(N), popular vertices
/// removed. Throws Error(degree_too_low) if some out-degree is below N.
StableSample sample_X_highdeg(const Digraph& d, int min_degree, std::uint64_t seed, std::uint64_t trial = 0);

enum class SamplerKind { four_c, high_degree };

struct SamplerChoice {
    SamplerKind kind = SamplerKind::four_c;
    SamplerParams params;
    int min_degree = 0; // high_degree only

    StableSample draw(const Digraph& d, std::uint64_t seed, std::uint64_t trial) const;
};

struct InclusionEstimate {
    long long trials = 0;
    std::vector<long long> hits;
    std::vector<double> frequency;
    std::vector<double> standard_error; // sqrt(f(1-f)/trials)
};

/// Per-vertex frequency of "v in X and not popular in X". Trials are cut
/// into contiguous blocks, one per worker; workers <= 0 picks the hardware
/// concurrency. The result does not depend on the worker count.
InclusionEstimate estimate_nonpopular_inclusion(const Digraph& d, const SamplerChoice& sampler, long long trials,
                                                std::uint64_t seed, int workers = 0);

struct NamedBound {
    std::string name;
    double value = 0.0;
};

struct CaseBounds {
    std::array<NamedBound, 5> cases;
    double minimum = 0.0;
    std::string attained_by;
};

/// The four red-vertex case formulas and the blue bound.
CaseBounds case_lower_bounds(const SamplerParams& params = {});

struct BinomialTails {
    std::vector<long double> tail;          // tail[k] = Pr(B(k,p) > k/2), k = 0..k_max
    std::vector<long double> odd_step;      // tail[2j-1] - tail[2j+1] for j = 2.. (index j)
    std::vector<long double> odd_step_formula; // C(2j-1,j) p^j (1-p)^j (1-2p)
    long double three = 0;                  // tail at k = 3
    bool holds = false;
};

/// Exact binomial tails in extended precision. Requires 0 < p < 1/2 and
/// k_max <= 60, else Error(param_out_of_range).
BinomialTails binomial_tail_check(double p, int k_max);

struct SampledFractional {
    FractionalColoring coloring; // positive-weight sets only
    double weight = 0.0;
    bool certified = false;
    std::size_t family_size = 0; // distinct non-empty stable sets sampled
    long long samples = 0;
};

/// Samples stable sets, doubling the batch until every vertex is covered
/// (at most max_doublings times, else Error(coverage_failure)), then
/// solves the covering LP over the sampled family.
SampledFractional fractional_from_samples(const Digraph& d, const SamplerChoice& sampler, long long batch,
                                          std::uint64_t seed, int max_doublings = 8);

} // namespace majority
