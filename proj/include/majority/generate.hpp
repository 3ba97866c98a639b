#pragma once

#include <cstdint>

#include "majority/digraph.hpp"

namespace majority {

/// Arc (i,j) iff (j - i) mod n lies in 1..k-1. Needs 1 <= k <= n.
Digraph gen_circulant(int n, int k);

/// Each pair oriented by a fair coin.
Digraph gen_tournament(int n, std::uint64_t seed);

/// Union of r derangements with no repeated arc; d+ = d- = r everywhere.
/// Needs r < n (else Error(precondition_violated)); Error(generation_failed)
/// when the retry cap runs out.
Digraph gen_regular(int n, int r, std::uint64_t seed, int max_attempts = 1000);

/// Each ordered pair present independently with probability p.
Digraph gen_gnp(int n, double p, std::uint64_t seed);

} // namespace majority
