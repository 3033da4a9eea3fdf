#pragma once

#include <cstdint>
#include <vector>

#include "hmqct/matching.hpp"

namespace hmqct {

// A public-coin d-subset of [n]: the indices whose bit values Alice
// transmits in the best-known classical protocol.
struct SubsetStrategy {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> indices;  // sorted, distinct, 1-based

  std::uint32_t d() const { return static_cast<std::uint32_t>(indices.size()); }
};

SubsetStrategy sample_subset(std::uint32_t n, std::uint32_t d, Rng& rng);

// Analytic upper bound on the best-known protocol's error at communication
// cost d: a hypergeometric average of exp(-k(k-1)/(4 beta n)), clamped to
// [0, 1/2]. Terms are evaluated in log space so large n stays finite.
double eps_bkp(std::uint64_t n, Rational beta, std::uint64_t d);

// One run of the best-known classical protocol: sample a public d-subset,
// reveal x on it, answer exactly through any covered edge of the matching,
// otherwise guess a fair coin. Returns the guessed bit.
int run_bkp(const ProblemInput& input, std::uint32_t d, Rng& rng);

// Exact average error of the protocol under the input distribution by full
// enumeration over (subset, matching); x integrates out analytically. Only
// feasible for n <= 8.
double bkp_exact_error(std::uint32_t n, Rational beta, std::uint32_t d);

// Enumerates every matching with exactly `edge_count` edges over [n]
// (ascending first-vertex canonical order). Shared by the exact oracle and
// the exhaustive protocol tests.
std::vector<BetaMatching> enumerate_matchings(std::uint32_t n,
                                              std::uint32_t edge_count);

}  // namespace hmqct
