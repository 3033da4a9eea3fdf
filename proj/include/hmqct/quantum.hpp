#pragma once

#include <optional>
#include <vector>

#include "hmqct/matching.hpp"

namespace hmqct {

// Single-photon state over n optical modes. All phases are +-1, so real
// amplitudes suffice; encoded states have amplitudes (-1)^{x_i}/sqrt(n).
struct ModeState {
  std::vector<double> amplitudes;

  std::size_t dimension() const { return amplitudes.size(); }
};

ModeState encode_state(const BitString& x);

// Extends a partial matching to a perfect one by greedily pairing the
// unmatched vertices in ascending order. The input edges stay first, in
// their original order, so edge indices into the original matching and
// into the completion agree.
BetaMatching complete_matching(const BetaMatching& matching);

struct IdealOutcome {
  bool conclusive = false;
  std::optional<int> bit;         // present iff conclusive
  std::optional<int> edge_index;  // index into the original matching
};

// One round of the ideal (lossless, single-copy) measurement: sample an
// edge of the completed matching with probability amp_a^2 + amp_b^2, then,
// if the edge belongs to Bob's matching, resolve the +- measurement on the
// collapsed two-mode state and decode the bit through omega.
IdealOutcome measure_ideal(const ModeState& state, const ProblemInput& input,
                           Rng& rng);

// Closed-form outcome distribution of measure_ideal for the same inputs.
struct IdealAnalysis {
  double p_conclusive = 0.0;
  double p_wrong_given_conclusive = 0.0;
  std::vector<double> edge_probs;  // over the completed matching's edges
};

IdealAnalysis analyze_ideal(const ModeState& state, const ProblemInput& input);

}  // namespace hmqct
