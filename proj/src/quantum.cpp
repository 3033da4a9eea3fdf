#include "hmqct/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace hmqct {

ModeState encode_state(const BitString& x) {
  if (x.size() < 2) throw std::invalid_argument("encode_state: need n >= 2");
  ModeState s;
  s.amplitudes.resize(x.size());
  double a = 1.0 / std::sqrt(static_cast<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    s.amplitudes[i] = x.bit(i) ? -a : a;
  return s;
}

BetaMatching complete_matching(const BetaMatching& matching) {
  std::uint32_t n = matching.n();
  if (matching.edge_count() == n / 2) return matching;
  std::vector<bool> used(n + 1, false);
  for (const Edge& e : matching.edges()) used[e.a] = used[e.b] = true;
  BetaMatching out = matching;
  out.edges_.reserve(n / 2);
  std::uint32_t prev = 0;
  for (std::uint32_t v = 1; v <= n; ++v) {
    if (used[v]) continue;
    if (prev == 0) {
      prev = v;
    } else {
      out.edges_.push_back(Edge{prev, v});
      prev = 0;
    }
  }
  return out;
}

namespace {

void check_dims(const ModeState& state, const ProblemInput& input) {
  if (state.dimension() != input.matching.n())
    throw std::invalid_argument("measure_ideal: state/input dimension mismatch");
  if (input.omega.size() != input.matching.edge_count())
    throw std::invalid_argument("measure_ideal: |omega| != |matching|");
}

// P(+ outcome) on the normalized two-mode collapse of (amp_a, amp_b).
double plus_probability(double amp_a, double amp_b) {
  double norm2 = amp_a * amp_a + amp_b * amp_b;
  double plus = amp_a + amp_b;
  return plus * plus / (2.0 * norm2);
}

}  // namespace

IdealOutcome measure_ideal(const ModeState& state, const ProblemInput& input,
                           Rng& rng) {
  check_dims(state, input);
  BetaMatching completed = complete_matching(input.matching);
  const auto& edges = completed.edges();

  // Sample the projector outcome: edge (a,b) occurs with amp_a^2 + amp_b^2.
  double u = rng.next_double();
  std::size_t pick = edges.size() - 1;
  double acc = 0.0;
  for (std::size_t l = 0; l < edges.size(); ++l) {
    double pa = state.amplitudes[edges[l].a - 1];
    double pb = state.amplitudes[edges[l].b - 1];
    acc += pa * pa + pb * pb;
    if (u < acc) {
      pick = l;
      break;
    }
  }

  IdealOutcome out;
  if (pick >= input.matching.edge_count()) return out;  // not one of Bob's edges

  const Edge& e = edges[pick];
  double p_plus =
      plus_probability(state.amplitudes[e.a - 1], state.amplitudes[e.b - 1]);
  bool v = !(rng.next_double() < p_plus);  // '+' decodes v=0, '-' decodes v=1
  out.conclusive = true;
  out.edge_index = static_cast<int>(pick);
  out.bit = static_cast<int>(v ^ input.omega.bit(pick));
  return out;
}

IdealAnalysis analyze_ideal(const ModeState& state, const ProblemInput& input) {
  check_dims(state, input);
  BetaMatching completed = complete_matching(input.matching);
  const auto& edges = completed.edges();

  IdealAnalysis an;
  an.edge_probs.resize(edges.size());
  double p_wrong = 0.0;
  for (std::size_t l = 0; l < edges.size(); ++l) {
    double pa = state.amplitudes[edges[l].a - 1];
    double pb = state.amplitudes[edges[l].b - 1];
    double p_edge = pa * pa + pb * pb;
    an.edge_probs[l] = p_edge;
    if (l < input.matching.edge_count()) {
      an.p_conclusive += p_edge;
      double p_plus = plus_probability(pa, pb);
      // wrong iff decoded bit != a
      double p_v1 = 1.0 - p_plus;
      double p_bit1 = input.omega.bit(l) ? p_plus : p_v1;
      p_wrong += p_edge * (input.a == 1 ? 1.0 - p_bit1 : p_bit1);
    }
  }
  an.p_wrong_given_conclusive =
      an.p_conclusive > 0.0 ? p_wrong / an.p_conclusive : 0.0;
  return an;
}

}  // namespace hmqct
