#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hmqct/bitstring.hpp"
#include "hmqct/rational.hpp"
#include "hmqct/rng.hpp"

namespace hmqct {

// One edge of a matching; vertex indices are 1-based in [n].
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool operator==(const Edge&) const = default;
};

// A set of beta*n vertex-disjoint edges over [n]. Canonically constructed
// matchings store each edge with a < b and edges sorted by a, so matchings
// compare by value. complete_matching appends edges without re-sorting so
// the original edge order (and hence omega indexing) is preserved.
class BetaMatching {
 public:
  // Validating constructor: keeps the given edge order.
  BetaMatching(std::uint32_t n, std::vector<Edge> edges);

  // Validates, orients each edge (a < b) and sorts edges by first vertex.
  static BetaMatching canonical(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  Rational beta() const {
    return Rational(static_cast<std::int64_t>(edges_.size()), n_);
  }

  bool operator==(const BetaMatching&) const = default;

 private:
  BetaMatching() = default;
  friend class InputSampler;
  friend BetaMatching complete_matching(const BetaMatching&);

  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
};

// One beta-partial-matching instance drawn from the input distribution:
// Alice's bits x, Bob's (matching, omega), and the promised bit a with
// omega = (matching applied to x) xor a^{beta n}.
struct ProblemInput {
  BitString x;
  BetaMatching matching;
  BitString omega;
  int a = 0;

  // Throws unless shapes agree and the promise holds.
  void validate() const;
};

// v_l = x_{i_l} xor x_{j_l} for each edge (i_l, j_l).
BitString apply_matching(const BetaMatching& matching, const BitString& x);

// Draws from the problem input distribution: x uniform, matching uniform
// over beta-matchings (random permutation truncation), a a fair coin.
// Reuses internal scratch so per-draw cost is O(beta n + n/64) after the
// first call; the returned reference is valid until the next sample().
class InputSampler {
 public:
  InputSampler(std::uint32_t n, Rational beta);

  const ProblemInput& sample(Rng& rng);

  std::uint32_t n() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }

 private:
  std::uint32_t n_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint32_t> perm_;
  std::vector<std::uint32_t> partner_;  // partner[v] = u if (v,u) sampled, v < u
  ProblemInput out_;
};

ProblemInput sample_input(std::uint32_t n, Rational beta, Rng& rng);

}  // namespace hmqct
