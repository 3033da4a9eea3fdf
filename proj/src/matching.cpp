#include "hmqct/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hmqct {

namespace {

void check_edges(std::uint32_t n, const std::vector<Edge>& edges) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("BetaMatching: n must be even and >= 2");
  if (edges.empty() || edges.size() > n / 2)
    throw std::invalid_argument("BetaMatching: edge count must be in [1, n/2]");
  std::vector<bool> seen(n + 1, false);
  for (const Edge& e : edges) {
    if (e.a < 1 || e.a > n || e.b < 1 || e.b > n)
      throw std::invalid_argument("BetaMatching: vertex index outside [n]");
    if (e.a == e.b || seen[e.a] || seen[e.b])
      throw std::invalid_argument("BetaMatching: edges must be vertex-disjoint");
    seen[e.a] = seen[e.b] = true;
  }
}

}  // namespace

BetaMatching::BetaMatching(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  check_edges(n_, edges_);
}

BetaMatching BetaMatching::canonical(std::uint32_t n, std::vector<Edge> edges) {
  for (Edge& e : edges)
    if (e.a > e.b) std::swap(e.a, e.b);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.a < y.a; });
  return BetaMatching(n, std::move(edges));
}

BitString apply_matching(const BetaMatching& matching, const BitString& x) {
  if (x.size() != matching.n())
    throw std::invalid_argument("apply_matching: |x| != n");
  BitString v(matching.edge_count());
  const auto& edges = matching.edges();
  for (std::size_t l = 0; l < edges.size(); ++l)
    v.set(l, x.bit(edges[l].a - 1) ^ x.bit(edges[l].b - 1));
  return v;
}

void ProblemInput::validate() const {
  if (a != 0 && a != 1) throw std::invalid_argument("ProblemInput: a not a bit");
  if (x.size() != matching.n())
    throw std::invalid_argument("ProblemInput: |x| != n");
  if (omega.size() != matching.edge_count())
    throw std::invalid_argument("ProblemInput: |omega| != beta n");
  BitString v = apply_matching(matching, x);
  for (std::size_t l = 0; l < omega.size(); ++l)
    if ((v.bit(l) ^ omega.bit(l)) != static_cast<bool>(a))
      throw std::invalid_argument("ProblemInput: promise violated");
}

InputSampler::InputSampler(std::uint32_t n, Rational beta) : n_(n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("sample_input: n must be even and >= 2");
  if (beta.num <= 0 || 2 * beta.num > beta.den)
    throw std::invalid_argument("sample_input: beta must be in (0, 1/2]");
  if (!beta.divides_exactly(n))
    throw std::invalid_argument("sample_input: beta*n is not an integer");
  edge_count_ = beta.times_integer(n);
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), 1u);
  partner_.assign(n + 1, 0);
  out_.x.resize(n);
  out_.omega.resize(edge_count_);
  out_.matching.n_ = n;
  out_.matching.edges_.resize(edge_count_);
}

const ProblemInput& InputSampler::sample(Rng& rng) {
  out_.x.fill_random(rng);

  // Partial Fisher-Yates: the first 2*beta*n entries of a uniform random
  // permutation, taken pairwise, give a uniform beta-matching. perm_ stays
  // a permutation of [n] across calls, so no re-init is needed.
  std::uint32_t take = static_cast<std::uint32_t>(2 * edge_count_);
  for (std::uint32_t i = 0; i < take; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n_ - i));
    std::swap(perm_[i], perm_[j]);
  }

  // Canonical order by counting sort on the smaller endpoint (endpoints are
  // distinct, so one pass suffices); cheaper than comparison sort per draw.
  for (std::uint32_t l = 0; l < edge_count_; ++l) {
    std::uint32_t u = perm_[2 * l], v = perm_[2 * l + 1];
    if (u > v) std::swap(u, v);
    partner_[u] = v;
  }
  std::size_t idx = 0;
  for (std::uint32_t v = 1; v <= n_ && idx < edge_count_; ++v) {
    if (partner_[v] != 0) {
      out_.matching.edges_[idx++] = Edge{v, partner_[v]};
      partner_[v] = 0;
    }
  }

  out_.a = static_cast<int>(rng.bit());
  const auto& edges = out_.matching.edges_;
  for (std::size_t l = 0; l < edges.size(); ++l) {
    bool vl = out_.x.bit(edges[l].a - 1) ^ out_.x.bit(edges[l].b - 1);
    out_.omega.set(l, vl ^ static_cast<bool>(out_.a));
  }
  return out_;
}

ProblemInput sample_input(std::uint32_t n, Rational beta, Rng& rng) {
  InputSampler sampler(n, beta);
  return sampler.sample(rng);
}

}  // namespace hmqct
