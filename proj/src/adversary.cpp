#include "hmqct/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hmqct/math_util.hpp"

namespace hmqct {

SubsetStrategy sample_subset(std::uint32_t n, std::uint32_t d, Rng& rng) {
  if (d > n) throw std::invalid_argument("sample_subset: d > n");
  SubsetStrategy s;
  s.n = n;
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);
  for (std::uint32_t i = 0; i < d; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  s.indices.assign(pool.begin(), pool.begin() + d);
  std::sort(s.indices.begin(), s.indices.end());
  return s;
}

double eps_bkp(std::uint64_t n, Rational beta, std::uint64_t d) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("eps_bkp: n must be even and >= 2");
  if (!beta.divides_exactly(n))
    throw std::domain_error("eps_bkp: beta*n not an integer");
  if (d > n) throw std::domain_error("eps_bkp: d > n");

  std::uint64_t bn = beta.times_integer(n);
  std::uint64_t matched = 2 * bn;  // vertices covered by the matching
  double log_all = log_choose(n, d);
  double inv4bn = 1.0 / (4.0 * static_cast<double>(bn));

  double sum = 0.0;
  std::uint64_t k_lo = d > n - matched ? d - (n - matched) : 0;
  std::uint64_t k_hi = std::min(d, matched);
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    double log_pmf =
        log_choose(matched, k) + log_choose(n - matched, d - k) - log_all;
    double kk = static_cast<double>(k);
    sum += std::exp(log_pmf - kk * (kk - 1.0) * inv4bn);
  }
  return std::clamp(sum / 2.0, 0.0, 0.5);
}

int run_bkp(const ProblemInput& input, std::uint32_t d, Rng& rng) {
  std::uint32_t n = input.matching.n();
  if (d > n) throw std::invalid_argument("run_bkp: d > n");
  SubsetStrategy s = sample_subset(n, d, rng);

  std::vector<bool> revealed(n + 1, false);
  for (auto i : s.indices) revealed[i] = true;

  const auto& edges = input.matching.edges();
  for (std::size_t l = 0; l < edges.size(); ++l) {
    if (revealed[edges[l].a] && revealed[edges[l].b]) {
      bool vl = input.x.bit(edges[l].a - 1) ^ input.x.bit(edges[l].b - 1);
      return static_cast<int>(vl ^ input.omega.bit(l));
    }
  }
  return static_cast<int>(rng.bit());
}

std::vector<BetaMatching> enumerate_matchings(std::uint32_t n,
                                              std::uint32_t edge_count) {
  if (n < 2 || n % 2 != 0 || edge_count == 0 || edge_count > n / 2)
    throw std::invalid_argument("enumerate_matchings: bad (n, edge_count)");
  std::vector<BetaMatching> out;
  std::vector<Edge> current;
  std::vector<bool> used(n + 1, false);

  // Recurse on the smallest unused vertex: either skip it or pair it with
  // any larger unused vertex. Edges come out in canonical order.
  auto rec = [&](auto&& self, std::uint32_t v) -> void {
    if (current.size() == edge_count) {
      out.emplace_back(n, current);
      return;
    }
    std::uint32_t remaining = edge_count - static_cast<std::uint32_t>(current.size());
    if (v > n || n - v + 1 < 2 * remaining) return;
    if (used[v]) {
      self(self, v + 1);
      return;
    }
    for (std::uint32_t w = v + 1; w <= n; ++w) {
      if (used[w]) continue;
      used[v] = used[w] = true;
      current.push_back(Edge{v, w});
      self(self, v + 1);
      current.pop_back();
      used[v] = used[w] = false;
    }
    self(self, v + 1);  // leave v unmatched
  };
  rec(rec, 1);
  return out;
}

double bkp_exact_error(std::uint32_t n, Rational beta, std::uint32_t d) {
  if (n > 8) throw std::invalid_argument("bkp_exact_error: n > 8 not enumerable");
  if (d > n) throw std::invalid_argument("bkp_exact_error: d > n");
  std::uint32_t bn = static_cast<std::uint32_t>(beta.times_integer(n));
  if (d == 0) return 0.5;

  auto matchings = enumerate_matchings(n, bn);

  // Enumerate d-subsets as sorted index lists.
  std::vector<std::uint32_t> subset(d);
  std::uint64_t uncovered_pairs = 0, total_pairs = 0;
  std::vector<bool> in_subset(n + 1, false);
  auto rec = [&](auto&& self, std::uint32_t start, std::uint32_t depth) -> void {
    if (depth == d) {
      for (const auto& m : matchings) {
        ++total_pairs;
        bool covered = false;
        for (const Edge& e : m.edges())
          if (in_subset[e.a] && in_subset[e.b]) {
            covered = true;
            break;
          }
        if (!covered) ++uncovered_pairs;
      }
      return;
    }
    for (std::uint32_t v = start; v + (d - depth) <= n + 1; ++v) {
      in_subset[v] = true;
      self(self, v + 1, depth + 1);
      in_subset[v] = false;
    }
  };
  rec(rec, 1, 0);

  // Covered pairs answer exactly; uncovered ones err with probability 1/2
  // for either value of a, independently of x.
  return 0.5 * static_cast<double>(uncovered_pairs) /
         static_cast<double>(total_pairs);
}

}  // namespace hmqct
