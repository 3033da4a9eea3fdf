#include "hmqct/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hmqct/adversary.hpp"
#include "hmqct/math_util.hpp"

namespace hmqct {

DcCoefficients dc_lower_coefficients(double eps, Rational beta) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::domain_error("dc_lower_coefficients: eps outside (0, 1/2)");
  if (beta.num <= 0 || 4 * beta.num > beta.den)
    throw std::domain_error("dc_lower_coefficients: beta outside (0, 1/4]");
  double gap = 0.5 - eps;
  DcCoefficients c;
  c.k = 4.0 * kGammaDC / (25.0 * std::sqrt(beta.value())) * gap * gap;
  c.d = 2.0 * std::log2(gap) + 2.0 * (1.0 - std::log2(5.0));
  return c;
}

bool check_gamma_inequalities(double eps1, int c, Rational beta,
                              std::uint64_t n, double gamma) {
  if (!(eps1 > 0.0 && eps1 < 0.5))
    throw std::domain_error("check_gamma_inequalities: eps1 outside (0, 1/2)");
  if (c < 1) throw std::domain_error("check_gamma_inequalities: c < 1");
  double lhs = eps1 * eps1 / 2.0;

  double sum = 0.0;
  for (int k = 2; k <= 4 * c - 2; k += 2)
    sum += std::pow(64.0 * M_E * gamma * gamma * eps1 * eps1 / k, k / 2.0);
  if (lhs < sum) return false;

  double base = 8.0 * std::sqrt(2.0) * M_E * gamma * eps1 *
                std::sqrt(beta.value() / static_cast<double>(n));
  return lhs >= std::pow(base, 2.0 * c);
}

double min_copies_from_holevo(double ic_bits, std::uint64_t n) {
  if (n < 2) throw std::domain_error("min_copies_from_holevo: n < 2");
  if (ic_bits < 0.0)
    throw std::domain_error("min_copies_from_holevo: negative bits");
  return ic_bits / static_cast<double>(ceil_log2(n));
}

double ic_lower_bound(double eps, double delta2, std::uint64_t n,
                      Rational beta) {
  if (!(eps > 0.0) || !(delta2 > 0.0) || !(eps + delta2 < 0.5))
    throw std::domain_error("ic_lower_bound: need 0 < eps, delta2, eps+delta2 < 1/2");
  DcCoefficients c = dc_lower_coefficients(eps + delta2, beta);
  double dc = c.k * std::sqrt(static_cast<double>(n)) + c.d;
  return std::max(0.0, delta2 / 2.0 * dc - 6.0);
}

namespace {

GuessingBound finish(GuessingBound b) {
  b.p_guess = std::min(1.0, b.p_guess_raw);
  b.h_min = -std::log2(b.p_guess);
  return b;
}

}  // namespace

GuessingBound pguess_bound_lower(std::uint64_t n, std::uint64_t m,
                                 Rational beta, double delta) {
  if (n < 4) throw std::domain_error("pguess_bound_lower: n < 4");
  if (beta.num <= 0 || 4 * beta.num > beta.den)
    throw std::domain_error("pguess_bound_lower: beta outside (0, 1/4]");

  double scale = -50.0 / std::sqrt(static_cast<double>(n)) * M_E *
                 std::sqrt(beta.value());
  double logs = static_cast<double>((m + 1) * ceil_log2(n));
  GuessingBound b;
  b.delta = delta;
  b.q = scale * (logs + std::log(4.0) + 6.0);
  b.p = scale * (std::log2(2.5) - std::log(4.0));
  b.z0 = std::cbrt(-b.q) + std::sqrt(b.p / 3.0);

  // Exact real root of z^3 + p z + q (p > 0, so the cubic is monotone).
  double s = std::sqrt(b.q * b.q / 4.0 + b.p * b.p * b.p / 27.0);
  b.cardan_root = std::cbrt(-b.q / 2.0 + s) + std::cbrt(-b.q / 2.0 - s);

  b.p_guess_raw = 0.5 + 2.0 * b.z0 + delta;
  return finish(b);
}

GuessingBound pguess_bound_optimistic(std::uint64_t n, std::uint64_t m,
                                      Rational beta, double delta) {
  if (n < 2 || m < 1)
    throw std::domain_error("pguess_bound_optimistic: need n >= 2, m >= 1");
  std::uint64_t d =
      std::min<std::uint64_t>(m * static_cast<std::uint64_t>(ceil_log2(n)), n);
  GuessingBound b;
  b.delta = delta;
  b.eps_bkp = eps_bkp(n, beta, d);
  b.p_guess_raw = 1.0 - b.eps_bkp + delta;
  return finish(b);
}

}  // namespace hmqct
