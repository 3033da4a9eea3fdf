#pragma once

#include <cstdint>

#include "hmqct/rational.hpp"

namespace hmqct {

// Constant used throughout the distributional-complexity bound.
inline constexpr double kGammaDC = 1.0 / (8.0 * 2.718281828459045235360287471);

// Coefficients (k, d) of the sqrt(n) lower bound on the one-way
// distributional complexity: D >= k(eps) * sqrt(n) + d(eps).
struct DcCoefficients {
  double k = 0.0;
  double d = 0.0;
};

// Requires eps in (0, 1/2) and beta in (0, 1/4].
DcCoefficients dc_lower_coefficients(double eps, Rational beta);

// Checks the two inequalities that the gamma constant must satisfy for the
// complexity bound's derivation to go through, at the given epsilon_1 and
// truncation order c. gamma is exposed so looser values can be probed.
bool check_gamma_inequalities(double eps1, int c, Rational beta,
                              std::uint64_t n, double gamma = kGammaDC);

// Minimum copy count consistent with leaking `ic_bits` of information:
// each n-dimensional copy carries at most ceil(log2 n) bits (Holevo).
double min_copies_from_holevo(double ic_bits, std::uint64_t n);

// Information-complexity lower bound from the distributional one:
// (delta2/2) * D(eps + delta2) - 6, floored at zero.
double ic_lower_bound(double eps, double delta2, std::uint64_t n, Rational beta);

// An upper bound on Eve's guessing probability plus the matching
// min-entropy. p_guess_raw keeps the pre-clamp value so the exact additive
// role of delta stays observable.
struct GuessingBound {
  double p_guess = 1.0;      // min(1, raw)
  double p_guess_raw = 1.0;  // before clamping
  double h_min = 0.0;        // -log2(p_guess)
  double delta = 0.0;
  // Cubic diagnostics (lower bound only; zero otherwise).
  double q = 0.0;
  double p = 0.0;
  double z0 = 0.0;           // cbrt(-q) + sqrt(p/3), the subadditive root bound
  double cardan_root = 0.0;  // exact real root of z^3 + p z + q
  // Optimistic bound only: the protocol-error term used.
  double eps_bkp = 0.0;
};

// Proved bound: 1/2 + 2(cbrt(-q) + sqrt(p/3)) + delta, from the real root
// of the copy-count cubic. Vacuous (clamped to 1) below astronomically
// large n; requires n >= 4 and beta in (0, 1/4].
GuessingBound pguess_bound_lower(std::uint64_t n, std::uint64_t m,
                                 Rational beta, double delta);

// Optimistic bound: 1 - eps_bkp(min(m ceil(log2 n), n)) + delta, assuming
// the best-known classical protocol is optimal.
GuessingBound pguess_bound_optimistic(std::uint64_t n, std::uint64_t m,
                                      Rational beta, double delta);

}  // namespace hmqct
