#pragma once

#include <cstdint>
#include <vector>

#include "hmqct/bounds.hpp"
#include "hmqct/channel.hpp"

namespace hmqct {

enum class BoundKind { lower, optimistic };

GuessingBound pguess_bound(const ChannelParams& params, BoundKind kind);

// Achievable key rate (1 - P(abort)) * max(0, H_min - H2(QBER)).
double hmqct_rate(const ChannelParams& params, BoundKind kind);

struct OptimalM {
  std::uint64_t m = 1;
  double rate = 0.0;
};

// Exhaustive scan over m in [1, m_max]; ties break to the smallest m.
// params.m is ignored.
OptimalM optimize_m(ChannelParams params, BoundKind kind, std::uint64_t m_max);

// Default scan ceiling: ceil(4 sqrt(n)).
std::uint64_t default_m_max(std::uint32_t n);

// Two-mode secret key capacity -log2(1 - T); +infinity at T = 1.
double skc_two_mode(double T);

// Asymptotic infinite-decoy BB84 baseline (GLLP), mu optimized on a log
// grid. Defaults: no misalignment, ideal error-correction efficiency.
struct Bb84Config {
  double e_mis = 0.0;
  double f_ec = 1.0;
  double mu_min = 0.01;
  double mu_max = 1.5;
  int mu_points = 200;
};

double bb84_decoy_rate(double L_km, double eta_det, double p_dark,
                       const Bb84Config& cfg = {});

struct RateCurvePoint {
  double L = 0.0;
  double rate_lower = 0.0;
  double rate_optimistic = 0.0;
  double rate_bb84 = 0.0;
  double skc = 0.0;
  std::uint64_t m_opt = 1;  // argmax for rate_optimistic
  double qber = 0.0;        // at m_opt
  double p_abort = 0.0;     // at m_opt
};

struct CurveConfig {
  std::uint32_t n = 1024;
  Rational beta{1, 4};
  double delta = 1e-4;
  double eta_det = 0.65;
  double p_dark = 1e-8;
  std::uint64_t m_max = 0;  // 0 = default_m_max(n)
  Bb84Config bb84;
  std::vector<double> L_grid;
};

// One m-optimized point per grid distance, for both bound kinds plus the
// BB84 and capacity baselines. Purely analytic and deterministic.
std::vector<RateCurvePoint> generate_curve(const CurveConfig& cfg);

}  // namespace hmqct
