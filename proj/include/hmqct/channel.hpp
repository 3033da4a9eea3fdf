#pragma once

#include <cstdint>

#include "hmqct/matching.hpp"

namespace hmqct {

// Fiber transmittance over L km: 10^{-0.02 L} (0.2 dB/km).
double transmittance(double L_km);

// Physical-layer and protocol parameters of one channel configuration.
struct ChannelParams {
  double L = 0.0;        // km
  double eta_det = 1.0;  // detector efficiency
  double p_dark = 0.0;   // dark-count probability per detector per round
  std::uint32_t n = 2;   // number of modes (even)
  Rational beta{1, 2};   // matching density, beta*n integer
  std::uint64_t m = 1;   // photon copies per round
  double delta = 0.0;    // memory-noise parameter

  void validate() const;

  double T() const { return transmittance(L); }
  // Per-photon detection probability: channel * routing (2 beta) * detector.
  double t_tilde() const { return 2.0 * beta.value() * eta_det * T(); }
};

enum class RoundOutcome : std::uint8_t { bit0, bit1, aborted };

// Closed-form abort probability for two threshold detectors with dark
// counts: P_dark + (1 - 3 P_dark + 2 P_dark^2)(1 - T~)^m.
double p_abort(const ChannelParams& params);

// Closed-form error rate among conclusive rounds; errors come from lone
// dark counts on the wrong detector.
double qber(const ChannelParams& params);

// One protocol round through the lossy channel: m photons survive
// independently with probability T~, every survivor clicks the detector
// selected by the promised bit, both detectors can dark-fire; zero clicks
// or a double click abort the round.
RoundOutcome simulate_round_mc(const ProblemInput& input,
                               const ChannelParams& params, Rng& rng);

// Aggregate counters for batched Monte Carlo runs.
struct BatchStats {
  std::uint64_t rounds = 0;
  std::uint64_t aborts = 0;
  std::uint64_t wrong = 0;  // conclusive but decoded != a
  std::uint64_t conclusive() const { return rounds - aborts; }

  BatchStats& operator+=(const BatchStats& o) {
    rounds += o.rounds;
    aborts += o.aborts;
    wrong += o.wrong;
    return *this;
  }
};

// Runs `rounds` independent rounds with fresh inputs, split into fixed-size
// chunks with derived Rng streams; results are summed in chunk order, so the
// outcome is bit-identical for a fixed seed regardless of thread count.
BatchStats simulate_batch(const ChannelParams& params, std::uint64_t rounds,
                          const Rng& rng, unsigned threads = 0);

}  // namespace hmqct
