#include "hmqct/channel.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hmqct {

double transmittance(double L_km) {
  if (L_km < 0.0) throw std::domain_error("transmittance: negative distance");
  return std::pow(10.0, -0.02 * L_km);
}

void ChannelParams::validate() const {
  if (L < 0.0) throw std::invalid_argument("ChannelParams: negative L");
  if (eta_det < 0.0 || eta_det > 1.0)
    throw std::invalid_argument("ChannelParams: eta_det outside [0,1]");
  if (p_dark < 0.0 || p_dark > 1.0)
    throw std::invalid_argument("ChannelParams: p_dark outside [0,1]");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("ChannelParams: n must be even and >= 2");
  if (beta.num <= 0 || 2 * beta.num > beta.den)
    throw std::invalid_argument("ChannelParams: beta outside (0, 1/2]");
  if (!beta.divides_exactly(n))
    throw std::invalid_argument("ChannelParams: beta*n not an integer");
}

double p_abort(const ChannelParams& params) {
  params.validate();
  double pd = params.p_dark;
  double miss = std::pow(1.0 - params.t_tilde(), static_cast<double>(params.m));
  return pd + (1.0 - 3.0 * pd + 2.0 * pd * pd) * miss;
}

double qber(const ChannelParams& params) {
  params.validate();
  double pd = params.p_dark;
  double miss = std::pow(1.0 - params.t_tilde(), static_cast<double>(params.m));
  double denom = 1.0 - pd - (1.0 - 3.0 * pd + 2.0 * pd * pd) * miss;
  if (denom <= 0.0)
    throw std::domain_error("qber: degenerate channel (all rounds abort)");
  return (pd - pd * pd) * miss / denom;
}

RoundOutcome simulate_round_mc(const ProblemInput& input,
                               const ChannelParams& params, Rng& rng) {
  if (input.x.size() != params.n ||
      input.matching.edge_count() != params.beta.times_integer(params.n))
    throw std::invalid_argument("simulate_round_mc: input/params shape mismatch");

  double tt = params.t_tilde();
  bool signal = false;
  for (std::uint64_t i = 0; i < params.m; ++i)
    signal = rng.bernoulli(tt) || signal;

  // Conclusive ideal rounds never err, so every surviving copy lands on the
  // detector indexed by the promised bit.
  bool click0 = (input.a == 0 && signal) || rng.bernoulli(params.p_dark);
  bool click1 = (input.a == 1 && signal) || rng.bernoulli(params.p_dark);
  if (click0 == click1) return RoundOutcome::aborted;  // none or both
  return click0 ? RoundOutcome::bit0 : RoundOutcome::bit1;
}

namespace {

BatchStats run_chunk(const ChannelParams& params, std::uint64_t rounds,
                     Rng rng) {
  InputSampler sampler(params.n, params.beta);
  BatchStats st;
  st.rounds = rounds;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    const ProblemInput& input = sampler.sample(rng);
    RoundOutcome o = simulate_round_mc(input, params, rng);
    if (o == RoundOutcome::aborted) {
      ++st.aborts;
    } else if ((o == RoundOutcome::bit1) != (input.a == 1)) {
      ++st.wrong;
    }
  }
  return st;
}

constexpr std::uint64_t kChunkRounds = 1 << 16;

}  // namespace

BatchStats simulate_batch(const ChannelParams& params, std::uint64_t rounds,
                          const Rng& rng, unsigned threads) {
  params.validate();
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  std::uint64_t chunks = (rounds + kChunkRounds - 1) / kChunkRounds;
  std::vector<BatchStats> results(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      std::uint64_t count =
          std::min(kChunkRounds, rounds - c * kChunkRounds);
      results[c] = run_chunk(params, count, rng.derive(c));
    }
  };

  if (threads == 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, chunks); ++t)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BatchStats total;
  for (const auto& r : results) total += r;
  return total;
}

}  // namespace hmqct
