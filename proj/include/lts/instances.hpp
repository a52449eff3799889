// Instance families for the benchmark study, adversarial constructions from
// the analysis, and the brute-force oracles that certify every solver at
// small scale.
//
// All generators are pure functions of their parameters and seed. Random bits
// come from SplitMix64 (a fixed, well-known 64-bit generator) so instances
// regenerate identically everywhere; no std::random distributions are used.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lts/online.hpp"
#include "lts/stochastic.hpp"
#include "lts/tape.hpp"

namespace lts {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Standard normal via Box-Muller (cosine branch).
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

struct Instance {
  Tape tape;
  RequestSet requests;
  StochasticProfile profile;           // degenerate (weight * scale) unless stochastic
  std::vector<OnlineRequest> online;   // arrival order; empty for offline instances
  std::string family;
  std::uint64_t seed = 0;

  bool is_online() const { return !online.empty(); }
  OnlineInstance to_online() const { return OnlineInstance{tape, online}; }
};

// Sizes drawn log-normal(mu, sigma) in bytes, truncated per draw at the
// analytic 90% quantile, then rounded to whole kilobytes with a floor of 1.
Tape gen_lognormal_tape(int n, double mu, double sigma, std::uint64_t seed);

// Independent Bernoulli(p) indicators. Resamples with an advanced seed when
// every draw comes up zero; `seed_used` reports the seed that produced the
// returned set.
RequestSet gen_bernoulli_requests(int n, std::int64_t p_ppm, std::uint64_t seed,
                                  std::uint64_t* seed_used = nullptr);

// Unit file, an n^2-sized unrequested file, then unit files: the family where
// index- and size-ordered policies lose a linear factor.
Instance gen_fiff_adversarial(int n);

// n unit files, all released at 0, arriving middle-out: n/2, n/2+1, n/2-1, ...
OnlineInstance gen_zigzag(int n);

struct LandsatPattern {
  std::vector<int> bands;        // 1-based indices within a tile
  int cloud_threshold_pct = 100; // tiles pass when their draw falls below this
};

Instance gen_landsat(int tiles, int files_per_tile, Units mean_size_kb, Units size_std_kb,
                     const LandsatPattern& pattern, std::uint64_t seed);

struct OracleResult {
  Units value = 0;
  Sequence sequence;
};

// Exhaustive minimum over all orderings of the requested files. Refuses more
// than 9 requests.
OracleResult oracle_best_sequence(const Tape& tape, const RequestSet& requests);

struct WeightedOracleResult {
  std::int64_t value = 0;
  Sequence sequence;
};

// Exhaustive minimum of the weighted objective over all orderings of the
// positive-weight files. Refuses tapes beyond 8 files.
WeightedOracleResult oracle_weighted_best(const Tape& tape,
                                          std::span<const std::int64_t> weights);

}  // namespace lts
