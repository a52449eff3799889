#include "lts/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lts {

namespace {

// 90% standard-normal quantile, for the analytic truncation cap.
constexpr double kZ90 = 1.2815515655446004;

StochasticProfile degenerate_profile(const RequestSet& requests) {
  StochasticProfile p;
  p.prob_ppm.reserve(static_cast<std::size_t>(requests.file_count()));
  for (int id = 1; id <= requests.file_count(); ++id) {
    p.prob_ppm.push_back(requests.weight(id) * kProbScale);
  }
  return p;
}

}  // namespace

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty uniform range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  // Rejection sampling: no modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

double SplitMix64::normal() {
  double u1;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Tape gen_lognormal_tape(int n, double mu, double sigma, std::uint64_t seed) {
  if (n < 1 || sigma <= 0.0 || !std::isfinite(mu) || !std::isfinite(sigma)) {
    throw std::invalid_argument("invalid log-normal parameters");
  }
  SplitMix64 rng(seed);
  const double cap_bytes = std::exp(mu + sigma * kZ90);

  std::vector<Units> sizes;
  sizes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double bytes = std::min(std::exp(mu + sigma * rng.normal()), cap_bytes);
    sizes.push_back(std::max<Units>(1, std::llround(bytes / 1000.0)));
  }
  return Tape(std::move(sizes));
}

RequestSet gen_bernoulli_requests(int n, std::int64_t p_ppm, std::uint64_t seed,
                                  std::uint64_t* seed_used) {
  if (n < 1 || p_ppm <= 0 || p_ppm > kProbScale) {
    throw std::invalid_argument("invalid Bernoulli parameters");
  }
  std::uint64_t current = seed;
  for (;;) {
    SplitMix64 rng(current);
    std::vector<std::uint8_t> weights(static_cast<std::size_t>(n));
    int m = 0;
    for (auto& w : weights) {
      w = rng.uniform_int(0, kProbScale - 1) < p_ppm ? 1 : 0;
      m += w;
    }
    if (m > 0) {
      if (seed_used) *seed_used = current;
      return RequestSet::from_weights(std::move(weights));
    }
    ++current;  // all-zero draw: advance and retry
  }
}

Instance gen_fiff_adversarial(int n) {
  if (n < 4) throw std::invalid_argument("family needs at least 4 files");

  std::vector<Units> sizes(static_cast<std::size_t>(n), 1);
  sizes[1] = static_cast<Units>(n) * n;
  std::vector<std::uint8_t> weights(static_cast<std::size_t>(n), 1);
  weights[1] = 0;

  Instance inst{Tape(std::move(sizes)), RequestSet::from_weights(std::move(weights)),
                StochasticProfile{}, {}, "fiff-adversarial", 0};
  inst.profile = degenerate_profile(inst.requests);
  return inst;
}

OnlineInstance gen_zigzag(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("zigzag family needs an even n >= 4");
  }
  OnlineInstance inst{Tape(std::vector<Units>(static_cast<std::size_t>(n), 1)), {}};
  inst.requests.push_back({n / 2, 0});
  for (int j = 1; j <= n / 2; ++j) {
    if (n / 2 + j <= n) inst.requests.push_back({n / 2 + j, 0});
    if (n / 2 - j >= 1) inst.requests.push_back({n / 2 - j, 0});
  }
  return inst;
}

Instance gen_landsat(int tiles, int files_per_tile, Units mean_size_kb, Units size_std_kb,
                     const LandsatPattern& pattern, std::uint64_t seed) {
  if (tiles < 1 || files_per_tile < 1 || mean_size_kb < 1 || size_std_kb < 0) {
    throw std::invalid_argument("invalid landsat parameters");
  }
  if (pattern.cloud_threshold_pct < 0 || pattern.cloud_threshold_pct > 100) {
    throw std::invalid_argument("cloud threshold must be in [0, 100]");
  }
  for (int band : pattern.bands) {
    if (band < 1 || band > files_per_tile) {
      throw std::invalid_argument("band index " + std::to_string(band) + " out of range");
    }
  }

  const int n = tiles * files_per_tile;
  std::uint64_t current = seed;
  for (;;) {
    SplitMix64 rng(current);
    std::vector<Units> sizes;
    sizes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double kb = static_cast<double>(mean_size_kb) +
                        static_cast<double>(size_std_kb) * rng.normal();
      sizes.push_back(std::max<Units>(1, std::llround(kb)));
    }

    std::vector<std::uint8_t> weights(static_cast<std::size_t>(n), 0);
    for (int tile = 0; tile < tiles; ++tile) {
      const bool pass = rng.uniform_int(0, 99) < pattern.cloud_threshold_pct;
      if (!pass) continue;
      for (int band : pattern.bands) {
        weights[static_cast<std::size_t>(tile * files_per_tile + band - 1)] = 1;
      }
    }

    RequestSet requests = RequestSet::from_weights(std::move(weights));
    if (requests.request_count() == 0 && !pattern.bands.empty()) {
      ++current;  // no tile passed: advance and retry
      continue;
    }
    Instance inst{Tape(std::move(sizes)), std::move(requests), StochasticProfile{}, {}, "landsat",
                  current};
    inst.profile = degenerate_profile(inst.requests);
    return inst;
  }
}

OracleResult oracle_best_sequence(const Tape& tape, const RequestSet& requests) {
  if (requests.request_count() < 1) {
    throw std::invalid_argument("empty request set");
  }
  if (requests.request_count() > 9) {
    throw std::invalid_argument("oracle refuses more than 9 requests");
  }
  std::vector<int> ids = requests.requested_ids();
  OracleResult best{std::numeric_limits<Units>::max(), {}};
  do {
    const Sequence seq{ids};
    const Evaluation eval = evaluate_sequence(tape, requests, seq);
    if (eval.total < best.value) {
      best.value = eval.total;
      best.sequence = seq;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return best;
}

WeightedOracleResult oracle_weighted_best(const Tape& tape,
                                          std::span<const std::int64_t> weights) {
  if (tape.file_count() > 8) {
    throw std::invalid_argument("weighted oracle refuses more than 8 files");
  }
  if (static_cast<int>(weights.size()) != tape.file_count()) {
    throw std::invalid_argument("weights do not match tape size");
  }
  std::vector<int> ids;
  for (int id = 1; id <= tape.file_count(); ++id) {
    if (weights[static_cast<std::size_t>(id) - 1] < 0) {
      throw std::invalid_argument("negative weight");
    }
    if (weights[static_cast<std::size_t>(id) - 1] > 0) ids.push_back(id);
  }
  if (ids.empty()) {
    throw std::invalid_argument("all weights are zero");
  }

  WeightedOracleResult best{std::numeric_limits<std::int64_t>::max(), {}};
  do {
    std::int64_t value = 0;
    Units clock = 0;
    int prev = Tape::kHeadOrigin;
    Units prev_size = 0;
    for (int id : ids) {
      clock += prev_size + tape.distance(prev, id);
      value += weights[static_cast<std::size_t>(id) - 1] * clock;
      prev = id;
      prev_size = tape.file(id).size;
    }
    if (value < best.value) {
      best.value = value;
      best.sequence.order = ids;
    }
  } while (std::next_permutation(ids.begin(), ids.end()));
  return best;
}

}  // namespace lts
