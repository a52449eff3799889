#include "lts/stochastic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace lts {

StochasticProfile StochasticProfile::uniform(int file_count, std::int64_t ppm) {
  StochasticProfile p;
  p.prob_ppm.assign(static_cast<std::size_t>(file_count), ppm);
  p.validate(file_count);
  return p;
}

void StochasticProfile::validate(int file_count) const {
  if (static_cast<int>(prob_ppm.size()) != file_count) {
    throw std::invalid_argument("profile does not match tape size");
  }
  for (std::int64_t p : prob_ppm) {
    if (p < 0 || p > kProbScale) {
      throw std::invalid_argument("probability out of [0, 1]: " + std::to_string(p) + " ppm");
    }
  }
}

std::int64_t StochasticProfile::total_ppm() const {
  std::int64_t q = 0;
  for (std::int64_t p : prob_ppm) q += p;
  return q;
}

Rational expected_objective(const Tape& tape, const StochasticProfile& profile,
                            const Sequence& seq) {
  profile.validate(tape.file_count());

  std::vector<std::uint8_t> present(static_cast<std::size_t>(tape.file_count()) + 1, 0);
  for (int id : seq.order) present.at(static_cast<std::size_t>(id)) = 1;
  for (int id = 1; id <= tape.file_count(); ++id) {
    if (profile.prob_ppm[static_cast<std::size_t>(id) - 1] > 0 &&
        !present[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument("sequence misses positive-probability file " +
                                  std::to_string(id));
    }
  }

  __int128 acc = 0;
  Units clock = 0;
  int prev = Tape::kHeadOrigin;
  Units prev_size = 0;
  for (int id : seq.order) {
    clock += prev_size + tape.distance(prev, id);
    acc += static_cast<__int128>(profile.prob_ppm[static_cast<std::size_t>(id) - 1]) * clock;
    prev = id;
    prev_size = tape.file(id).size;
  }
  return Rational(checked_narrow(acc, "expected_objective"), kProbScale);
}

namespace {

// Mass-state recursions, memoized sparsely: only remaining-mass values that
// arise from contiguous-range subtractions are ever touched.
class WeightedDP {
 public:
  WeightedDP(const Tape& tape, std::span<const std::int64_t> weights)
      : tape_(tape), n_(tape.file_count()) {
    if (static_cast<int>(weights.size()) != n_) {
      throw std::invalid_argument("weights do not match tape size");
    }
    prefix_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int id = 1; id <= n_; ++id) {
      const std::int64_t w = weights[static_cast<std::size_t>(id) - 1];
      if (w < 0) throw std::invalid_argument("negative weight");
      prefix_[static_cast<std::size_t>(id)] = prefix_[static_cast<std::size_t>(id) - 1] + w;
    }
    if (n_ >= (1 << 12) || total_mass() >= (std::int64_t{1} << 38)) {
      throw std::invalid_argument("weighted instance too large for the sparse state key");
    }
  }

  std::int64_t total_mass() const { return prefix_.back(); }

  std::int64_t range_mass(int i, int j) const {
    if (i > j) return 0;
    return prefix_[static_cast<std::size_t>(j)] - prefix_[static_cast<std::size_t>(i) - 1];
  }

  std::int64_t rewind(int i, int j, std::int64_t mass) {
    const std::uint64_t key = pack(i, j, mass);
    if (auto it = rewind_memo_.find(key); it != rewind_memo_.end()) return it->second;
    ++states_;
    mass_values_.insert(mass);

    std::int64_t value;
    if (i == j) {
      const Units s = tape_.file(i).size;
      value = mass * s + 2 * (mass - range_mass(i, i)) * s;
    } else {
      value = std::numeric_limits<std::int64_t>::max();
      for (int split = i + 1; split <= j; ++split) {
        const std::int64_t v =
            rewind(split, j, mass) + rewind(i, split - 1, mass - range_mass(split, j));
        if (v < value) value = v;
      }
      const std::int64_t via_forward =
          forward(i, j, mass) + (mass - range_mass(i, j)) * tape_.distance(j, i);
      if (via_forward < value) value = via_forward;
    }
    rewind_memo_.emplace(key, value);
    return value;
  }

  std::int64_t forward(int i, int j, std::int64_t mass) {
    const std::uint64_t key = pack(i, j, mass);
    if (auto it = forward_memo_.find(key); it != forward_memo_.end()) return it->second;
    ++states_;
    mass_values_.insert(mass);

    const Units sj = tape_.file(j).size;
    std::int64_t value = mass * sj + (mass - range_mass(i, j)) * sj;
    if (i < j) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int split = i; split < j; ++split) {
        const std::int64_t inner = (split + 1 <= j - 1) ? rewind(split + 1, j - 1, mass) : 0;
        const std::int64_t tail = forward(i, split, mass - range_mass(split + 1, j - 1)) +
                                  (mass - range_mass(i, j - 1)) * tape_.distance(split, j);
        if (inner + tail < best) best = inner + tail;
      }
      value += best;
    }
    forward_memo_.emplace(key, value);
    return value;
  }

  void rebuild_rewind(int i, int j, std::int64_t mass, std::vector<int>& out) {
    if (i == j) {
      out.push_back(i);
      return;
    }
    const std::int64_t target = rewind(i, j, mass);
    const std::int64_t via_forward =
        forward(i, j, mass) + (mass - range_mass(i, j)) * tape_.distance(j, i);
    if (via_forward == target) {
      rebuild_forward(i, j, mass, out);
      return;
    }
    for (int split = i + 1; split <= j; ++split) {
      const std::int64_t rest = mass - range_mass(split, j);
      if (rewind(split, j, mass) + rewind(i, split - 1, rest) == target) {
        rebuild_rewind(split, j, mass, out);
        rebuild_rewind(i, split - 1, rest, out);
        return;
      }
    }
    throw std::logic_error("weighted dp reconstruction failed");
  }

  void rebuild_forward(int i, int j, std::int64_t mass, std::vector<int>& out) {
    if (i == j) {
      out.push_back(i);
      return;
    }
    const Units sj = tape_.file(j).size;
    const std::int64_t base = mass * sj + (mass - range_mass(i, j)) * sj;
    const std::int64_t target = forward(i, j, mass) - base;
    for (int split = i; split < j; ++split) {
      const std::int64_t inner = (split + 1 <= j - 1) ? rewind(split + 1, j - 1, mass) : 0;
      const std::int64_t rest = mass - range_mass(split + 1, j - 1);
      const std::int64_t tail =
          forward(i, split, rest) + (mass - range_mass(i, j - 1)) * tape_.distance(split, j);
      if (inner + tail == target) {
        if (split + 1 <= j - 1) rebuild_rewind(split + 1, j - 1, mass, out);
        rebuild_forward(i, split, rest, out);
        out.push_back(j);
        return;
      }
    }
    throw std::logic_error("weighted dp reconstruction failed");
  }

  std::size_t states() const { return states_; }
  std::size_t distinct_mass_states() const { return mass_values_.size(); }

 private:
  std::uint64_t pack(int i, int j, std::int64_t mass) const {
    return (static_cast<std::uint64_t>(i) << 52) | (static_cast<std::uint64_t>(j) << 40) |
           static_cast<std::uint64_t>(mass);
  }

  const Tape& tape_;
  int n_;
  std::vector<std::int64_t> prefix_;
  std::unordered_map<std::uint64_t, std::int64_t> rewind_memo_;
  std::unordered_map<std::uint64_t, std::int64_t> forward_memo_;
  std::unordered_set<std::int64_t> mass_values_;
  std::size_t states_ = 0;
};

}  // namespace

WeightedSolution solve_weighted(const Tape& tape, std::span<const std::int64_t> weights) {
  WeightedDP dp(tape, weights);
  if (dp.total_mass() == 0) {
    throw std::invalid_argument("all weights are zero");
  }

  WeightedSolution solution;
  const int n = tape.file_count();
  solution.value = dp.rewind(1, n, dp.total_mass());
  dp.rebuild_rewind(1, n, dp.total_mass(), solution.sequence.order);
  solution.states_evaluated = dp.states();
  solution.distinct_mass_states = dp.distinct_mass_states();
  return solution;
}

ScaledInstance fptas_scale(const Tape& tape, const StochasticProfile& profile, Rational epsilon) {
  profile.validate(tape.file_count());
  if (epsilon.num <= 0) {
    throw std::invalid_argument("epsilon must be positive");
  }

  const std::int64_t n = tape.file_count();
  std::int64_t pmin_ppm = 0;
  std::int64_t pmax_ppm = 0;
  for (std::int64_t p : profile.prob_ppm) {
    if (p > 0 && (pmin_ppm == 0 || p < pmin_ppm)) pmin_ppm = p;
    pmax_ppm = std::max(pmax_ppm, p);
  }
  if (pmin_ppm == 0) {
    throw std::invalid_argument("profile has no positive probability");
  }

  ScaledInstance out{
      .tape = Tape({1}),  // replaced below
      .weights = {},
      .k_constant = Rational(epsilon.num * n * n, 1) * Rational(pmax_ppm, 1) /
                    Rational(epsilon.den * (n + 3) * (n + 1), 1) / Rational(pmin_ppm, 1),
      .epsilon = epsilon,
      .p_min = Rational(pmin_ppm, kProbScale),
      .p_max_scaled = Rational(pmax_ppm, pmin_ppm),
      .original_file_count = static_cast<int>(n)};

  std::vector<Units> sizes;
  sizes.reserve(static_cast<std::size_t>(n) + 2);
  for (const FileRecord& f : tape.files()) sizes.push_back(f.size);
  sizes.push_back(tape.length());
  sizes.push_back(tape.length());
  out.tape = Tape(std::move(sizes));

  // floor(p_i' / K) with p_i' = p_i / p_min; p_min cancels:
  //   floor(p_ppm * (n+3)(n+1) * eps_den / (eps_num * n^2 * pmax_ppm))
  const __int128 denom = static_cast<__int128>(epsilon.num) * n * n * pmax_ppm;
  out.weights.reserve(static_cast<std::size_t>(n) + 2);
  for (std::int64_t p : profile.prob_ppm) {
    const __int128 numer = static_cast<__int128>(p) * (n + 3) * (n + 1) * epsilon.den;
    out.weights.push_back(checked_narrow(numer / denom, "fptas_scale"));
  }
  out.weights.push_back(0);  // artificial file n+1
  {
    // Pre-floor mass 2 n^2 p_max_scaled; p_max cancels against K as well.
    const __int128 numer = static_cast<__int128>(2) * (n + 3) * (n + 1) * epsilon.den;
    out.weights.push_back(checked_narrow(numer / epsilon.num, "fptas_scale"));
  }
  return out;
}

FptasResult fptas_solve(const Tape& tape, const StochasticProfile& profile, Rational epsilon) {
  FptasResult result{.sequence = {},
                     .value = Rational(0),
                     .approximation_factor = Rational(1) + epsilon,
                     .scaled_value = 0,
                     .scaled = fptas_scale(tape, profile, epsilon)};

  WeightedSolution scaled_solution = solve_weighted(
      result.scaled.tape, std::span<const std::int64_t>(result.scaled.weights));
  result.scaled_value = scaled_solution.value;

  // Drop the two artificial tail files; all original files stay in order.
  for (int id : scaled_solution.sequence.order) {
    if (id <= tape.file_count()) result.sequence.order.push_back(id);
  }
  result.value = expected_objective(tape, profile, result.sequence);
  return result;
}

Evaluation evaluate_realization(const Tape& tape, const Sequence& master_seq,
                                const RequestSet& realized) {
  const Sequence restricted = restrict_to_requested(master_seq, realized);
  return evaluate_sequence(tape, realized, restricted);
}

}  // namespace lts
