// Stochastic variant: Bernoulli request probabilities, the exact
// probability-mass dynamic program (the deterministic recursions with the
// pending count replaced by the remaining probability mass), and the FPTAS
// that scales and floors probabilities to make that state space polynomial.
//
// Probabilities live in exact parts-per-million units; all solver arithmetic
// is integer.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lts/rational.hpp"
#include "lts/tape.hpp"

namespace lts {

inline constexpr std::int64_t kProbScale = 1'000'000;  // ppm

struct StochasticProfile {
  std::vector<std::int64_t> prob_ppm;  // per file, 0..kProbScale

  static StochasticProfile uniform(int file_count, std::int64_t ppm);
  void validate(int file_count) const;
  std::int64_t total_ppm() const;  // Q0 in ppm
};

// Sum of p_i * response over the sequence, exact. `seq` must span every file
// with positive probability.
Rational expected_objective(const Tape& tape, const StochasticProfile& profile,
                            const Sequence& seq);

struct WeightedSolution {
  std::int64_t value = 0;  // in weight * distance units
  Sequence sequence;       // full permutation of the tape's files
  std::size_t states_evaluated = 0;
  std::size_t distinct_mass_states = 0;  // distinct remaining-mass values seen
};

// Exact optimum of the weighted objective via the mass-state recursions.
// Weights are caller-scaled nonnegative integers; with 0/1 weights this
// reduces to the deterministic optimum.
WeightedSolution solve_weighted(const Tape& tape, std::span<const std::int64_t> weights);

struct ScaledInstance {
  Tape tape;                          // original files plus two artificial tail files
  std::vector<std::int64_t> weights;  // floored scaled probabilities, per file
  Rational k_constant;                // the flooring divisor
  Rational epsilon;
  Rational p_min;         // smallest positive probability of the input profile
  Rational p_max_scaled;  // largest probability after dividing by p_min
  int original_file_count = 0;
};

// Steps: divide by the smallest positive probability, append two tape-length
// files (zero mass, then 2 n^2 p_max mass), floor-divide everything by the
// epsilon-derived constant.
ScaledInstance fptas_scale(const Tape& tape, const StochasticProfile& profile, Rational epsilon);

struct FptasResult {
  Sequence sequence;              // for the original tape, spans all files
  Rational value;                 // expected objective of `sequence` on the input
  Rational approximation_factor;  // 1 + epsilon
  std::int64_t scaled_value = 0;  // optimum of the scaled instance
  ScaledInstance scaled;
};

FptasResult fptas_solve(const Tape& tape, const StochasticProfile& profile, Rational epsilon);

// Skip unrealized files in a precomputed master sequence, then evaluate.
Evaluation evaluate_realization(const Tape& tape, const Sequence& master_seq,
                                const RequestSet& realized);

}  // namespace lts
