// Exact polynomial-time solver built on two interleaved recursions over file
// ranges [i, j] and a pending-request count k. The rewind recursion enters
// with the head at the right edge of j and leaves it at the left edge of i;
// the forward recursion enters the same way but reads j last and leaves the
// head at its right edge. The optimum is the rewind value over the whole tape
// with all requests pending, O(n^4) time and O(n^3) states.

#pragma once

#include <cstddef>

#include "lts/tape.hpp"

namespace lts {

struct DPSolution {
  Units value = 0;
  Sequence sequence;               // permutation of the solved range, maps back to input ids
  std::size_t states_evaluated = 0;
};

// Single-state evaluations, exposed for testing the recursions directly.
// k counts requests pending when the head first reaches the right edge of j.
Units rewind_value(const Tape& tape, const RequestSet& requests, int i, int j, int k);
Units forward_value(const Tape& tape, const RequestSet& requests, int i, int j, int k);

// Rebases to the first requested file, evaluates the rewind recursion over the
// full rebased range, and reconstructs an optimal sequence (original ids).
DPSolution solve_exact(const Tape& tape, const RequestSet& requests);

}  // namespace lts
