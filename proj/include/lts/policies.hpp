// The five low-complexity deterministic policies: arrival order (FIFO),
// ascending index (FIFF), ascending size (SSF), descending index (FIFILA),
// and large-files-last (LFL), plus the postponement test that drives LFL.

#pragma once

#include <cstddef>
#include <optional>

#include "lts/tape.hpp"

namespace lts {

struct PostponementReport {
  std::size_t pos = 0;     // 0-based index into the sequence
  Units delta_cost = 0;    // response increase for the file if moved forward
  Units delta_saving = 0;  // 2 * size * pending requests after pos
  bool violated = false;   // delta_cost < delta_saving: moving strictly improves

  // Literal second-crossing diagnostic. Defined only when a later consecutive
  // pair of reads straddles the file's left position; delta_cost above is the
  // authoritative quantity.
  std::optional<std::size_t> eta_pos;
  std::optional<Units> eta_lhs;
};

// Returns arrival_order verbatim after checking it spans the requested files.
Sequence fifo(const Tape& tape, const RequestSet& requests, const Sequence& arrival_order);

// Requested ids ascending.
Sequence fiff(const RequestSet& requests);

// Requested ids by (size, id) ascending.
Sequence ssf(const Tape& tape, const RequestSet& requests);

// Requested ids descending.
Sequence fifila(const RequestSet& requests);

// Evaluates the move of seq[pos] (a rewind-stage file) into the forward stage
// at its ascending slot. delta_cost comes from direct re-evaluation of both
// sequences; delta_saving is 2 * s * (pending requests after pos).
PostponementReport postponement_report(const Tape& tape, const RequestSet& requests,
                                       const Sequence& seq, std::size_t pos);

// FIFILA start, then rewind-stage files violating the postponement condition
// are moved to the forward stage until none remain. Fixed point of
// postponement_report; objective never exceeds the FIFILA objective.
Sequence lfl(const Tape& tape, const RequestSet& requests);

}  // namespace lts
