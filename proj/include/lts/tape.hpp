// Tape geometry, the response-time objective and its latency form, stage
// partitioning, and sequence canonicalization. Everything downstream (policies,
// dynamic programs, simulators) is validated against the functions in here.
//
// Conventions: positions and times are exact integers in bit units at unit
// tape speed. Files are 1-based; file i occupies [left, right) with
// right = left + size. The head always starts at the physical end of the
// tape (position length()).

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lts {

using Units = std::int64_t;

struct FileRecord {
  int id = 0;      // 1-based tape index
  Units size = 0;  // s_i, in bits
  Units left = 0;  // l_i
  Units right = 0; // r_i = l_i + s_i
};

class Tape {
 public:
  // Virtual id for the head-start position: right edge = length().
  static constexpr int kHeadOrigin = 0;

  explicit Tape(std::vector<Units> sizes);

  int file_count() const { return static_cast<int>(files_.size()); }
  Units length() const { return length_; }
  const FileRecord& file(int id) const;
  const std::vector<FileRecord>& files() const { return files_; }

  // |l_to - r_from|: time to read-position from the right edge of `from_file`
  // to the left edge of `to_file`. kHeadOrigin is allowed as `from_file`.
  Units distance(int from_file, int to_file) const;

 private:
  std::vector<FileRecord> files_;
  Units length_ = 0;
};

Tape build_tape(const std::vector<Units>& sizes);

class RequestSet {
 public:
  RequestSet() = default;
  RequestSet(int file_count, const std::vector<int>& requested_ids);

  static RequestSet from_weights(std::vector<std::uint8_t> weights);
  static RequestSet all(int file_count);

  int file_count() const { return static_cast<int>(weights_.size()); }
  bool requested(int id) const;
  int weight(int id) const { return requested(id) ? 1 : 0; }
  int request_count() const { return m_; }  // m
  std::vector<int> requested_ids() const;   // ascending
  const std::vector<std::uint8_t>& weights() const { return weights_; }

 private:
  std::vector<std::uint8_t> weights_;
  int m_ = 0;
};

// A reading plan: distinct file ids, in read order. Must contain every
// requested file; may contain unrequested files (they cost movement only).
struct Sequence {
  std::vector<int> order;

  bool operator==(const Sequence&) const = default;
};

struct Evaluation {
  std::vector<Units> response;    // arrival time at the first bit, per position
  Units total = 0;                // sum of w_i * response over the sequence
  Units distance_traversed = 0;   // all head movement, reads included
  std::vector<int> rewind_files;  // read before the head first reaches the origin
  std::vector<int> forward_files; // the rest, in read order
};

// Throws std::invalid_argument when `seq` has duplicates, unknown ids, or is
// missing a requested file.
void validate_sequence(const Tape& tape, const RequestSet& requests, const Sequence& seq);

// Per-position response times per the head-path recurrence, total objective,
// movement accounting and stage split.
Evaluation evaluate_sequence(const Tape& tape, const RequestSet& requests, const Sequence& seq);

// Same objective via the latency form: each movement increment is weighted by
// the number of still-pending requests. Computed independently of
// evaluate_sequence; the two must agree on every valid input.
Units latency_objective(const Tape& tape, const RequestSet& requests, const Sequence& seq);

// (rewind files, forward files), both in read order. The boundary is the first
// read of the leftmost file present in `seq` (bit 0 when file 1 is present;
// the rebased origin otherwise).
std::pair<std::vector<int>, std::vector<int>> stage_partition(const Tape& tape,
                                                              const Sequence& seq);

// Reorders the forward-stage files ascending by id. Never increases the
// objective.
Sequence canonicalize_forward(const Tape& tape, const RequestSet& requests, const Sequence& seq);

// Subsequence of `seq` holding exactly the realized requests, order preserved.
Sequence restrict_to_requested(const Sequence& seq, const RequestSet& realized);

struct RebasedInstance {
  Tape tape;
  RequestSet requests;
  Units offset = 0;   // positions dropped on the left
  int id_offset = 0;  // original id = rebased id + id_offset
};

// Drops every file strictly left of the leftmost requested file and shifts
// positions so the new tape starts at 0. Objective values are preserved.
RebasedInstance rebase_to_first_request(const Tape& tape, const RequestSet& requests);

}  // namespace lts
