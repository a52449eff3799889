#include "lts/tape.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lts {

Tape::Tape(std::vector<Units> sizes) {
  if (sizes.empty()) {
    throw std::invalid_argument("invalid instance: tape needs at least one file");
  }
  files_.reserve(sizes.size());
  Units pos = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) {
      throw std::invalid_argument("invalid instance: file size must be >= 1, got " +
                                  std::to_string(sizes[i]));
    }
    FileRecord rec;
    rec.id = static_cast<int>(i) + 1;
    rec.size = sizes[i];
    rec.left = pos;
    rec.right = pos + sizes[i];
    pos = rec.right;
    files_.push_back(rec);
  }
  length_ = pos;
}

const FileRecord& Tape::file(int id) const {
  if (id < 1 || id > file_count()) {
    throw std::invalid_argument("invalid file id " + std::to_string(id));
  }
  return files_[static_cast<std::size_t>(id) - 1];
}

Units Tape::distance(int from_file, int to_file) const {
  const Units from_right = (from_file == kHeadOrigin) ? length_ : file(from_file).right;
  const Units to_left = file(to_file).left;
  return std::abs(to_left - from_right);
}

Tape build_tape(const std::vector<Units>& sizes) { return Tape(sizes); }

RequestSet::RequestSet(int file_count, const std::vector<int>& requested_ids) {
  if (file_count < 0) {
    throw std::invalid_argument("invalid instance: negative file count");
  }
  weights_.assign(static_cast<std::size_t>(file_count), 0);
  for (int id : requested_ids) {
    if (id < 1 || id > file_count) {
      throw std::invalid_argument("invalid request id " + std::to_string(id));
    }
    if (!weights_[static_cast<std::size_t>(id) - 1]) {
      weights_[static_cast<std::size_t>(id) - 1] = 1;
      ++m_;
    }
  }
}

RequestSet RequestSet::from_weights(std::vector<std::uint8_t> weights) {
  RequestSet rs;
  rs.weights_ = std::move(weights);
  for (auto w : rs.weights_) {
    if (w > 1) throw std::invalid_argument("request weights must be 0/1");
    rs.m_ += w;
  }
  return rs;
}

RequestSet RequestSet::all(int file_count) {
  return from_weights(std::vector<std::uint8_t>(static_cast<std::size_t>(file_count), 1));
}

bool RequestSet::requested(int id) const {
  if (id < 1 || id > file_count()) {
    throw std::invalid_argument("invalid file id " + std::to_string(id));
  }
  return weights_[static_cast<std::size_t>(id) - 1] != 0;
}

std::vector<int> RequestSet::requested_ids() const {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(m_));
  for (int id = 1; id <= file_count(); ++id) {
    if (weights_[static_cast<std::size_t>(id) - 1]) ids.push_back(id);
  }
  return ids;
}

void validate_sequence(const Tape& tape, const RequestSet& requests, const Sequence& seq) {
  if (requests.file_count() != tape.file_count()) {
    throw std::invalid_argument("request set does not match tape size");
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(tape.file_count()), 0);
  for (int id : seq.order) {
    if (id < 1 || id > tape.file_count()) {
      throw std::invalid_argument("sequence holds invalid file id " + std::to_string(id));
    }
    if (seen[static_cast<std::size_t>(id) - 1]++) {
      throw std::invalid_argument("sequence holds duplicate file id " + std::to_string(id));
    }
  }
  for (int id = 1; id <= tape.file_count(); ++id) {
    if (requests.requested(id) && !seen[static_cast<std::size_t>(id) - 1]) {
      throw std::invalid_argument("incomplete plan: requested file " + std::to_string(id) +
                                  " missing from sequence");
    }
  }
}

Evaluation evaluate_sequence(const Tape& tape, const RequestSet& requests, const Sequence& seq) {
  validate_sequence(tape, requests, seq);

  Evaluation eval;
  eval.response.reserve(seq.order.size());

  Units clock = 0;
  int prev = Tape::kHeadOrigin;
  Units prev_size = 0;
  for (int id : seq.order) {
    clock += prev_size + tape.distance(prev, id);
    eval.response.push_back(clock);
    if (requests.requested(id)) eval.total += clock;
    eval.distance_traversed += prev_size + tape.distance(prev, id);
    prev = id;
    prev_size = tape.file(id).size;
  }
  eval.distance_traversed += prev_size;  // the last read itself

  auto [rewind, forward] = stage_partition(tape, seq);
  eval.rewind_files = std::move(rewind);
  eval.forward_files = std::move(forward);
  return eval;
}

Units latency_objective(const Tape& tape, const RequestSet& requests, const Sequence& seq) {
  validate_sequence(tape, requests, seq);

  Units total = 0;
  Units pending = requests.request_count();
  int prev = Tape::kHeadOrigin;
  Units prev_size = 0;
  for (int id : seq.order) {
    total += pending * (prev_size + tape.distance(prev, id));
    pending -= requests.weight(id);
    prev = id;
    prev_size = tape.file(id).size;
  }
  return total;
}

std::pair<std::vector<int>, std::vector<int>> stage_partition(const Tape& tape,
                                                              const Sequence& seq) {
  std::vector<int> rewind;
  std::vector<int> forward;
  if (seq.order.empty()) return {rewind, forward};

  // The head reaches the leftmost visited position only when moving to read
  // that file, so the boundary is its first occurrence.
  std::size_t boundary = 0;
  Units min_left = tape.file(seq.order[0]).left;
  for (std::size_t t = 1; t < seq.order.size(); ++t) {
    const Units left = tape.file(seq.order[t]).left;
    if (left < min_left) {
      min_left = left;
      boundary = t;
    }
  }
  rewind.assign(seq.order.begin(), seq.order.begin() + static_cast<std::ptrdiff_t>(boundary));
  forward.assign(seq.order.begin() + static_cast<std::ptrdiff_t>(boundary), seq.order.end());
  return {rewind, forward};
}

Sequence canonicalize_forward(const Tape& tape, const RequestSet& requests, const Sequence& seq) {
  validate_sequence(tape, requests, seq);
  auto [rewind, forward] = stage_partition(tape, seq);
  std::sort(forward.begin(), forward.end());
  Sequence out;
  out.order = std::move(rewind);
  out.order.insert(out.order.end(), forward.begin(), forward.end());
  return out;
}

Sequence restrict_to_requested(const Sequence& seq, const RequestSet& realized) {
  std::vector<std::uint8_t> present(static_cast<std::size_t>(realized.file_count()) + 1, 0);
  Sequence out;
  for (int id : seq.order) {
    if (id >= 1 && id <= realized.file_count() && realized.requested(id)) {
      out.order.push_back(id);
      present[static_cast<std::size_t>(id)] = 1;
    }
  }
  for (int id : realized.requested_ids()) {
    if (!present[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument("incomplete plan: realized request " + std::to_string(id) +
                                  " missing from sequence");
    }
  }
  return out;
}

RebasedInstance rebase_to_first_request(const Tape& tape, const RequestSet& requests) {
  if (requests.file_count() != tape.file_count()) {
    throw std::invalid_argument("request set does not match tape size");
  }
  if (requests.request_count() == 0) {
    throw std::invalid_argument("empty request set");
  }
  int first = 1;
  while (!requests.requested(first)) ++first;

  std::vector<Units> sizes;
  std::vector<std::uint8_t> weights;
  sizes.reserve(static_cast<std::size_t>(tape.file_count() - first + 1));
  for (int id = first; id <= tape.file_count(); ++id) {
    sizes.push_back(tape.file(id).size);
    weights.push_back(static_cast<std::uint8_t>(requests.weight(id)));
  }

  RebasedInstance out{Tape(std::move(sizes)), RequestSet::from_weights(std::move(weights)),
                      tape.file(first).left, first - 1};
  return out;
}

}  // namespace lts
