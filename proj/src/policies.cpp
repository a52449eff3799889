#include "lts/policies.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lts {

namespace {

void require_requests(const RequestSet& requests) {
  if (requests.request_count() < 1) {
    throw std::invalid_argument("empty request set");
  }
}

}  // namespace

Sequence fifo(const Tape& tape, const RequestSet& requests, const Sequence& arrival_order) {
  require_requests(requests);
  validate_sequence(tape, requests, arrival_order);
  if (static_cast<int>(arrival_order.order.size()) != requests.request_count()) {
    throw std::invalid_argument("arrival order must span exactly the requested files");
  }
  for (int id : arrival_order.order) {
    if (!requests.requested(id)) {
      throw std::invalid_argument("arrival order holds unrequested file " + std::to_string(id));
    }
  }
  return arrival_order;
}

Sequence fiff(const RequestSet& requests) {
  require_requests(requests);
  return Sequence{requests.requested_ids()};
}

Sequence ssf(const Tape& tape, const RequestSet& requests) {
  require_requests(requests);
  Sequence seq{requests.requested_ids()};
  std::stable_sort(seq.order.begin(), seq.order.end(), [&](int a, int b) {
    const Units sa = tape.file(a).size;
    const Units sb = tape.file(b).size;
    return sa != sb ? sa < sb : a < b;
  });
  return seq;
}

Sequence fifila(const RequestSet& requests) {
  require_requests(requests);
  Sequence seq{requests.requested_ids()};
  std::reverse(seq.order.begin(), seq.order.end());
  return seq;
}

PostponementReport postponement_report(const Tape& tape, const RequestSet& requests,
                                       const Sequence& seq, std::size_t pos) {
  validate_sequence(tape, requests, seq);
  if (pos >= seq.order.size()) {
    throw std::invalid_argument("position out of range");
  }
  auto [rewind, forward] = stage_partition(tape, seq);
  if (pos >= rewind.size()) {
    throw std::invalid_argument("not applicable: position is in the forward stage");
  }

  const int moved = seq.order[pos];

  PostponementReport report;
  report.pos = pos;

  int pending_after = 0;
  for (std::size_t t = pos + 1; t < seq.order.size(); ++t) {
    pending_after += requests.weight(seq.order[t]);
  }
  report.delta_saving = 2 * tape.file(moved).size * pending_after;

  // Candidate: drop seq[pos] from the rewind stage and insert it into the
  // forward stage in ascending order.
  Sequence candidate;
  candidate.order.reserve(seq.order.size());
  for (std::size_t t = 0; t < rewind.size(); ++t) {
    if (t != pos) candidate.order.push_back(rewind[t]);
  }
  bool inserted = false;
  for (int id : forward) {
    if (!inserted && moved < id) {
      candidate.order.push_back(moved);
      inserted = true;
    }
    candidate.order.push_back(id);
  }
  if (!inserted) candidate.order.push_back(moved);

  const Evaluation before = evaluate_sequence(tape, requests, seq);
  const Evaluation after = evaluate_sequence(tape, requests, candidate);
  std::size_t moved_pos = 0;
  while (candidate.order[moved_pos] != moved) ++moved_pos;
  report.delta_cost = after.response[moved_pos] - before.response[pos];
  report.violated = report.delta_cost < report.delta_saving;

  // Literal Eq.-style diagnostic: the first later consecutive pair whose
  // connecting movement re-crosses the moved file.
  const Units moved_left = tape.file(moved).left;
  for (std::size_t t = pos + 1; t + 1 < seq.order.size(); ++t) {
    if (tape.file(seq.order[t]).left < moved_left &&
        moved_left < tape.file(seq.order[t + 1]).left) {
      report.eta_pos = t;
      Units lhs = 0;
      for (std::size_t u = pos; u <= t; ++u) {
        lhs += tape.file(seq.order[u]).size + tape.distance(seq.order[u], seq.order[u + 1]);
      }
      report.eta_lhs = lhs;
      break;
    }
  }
  return report;
}

Sequence lfl(const Tape& tape, const RequestSet& requests) {
  require_requests(requests);

  // Rewind stage: requested ids descending, the leftmost request excluded
  // (it opens the forward stage). Positions are taken relative to its left
  // edge, which is the rebased origin.
  std::vector<int> ids = requests.requested_ids();
  const int origin_file = ids.front();
  const Units origin = tape.file(origin_file).left;

  std::vector<int> rewind(ids.rbegin(), ids.rend() - 1);  // excludes origin_file
  std::vector<int> forward{origin_file};
  Units forward_requests = 1;

  // A rewind file at position a (sizes/positions g, suffix over the current
  // rewind set) moves when
  //   (l_g - origin) + suffix_sizes(a+1) < s_g * (rewind_after(a) + |forward|).
  // Applying a move changes both sides for other positions, so sweeps repeat
  // until one completes with no move.
  bool moved_any = true;
  while (moved_any && !rewind.empty()) {
    moved_any = false;
    Units suffix_size = 0;
    for (int id : rewind) suffix_size += tape.file(id).size;
    Units remaining = static_cast<Units>(rewind.size());

    std::vector<int> kept;
    kept.reserve(rewind.size());
    for (int id : rewind) {
      const FileRecord& rec = tape.file(id);
      suffix_size -= rec.size;
      --remaining;
      const Units delta_cost = 2 * (rec.left - origin) + 2 * suffix_size;
      const Units delta_saving = 2 * rec.size * (remaining + forward_requests);
      if (delta_cost < delta_saving) {
        forward.push_back(id);
        ++forward_requests;
        moved_any = true;
      } else {
        kept.push_back(id);
      }
    }
    rewind = std::move(kept);
  }

  std::sort(forward.begin(), forward.end());
  Sequence out;
  out.order = std::move(rewind);
  out.order.insert(out.order.end(), forward.begin(), forward.end());
  return out;
}

}  // namespace lts
