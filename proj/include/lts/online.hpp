// Discrete-event simulation of the online problem: timed releases, the
// oblivious geometric-sweep policy (ARI), an online FIFO baseline, and the
// two response metrics (from time zero, and net of release).
//
// A request is serviced the moment the head reaches the file's left edge
// moving rightward on a sweep that covers it, no earlier than its release.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lts/tape.hpp"

namespace lts {

struct OnlineRequest {
  int file = 0;
  Units release = 0;
};

struct OnlineInstance {
  Tape tape;
  std::vector<OnlineRequest> requests;  // arrival order; ties in release use this order

  Units interval() const;        // gcd of file sizes (delta)
  Units interval_count() const;  // L / delta (L')
  void validate() const;
};

struct ServiceRecord {
  int file = 0;
  Units release = 0;
  Units service_time = 0;
  Units response = 0;  // == service_time (clock starts at 0)
  Units adjusted = 0;  // service_time - release
};

struct HeadTrace {
  std::vector<std::pair<Units, Units>> path;  // (time, position) breakpoints
  std::vector<ServiceRecord> services;        // one per request, in arrival order
};

// Sweep depths in intervals: min(alpha^t, L') until the full depth is reached,
// always at least one pass.
std::vector<Units> ari_passes(const Tape& tape, int alpha);

// Oblivious sweeps; the pass schedule ignores releases. Extra full-depth
// passes are appended when a request releases after the base schedule, so
// every request is eventually serviced.
HeadTrace simulate_ari(const OnlineInstance& instance, int alpha);

// Services pending requests in release order (ties by arrival index), idling
// in place when none are pending.
HeadTrace simulate_online_fifo(const OnlineInstance& instance);

struct ResponseSummary {
  Units total_response = 0;
  Units total_adjusted = 0;
  std::size_t served = 0;
};

ResponseSummary response_metrics(const HeadTrace& trace);

// First strictly-positive time the head reaches `position` moving rightward
// (sweep turn points count). Empty when the trace never does.
std::optional<Units> first_visit_time(const HeadTrace& trace, Units position);

}  // namespace lts
