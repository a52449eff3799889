#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lts/exact_dp.hpp"
#include "lts/instances.hpp"
#include "lts/online.hpp"
#include "lts/policies.hpp"

using namespace lts;

namespace {

OnlineInstance unit_instance(int n, std::vector<OnlineRequest> requests) {
  return OnlineInstance{Tape(std::vector<Units>(static_cast<std::size_t>(n), 1)),
                        std::move(requests)};
}

// Reversed coordinate x (counted from the head start) -> the unit file whose
// left edge sits at L - x.
int file_at_reversed(const Tape& tape, Units x) {
  const Units left = tape.length() - x;
  for (const FileRecord& f : tape.files()) {
    if (f.left == left) return f.id;
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("pass depths double and cap at the interval count") {
  CHECK(ari_passes(build_tape(std::vector<Units>(16, 1)), 2) ==
        std::vector<Units>{2, 4, 8, 16});
  CHECK(ari_passes(build_tape(std::vector<Units>(5, 1)), 2) == std::vector<Units>{2, 4, 5});
  CHECK(ari_passes(build_tape({1}), 2) == std::vector<Units>{1});
  CHECK(ari_passes(build_tape({6, 3, 9}), 3) == std::vector<Units>{3, 6});  // delta 3, L' 6
  CHECK_THROWS_AS(ari_passes(build_tape({4}), 1), std::invalid_argument);
}

TEST_CASE("first rightward visits follow the doubling formula") {
  const OnlineInstance inst = unit_instance(64, {});
  const HeadTrace trace = simulate_ari(inst, 2);
  for (int k = 1; k <= 6; ++k) {
    const Units x = Units{1} << k;
    CHECK(first_visit_time(trace, inst.tape.length() - x) == 3 * x - 4);
  }
  CHECK(first_visit_time(trace, inst.tape.length() - 4) == 8);
  CHECK(first_visit_time(trace, inst.tape.length() - 8) == 20);

  // The head-start position itself counts only at its first return.
  CHECK(first_visit_time(trace, inst.tape.length()) == 4);
}

TEST_CASE("service times match first qualifying rightward crossings") {
  Tape tape(std::vector<Units>(64, 1));
  std::vector<OnlineRequest> requests;
  for (int k = 2; k <= 6; ++k) {
    requests.push_back({file_at_reversed(tape, Units{1} << k), 0});
  }
  requests.push_back({64, 0});  // adjacent to the head start
  const OnlineInstance inst{tape, requests};
  const HeadTrace trace = simulate_ari(inst, 2);

  for (int k = 2; k <= 6; ++k) {
    const Units x = Units{1} << k;
    CHECK(trace.services[static_cast<std::size_t>(k) - 2].service_time == 3 * x - 4);
  }
  // File 64 has its left edge one interval from the start; pass 1 turns at
  // depth 2 and crosses it on the way back.
  CHECK(trace.services.back().service_time == 3);
}

TEST_CASE("requests released mid-pass wait for a qualifying crossing") {
  // Pass 1 of a 16-interval tape crosses the interval boundary at depth 1 at
  // time 3; a request released at 4 must wait for pass 2 (turn 8, cross 11).
  Tape tape(std::vector<Units>(16, 1));
  const int file = file_at_reversed(tape, 1);
  const OnlineInstance inst{tape, {{file, 4}}};
  const HeadTrace trace = simulate_ari(inst, 2);
  CHECK(trace.services[0].service_time == 11);
  CHECK(trace.services[0].adjusted == 7);
}

TEST_CASE("late releases are served by appended full sweeps") {
  Tape tape(std::vector<Units>(8, 1));
  const OnlineInstance inst{tape, {{5, 200}, {1, 0}}};
  const HeadTrace trace = simulate_ari(inst, 2);
  CHECK(trace.services[0].service_time >= 200);
  CHECK(trace.services[1].service_time < 200);

  // Unit speed and continuity over every segment.
  for (std::size_t s = 0; s + 1 < trace.path.size(); ++s) {
    const auto [t0, p0] = trace.path[s];
    const auto [t1, p1] = trace.path[s + 1];
    CHECK(t1 - t0 == std::abs(p1 - p0));
  }
}

TEST_CASE("per-request responses stay within 7x the trivial lower bound") {
  SplitMix64 rng(8001);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 12));
    std::vector<Units> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_int(1, 12));
    Tape tape(std::move(sizes));
    std::vector<OnlineRequest> requests;
    const int count = static_cast<int>(rng.uniform_int(1, 6));
    for (int r = 0; r < count; ++r) {
      requests.push_back({static_cast<int>(rng.uniform_int(1, n)),
                          rng.uniform_int(0, 2 * tape.length())});
    }
    const OnlineInstance inst{std::move(tape), std::move(requests)};
    const HeadTrace trace = simulate_ari(inst, 2);
    for (const ServiceRecord& rec : trace.services) {
      const Units lower =
          std::max(rec.release, inst.tape.length() - inst.tape.file(rec.file).left);
      CHECK(rec.response <= 7 * lower);
    }
  }
}

TEST_CASE("with zero releases the sweep total stays within 7x offline optimal") {
  SplitMix64 rng(8002);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 8));
    std::vector<Units> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_int(1, 8));
    Tape tape(std::move(sizes));
    std::vector<int> requested;
    for (int id = 1; id <= n; ++id) {
      if (rng.uniform_int(0, 1)) requested.push_back(id);
    }
    if (requested.empty()) requested.push_back(1);

    std::vector<OnlineRequest> requests;
    for (int id : requested) requests.push_back({id, 0});
    const OnlineInstance inst{tape, requests};
    const HeadTrace trace = simulate_ari(inst, 2);
    const Units optimum = solve_exact(tape, RequestSet(n, requested)).value;
    CHECK(response_metrics(trace).total_response <= 7 * optimum);
  }
}

TEST_CASE("alpha = 2 has the best worst-case first-visit ratio at probe positions") {
  auto worst_ratio = [](int alpha) {
    const Units span = static_cast<Units>(std::pow(alpha, 5));
    const OnlineInstance inst = unit_instance(static_cast<int>(span), {});
    const HeadTrace trace = simulate_ari(inst, alpha);
    double worst = 0.0;
    // Probe just past each turning depth, the adversarial spots.
    for (Units power = alpha; power * alpha < span; power *= alpha) {
      const Units x = power + 1;
      const auto visit = first_visit_time(trace, inst.tape.length() - x);
      REQUIRE(visit.has_value());
      worst = std::max(worst, static_cast<double>(*visit) / static_cast<double>(x));
    }
    return worst;
  };
  const double two = worst_ratio(2);
  CHECK(two < 7.0);
  CHECK(two < worst_ratio(3));
  CHECK(two < worst_ratio(4));
}

TEST_CASE("online fifo services in release order and idles in place") {
  // All released at zero in ascending order: same totals as the offline
  // arrival-order policy.
  const int n = 6;
  Tape tape(std::vector<Units>(n, 2));
  std::vector<OnlineRequest> asc;
  for (int id = 1; id <= n; ++id) asc.push_back({id, 0});
  const HeadTrace trace = simulate_online_fifo({tape, asc});
  const RequestSet all = RequestSet::all(n);
  const Evaluation offline = evaluate_sequence(tape, all, fiff(all));
  CHECK(response_metrics(trace).total_response == offline.total);

  // Single request for file 1 released at T: the head waits, then sweeps.
  const OnlineInstance single{tape, {{1, 37}}};
  const HeadTrace one = simulate_online_fifo(single);
  CHECK(one.services[0].response == 37 + tape.length());
  CHECK(one.services[0].adjusted == tape.length());

  // A lone request near the end never drags the head to the deep positions.
  const OnlineInstance shallow{tape, {{n, 0}}};
  CHECK_FALSE(first_visit_time(simulate_online_fifo(shallow), 1).has_value());
}

TEST_CASE("zigzag arrivals blow up fifo quadratically per left-side step") {
  const OnlineInstance inst = gen_zigzag(16);
  const HeadTrace trace = simulate_online_fifo(inst);

  // v(k) = response of file n/2 - k; consecutive increments are 4k + 1.
  std::vector<Units> v(8, 0);
  for (std::size_t r = 0; r < inst.requests.size(); ++r) {
    const int file = inst.requests[r].file;
    if (file <= 8) v[static_cast<std::size_t>(8 - file)] = trace.services[r].response;
  }
  for (int k = 1; k <= 7; ++k) {
    CHECK(v[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(k) - 1] == 4 * k + 1);
  }
}

TEST_CASE("fifo to ascending-order ratio grows along the zigzag family") {
  double prev_ratio = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const OnlineInstance inst = gen_zigzag(n);
    const Units fifo_total = response_metrics(simulate_online_fifo(inst)).total_response;

    std::vector<OnlineRequest> asc;
    for (int id = 1; id <= n; ++id) asc.push_back({id, 0});
    const Units asc_total =
        response_metrics(simulate_online_fifo({inst.tape, asc})).total_response;

    // Ascending order is a single sweep: n^2 + n(n-1)/2 on unit files.
    CHECK(asc_total == static_cast<Units>(n) * n + static_cast<Units>(n) * (n - 1) / 2);

    const double ratio = static_cast<double>(fifo_total) / static_cast<double>(asc_total);
    CHECK(ratio > prev_ratio);
    prev_ratio = ratio;
  }
}

TEST_CASE("response metrics split the release component") {
  Tape tape(std::vector<Units>(4, 3));
  const OnlineInstance inst{tape, {{2, 7}, {4, 0}}};
  const HeadTrace trace = simulate_online_fifo(inst);
  for (const ServiceRecord& rec : trace.services) {
    CHECK(rec.adjusted == rec.response - rec.release);
  }
  const ResponseSummary summary = response_metrics(trace);
  CHECK(summary.total_adjusted == summary.total_response - 7);
  CHECK(summary.served == 2);

  // Queue traces move at unit speed except while idling for a release.
  for (std::size_t s = 0; s + 1 < trace.path.size(); ++s) {
    const auto [t0, p0] = trace.path[s];
    const auto [t1, p1] = trace.path[s + 1];
    CHECK(std::abs(p1 - p0) <= t1 - t0);
    if (p1 != p0) CHECK(std::abs(p1 - p0) == t1 - t0);
  }

  // Release 7, serviced at 10 -> adjusted 3.
  const ServiceRecord example{2, 7, 10, 10, 3};
  CHECK(example.adjusted == 3);

  std::vector<OnlineRequest> zero{{2, 0}, {4, 0}};
  const ResponseSummary at_zero = response_metrics(simulate_online_fifo({tape, zero}));
  CHECK(at_zero.total_adjusted == at_zero.total_response);
}
