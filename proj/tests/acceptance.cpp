// Acceptance suite: one numbered check per release criterion, each printed as
// a PASS/FAIL line. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lts/exact_dp.hpp"
#include "lts/instances.hpp"
#include "lts/online.hpp"
#include "lts/policies.hpp"
#include "lts/stochastic.hpp"
#include "lts/tape.hpp"

using namespace lts;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RandomInstance {
  Tape tape;
  RequestSet requests;
};

RandomInstance random_instance(SplitMix64& rng, int min_n, int max_n, Units max_size,
                               bool equal_sizes = false) {
  const int n = static_cast<int>(rng.uniform_int(min_n, max_n));
  std::vector<Units> sizes;
  const Units common = rng.uniform_int(1, max_size);
  for (int i = 0; i < n; ++i) {
    sizes.push_back(equal_sizes ? common : rng.uniform_int(1, max_size));
  }
  std::vector<int> requested;
  for (int id = 1; id <= n; ++id) {
    if (rng.uniform_int(0, 1)) requested.push_back(id);
  }
  if (requested.empty()) requested.push_back(static_cast<int>(rng.uniform_int(1, n)));
  return {Tape(std::move(sizes)), RequestSet(n, requested)};
}

void criterion_1_worked_examples() {
  const Tape fig = build_tape({15, 4, 2});
  const Evaluation eval = evaluate_sequence(fig, RequestSet::all(3), Sequence{{3, 2, 1}});
  bool ok = eval.response == std::vector<Units>{2, 10, 33} && eval.total == 45;

  const Tape appendix = build_tape({2, 2, 8, 2, 1});
  ok = ok && evaluate_sequence(appendix, RequestSet::all(5), Sequence{{5, 4, 1, 2, 3}}).total == 75;
  ok = ok && evaluate_sequence(appendix, RequestSet::all(5), Sequence{{1, 2, 3, 4, 5}}).total == 107;
  report(1, "worked-example exactness", ok);
}

void criterion_2_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(1202);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const RandomInstance inst = random_instance(rng, 2, 8, 20);
    const DPSolution dp = solve_exact(inst.tape, inst.requests);
    const OracleResult oracle = oracle_best_sequence(inst.tape, inst.requests);
    ok = dp.value == oracle.value &&
         evaluate_sequence(inst.tape, inst.requests, dp.sequence).total == dp.value;
  }
  const double elapsed = seconds_since(start);
  report(2, "oracle equivalence on 200 random instances", ok && elapsed < 60.0,
         "elapsed " + std::to_string(elapsed) + " s");
}

void criterion_3_approximation_guarantees() {
  SplitMix64 rng(1303);
  bool ok = true;

  for (int trial = 0; trial < 120 && ok; ++trial) {
    const RandomInstance inst = random_instance(rng, 2, 8, 20);
    const Units optimum = oracle_best_sequence(inst.tape, inst.requests).value;
    const Units lazy = evaluate_sequence(inst.tape, inst.requests, fifila(inst.requests)).total;
    const Units improved =
        evaluate_sequence(inst.tape, inst.requests, lfl(inst.tape, inst.requests)).total;
    ok = lazy <= 3 * optimum && improved <= lazy && improved >= optimum;
  }

  // Equal sizes, everything requested: ascending order is exact.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const int count = static_cast<int>(rng.uniform_int(2, 10));
    const Tape tape(std::vector<Units>(static_cast<std::size_t>(count), rng.uniform_int(1, 9)));
    const RequestSet all = RequestSet::all(count);
    ok = evaluate_sequence(tape, all, fiff(all)).total == solve_exact(tape, all).value;
  }

  // Equal sizes, arbitrary requests: descending and its refinement are exact.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const RandomInstance inst = random_instance(rng, 2, 10, 9, /*equal_sizes=*/true);
    const Units optimum = solve_exact(inst.tape, inst.requests).value;
    ok = evaluate_sequence(inst.tape, inst.requests, fifila(inst.requests)).total == optimum &&
         evaluate_sequence(inst.tape, inst.requests, lfl(inst.tape, inst.requests)).total ==
             optimum;
  }
  report(3, "approximation guarantees (3x, ordering, equal-size exactness)", ok);
}

void criterion_4_linear_separation() {
  auto ratio = [](int n) {
    const Instance inst = gen_fiff_adversarial(n);
    const double fiff_total = static_cast<double>(
        evaluate_sequence(inst.tape, inst.requests, fiff(inst.requests)).total);
    return fiff_total / static_cast<double>(solve_exact(inst.tape, inst.requests).value);
  };
  const double r16 = ratio(16);
  const double r64 = ratio(64);
  report(4, "index-order ratio grows by >= 2x from n=16 to n=64",
         r64 >= 2.0 * r16,
         "ratio(16) = " + std::to_string(r16) + ", ratio(64) = " + std::to_string(r64));
}

void criterion_5_stochastic() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(1505);
  bool ok = true;

  for (int trial = 0; trial < 100 && ok; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    std::vector<Units> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_int(1, 15));
    const Tape tape(sizes);
    std::vector<std::int64_t> weights;
    std::int64_t mass = 0;
    for (int i = 0; i < n; ++i) {
      weights.push_back(rng.uniform_int(0, 4));
      mass += weights.back();
    }
    if (mass == 0) weights[0] = 1;
    ok = solve_weighted(tape, weights).value == oracle_weighted_best(tape, weights).value;
  }

  for (int trial = 0; trial < 50 && ok; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    std::vector<Units> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_int(1, 10));
    const Tape tape(sizes);
    StochasticProfile profile;
    bool any = false;
    for (int i = 0; i < n; ++i) {
      const std::int64_t p = rng.uniform_int(0, 20) * 50'000;
      profile.prob_ppm.push_back(p);
      any = any || p > 0;
    }
    if (!any) profile.prob_ppm[0] = 500'000;

    const Rational optimum(
        oracle_weighted_best(tape, std::span<const std::int64_t>(profile.prob_ppm)).value,
        kProbScale);
    for (const auto& [num, den] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 10}, {1, 2}, {1, 1}}) {
      const Rational eps(num, den);
      const FptasResult result = fptas_solve(tape, profile, eps);
      ok = ok && result.value <= (Rational(1) + eps) * optimum;
    }
  }
  const double elapsed = seconds_since(start);
  report(5, "weighted optimum equals brute force; fptas meets (1+eps)", ok && elapsed < 120.0,
         "elapsed " + std::to_string(elapsed) + " s");
}

void criterion_6_scale_invariance() {
  SplitMix64 rng(1606);
  bool ok = true;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    std::vector<Units> sizes;
    for (int i = 0; i < n; ++i) sizes.push_back(rng.uniform_int(1, 10));
    const Tape tape(sizes);
    std::vector<std::int64_t> weights;
    std::int64_t mass = 0;
    for (int i = 0; i < n; ++i) {
      weights.push_back(rng.uniform_int(0, 3));
      mass += weights.back();
    }
    if (mass == 0) weights[0] = 2;
    const std::int64_t base = solve_weighted(tape, weights).value;

    for (const Units alpha : {2, 5}) {
      for (const std::int64_t beta : {2, 3}) {
        std::vector<Units> scaled_sizes;
        for (const FileRecord& f : tape.files()) scaled_sizes.push_back(alpha * f.size);
        std::vector<std::int64_t> scaled_weights;
        for (std::int64_t w : weights) scaled_weights.push_back(beta * w);
        ok = ok &&
             solve_weighted(Tape(scaled_sizes), scaled_weights).value == alpha * beta * base;
      }
    }
  }
  report(6, "size/probability scaling multiplies the optimum exactly", ok);
}

void criterion_7_online_ari() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  // (a) first-visit times at reversed powers of two.
  const OnlineInstance probe{Tape(std::vector<Units>(64, 1)), {}};
  const HeadTrace trace = simulate_ari(probe, 2);
  for (int k = 2; k <= 6; ++k) {
    const Units x = Units{1} << k;
    const auto visit = first_visit_time(trace, probe.tape.length() - x);
    if (!visit || *visit != 3 * x - 4) {
      ok = false;
      detail = "first-visit formula failed at k = " + std::to_string(k);
    }
  }

  // (b) per-request bound on random timed instances.
  SplitMix64 rng(1707);
  for (int trial = 0; trial < 100 && ok; ++trial) {
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
    const HeadTrace t = simulate_ari(inst, 2);
    for (const ServiceRecord& rec : t.services) {
      const Units lower =
          std::max(rec.release, inst.tape.length() - inst.tape.file(rec.file).left);
      if (rec.response > 7 * lower) {
        ok = false;
        detail = "per-request bound failed";
      }
    }
  }

  // (c) zero releases: total within 7x the offline optimum.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const RandomInstance inst = random_instance(rng, 2, 8, 8);
    std::vector<OnlineRequest> requests;
    for (int id : inst.requests.requested_ids()) requests.push_back({id, 0});
    const OnlineInstance online{inst.tape, requests};
    const Units total = response_metrics(simulate_ari(online, 2)).total_response;
    if (total > 7 * solve_exact(inst.tape, inst.requests).value) {
      ok = false;
      detail = "7x offline-optimum bound failed";
    }
  }
  const double elapsed = seconds_since(start);
  report(7, "online sweeps: visit formula, 7x per-request and total bounds",
         ok && elapsed < 60.0, detail.empty() ? "elapsed " + std::to_string(elapsed) + " s" : detail);
}

void criterion_8_online_fifo() {
  bool ok = true;

  // Exact per-step increments on the middle-out family.
  for (int n : {16, 32}) {
    const OnlineInstance inst = gen_zigzag(n);
    const HeadTrace trace = simulate_online_fifo(inst);
    std::vector<Units> v(static_cast<std::size_t>(n / 2), 0);
    for (std::size_t r = 0; r < inst.requests.size(); ++r) {
      const int file = inst.requests[r].file;
      if (file <= n / 2) {
        v[static_cast<std::size_t>(n / 2 - file)] = trace.services[r].response;
      }
    }
    for (int k = 1; k <= n / 2 - 1; ++k) {
      ok = ok && v[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(k) - 1] == 4 * k + 1;
    }
  }

  // Ratio versus the single-sweep order keeps growing.
  double prev = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const OnlineInstance inst = gen_zigzag(n);
    const Units fifo_total = response_metrics(simulate_online_fifo(inst)).total_response;
    std::vector<OnlineRequest> asc;
    for (int id = 1; id <= n; ++id) asc.push_back({id, 0});
    const Units asc_total =
        response_metrics(simulate_online_fifo({inst.tape, asc})).total_response;
    const double ratio = static_cast<double>(fifo_total) / static_cast<double>(asc_total);
    ok = ok && ratio > prev;
    prev = ratio;
  }
  report(8, "queue-order blowup on the middle-out family (4k+1 steps, growing ratio)", ok);
}

void criterion_9_table_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const int n = 100;
  const int seeds = 10;
  const int fifo_samples = 1000;
  const double to_seconds = 360'000.0;

  double sum_fifo = 0.0, sum_fiff = 0.0, sum_fifila = 0.0, sum_lfl = 0.0, sum_exact = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = 90'000 + static_cast<std::uint64_t>(s);
    const Tape tape = gen_lognormal_tape(n, 13.04, 2.38, seed);
    const RequestSet all = RequestSet::all(n);
    const int m = all.request_count();

    double fifo_mean = 0.0;
    SplitMix64 rng(seed * 13 + 7);
    for (int rep = 0; rep < fifo_samples; ++rep) {
      std::vector<int> arrival = all.requested_ids();
      rng.shuffle(arrival);
      fifo_mean +=
          static_cast<double>(evaluate_sequence(tape, all, Sequence{arrival}).total);
    }
    fifo_mean /= fifo_samples;

    sum_fifo += fifo_mean / m / to_seconds;
    sum_fiff += static_cast<double>(evaluate_sequence(tape, all, fiff(all)).total) / m / to_seconds;
    sum_fifila +=
        static_cast<double>(evaluate_sequence(tape, all, fifila(all)).total) / m / to_seconds;
    sum_lfl +=
        static_cast<double>(evaluate_sequence(tape, all, lfl(tape, all)).total) / m / to_seconds;
    sum_exact += static_cast<double>(solve_exact(tape, all).value) / m / to_seconds;
  }

  const double mean_fifo = sum_fifo / seeds;
  const double mean_fiff = sum_fiff / seeds;
  const double mean_fifila = sum_fifila / seeds;
  const double mean_lfl = sum_lfl / seeds;
  const double mean_exact = sum_exact / seeds;

  auto within = [](double value, double target) {
    return value >= 0.7 * target && value <= 1.3 * target;
  };
  const bool deterministic_bands = within(mean_exact, 0.54) && within(mean_lfl, 0.54) &&
                                   within(mean_fifila, 0.86) && within(mean_fiff, 0.86);
  const bool fifo_band = within(mean_fifo, 1.03);
  const bool ordering = mean_fifo >= mean_fiff && mean_fiff >= mean_fifila &&
                        mean_fifila >= mean_lfl && mean_lfl >= mean_exact;

  char detail[384];
  std::snprintf(detail, sizeof(detail),
                "mean seconds/request: fifo %.3f (band %s) fiff %.3f fifila %.3f lfl %.3f "
                "exact %.3f; other bands %s, ordering %s (elapsed %.1f s)",
                mean_fifo, fifo_band ? "ok" : "MISSED, see notes", mean_fiff, mean_fifila,
                mean_lfl, mean_exact, deterministic_bands ? "ok" : "MISSED",
                ordering ? "ok" : "MISSED", seconds_since(start));
  report(9, "benchmark table bands and policy ordering",
         deterministic_bands && fifo_band && ordering, detail);
}

void criterion_10_complexity() {
  auto exact_seconds = [](int n) {
    const Tape tape = gen_lognormal_tape(n, 13.04, 2.38, 4242);
    const RequestSet all = RequestSet::all(n);
    double best = 1e100;
    for (int run = 0; run < 3; ++run) {
      const auto start = std::chrono::steady_clock::now();
      solve_exact(tape, all);
      best = std::min(best, seconds_since(start));
    }
    return best;
  };

  const double t50 = exact_seconds(50);
  const double t100 = exact_seconds(100);
  const double t200 = exact_seconds(200);

  // Least-squares slope of log T against log n.
  const std::vector<double> xs{std::log(50.0), std::log(100.0), std::log(200.0)};
  const std::vector<double> ys{std::log(t50), std::log(t100), std::log(t200)};
  const double mean_x = (xs[0] + xs[1] + xs[2]) / 3.0;
  const double mean_y = (ys[0] + ys[1] + ys[2]) / 3.0;
  double cov = 0.0, var = 0.0;
  for (int i = 0; i < 3; ++i) {
    cov += (xs[static_cast<std::size_t>(i)] - mean_x) * (ys[static_cast<std::size_t>(i)] - mean_y);
    var += (xs[static_cast<std::size_t>(i)] - mean_x) * (xs[static_cast<std::size_t>(i)] - mean_x);
  }
  const double slope = cov / var;

  const Tape large = gen_lognormal_tape(102'400, 13.04, 2.38, 777);
  const RequestSet all_large = RequestSet::all(102'400);
  const auto lfl_start = std::chrono::steady_clock::now();
  const Sequence plan = lfl(large, all_large);
  const double lfl_seconds = seconds_since(lfl_start);
  const bool lfl_valid = plan.order.size() == 102'400;

  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "exact: %.2fs/%.2fs/%.2fs at n=50/100/200, fit exponent %.2f; lfl(102400) %.4fs",
                t50, t100, t200, slope, lfl_seconds);
  report(10, "solve times: quartic fit and sub-second large-scale lfl",
         t100 < 30.0 && slope <= 4.6 && lfl_seconds < 1.0 && lfl_valid, detail);
}

}  // namespace

int main() {
  criterion_1_worked_examples();
  criterion_2_oracle_equivalence();
  criterion_3_approximation_guarantees();
  criterion_4_linear_separation();
  criterion_5_stochastic();
  criterion_6_scale_invariance();
  criterion_7_online_ari();
  criterion_8_online_fifo();
  criterion_9_table_reproduction();
  criterion_10_complexity();

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
