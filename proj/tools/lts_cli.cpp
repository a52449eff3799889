// Command-line surface over the library: generate instance files, solve them
// with any policy or exact method, run benchmark sweeps to CSV, and simulate
// online traces.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lts/exact_dp.hpp"
#include "lts/instances.hpp"
#include "lts/io.hpp"
#include "lts/online.hpp"
#include "lts/policies.hpp"
#include "lts/stochastic.hpp"

namespace {

using namespace lts;

constexpr double kKbPerSecond = 360'000.0;  // 360 MB/s drive speed, KB units

std::string format_fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string seconds_from_units(double units) { return format_fixed(units / kKbPerSecond); }

// Exact decimal parse: "0.25" -> 1/4. Keeps epsilon and p comparisons exact.
Rational parse_decimal(const std::string& text) {
  const std::size_t dot = text.find('.');
  const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (frac.size() > 12) throw CLI::ValidationError("too many decimal places: " + text);
  std::int64_t num = whole.empty() ? 0 : std::stoll(whole);
  std::int64_t den = 1;
  for (char c : frac) {
    if (c < '0' || c > '9') throw CLI::ValidationError("not a decimal: " + text);
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational(num, den);
}

std::int64_t parse_ppm(const std::string& text) {
  const Rational r = parse_decimal(text);
  const Rational ppm = r * Rational(kProbScale);
  if (ppm.den != 1) throw CLI::ValidationError("probability too fine-grained: " + text);
  return ppm.num;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

struct SolveOutcome {
  Sequence sequence;
  double total_units = 0.0;
  bool integral_total = true;
  double runtime_ms = 0.0;
};

Sequence arrival_from_seed(const RequestSet& requests, std::uint64_t seed) {
  std::vector<int> ids = requests.requested_ids();
  SplitMix64 rng(seed);
  rng.shuffle(ids);
  return Sequence{ids};
}

SolveOutcome run_method(const Instance& inst, const std::string& method, const Rational& epsilon,
                        int exact_cap, std::uint64_t arrival_seed, int fifo_samples) {
  SolveOutcome out;
  const auto start = std::chrono::steady_clock::now();
  if (method == "fifo") {
    if (fifo_samples <= 1) {
      out.sequence = fifo(inst.tape, inst.requests, arrival_from_seed(inst.requests, arrival_seed));
      out.total_units =
          static_cast<double>(evaluate_sequence(inst.tape, inst.requests, out.sequence).total);
    } else {
      // Mean objective over seeded uniform shuffles.
      double sum = 0.0;
      for (int s = 0; s < fifo_samples; ++s) {
        const Sequence arrival =
            arrival_from_seed(inst.requests, arrival_seed + static_cast<std::uint64_t>(s));
        sum += static_cast<double>(evaluate_sequence(inst.tape, inst.requests, arrival).total);
      }
      out.sequence = arrival_from_seed(inst.requests, arrival_seed);
      out.total_units = sum / fifo_samples;
      out.integral_total = false;
    }
  } else if (method == "fiff") {
    out.sequence = fiff(inst.requests);
    out.total_units =
        static_cast<double>(evaluate_sequence(inst.tape, inst.requests, out.sequence).total);
  } else if (method == "ssf") {
    out.sequence = ssf(inst.tape, inst.requests);
    out.total_units =
        static_cast<double>(evaluate_sequence(inst.tape, inst.requests, out.sequence).total);
  } else if (method == "fifila") {
    out.sequence = fifila(inst.requests);
    out.total_units =
        static_cast<double>(evaluate_sequence(inst.tape, inst.requests, out.sequence).total);
  } else if (method == "lfl") {
    out.sequence = lfl(inst.tape, inst.requests);
    out.total_units =
        static_cast<double>(evaluate_sequence(inst.tape, inst.requests, out.sequence).total);
  } else if (method == "exact") {
    const int n = inst.tape.file_count();
    if (n > exact_cap) {
      throw std::invalid_argument("exact method refused: n = " + std::to_string(n) +
                                  " exceeds cap " + std::to_string(exact_cap) +
                                  " (raise with --cap)");
    }
    const double table_bytes = 2.0 * 8.0 * (n + 1.0) * (n + 1.0) *
                               (inst.requests.request_count() + 1.0);
    if (table_bytes > 6e9) {
      throw std::invalid_argument("exact method refused: table estimate above 6 GB");
    }
    const DPSolution dp = solve_exact(inst.tape, inst.requests);
    out.sequence = dp.sequence;
    out.total_units = static_cast<double>(dp.value);
  } else if (method == "slts") {
    const WeightedSolution sol =
        solve_weighted(inst.tape, std::span<const std::int64_t>(inst.profile.prob_ppm));
    out.sequence = sol.sequence;
    out.total_units = static_cast<double>(sol.value) / static_cast<double>(kProbScale);
    out.integral_total = false;
  } else if (method == "fptas") {
    const FptasResult result = fptas_solve(inst.tape, inst.profile, epsilon);
    out.sequence = result.sequence;
    out.total_units = result.value.to_double();
    out.integral_total = false;
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }
  out.runtime_ms = elapsed_ms(start);
  return out;
}

int cmd_generate(const std::string& family, int n, double mu, const std::string& sigma,
                 const std::string& p, Units size, std::uint64_t seed, int tiles,
                 int files_per_tile, Units mean_size, Units size_std,
                 const std::vector<int>& bands, int cloud_threshold, const std::string& out_path) {
  Instance inst{Tape({1}), RequestSet::all(1), StochasticProfile::uniform(1, kProbScale), {},
                family, seed};
  if (family == "lognormal") {
    const std::int64_t p_ppm = parse_ppm(p);
    Tape tape = gen_lognormal_tape(n, mu, std::stod(sigma), seed);
    std::uint64_t used = seed;
    RequestSet requests = gen_bernoulli_requests(n, p_ppm, seed + 0x9e37, &used);
    inst = Instance{std::move(tape), std::move(requests),
                    StochasticProfile::uniform(n, p_ppm), {}, family, seed};
  } else if (family == "equal") {
    const std::int64_t p_ppm = parse_ppm(p);
    Tape tape(std::vector<Units>(static_cast<std::size_t>(n), size));
    RequestSet requests = gen_bernoulli_requests(n, p_ppm, seed + 0x9e37);
    inst = Instance{std::move(tape), std::move(requests),
                    StochasticProfile::uniform(n, p_ppm), {}, family, seed};
  } else if (family == "fiff-adversarial") {
    inst = gen_fiff_adversarial(n);
  } else if (family == "zigzag") {
    const OnlineInstance zig = gen_zigzag(n);
    inst = Instance{zig.tape, RequestSet::all(n), StochasticProfile::uniform(n, kProbScale),
                    zig.requests, family, seed};
  } else if (family == "landsat") {
    inst = gen_landsat(tiles, files_per_tile, mean_size, size_std,
                       LandsatPattern{bands, cloud_threshold}, seed);
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  write_instance_file(out_path, inst);
  std::cout << "wrote " << out_path << " (" << inst.tape.file_count() << " files, "
            << inst.requests.request_count() << " requests, length " << inst.tape.length()
            << ")\n";
  return 0;
}

int cmd_solve(const std::string& in_path, const std::string& method, const std::string& epsilon,
              int cap, std::uint64_t arrival_seed) {
  const Instance inst = read_instance_file(in_path);
  const SolveOutcome out = run_method(inst, method, parse_decimal(epsilon), cap, arrival_seed, 1);

  const int m = inst.requests.request_count();
  std::cout << "method: " << method << "\n";
  std::cout << "sequence:";
  for (int id : out.sequence.order) std::cout << " " << id;
  std::cout << "\n";
  if (out.integral_total) {
    std::cout << "total_units: " << static_cast<Units>(out.total_units) << "\n";
  } else {
    std::cout << "total_units: " << format_fixed(out.total_units) << "\n";
  }
  std::cout << "requests: " << m << "\n";
  if (m > 0) {
    std::cout << "avg_per_request_units: " << format_fixed(out.total_units / m) << "\n";
    std::cout << "avg_seconds: " << seconds_from_units(out.total_units / m) << "\n";
  }
  std::cout << "runtime_ms: " << format_fixed(out.runtime_ms, 3) << "\n";
  return 0;
}

int cmd_bench(const std::vector<int>& n_list, const std::vector<std::string>& p_list,
              const std::vector<std::string>& sigma_list, int reps, int fifo_samples, double mu,
              std::uint64_t seed, int cap, const std::string& out_path) {
  std::ofstream csv(out_path);
  if (!csv) throw std::runtime_error("cannot write " + out_path);
  csv << "instance,family,n,p,sigma,policy,total_units,avg_per_request_units,avg_seconds,"
         "runtime_ms,ratio_vs_exact\n";

  bool all_rows_ok = true;
  std::uint64_t instance_counter = 0;
  for (int n : n_list) {
    for (const std::string& p_text : p_list) {
      for (const std::string& sigma_text : sigma_list) {
        for (int rep = 0; rep < reps; ++rep) {
          const std::uint64_t inst_seed = seed + instance_counter++;
          const std::string instance_id = "lognormal-n" + std::to_string(n) + "-p" + p_text +
                                          "-s" + sigma_text + "-r" + std::to_string(rep);
          try {
            const std::int64_t p_ppm = parse_ppm(p_text);
            Tape tape = gen_lognormal_tape(n, mu, std::stod(sigma_text), inst_seed);
            RequestSet requests = gen_bernoulli_requests(n, p_ppm, inst_seed + 0x9e37);
            const Instance inst{std::move(tape), std::move(requests),
                                StochasticProfile::uniform(n, p_ppm), {}, "lognormal", inst_seed};
            const int m = inst.requests.request_count();

            std::optional<double> exact_total;
            std::vector<std::pair<std::string, SolveOutcome>> rows;
            for (const std::string& policy : {"fifo", "fiff", "fifila", "lfl", "exact"}) {
              if (policy == "exact" && n > cap) continue;
              SolveOutcome out = run_method(inst, policy, Rational(1, 2), cap, inst_seed,
                                            policy == "fifo" ? fifo_samples : 1);
              if (policy == "exact") exact_total = out.total_units;
              rows.emplace_back(policy, std::move(out));
            }
            for (const auto& [policy, out] : rows) {
              csv << instance_id << ",lognormal," << n << "," << p_text << "," << sigma_text
                  << "," << policy << ",";
              if (out.integral_total) {
                csv << static_cast<Units>(out.total_units);
              } else {
                csv << format_fixed(out.total_units);
              }
              csv << "," << format_fixed(out.total_units / m) << ","
                  << seconds_from_units(out.total_units / m) << ","
                  << format_fixed(out.runtime_ms, 3) << ",";
              if (exact_total && *exact_total > 0) {
                csv << format_fixed(out.total_units / *exact_total);
              }
              csv << "\n";
            }
          } catch (const std::exception& err) {
            all_rows_ok = false;
            std::cerr << "bench row failed for " << instance_id << ": " << err.what() << "\n";
          }
        }
      }
    }
  }
  std::cout << "wrote " << out_path << "\n";
  return all_rows_ok ? 0 : 1;
}

int cmd_online(const std::string& in_path, const std::string& policy, int alpha,
               const std::string& out_path) {
  const Instance inst = read_instance_file(in_path);
  if (!inst.is_online()) {
    throw std::invalid_argument("instance has no release times; generate an online family");
  }
  const OnlineInstance online = inst.to_online();
  const HeadTrace trace =
      policy == "ari" ? simulate_ari(online, alpha) : simulate_online_fifo(online);

  if (!out_path.empty()) {
    std::ofstream csv(out_path);
    if (!csv) throw std::runtime_error("cannot write " + out_path);
    csv << "file,release,service_time,response,adjusted\n";
    for (const ServiceRecord& rec : trace.services) {
      csv << rec.file << "," << rec.release << "," << rec.service_time << "," << rec.response
          << "," << rec.adjusted << "\n";
    }
  }

  const ResponseSummary summary = response_metrics(trace);
  std::cout << "policy: " << policy << "\n";
  std::cout << "served: " << summary.served << "\n";
  std::cout << "total_response: " << summary.total_response << "\n";
  std::cout << "total_adjusted: " << summary.total_adjusted << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear tape sequencing toolkit"};
  app.require_subcommand(1);

  // generate
  std::string family = "lognormal";
  int n = 100;
  double mu = 13.04;
  std::string sigma = "2.38";
  std::string p = "1.0";
  Units size = 1000;
  std::uint64_t seed = 1;
  int tiles = 15;
  int files_per_tile = 12;
  Units mean_size = 280'000;
  Units size_std = 500;
  std::vector<int> bands{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  int cloud_threshold = 100;
  std::string out_path = "instance.txt";

  CLI::App* generate = app.add_subcommand("generate", "Write an instance file");
  generate->add_option("--family", family,
                       "lognormal | equal | fiff-adversarial | zigzag | landsat");
  generate->add_option("--n", n, "file count");
  generate->add_option("--mu", mu, "log-normal mu");
  generate->add_option("--sigma", sigma, "log-normal sigma");
  generate->add_option("--p", p, "request probability");
  generate->add_option("--size", size, "file size for the equal family (KB)");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--tiles", tiles, "landsat tiles");
  generate->add_option("--files-per-tile", files_per_tile, "landsat files per tile");
  generate->add_option("--mean-size", mean_size, "landsat mean file size (KB)");
  generate->add_option("--size-std", size_std, "landsat size standard deviation (KB)");
  generate->add_option("--bands", bands, "landsat requested bands");
  generate->add_option("--cloud-threshold", cloud_threshold, "landsat pass threshold (0-100)");
  generate->add_option("--out", out_path, "output path");

  // solve
  std::string in_path = "instance.txt";
  std::string method = "lfl";
  std::string epsilon = "0.5";
  int cap = 400;
  std::uint64_t arrival_seed = 1;

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--in", in_path, "instance path");
  solve->add_option("--method", method, "fifo | fiff | ssf | fifila | lfl | exact | slts | fptas");
  solve->add_option("--epsilon", epsilon, "fptas accuracy");
  solve->add_option("--cap", cap, "largest n the exact method accepts");
  solve->add_option("--arrival-seed", arrival_seed, "seed for the fifo arrival shuffle");

  // bench
  std::vector<int> n_list{100};
  std::vector<std::string> p_list{"1.0"};
  std::vector<std::string> sigma_list{"2.38"};
  int reps = 10;
  int fifo_samples = 1000;
  std::string bench_out = "bench.csv";

  CLI::App* bench = app.add_subcommand("bench", "Sweep generated instances into a CSV");
  bench->add_option("--n-list", n_list, "file counts");
  bench->add_option("--p-list", p_list, "request probabilities");
  bench->add_option("--sigma-list", sigma_list, "log-normal sigmas");
  bench->add_option("--reps", reps, "instances per configuration");
  bench->add_option("--fifo-samples", fifo_samples, "uniform shuffles averaged for fifo");
  bench->add_option("--mu", mu, "log-normal mu");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--cap", cap, "largest n the exact method accepts");
  bench->add_option("--out", bench_out, "output CSV path");

  // online
  std::string online_policy = "ari";
  int alpha = 2;
  std::string trace_out;

  CLI::App* online = app.add_subcommand("online", "Simulate an online instance");
  online->add_option("--in", in_path, "instance path");
  online->add_option("--policy", online_policy, "ari | fifo");
  online->add_option("--alpha", alpha, "ari step factor");
  online->add_option("--out", trace_out, "trace CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(family, n, mu, sigma, p, size, seed, tiles, files_per_tile, mean_size,
                          size_std, bands, cloud_threshold, out_path);
    }
    if (solve->parsed()) {
      return cmd_solve(in_path, method, epsilon, cap, arrival_seed);
    }
    if (bench->parsed()) {
      return cmd_bench(n_list, p_list, sigma_list, reps, fifo_samples, mu, seed, cap, bench_out);
    }
    if (online->parsed()) {
      return cmd_online(in_path, online_policy, alpha, trace_out);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
