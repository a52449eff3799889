#include "lts/online.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lts {

Units OnlineInstance::interval() const {
  Units g = 0;
  for (const FileRecord& f : tape.files()) g = std::gcd(g, f.size);
  return g;
}

Units OnlineInstance::interval_count() const { return tape.length() / interval(); }

void OnlineInstance::validate() const {
  for (const OnlineRequest& r : requests) {
    if (r.file < 1 || r.file > tape.file_count()) {
      throw std::invalid_argument("online request for invalid file " + std::to_string(r.file));
    }
    if (r.release < 0) {
      throw std::invalid_argument("negative release time");
    }
  }
}

std::vector<Units> ari_passes(const Tape& tape, int alpha) {
  if (alpha < 2) {
    throw std::invalid_argument("alpha must be at least 2");
  }
  OnlineInstance probe{tape, {}};
  const Units full = tape.length() / probe.interval();

  std::vector<Units> depths;
  Units power = 1;
  do {
    power = (power > full / alpha) ? full : power * alpha;  // saturating alpha^t
    depths.push_back(std::min(power, full));
  } while (depths.back() < full);
  return depths;
}

HeadTrace simulate_ari(const OnlineInstance& instance, int alpha) {
  instance.validate();
  const Units delta = instance.interval();
  const Units length = instance.tape.length();
  const std::vector<Units> depths = ari_passes(instance.tape, alpha);

  struct Pass {
    Units start;     // head leaves `length`
    Units turn;      // head reaches the leftmost point
    Units leftmost;  // position of the turn
  };
  std::vector<Pass> passes;
  Units clock = 0;
  for (Units d : depths) {
    const Units span = d * delta;
    passes.push_back({clock, clock + span, length - span});
    clock += 2 * span;
  }
  const Units base_end = clock;

  // Crossing times of a left edge are monotone over passes, so each request
  // takes the first qualifying pass; requests releasing after the base
  // schedule wait for appended full-depth sweeps.
  Units extension_passes = 0;
  HeadTrace trace;
  trace.services.reserve(instance.requests.size());
  for (const OnlineRequest& req : instance.requests) {
    const Units left = instance.tape.file(req.file).left;
    Units service = -1;
    for (const Pass& pass : passes) {
      if (pass.leftmost > left) continue;
      const Units cross = pass.turn + (left - pass.leftmost);
      if (cross >= req.release) {
        service = cross;
        break;
      }
    }
    if (service < 0) {
      // k-th extension pass crosses `left` at base_end + (k-1)*2L + L + left.
      Units k = 1;
      const Units first_cross = base_end + length + left;
      if (req.release > first_cross) {
        k += (req.release - first_cross + 2 * length - 1) / (2 * length);
      }
      extension_passes = std::max(extension_passes, k);
      service = base_end + (k - 1) * 2 * length + length + left;
    }
    trace.services.push_back({req.file, req.release, service, service, service - req.release});
  }

  trace.path.emplace_back(0, length);
  for (const Pass& pass : passes) {
    trace.path.emplace_back(pass.turn, pass.leftmost);
    trace.path.emplace_back(pass.turn + (length - pass.leftmost), length);
  }
  for (Units k = 0; k < extension_passes; ++k) {
    const Units start = base_end + k * 2 * length;
    trace.path.emplace_back(start + length, 0);
    trace.path.emplace_back(start + 2 * length, length);
  }

  for (const ServiceRecord& rec : trace.services) {
    if (rec.service_time < rec.release) {
      throw std::logic_error("simulation incomplete: request left unserviced");
    }
  }
  return trace;
}

HeadTrace simulate_online_fifo(const OnlineInstance& instance) {
  instance.validate();

  // Stable order by release keeps arrival order on ties; the service order is
  // then exactly the queue order, with idle gaps when the next request is not
  // out yet.
  std::vector<std::size_t> order(instance.requests.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.requests[a].release < instance.requests[b].release;
  });

  HeadTrace trace;
  trace.services.resize(instance.requests.size());
  trace.path.emplace_back(0, instance.tape.length());

  Units clock = 0;
  Units pos = instance.tape.length();
  for (std::size_t idx : order) {
    const OnlineRequest& req = instance.requests[idx];
    const FileRecord& rec = instance.tape.file(req.file);
    if (req.release > clock) {
      clock = req.release;  // idle in place
      trace.path.emplace_back(clock, pos);
    }
    if (pos != rec.left) {
      clock += std::abs(rec.left - pos);
      pos = rec.left;
      trace.path.emplace_back(clock, pos);
    }
    const Units service = clock;
    clock += rec.size;  // read
    pos = rec.right;
    trace.path.emplace_back(clock, pos);
    trace.services[idx] = {req.file, req.release, service, service, service - req.release};
  }
  return trace;
}

ResponseSummary response_metrics(const HeadTrace& trace) {
  ResponseSummary summary;
  for (const ServiceRecord& rec : trace.services) {
    summary.total_response += rec.response;
    summary.total_adjusted += rec.adjusted;
    ++summary.served;
  }
  return summary;
}

std::optional<Units> first_visit_time(const HeadTrace& trace, Units position) {
  for (std::size_t s = 0; s + 1 < trace.path.size(); ++s) {
    const auto [t0, p0] = trace.path[s];
    const auto [t1, p1] = trace.path[s + 1];
    if (p1 <= p0) continue;  // leftward or idle
    if (position < p0 || position > p1) continue;
    const Units when = t0 + (position - p0);
    if (when > 0) return when;
  }
  return std::nullopt;
}

}  // namespace lts
