#include "lts/exact_dp.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lts {

namespace {

constexpr Units kUnset = -1;

class ExactDP {
 public:
  ExactDP(const Tape& tape, const RequestSet& requests)
      : tape_(tape), n_(tape.file_count()), m_(requests.request_count()) {
    prefix_weight_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int id = 1; id <= n_; ++id) {
      prefix_weight_[static_cast<std::size_t>(id)] =
          prefix_weight_[static_cast<std::size_t>(id) - 1] + requests.weight(id);
    }
    const std::size_t cells = static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1) *
                              static_cast<std::size_t>(m_ + 1);
    rewind_memo_.assign(cells, kUnset);
    forward_memo_.assign(cells, kUnset);
  }

  // Requests inside [i, j], inclusive.
  int range_weight(int i, int j) const {
    if (i > j) return 0;
    return prefix_weight_[static_cast<std::size_t>(j)] -
           prefix_weight_[static_cast<std::size_t>(i) - 1];
  }

  void check_state(int i, int j, int k) const {
    if (i < 1 || j > n_ || i > j) {
      throw std::invalid_argument("invalid state: range [" + std::to_string(i) + ", " +
                                  std::to_string(j) + "]");
    }
    if (k < range_weight(i, j) || k > m_) {
      throw std::invalid_argument("invalid state: pending count " + std::to_string(k));
    }
  }

  Units rewind(int i, int j, int k) {
    Units& slot = rewind_memo_[index(i, j, k)];
    if (slot != kUnset) return slot;
    ++states_;

    const FileRecord& fi = tape_.file(i);
    if (i == j) {
      const Units k64 = k;
      slot = k64 * fi.size + 2 * (k64 - requests_weight(i)) * fi.size;
      return slot;
    }
    Units best = std::numeric_limits<Units>::max();
    for (int split = i + 1; split <= j; ++split) {
      const Units value = rewind(split, j, k) + rewind(i, split - 1, k - range_weight(split, j));
      if (value < best) best = value;
    }
    const Units via_forward =
        forward(i, j, k) + static_cast<Units>(k - range_weight(i, j)) * tape_.distance(j, i);
    if (via_forward < best) best = via_forward;
    slot = best;
    return slot;
  }

  Units forward(int i, int j, int k) {
    Units& slot = forward_memo_[index(i, j, k)];
    if (slot != kUnset) return slot;
    ++states_;

    const FileRecord& fj = tape_.file(j);
    const Units k64 = k;
    Units value = k64 * fj.size + static_cast<Units>(k - range_weight(i, j)) * fj.size;
    if (i < j) {
      Units best = std::numeric_limits<Units>::max();
      for (int split = i; split < j; ++split) {
        const Units inner = (split + 1 <= j - 1) ? rewind(split + 1, j - 1, k) : 0;
        const Units tail = forward(i, split, k - range_weight(split + 1, j - 1)) +
                           static_cast<Units>(k - range_weight(i, j - 1)) *
                               tape_.distance(split, j);
        if (inner + tail < best) best = inner + tail;
      }
      value += best;
    }
    slot = value;
    return slot;
  }

  // Reconstruction re-derives each argmin from the memoized children, using
  // the same tie rule as the minimization: the forward branch wins ties, and
  // smaller split points win among equal splits.
  void rebuild_rewind(int i, int j, int k, std::vector<int>& out) {
    if (i == j) {
      out.push_back(i);
      return;
    }
    const Units target = rewind(i, j, k);
    const Units via_forward =
        forward(i, j, k) + static_cast<Units>(k - range_weight(i, j)) * tape_.distance(j, i);
    if (via_forward == target) {
      rebuild_forward(i, j, k, out);
      return;
    }
    for (int split = i + 1; split <= j; ++split) {
      const int rest = k - range_weight(split, j);
      if (rewind(split, j, k) + rewind(i, split - 1, rest) == target) {
        rebuild_rewind(split, j, k, out);
        rebuild_rewind(i, split - 1, rest, out);
        return;
      }
    }
    throw std::logic_error("dp reconstruction failed");
  }

  void rebuild_forward(int i, int j, int k, std::vector<int>& out) {
    if (i == j) {
      out.push_back(i);
      return;
    }
    const FileRecord& fj = tape_.file(j);
    const Units base =
        static_cast<Units>(k) * fj.size + static_cast<Units>(k - range_weight(i, j)) * fj.size;
    const Units target = forward(i, j, k) - base;
    for (int split = i; split < j; ++split) {
      const Units inner = (split + 1 <= j - 1) ? rewind(split + 1, j - 1, k) : 0;
      const int rest = k - range_weight(split + 1, j - 1);
      const Units tail = forward(i, split, rest) +
                         static_cast<Units>(k - range_weight(i, j - 1)) * tape_.distance(split, j);
      if (inner + tail == target) {
        if (split + 1 <= j - 1) rebuild_rewind(split + 1, j - 1, k, out);
        rebuild_forward(i, split, rest, out);
        out.push_back(j);
        return;
      }
    }
    throw std::logic_error("dp reconstruction failed");
  }

  std::size_t states() const { return states_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(m_ + 1) +
           static_cast<std::size_t>(k);
  }

  int requests_weight(int id) const {
    return prefix_weight_[static_cast<std::size_t>(id)] -
           prefix_weight_[static_cast<std::size_t>(id) - 1];
  }

  const Tape& tape_;
  int n_;
  int m_;
  std::vector<int> prefix_weight_;
  std::vector<Units> rewind_memo_;
  std::vector<Units> forward_memo_;
  std::size_t states_ = 0;
};

}  // namespace

Units rewind_value(const Tape& tape, const RequestSet& requests, int i, int j, int k) {
  ExactDP dp(tape, requests);
  dp.check_state(i, j, k);
  return dp.rewind(i, j, k);
}

Units forward_value(const Tape& tape, const RequestSet& requests, int i, int j, int k) {
  ExactDP dp(tape, requests);
  dp.check_state(i, j, k);
  return dp.forward(i, j, k);
}

DPSolution solve_exact(const Tape& tape, const RequestSet& requests) {
  if (requests.request_count() < 1) {
    throw std::invalid_argument("empty request set");
  }
  const RebasedInstance rebased = rebase_to_first_request(tape, requests);
  ExactDP dp(rebased.tape, rebased.requests);

  DPSolution solution;
  const int n = rebased.tape.file_count();
  const int m = rebased.requests.request_count();
  solution.value = dp.rewind(1, n, m);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  dp.rebuild_rewind(1, n, m, order);
  for (int& id : order) id += rebased.id_offset;
  solution.sequence.order = std::move(order);
  solution.states_evaluated = dp.states();
  return solution;
}

}  // namespace lts
