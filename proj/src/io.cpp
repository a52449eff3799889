#include "lts/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lts {

namespace {

struct Row {
  int id;
  Units size;
  int weight;
  std::int64_t prob_ppm;
  Units release;
};

}  // namespace

Instance read_instance(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream probe(raw);
    std::string token;
    if (probe >> token) lines.push_back(raw);
  }
  if (lines.empty()) {
    throw std::invalid_argument("instance file is empty");
  }

  int n = 0;
  {
    std::istringstream head(lines.front());
    if (!(head >> n) || n < 1) {
      throw std::invalid_argument("instance file: bad file count");
    }
  }
  if (static_cast<int>(lines.size()) != n + 1) {
    throw std::invalid_argument("instance file: expected " + std::to_string(n) +
                                " record lines, found " + std::to_string(lines.size() - 1));
  }

  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Row row{};
    std::istringstream line(lines[static_cast<std::size_t>(i)]);
    if (!(line >> row.id >> row.size >> row.weight >> row.prob_ppm >> row.release)) {
      throw std::invalid_argument("instance file: malformed record line " + std::to_string(i));
    }
    if (row.id < 1 || row.id > n) {
      throw std::invalid_argument("instance file: id out of range on line " + std::to_string(i));
    }
    if (row.weight != 0 && row.weight != 1) {
      throw std::invalid_argument("instance file: weight must be 0/1");
    }
    rows.push_back(row);
  }

  std::vector<Units> sizes(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> weights(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> probs(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (const Row& row : rows) {
    const std::size_t at = static_cast<std::size_t>(row.id) - 1;
    if (seen[at]++) {
      throw std::invalid_argument("instance file: duplicate id " + std::to_string(row.id));
    }
    sizes[at] = row.size;
    weights[at] = static_cast<std::uint8_t>(row.weight);
    probs[at] = row.prob_ppm;
  }

  Instance inst{Tape(std::move(sizes)), RequestSet::from_weights(std::move(weights)),
                StochasticProfile{std::move(probs)}, {}, "file", 0};
  inst.profile.validate(n);

  // Requested rows with a release form the online arrival list, in line order.
  for (const Row& row : rows) {
    if (row.release >= 0 && row.weight == 1) {
      inst.online.push_back({row.id, row.release});
    }
  }
  return inst;
}

void write_instance(std::ostream& out, const Instance& instance) {
  const int n = instance.tape.file_count();
  out << n << "\n";

  std::vector<Units> release(static_cast<std::size_t>(n), -1);
  for (const OnlineRequest& req : instance.online) {
    release[static_cast<std::size_t>(req.file) - 1] = req.release;
  }

  auto emit = [&](int id) {
    out << id << " " << instance.tape.file(id).size << " " << instance.requests.weight(id) << " "
        << instance.profile.prob_ppm[static_cast<std::size_t>(id) - 1] << " "
        << release[static_cast<std::size_t>(id) - 1] << "\n";
  };

  if (instance.is_online()) {
    // Arrival order first, then any files without a request.
    std::vector<std::uint8_t> emitted(static_cast<std::size_t>(n), 0);
    for (const OnlineRequest& req : instance.online) {
      emit(req.file);
      emitted[static_cast<std::size_t>(req.file) - 1] = 1;
    }
    for (int id = 1; id <= n; ++id) {
      if (!emitted[static_cast<std::size_t>(id) - 1]) emit(id);
    }
  } else {
    for (int id = 1; id <= n; ++id) emit(id);
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance(in);
}

void write_instance_file(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  write_instance(out, instance);
}

std::string instance_to_string(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

Instance instance_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

}  // namespace lts
