// Instance text format: the file count on the first line, then one line per
// file with `id size weight prob release`. `prob` is in parts-per-million,
// `release` is -1 for offline instances, and `#` starts a comment. For online
// instances the line order is the request arrival order; offline instances
// are written ascending by id. Round-trips are byte-exact.

#pragma once

#include <iosfwd>
#include <string>

#include "lts/instances.hpp"

namespace lts {

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& instance);
void write_instance_file(const std::string& path, const Instance& instance);

std::string instance_to_string(const Instance& instance);
Instance instance_from_string(const std::string& text);

}  // namespace lts
