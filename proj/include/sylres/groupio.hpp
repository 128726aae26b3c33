#pragma once

#include <string>

#include "sylres/permgroup.hpp"

namespace sylres {

// Group definition as read from a JSON document:
//   { "name": str, "degree": n, "generators": [[1-based images], ...],
//     "cycles": [str, ...]?, "order": int?, "tags": [str, ...]? }
// "cycles" and "order", when present, must agree with the generators.
struct GroupFile {
  std::string name;
  PermGroup group;
  std::vector<std::string> tags;
};

// ParseError on malformed input; CapExceeded when the degree exceeds
// caps().degree_cap (the ingestion boundary enforces the cap)
GroupFile parse_group_json(const std::string& text);

GroupFile load_group_file(const std::string& path);

std::string group_to_json(const GroupFile& gf);

}  // namespace sylres
