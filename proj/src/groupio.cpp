#include "sylres/groupio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sylres/errors.hpp"

namespace sylres {

GroupFile parse_group_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    GroupFile gf;
    if (!j.is_object()) throw ParseError("group document must be an object");
    if (!j.contains("name") || !j["name"].is_string())
      throw ParseError("missing string field \"name\"");
    gf.name = j["name"].get<std::string>();
    if (!j.contains("degree") || !j["degree"].is_number_unsigned())
      throw ParseError("missing nonnegative integer field \"degree\"");
    u64 degree = j["degree"].get<u64>();
    if (degree == 0) throw ParseError("degree must be positive");
    if (degree > caps().degree_cap)
      throw CapExceeded(degree, caps().degree_cap);
    if (!j.contains("generators") || !j["generators"].is_array())
      throw ParseError("missing array field \"generators\"");
    std::vector<Permutation> gens;
    for (const auto& ge : j["generators"]) {
      if (!ge.is_array())
        throw ParseError("each generator must be a list of 1-based images");
      std::vector<long> img;
      for (const auto& v : ge) {
        if (!v.is_number_integer())
          throw ParseError("generator images must be integers");
        img.push_back(v.get<long>());
      }
      if (img.size() != degree)
        throw ParseError("generator image list does not match the degree");
      gens.push_back(Permutation::from_one_based(img));
    }
    if (j.contains("cycles")) {
      if (!j["cycles"].is_array() || j["cycles"].size() != gens.size())
        throw ParseError(
            "\"cycles\" must list one cycle string per generator");
      for (size_t i = 0; i < gens.size(); ++i) {
        const auto& c = j["cycles"][i];
        if (!c.is_string()) throw ParseError("cycle entries must be strings");
        Permutation p = Permutation::from_cycles(c.get<std::string>(),
                                                 unsigned(degree));
        if (!(p == gens[i]))
          throw ParseError("cycle form of generator " + std::to_string(i) +
                           " disagrees with its image list");
      }
    }
    gf.group = PermGroup::from_generators(unsigned(degree), gens);
    if (j.contains("order")) {
      if (!j["order"].is_number_unsigned())
        throw ParseError("\"order\" must be a nonnegative integer");
      if (gf.group.order() != (unsigned long)j["order"].get<u64>())
        throw ParseError("declared order " +
                         std::to_string(j["order"].get<u64>()) +
                         " differs from the computed order " +
                         gf.group.order().get_str());
    }
    if (j.contains("tags")) {
      if (!j["tags"].is_array()) throw ParseError("\"tags\" must be a list");
      for (const auto& t : j["tags"]) {
        if (!t.is_string()) throw ParseError("tags must be strings");
        gf.tags.push_back(t.get<std::string>());
      }
    }
    return gf;
  } catch (const MalformedPermutation& e) {
    throw ParseError(std::string("bad generator: ") + e.what());
  }
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_json(ss.str());
}

std::string group_to_json(const GroupFile& gf) {
  nlohmann::json j;
  j["name"] = gf.name;
  j["degree"] = gf.group.degree();
  j["generators"] = nlohmann::json::array();
  j["cycles"] = nlohmann::json::array();
  for (const auto& g : gf.group.generators()) {
    j["generators"].push_back(g.one_based());
    j["cycles"].push_back(g.cycle_string());
  }
  if (gf.group.order().fits_ulong_p())
    j["order"] = (unsigned long)gf.group.order().get_ui();
  j["tags"] = gf.tags;
  return j.dump(2);
}

}  // namespace sylres
