#include "parkbraid/json_io.hpp"

#include "parkbraid/bijection.hpp"

namespace parkbraid {

namespace {

int read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw Error("parse_error", "expected an object with integer field \"n\"");
  }
  return j["n"].get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error("parse_error", std::string("\"") + what + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("parse_error", std::string("\"") + what + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("parse_error", e.what());
  }
}

Json to_json(const Root& r) { return Json::array({r.lo(), r.hi()}); }

Json to_json(const ParkingFunction& f) {
  Json j;
  j["n"] = f.size();
  j["f"] = std::vector<int>(f.values().begin(), f.values().end());
  return j;
}

Json to_json(const DistinguishedBasis& a) {
  Json j;
  j["n"] = a.rank();
  j["basis"] = Json::array();
  for (const Root& r : a.roots()) j["basis"].push_back(to_json(r));
  return j;
}

Json to_json(const NCChain& c) {
  Json j;
  j["n"] = c.n();
  j["chain"] = Json::array();
  for (const auto& p : c.partitions()) j["chain"].push_back(p.blocks());
  return j;
}

ParkingFunction pf_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("f")) throw Error("parse_error", "missing field \"f\"");
  auto values = int_array(j["f"], "f");
  if (static_cast<int>(values.size()) != n) throw Error("parse_error", "\"f\" must have n entries");
  return ParkingFunction(std::move(values));
}

DistinguishedBasis basis_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("basis") || !j["basis"].is_array()) throw Error("parse_error", "missing array \"basis\"");
  std::vector<Root> roots;
  for (const auto& r : j["basis"]) {
    const auto pair = int_array(r, "basis");
    if (pair.size() != 2) throw Error("parse_error", "roots are [lo, hi] pairs");
    roots.emplace_back(pair[0], pair[1], n);
  }
  return DistinguishedBasis::from_roots(std::move(roots), n);
}

NCChain chain_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("chain") || !j["chain"].is_array()) throw Error("parse_error", "missing array \"chain\"");
  std::vector<NCPartition> partitions;
  for (const auto& p : j["chain"]) {
    if (!p.is_array()) throw Error("parse_error", "partitions are arrays of blocks");
    std::vector<Block> blocks;
    for (const auto& b : p) blocks.push_back(int_array(b, "chain"));
    partitions.emplace_back(n, std::move(blocks));
  }
  return NCChain(std::move(partitions));
}

DistinguishedBasis any_basis_from_json(const Json& j) {
  if (j.is_object() && j.contains("basis")) return basis_from_json(j);
  if (j.is_object() && j.contains("f")) return reconstruct(pf_from_json(j));
  throw Error("parse_error", "expected \"basis\" or \"f\"");
}

}  // namespace parkbraid
