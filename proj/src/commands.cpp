#include "parkbraid/commands.hpp"

#include <sstream>

#include "parkbraid/bijection.hpp"
#include "parkbraid/kernels.hpp"

namespace parkbraid {

namespace {

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

void check_limit(int n, int limit, std::string_view what) {
  if (n < 1) throw Error("invalid_size", "n must be at least 1");
  if (n > limit) {
    throw Error("limit_exceeded", std::string(what) + " is limited to n <= " + std::to_string(limit) +
                                      "; raise it with --max-n");
  }
}

Json orbit_json(const OrbitGraph& g) {
  Json j;
  j["n"] = g.n;
  j["nodes"] = Json::array();
  for (const auto& f : g.nodes) j["nodes"].push_back(std::vector<int>(f.values().begin(), f.values().end()));
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back(Json{{"from", e.from},
                              {"to", e.to},
                              {"label", (e.dir == Direction::left ? "a" : "b") + std::to_string(e.k)}});
  }
  return j;
}

Json table_json(const HomExtTable& t) { return Json{{"hom", t.hom}, {"ext", t.ext}}; }

Json arcs_json(const DistinguishedBasis& a) {
  Json j;
  j["n"] = a.rank();
  j["arcs"] = Json::array();
  for (const Arc& arc : to_arcs(a).arcs) j["arcs"].push_back(Json::array({arc.left, arc.right}));
  return j;
}

Json diagram_json(const ParkingDiagram& d) {
  Json j;
  j["n"] = d.size();
  j["rows"] = Json::array();
  for (int b = d.size(); b >= 1; --b) {
    j["rows"].push_back(Json{{"label", d.label_at(b)}, {"length", d.length_at(b)}});
  }
  return j;
}

ParkingFunction any_pf_from_json(const Json& j) {
  if (has(j, "f")) return pf_from_json(j);
  return in_vector(any_basis_from_json(j));
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

Json cmd_convert(const Json& input, std::string_view direction) {
  if (direction == "auto") {
    if (has(input, "f")) direction = "pf-to-basis";
    else if (has(input, "basis")) direction = "basis-to-pf";
    else throw Error("parse_error", "expected \"f\" or \"basis\"");
  }
  if (direction == "pf-to-basis") {
    const auto f = pf_from_json(input);
    const auto a = reconstruct(f);
    Json out = to_json(a);
    out["verified"] = in_vector(a) == f;
    return out;
  }
  if (direction == "basis-to-pf") {
    const auto a = basis_from_json(input);
    const auto f = in_vector(a);
    Json out = to_json(f);
    out["verified"] = reconstruct(f) == a;
    return out;
  }
  throw Error("bad_direction", "direction must be pf-to-basis, basis-to-pf or auto");
}

int default_enumerate_limit(std::string_view kind) {
  if (kind == "pf" || kind == "bases") return 8;
  if (kind == "nondecreasing") return 12;
  if (kind == "chains") return 6;
  throw Error("bad_kind", "kind must be pf, bases, nondecreasing or chains");
}

std::string cmd_enumerate(int n, std::string_view kind, bool count_only, int max_n) {
  const int fallback = default_enumerate_limit(kind);
  const int limit = max_n > 0 ? max_n : fallback;
  check_limit(n, limit, "enumerate " + std::string(kind));
  std::ostringstream os;
  std::uint64_t count = 0;
  auto emit = [&](const Json& j) {
    ++count;
    if (!count_only) os << j.dump() << "\n";
  };
  if (kind == "pf") {
    ParkingEnumerator e(n);
    while (auto f = e.next()) emit(to_json(*f));
  } else if (kind == "nondecreasing") {
    NondecreasingEnumerator e(n);
    while (auto f = e.next()) emit(to_json(*f));
  } else if (kind == "bases") {
    for (const Root& first : positive_roots(n)) {
      for (const auto& a : enumerate_with_first(first)) emit(to_json(a));
    }
  } else {
    for (const auto& c : enumerate_chains(n)) emit(to_json(c));
  }
  if (count_only) os << count << "\n";
  return os.str();
}

Json cmd_braid(const Json& input, std::string_view word) {
  const auto a = any_basis_from_json(input);
  const auto w = BraidWord::parse(word, a.rank());
  const auto b = apply(a, w);
  Json out;
  out["n"] = a.rank();
  out["word"] = w.to_string();
  out["f"] = to_json(in_vector(b))["f"];
  out["basis"] = to_json(b)["basis"];
  out["orders"] = Json::array();
  for (int k = 1; k < a.rank(); ++k) out["orders"].push_back(generator_order(a, k));
  return out;
}

std::string cmd_orbit(int n, std::string_view format) {
  check_limit(n, 6, "orbit");
  const auto g = orbit_graph_parallel(n);
  if (format == "dot") return orbit_dot(g);
  if (format == "json") return dump(orbit_json(g));
  throw Error("unsupported_render", "orbit renders to dot or json");
}

std::string cmd_render(const Json& input, RenderSpec spec) {
  if (!supported(spec)) {
    throw Error("unsupported_render",
                std::string("no ") + to_string(spec.format) + " rendering of " + to_string(spec.target));
  }
  switch (spec.target) {
    case Target::arcs: {
      const auto a = any_basis_from_json(input);
      if (spec.format == Format::ascii) return arcs_ascii(a);
      if (spec.format == Format::svg) return arcs_svg(a);
      return dump(arcs_json(a));
    }
    case Target::diagram: {
      const auto d = to_diagram(any_pf_from_json(input));
      if (spec.format == Format::ascii) return diagram_ascii(d);
      if (spec.format == Format::svg) return diagram_svg(d);
      return dump(diagram_json(d));
    }
    case Target::orbit: {
      if (!has(input, "n") || !input["n"].is_number_integer()) {
        throw Error("parse_error", "expected an object with integer field \"n\"");
      }
      return cmd_orbit(input["n"].get<int>(), to_string(spec.format));
    }
    case Target::table: {
      const auto t = hom_ext_table(modules_of(any_basis_from_json(input)));
      if (spec.format == Format::ascii) return table_ascii(t);
      return dump(table_json(t));
    }
  }
  throw Error("unsupported_render", "unknown target");
}

Json cmd_quiver(const Json& input) {
  const auto a = any_basis_from_json(input);
  const auto mods = modules_of(a);
  Json out = to_json(a);
  const auto t = hom_ext_table(mods);
  out["hom"] = t.hom;
  out["ext"] = t.ext;
  out["exceptional"] = is_exceptional_sequence(mods);
  return out;
}

Json cmd_nc(const Json& input, std::string_view direction) {
  if (direction == "auto") direction = has(input, "chain") ? "to-basis" : "to-chain";
  if (direction == "to-chain") {
    const auto a = any_basis_from_json(input);
    const auto c = pi_chain(a);
    Json out = to_json(c);
    out["lambda"] = lambda_chain(c);
    return out;
  }
  if (direction == "to-basis") {
    const auto c = chain_from_json(input);
    const auto a = chain_to_basis(c);
    Json out = to_json(a);
    out["f"] = to_json(in_vector(a))["f"];
    out["lambda"] = lambda_chain(c);
    return out;
  }
  throw Error("bad_direction", "direction must be to-chain, to-basis or auto");
}

CommandOutput cmd_verify(int n, std::string_view suite, bool inject_fault, int max_n) {
  check_limit(n, max_n, "verify");
  fault::set_seifert_sign_flip(inject_fault);
  VerifyReport report;
  try {
    report = run_verify(n, suite);
  } catch (...) {
    fault::set_seifert_sign_flip(false);
    throw;
  }
  fault::set_seifert_sign_flip(false);
  return CommandOutput{report.to_json().dump(2) + "\n", report.passed() ? 0 : 1};
}

}  // namespace parkbraid
