#include "parkbraid/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "parkbraid/kernels.hpp"

namespace parkbraid {

namespace {

using Detail = std::optional<std::string>;

std::string str(const ParkingFunction& f) { return f.to_string(); }

CheckResult from_scan(std::string name, const ScanReport& r) {
  CheckResult c{std::move(name), r.failures == 0, r.visited, nullptr};
  if (r.failures > 0) {
    c.counterexample = Json{{"f", *r.first_failure}, {"detail", r.detail}, {"failures", r.failures}};
  }
  return c;
}

CheckResult failed(std::string name, std::uint64_t cases, Json counterexample) {
  return CheckResult{std::move(name), false, cases, std::move(counterexample)};
}

// Runs one check, turning an escaping exception into a failed result.
void run(std::vector<CheckResult>& out, const std::string& name, const std::function<CheckResult()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back(failed(name, 0, Json{{"exception", e.what()}}));
  }
}

template <class Body>
CheckResult scan(std::string name, int n, Body body) {
  return from_scan(std::move(name), scan_parking_parallel(n, body));
}

// Counter for checks over explicit collections: records the first failure.
struct Tally {
  std::string name;
  std::uint64_t cases = 0;
  Json first = nullptr;
  void fail(Json what) {
    if (first.is_null()) first = std::move(what);
  }
  void fail_if(bool bad, const std::function<Json()>& what) {
    ++cases;
    if (bad) fail(what());
  }
  CheckResult result() const { return CheckResult{name, first.is_null(), cases, first}; }
};

std::vector<std::vector<Root>> all_tuples(int n) {
  const auto roots = positive_roots(n);
  std::vector<std::vector<Root>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<Root>> next;
    for (const auto& t : out) {
      for (const Root& r : roots) {
        auto u = t;
        u.push_back(r);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

Json roots_json(std::span<const Root> roots) {
  Json j = Json::array();
  for (const Root& r : roots) j.push_back(to_json(r));
  return j;
}

bool distinct_right_ends(const DistinguishedBasis& a) {
  std::set<int> ends;
  for (const Root& r : a.roots()) {
    if (!ends.insert(r.hi()).second) return false;
  }
  return true;
}

std::vector<Root> as_set(const DistinguishedBasis& a) {
  std::vector<Root> r(a.roots().begin(), a.roots().end());
  std::sort(r.begin(), r.end());
  return r;
}

void suite_bijection(int n, std::vector<CheckResult>& out) {
  run(out, "seifert_cases", [&] {
    Tally t{"seifert_cases"};
    for (const Root& a : positive_roots(n)) {
      for (const Root& b : positive_roots(n)) {
        const int s = seifert(a, b);
        const bool case_plus = b.lo() <= a.lo() && a.lo() <= b.hi() && b.hi() <= a.hi();
        const bool case_minus = a.lo() <= b.lo() - 1 && b.lo() - 1 <= a.hi() && a.hi() < b.hi();
        const bool bad = s != seifert_bilinear(a, b) || (case_plus && case_minus) ||
                         s != (case_plus ? 1 : case_minus ? -1 : 0) || seifert(a, a) != 1 ||
                         cartan(a, b) != cartan(b, a);
        t.fail_if(bad, [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"seifert", s}}; });
      }
    }
    return t.result();
  });
  run(out, "diagram_roundtrip", [&] {
    return scan("diagram_roundtrip", n, [](const ParkingFunction& f) -> Detail {
      if (from_diagram(to_diagram(f)) != f) return "from_diagram(to_diagram(f)) != f";
      const auto s = f.sorted();
      if (!s.is_nondecreasing()) return "sorted copy is not weakly increasing";
      return std::nullopt;
    });
  });
  run(out, "in_vector_of_reconstruct", [&] {
    return scan("in_vector_of_reconstruct", n, [](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      if (in_vector(a) != f) return "In(reconstruct(f)) = " + str(in_vector(a));
      return std::nullopt;
    });
  });
  run(out, "geometric_equals_algebraic", [&] {
    return scan("geometric_equals_algebraic", n, [](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      const auto g = reconstruct_geometric(f);
      if (a != g) return "reconstruct " + a.to_string() + " vs geometric " + g.to_string();
      return std::nullopt;
    });
  });
  run(out, "permutation_shortcut", [&] {
    return scan("permutation_shortcut", n, [](const ParkingFunction& f) -> Detail {
      if (!f.is_permutation()) return std::nullopt;
      const auto a = reconstruct(f);
      const auto p = reconstruct_permutation(f.values());
      if (a != p) return "reconstruct " + a.to_string() + " vs permutation rule " + p.to_string();
      return std::nullopt;
    });
  });
  if (n <= 6) {
    run(out, "recursive_enumeration", [&] {
      Tally t{"recursive_enumeration"};
      const auto bases = enumerate_recursive_parallel(n);
      t.fail_if(bases.size() != parking_count(n),
                [&] { return Json{{"count", bases.size()}, {"expected", parking_count(n)}}; });
      std::set<ParkingFunction> images;
      for (const auto& a : bases) {
        const auto f = in_vector(a);
        images.insert(f);
        t.fail_if(reconstruct(f) != a, [&] { return to_json(a); });
        t.fail_if(from_arcs(to_arcs(a)) != a, [&] { return to_json(a); });
        for (int i = 1; i <= n; ++i) gap(a, i);
      }
      t.fail_if(images.size() != bases.size(), [&] { return Json{{"distinct_images", images.size()}}; });
      return t.result();
    });
    run(out, "catalan_arc_sets", [&] {
      Tally t{"catalan_arc_sets"};
      std::set<std::vector<Root>> from_nondecreasing, with_distinct_ends;
      std::uint64_t nondecreasing = 0;
      for (const auto& a : enumerate_recursive_parallel(n)) {
        const bool nd = in_vector(a).is_nondecreasing();
        const bool distinct = distinct_right_ends(a);
        t.fail_if(nd && !distinct, [&] { return to_json(a); });
        if (nd) {
          ++nondecreasing;
          from_nondecreasing.insert(as_set(a));
        }
        if (distinct) with_distinct_ends.insert(as_set(a));
      }
      t.fail_if(nondecreasing != catalan(n) || from_nondecreasing.size() != nondecreasing,
                [&] { return Json{{"nondecreasing", nondecreasing}, {"arc_sets", from_nondecreasing.size()}}; });
      t.fail_if(from_nondecreasing != with_distinct_ends,
                [&] { return Json{{"distinct_right_end_sets", with_distinct_ends.size()}}; });
      return t.result();
    });
  }
  if (n <= 4) {
    run(out, "validate_equals_enumeration", [&] {
      Tally t{"validate_equals_enumeration"};
      std::set<std::vector<Root>> enumerated;
      for (const auto& a : enumerate_recursive(n)) enumerated.emplace(a.roots().begin(), a.roots().end());
      for (const auto& tuple : all_tuples(n)) {
        const bool valid = std::holds_alternative<DistinguishedBasis>(validate(tuple, n));
        t.fail_if(valid != (enumerated.count(tuple) > 0), [&] { return roots_json(tuple); });
      }
      return t.result();
    });
  }
}

void suite_braid(int n, std::vector<CheckResult>& out) {
  if (n < 2) return;
  const auto L = Direction::left;
  const auto R = Direction::right;
  run(out, "inverse_pair", [&] {
    return scan("inverse_pair", n, [&](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      for (int k = 1; k < n; ++k) {
        if (mutate(mutate(a, k, L), k, R) != a) return "beta_" + std::to_string(k) + " alpha_k != id";
        if (mutate(mutate(a, k, R), k, L) != a) return "alpha_" + std::to_string(k) + " beta_k != id";
        if (mutate(a, k, R) != alpha_inverse(a, k)) return "beta_" + std::to_string(k) + " != alpha^-1";
      }
      return std::nullopt;
    });
  });
  run(out, "far_commutation", [&] {
    return scan("far_commutation", n, [&](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      for (int k = 1; k < n; ++k) {
        for (int m = k + 2; m < n; ++m) {
          if (mutate(mutate(a, k, L), m, L) != mutate(mutate(a, m, L), k, L)) {
            return "alpha_" + std::to_string(k) + ", alpha_" + std::to_string(m) + " do not commute";
          }
        }
      }
      return std::nullopt;
    });
  });
  run(out, "braid_relation", [&] {
    return scan("braid_relation", n, [&](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      for (int k = 1; k + 1 < n; ++k) {
        const auto x = mutate(mutate(mutate(a, k, L), k + 1, L), k, L);
        const auto y = mutate(mutate(mutate(a, k + 1, L), k, L), k + 1, L);
        if (x != y) return "braid relation fails at k = " + std::to_string(k);
      }
      return std::nullopt;
    });
  });
  run(out, "generator_orbit_length", [&] {
    return scan("generator_orbit_length", n, [&](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      for (int k = 1; k < n; ++k) {
        int length = 1;
        for (auto b = mutate(a, k, L); b != a && length <= 3; b = mutate(b, k, L)) ++length;
        if (length != generator_order(a, k)) {
          return "alpha_" + std::to_string(k) + " orbit length " + std::to_string(length) + ", predicted " +
                 std::to_string(generator_order(a, k));
        }
      }
      return std::nullopt;
    });
  });
  run(out, "diagram_rules", [&] {
    return scan("diagram_rules", n, [&](const ParkingFunction& f) -> Detail {
      const auto d = to_diagram(f);
      for (int k = 1; k < n; ++k) {
        for (Direction dir : {L, R}) {
          const auto by_rule = mutate_diagram(d, k, dir);
          if (by_rule.diagram != to_diagram(mutate_pf(f, k, dir))) {
            return std::string(dir == L ? "alpha_" : "beta_") + std::to_string(k) + " rule " +
                   std::to_string(by_rule.rule) + " gives " + str(from_diagram(by_rule.diagram)) + ", algebra " +
                   str(mutate_pf(f, k, dir));
          }
        }
      }
      return std::nullopt;
    });
  });
  run(out, "young_flip", [&] {
    Tally t{"young_flip"};
    for (const auto& f : enumerate_nondecreasing(n)) {
      const auto y = young_of(f);
      for (int k = 1; k < n; ++k) {
        for (Direction dir : {L, R}) {
          const auto z = young_of(mutate_pf(f, k, dir));
          bool ok = z == y;
          for (int r = 1; r < n && !ok; ++r) ok = flip_row(y, r) == z;
          t.fail_if(!ok, [&] { return Json{{"f", f.values()}, {"k", k}, {"alpha", dir == L}}; });
        }
      }
    }
    return t.result();
  });
  run(out, "arc_pictures", [&] {
    Tally t{"arc_pictures"};
    for (const Root& a : positive_roots(n)) {
      for (const Root& b : positive_roots(n)) {
        if (seifert(b, a) != 0) continue;
        const Root c = arc_mutation_target(a, b);
        bool ok = false;
        switch (arc_picture(a, b)) {
          case ArcPicture::orthogonal: ok = c == a; break;
          case ArcPicture::same_left: ok = c.lo() == b.hi() + 1; break;
          case ArcPicture::same_right: ok = c.lo() == b.lo(); break;
          case ArcPicture::touching: ok = c.lo() == a.lo(); break;
        }
        t.fail_if(!ok, [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; });
      }
    }
    return t.result();
  });
  if (n <= 5) {
    run(out, "transitive_action", [&] {
      const auto g = orbit_graph_parallel(n);
      Tally t{"transitive_action"};
      t.fail_if(!is_connected(g), [] { return Json{{"connected", false}}; });
      return t.result();
    });
  }
}

void suite_quiver(int n, std::vector<CheckResult>& out) {
  if (n <= 8) {
    run(out, "hom_oracle", [&] {
      const auto r = hom_oracle_parallel(n);
      CheckResult c{"hom_oracle", r.mismatches == 0, r.pairs, nullptr};
      if (r.mismatches) c.counterexample = Json{{"detail", r.first_mismatch}, {"mismatches", r.mismatches}};
      return c;
    });
  }
  run(out, "euler_and_ext", [&] {
    Tally t{"euler_and_ext"};
    for (const Root& a : positive_roots(n)) {
      for (const Root& b : positive_roots(n)) {
        const IntervalModule v(a), w(b);
        const int ext = ext_dim(v, w);
        t.fail_if(euler(v, w) != hom_dim(v, w) - ext || ext > 1,
                  [&] { return Json{{"v", to_json(a)}, {"w", to_json(b)}}; });
        if (seifert(b, a) == 0) {
          t.fail_if(ext != (a.hi() + 1 == b.lo() ? 1 : 0),
                    [&] { return Json{{"v", to_json(a)}, {"w", to_json(b)}, {"ext", ext}}; });
        }
      }
    }
    return t.result();
  });
  if (n <= 4) {
    run(out, "exceptional_equals_validate", [&] {
      Tally t{"exceptional_equals_validate"};
      for (const auto& tuple : all_tuples(n)) {
        const bool valid = std::holds_alternative<DistinguishedBasis>(validate(tuple, n));
        const auto mods = modules_of(tuple);
        t.fail_if(valid != is_exceptional_sequence(mods), [&] { return roots_json(tuple); });
      }
      return t.result();
    });
  }
  run(out, "diagram_reading_rules", [&] {
    return scan("diagram_reading_rules", n, [](const ParkingFunction& f) -> Detail {
      const auto mods = modules_of(reconstruct(f));
      const auto bad = check_diagram_rules(mods);
      if (bad.empty()) return std::nullopt;
      return "rule " + std::to_string(bad[0].rule) + " fails at (" + std::to_string(bad[0].i) + "," +
             std::to_string(bad[0].j) + ")";
    });
  });
  run(out, "filtration_levels", [&] {
    return scan("filtration_levels", n, [](const ParkingFunction& f) -> Detail {
      const auto mods = modules_of(reconstruct(f));
      for (int k = 1; k <= f.size(); ++k) {
        if (filtration_level(mods[k - 1]) != f(k)) return "level of E_" + std::to_string(k);
      }
      return std::nullopt;
    });
  });
  run(out, "nondecreasing_collections", [&] {
    Tally t{"nondecreasing_collections"};
    std::set<std::vector<Root>> from_nondecreasing, without_monos;
    ParkingEnumerator e(n);
    while (auto f = e.next()) {
      const auto a = reconstruct(*f);
      const bool no_mono = is_nondecreasing_collection(modules_of(a));
      t.fail_if(no_mono != distinct_right_ends(a), [&] { return to_json(*f); });
      if (f->is_nondecreasing()) {
        t.fail_if(!no_mono, [&] { return to_json(*f); });
        from_nondecreasing.insert(as_set(a));
      }
      if (no_mono) without_monos.insert(as_set(a));
    }
    t.fail_if(from_nondecreasing.size() != catalan(n) || from_nondecreasing != without_monos, [&] {
      return Json{{"nondecreasing", from_nondecreasing.size()}, {"collections", without_monos.size()},
                  {"catalan", catalan(n)}};
    });
    return t.result();
  });
}

void suite_noncrossing(int n, std::vector<CheckResult>& out) {
  run(out, "lambda_of_pi", [&] {
    return scan("lambda_of_pi", n, [](const ParkingFunction& f) -> Detail {
      const auto a = reconstruct(f);
      const auto c = pi_chain(a);
      auto l = lambda_chain(c);
      for (int& v : l) ++v;
      if (l != std::vector<int>(f.values().begin(), f.values().end())) return "Lambda(Pi(A)) + 1 != In(A)";
      if (chain_to_basis(c) != a) return "chain_to_basis(Pi(A)) != A";
      return std::nullopt;
    });
  });
  if (n <= 6) {
    run(out, "chains", [&] {
      Tally t{"chains"};
      const auto chains = enumerate_chains(n);
      t.fail_if(chains.size() != parking_count(n), [&] { return Json{{"count", chains.size()}}; });
      std::set<std::vector<int>> images;
      for (const auto& c : chains) {
        auto l = lambda_chain(c);
        for (int& v : l) ++v;
        t.fail_if(!is_parking(l), [&] { return to_json(c); });
        images.insert(l);
        t.fail_if(pi_chain(chain_to_basis(c)) != c, [&] { return to_json(c); });
      }
      t.fail_if(images.size() != chains.size(), [&] { return Json{{"distinct_images", images.size()}}; });
      return t.result();
    });
  }
}

}  // namespace

int seifert_bilinear(const Root& a, const Root& b) {
  int s = 0;
  for (int x = a.lo(); x <= a.hi(); ++x) {
    for (int y = b.lo(); y <= b.hi(); ++y) {
      if (x == y) s += 1;
      if (y == x + 1) s -= 1;
    }
  }
  return s;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json j;
  j["n"] = n;
  j["suite"] = suite;
  j["fault_injected"] = fault_injected;
  j["passed"] = passed();
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) e["counterexample"] = c.counterexample;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

VerifyReport run_verify(int n, std::string_view suite) {
  if (n < 1) throw Error("invalid_size", "n must be at least 1");
  static const std::map<std::string_view, std::vector<void (*)(int, std::vector<CheckResult>&)>> suites{
      {"bijection", {suite_bijection}},
      {"braid", {suite_braid}},
      {"quiver", {suite_quiver}},
      {"noncrossing", {suite_noncrossing}},
      {"all", {suite_bijection, suite_braid, suite_quiver, suite_noncrossing}},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw Error("unknown_suite", "no suite named '" + std::string(suite) + "'");
  VerifyReport report;
  report.n = n;
  report.suite = std::string(suite);
  report.fault_injected = fault::seifert_sign_flip();
  for (auto* part : it->second) part(n, report.checks);
  return report;
}

}  // namespace parkbraid
