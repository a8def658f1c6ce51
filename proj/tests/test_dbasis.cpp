#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parkbraid/dbasis.hpp"

using namespace parkbraid;

namespace {

std::vector<Root> roots(std::initializer_list<std::pair<int, int>> list, int n) {
  std::vector<Root> out;
  for (auto [lo, hi] : list) out.emplace_back(lo, hi, n);
  return out;
}

oracle::Basis plain(const DistinguishedBasis& a) {
  oracle::Basis b;
  for (const Root& r : a.roots()) b.emplace_back(r.lo(), r.hi());
  return b;
}

BasisDefect defect_of(const std::vector<Root>& r, int n) {
  auto v = validate(r, n);
  REQUIRE(std::holds_alternative<BasisDefect>(v));
  return std::get<BasisDefect>(v);
}

// Every n-tuple of positive roots.
template <class F>
void for_each_tuple(int n, F f) {
  const auto all = positive_roots(n);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<Root> t;
    for (auto i : idx) t.push_back(all[i]);
    f(t);
    int k = n - 1;
    while (k >= 0 && idx[k] + 1 == all.size()) idx[k--] = 0;
    if (k < 0) return;
    ++idx[k];
  }
}

}  // namespace

TEST_CASE("standard basis is distinguished") {
  const auto a = DistinguishedBasis::from_roots(roots({{1, 1}, {2, 2}, {3, 3}}, 3), 3);
  CHECK(a.rank() == 3);
  CHECK(a.at(2) == Root(2, 2, 3));
  CHECK(a.to_string() == "(e_1, e_2, e_3)");
}

TEST_CASE("defects are reported in priority order") {
  CHECK(defect_of(roots({{1, 1}}, 2), 2).kind == DefectKind::wrong_length);
  CHECK(defect_of(roots({{1, 1}, {1, 1}}, 2), 2).kind == DefectKind::dependent);
  const auto s = defect_of(roots({{2, 2}, {1, 1}}, 2), 2);
  CHECK(s.kind == DefectKind::seifert);
  CHECK(s.first == 2);
  CHECK(s.second == 1);
  // Crossing supports always break the triangle first.
  const auto c = defect_of(roots({{1, 2}, {2, 3}, {2, 2}}, 3), 3);
  CHECK(c.kind == DefectKind::seifert);
  CHECK(support_relation(Root(1, 2, 3), Root(2, 3, 3)) == SupportRelation::crossing);
  try {
    DistinguishedBasis::from_roots(roots({{2, 2}, {1, 1}}, 2), 2);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid_basis");
  }
  CHECK_THROWS_AS(DistinguishedBasis::trusted(roots({{2, 2}, {1, 1}}, 2), 2), InternalError);
  CHECK(std::string(to_string(DefectKind::arc_cycle)) == "arc_cycle");
}

TEST_CASE("validate agrees with the unimodular-triangular oracle") {
  for (int n = 1; n <= 4; ++n) {
    int accepted = 0;
    for_each_tuple(n, [&](const std::vector<Root>& t) {
      oracle::Basis b;
      for (const Root& r : t) b.emplace_back(r.lo(), r.hi());
      const bool ours = std::holds_alternative<DistinguishedBasis>(validate(t, n));
      REQUIRE(ours == oracle::is_distinguished(b, n));
      accepted += ours;
    });
    CHECK(accepted == static_cast<int>(oracle::parking_count(n)));
  }
}

TEST_CASE("recursive enumeration equals the braid orbit of the standard basis") {
  for (int n = 0; n <= 6; ++n) {
    const auto bases = enumerate_recursive(n);
    std::set<oracle::Basis> ours;
    for (const auto& a : bases) ours.insert(plain(a));
    REQUIRE(ours.size() == bases.size());
    if (n == 0) {
      CHECK(bases.size() == 1);
      continue;
    }
    CHECK(bases.size() == oracle::parking_count(n));
    CHECK(ours == oracle::braid_orbit(n));
  }
}

TEST_CASE("bases with a given first root partition the enumeration") {
  const int n = 5;
  std::size_t total = 0;
  for (const Root& first : positive_roots(n)) {
    const auto part = enumerate_with_first(first);
    CHECK_FALSE(part.empty());
    for (const auto& a : part) CHECK(a.at(1) == first);
    total += part.size();
  }
  CHECK(total == oracle::parking_count(n));
}

TEST_CASE("arcs") {
  const auto a = DistinguishedBasis::from_roots(roots({{2, 3}, {2, 2}, {1, 3}}, 3), 3);
  const auto d = to_arcs(a);
  REQUIRE(d.arcs.size() == 3);
  CHECK(d.arcs[0] == Arc{1, 3});
  CHECK(d.arcs[1] == Arc{1, 2});
  CHECK(d.arcs[2] == Arc{0, 3});
  CHECK(from_arcs(d) == a);
  CHECK_THROWS_AS(from_arcs(ArcDiagram{3, {{1, 2}, {1, 3}, {0, 3}}}), Error);
  for (const auto& b : enumerate_recursive(5)) REQUIRE(from_arcs(to_arcs(b)) == b);
}

TEST_CASE("arc conditions are individually necessary") {
  // Every tuple read as an arc diagram; dropping a condition admits more.
  const int n = 3;
  int nesting_only = 0, touching_only = 0;
  for_each_tuple(n, [&](const std::vector<Root>& t) {
    ArcDiagram d{n, {}};
    for (const Root& r : t) d.arcs.push_back(Arc{r.lo() - 1, r.hi()});
    const bool all = check_arc_conditions(d);
    const bool no_nesting = check_arc_conditions(d, nullptr, ArcCheckOptions{false, true, true});
    const bool no_touching = check_arc_conditions(d, nullptr, ArcCheckOptions{true, false, true});
    nesting_only += no_nesting && !all;
    touching_only += no_touching && !all;
    oracle::Basis b;
    for (const Root& r : t) b.emplace_back(r.lo(), r.hi());
    REQUIRE(all == oracle::is_distinguished(b, n));
  });
  CHECK(nesting_only > 0);
  CHECK(touching_only > 0);
}

TEST_CASE("span and gap") {
  const auto a = DistinguishedBasis::from_roots(roots({{2, 3}, {2, 2}, {1, 3}}, 3), 3);
  CHECK(span(a, 3) == std::vector<int>{2, 3});
  CHECK(gap(a, 3) == 1);
  CHECK(gap(a, 2) == 2);
  CHECK(span(a, 1) == std::vector<int>{2});
  CHECK(gap(a, 1) == 3);
  for (const auto& b : enumerate_recursive(5)) {
    for (int i = 1; i <= 5; ++i) {
      const int g = gap(b, i);
      REQUIRE(b.at(i).contains(g));
    }
  }
}

TEST_CASE("orthogonal complements") {
  const int n = 5;
  for (const Root& r : positive_roots(n)) {
    const auto left = left_orthogonal_basis(r);
    const auto right = right_orthogonal_basis(r);
    CHECK(static_cast<int>(left.first.size() + left.second.size()) == n - 1);
    CHECK(static_cast<int>(right.first.size() + right.second.size()) == n - 1);
    CHECK(static_cast<int>(left.second.size()) == r.length() - 1);
    for (const auto* part : {&left.first, &left.second}) {
      for (const Root& v : *part) CHECK(seifert(v, r) == 0);
    }
    for (const auto* part : {&right.first, &right.second}) {
      for (const Root& v : *part) CHECK(seifert(r, v) == 0);
    }
    for (const Root& x : left.first) {
      for (const Root& y : left.second) {
        CHECK(seifert(x, y) == 0);
        CHECK(seifert(y, x) == 0);
      }
    }
  }
}
