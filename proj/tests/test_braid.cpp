#include <doctest.h>

#include <map>
#include <set>

#include "figures.hpp"
#include "oracles.hpp"
#include "parkbraid/bijection.hpp"
#include "parkbraid/braid.hpp"

using namespace parkbraid;

namespace {

constexpr Direction L = Direction::left;
constexpr Direction R = Direction::right;

DistinguishedBasis basis(std::initializer_list<std::pair<int, int>> list, int n) {
  std::vector<Root> out;
  for (auto [lo, hi] : list) out.emplace_back(lo, hi, n);
  return DistinguishedBasis::from_roots(std::move(out), n);
}

oracle::Basis plain(const DistinguishedBasis& a) {
  oracle::Basis b;
  for (const Root& r : a.roots()) b.emplace_back(r.lo(), r.hi());
  return b;
}

}  // namespace

TEST_CASE("braid words") {
  const auto w = BraidWord::parse("1 -2  1", 3);
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[1] == Letter{2, R});
  CHECK(w.to_string() == "1 -2 1");
  CHECK(BraidWord::parse("", 3).letters().empty());
  for (const char* bad : {"0", "3", "-3", "x", "1.5", "+"}) {
    try {
      BraidWord::parse(bad, 3);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == "bad_letter");
    }
  }
}

TEST_CASE("alpha_1 cycles the three bases of A_2") {
  const auto a = basis({{1, 1}, {2, 2}}, 2);
  const auto b = mutate(a, 1, L);
  CHECK(b == basis({{2, 2}, {1, 2}}, 2));
  const auto c = mutate(b, 1, L);
  CHECK(c == basis({{1, 2}, {1, 1}}, 2));
  CHECK(mutate(c, 1, L) == a);
  CHECK(generator_order(a, 1) == 3);
}

TEST_CASE("mutation agrees with the coordinate oracle") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : enumerate_recursive(n)) {
      for (int k = 1; k < n; ++k) {
        REQUIRE(plain(mutate(a, k, L)) == oracle::mutate(plain(a), n, k, true));
        REQUIRE(plain(mutate(a, k, R)) == oracle::mutate(plain(a), n, k, false));
      }
    }
  }
  CHECK_THROWS_AS(mutate(basis({{1, 1}, {2, 2}}, 2), 2, L), Error);
}

TEST_CASE("beta is the inverse of alpha") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : enumerate_recursive(n)) {
      for (int k = 1; k < n; ++k) {
        REQUIRE(mutate(mutate(a, k, L), k, R) == a);
        REQUIRE(alpha_inverse(a, k) == mutate(a, k, R));
      }
    }
  }
}

TEST_CASE("braid relations") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& a : enumerate_recursive(n)) {
      for (int k = 1; k + 1 < n; ++k) {
        REQUIRE(apply(a, BraidWord({{k, L}, {k + 1, L}, {k, L}})) ==
                apply(a, BraidWord({{k + 1, L}, {k, L}, {k + 1, L}})));
      }
      for (int k = 1; k < n; ++k) {
        for (int m = k + 2; m < n; ++m) {
          REQUIRE(apply(a, BraidWord({{k, L}, {m, L}})) == apply(a, BraidWord({{m, L}, {k, L}})));
        }
      }
    }
  }
}

TEST_CASE("generator orders are two or three as predicted") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : enumerate_recursive(n)) {
      for (int k = 1; k < n; ++k) {
        int len = 1;
        auto b = mutate(a, k, L);
        while (b != a) {
          b = mutate(b, k, L);
          ++len;
          REQUIRE(len <= 3);
        }
        REQUIRE(len == generator_order(a, k));
      }
    }
  }
}

TEST_CASE("action on parking functions of size 3") {
  CHECK(mutate_pf(ParkingFunction({1, 2, 1}), 1, L) == ParkingFunction({2, 1, 1}));
  CHECK(apply(ParkingFunction({1, 2, 1}), BraidWord::parse("1 -1", 3)) == ParkingFunction({1, 2, 1}));
  for (const auto& [from, to] : figures::pf3_alpha1()) {
    CHECK(mutate_pf(ParkingFunction(from), 1, L) == ParkingFunction(to));
  }
  for (const auto& [from, to] : figures::pf3_alpha2()) {
    CHECK(mutate_pf(ParkingFunction(from), 2, L) == ParkingFunction(to));
  }
}

TEST_CASE("orbit graphs") {
  const auto g2 = orbit_graph(2);
  CHECK(g2.nodes.size() == 3);
  int alpha_edges = 0;
  for (const auto& e : g2.edges) alpha_edges += e.dir == L;
  CHECK(alpha_edges == 3);
  for (int n = 2; n <= 5; ++n) CHECK(is_connected(orbit_graph(n)));
  const auto g3 = orbit_graph(3);
  CHECK(g3.edges.size() == 16 * 4);
  std::map<std::pair<int, int>, int> images;
  for (const auto& e : g3.edges) {
    if (e.dir == L) ++images[{e.to, e.k}];
  }
  for (const auto& [key, count] : images) CHECK(count == 1);
  CHECK_THROWS_AS(orbit_graph(1), Error);
}

TEST_CASE("diagram mutation agrees with the algebra") {
  std::set<int> rules;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : enumerate_parking(n)) {
      const auto d = to_diagram(f);
      for (int k = 1; k < n; ++k) {
        for (Direction dir : {L, R}) {
          const auto m = mutate_diagram(d, k, dir);
          REQUIRE(from_diagram(m.diagram) == mutate_pf(f, k, dir));
          rules.insert(m.rule);
        }
      }
    }
  }
  CHECK(rules == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("rule four swaps labels") {
  int seen = 0;
  for (const auto& f : enumerate_parking(4)) {
    const auto d = to_diagram(f);
    for (int k = 1; k < 4; ++k) {
      const auto m = mutate_diagram(d, k, L);
      if (m.rule != 4) continue;
      ++seen;
      std::vector<int> swapped(f.values().begin(), f.values().end());
      std::swap(swapped[k - 1], swapped[k]);
      REQUIRE(mutate_pf(f, k, L) == ParkingFunction(swapped));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("alpha_6 and beta_6 on the eight-row diagram") {
  const ParkingFunction d1(figures::alpha6_source());
  const ParkingFunction a(figures::alpha6_alpha_image());
  const ParkingFunction b(figures::alpha6_beta_image());
  CHECK(mutate_pf(d1, 6, L) == a);
  CHECK(mutate_pf(d1, 6, R) == b);
  CHECK(from_diagram(mutate_diagram(to_diagram(d1), 6, L).diagram) == a);
  CHECK(from_diagram(mutate_diagram(to_diagram(d1), 6, R).diagram) == b);
}

TEST_CASE("arc pictures") {
  const int n = 4;
  CHECK(arc_picture(Root(1, 1, n), Root(3, 3, n)) == ArcPicture::orthogonal);
  CHECK(arc_picture(Root(1, 3, n), Root(1, 1, n)) == ArcPicture::same_left);
  CHECK(arc_picture(Root(3, 3, n), Root(1, 3, n)) == ArcPicture::same_right);
  CHECK(arc_picture(Root(1, 1, n), Root(2, 3, n)) == ArcPicture::touching);
  CHECK(arc_mutation_target(Root(1, 3, n), Root(1, 1, n)) == Root(2, 3, n));
  CHECK(arc_mutation_target(Root(3, 3, n), Root(1, 3, n)) == Root(1, 2, n));
  CHECK(arc_mutation_target(Root(1, 1, n), Root(2, 3, n)) == Root(1, 3, n));
  try {
    arc_picture(Root(2, 2, n), Root(1, 1, n));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "precondition");
  }
}

TEST_CASE("young diagrams and flips") {
  CHECK(young_of(ParkingFunction({1, 1, 2, 2, 2, 4, 6})) == YoungDiagram{5, 3, 1, 1, 1, 0, 0});
  CHECK(in_staircase(YoungDiagram{2, 1, 0}));
  CHECK_FALSE(in_staircase(YoungDiagram{3, 0, 0}));
  CHECK_FALSE(in_staircase(YoungDiagram{1, 2, 0}));
  CHECK_THROWS_AS(flip_row(YoungDiagram{0, 0, 0}, 3), Error);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& f : enumerate_nondecreasing(n)) {
      const auto y = young_of(f);
      REQUIRE(in_staircase(y));
      for (int r = 1; r < n; ++r) REQUIRE(in_staircase(flip_row(y, r)));
      for (int k = 1; k < n; ++k) {
        for (Direction dir : {L, R}) {
          const auto z = young_of(mutate_pf(f, k, dir));
          bool ok = z == y;
          for (int r = 1; r < n && !ok; ++r) ok = flip_row(y, r) == z;
          REQUIRE(ok);
        }
      }
    }
  }
}
