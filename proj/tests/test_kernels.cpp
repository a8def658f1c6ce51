#include <doctest.h>

#include <omp.h>

#include <algorithm>

#include "parkbraid/bijection.hpp"
#include "parkbraid/kernels.hpp"

using namespace parkbraid;

TEST_CASE("parallel scan matches the serial scan") {
  const ParkingCheck odd_first = [](const ParkingFunction& f) -> std::optional<std::string> {
    if (f(1) % 2 == 1 && f.is_nondecreasing()) return "flagged";
    return std::nullopt;
  };
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int n = 1; n <= 6; ++n) {
      const auto s = scan_parking_serial(n, odd_first);
      const auto p = scan_parking_parallel(n, odd_first);
      CHECK(s == p);
      CHECK(s.visited == parking_count(n));
    }
  }
}

TEST_CASE("scan reports the lexicographically first failure") {
  const ParkingCheck late = [](const ParkingFunction& f) -> std::optional<std::string> {
    if (f(1) >= 3 && f(2) == 2) return "late " + f.to_string();
    return std::nullopt;
  };
  omp_set_num_threads(4);
  const auto r = scan_parking_parallel(6, late);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == std::vector<int>{3, 2, 1, 1, 1, 1});
  CHECK(r.detail == "late (3,2,1,1,1,1)");
}

TEST_CASE("exceptions inside a scan count as failures") {
  const ParkingCheck throws = [](const ParkingFunction& f) -> std::optional<std::string> {
    if (f(2) == 2) throw Error("boom", "thrown");
    return std::nullopt;
  };
  const auto r = scan_parking_parallel(4, throws);
  CHECK(r.failures > 0);
  CHECK(r.detail.find("thrown") != std::string::npos);
  CHECK(r == scan_parking_serial(4, throws));
}

TEST_CASE("parallel enumeration and orbit graph match the serial ones") {
  omp_set_num_threads(3);
  for (int n = 1; n <= 5; ++n) {
    auto s = enumerate_recursive(n);
    auto p = enumerate_recursive_parallel(n);
    std::sort(s.begin(), s.end());
    std::sort(p.begin(), p.end());
    CHECK(s == p);
  }
  for (int n = 2; n <= 4; ++n) {
    const auto s = orbit_graph(n);
    const auto p = orbit_graph_parallel(n);
    CHECK(s.nodes == p.nodes);
    CHECK(s.edges == p.edges);
  }
}

TEST_CASE("hom oracle kernels") {
  for (int n = 1; n <= 6; ++n) {
    const auto s = hom_oracle_serial(n);
    CHECK(s == hom_oracle_parallel(n));
    CHECK(s.mismatches == 0);
    CHECK(s.pairs == static_cast<std::uint64_t>(n * (n + 1) / 2) * (n * (n + 1) / 2));
  }
  CHECK(max_threads() >= 1);
}

TEST_CASE("exceptions leave parallel regions") {
  fault::set_seifert_sign_flip(true);
  CHECK_THROWS(orbit_graph_parallel(3));
  fault::set_seifert_sign_flip(false);
  CHECK_NOTHROW(orbit_graph_parallel(3));
}
