#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parkbraid/bijection.hpp"
#include "parkbraid/noncrossing.hpp"

using namespace parkbraid;

TEST_CASE("partitions are canonical") {
  const NCPartition p(3, {{3, 1}, {2}, {0}});
  CHECK(p.blocks() == std::vector<Block>{{0}, {1, 3}, {2}});
  CHECK(p.to_string() == "{0}{1,3}{2}");
  CHECK(p.block_of(3) == 1);
  CHECK_FALSE(is_noncrossing(NCPartition(3, {{0, 2}, {1, 3}})));
  CHECK(is_noncrossing(NCPartition(3, {{0, 3}, {1, 2}})));
  CHECK_THROWS_AS(NCPartition(2, {{0, 1}}), Error);
  CHECK_THROWS_AS(NCPartition(2, {{0, 1}, {1, 2}}), Error);
  CHECK(NCPartition::singletons(2).blocks().size() == 3);
}

TEST_CASE("merge steps") {
  const NCPartition from(3, {{0}, {1, 2}, {3}});
  const NCPartition to(3, {{0, 1, 2}, {3}});
  const auto [b, b2] = merge_step(from, to);
  CHECK(b == Block{0});
  CHECK(b2 == Block{1, 2});
  CHECK(lambda(from, to) == 0);
  CHECK_THROWS_AS(merge_step(to, from), Error);
}

TEST_CASE("chain validation") {
  const int n = 2;
  CHECK_NOTHROW(NCChain({NCPartition::singletons(n), NCPartition(n, {{0, 1}, {2}}), NCPartition(n, {{0, 1, 2}})}));
  CHECK_THROWS_AS(NCChain({NCPartition::singletons(n), NCPartition(n, {{0, 1, 2}})}), Error);
  CHECK_THROWS_AS(NCChain({NCPartition(n, {{0, 1}, {2}}), NCPartition(n, {{0, 1, 2}})}), Error);
}

TEST_CASE("chain counts") {
  CHECK(enumerate_chains(1).size() == 1);
  CHECK(enumerate_chains(2).size() == 3);
  CHECK(enumerate_chains(3).size() == 16);
  for (int n = 1; n <= 5; ++n) {
    const auto chains = enumerate_chains(n);
    CHECK(chains.size() == oracle::parking_count(n));
    CHECK(std::is_sorted(chains.begin(), chains.end()));
    for (const auto& c : chains) {
      for (const auto& p : c.partitions()) REQUIRE(is_noncrossing(p));
    }
  }
}

TEST_CASE("lambda of a chain is a shifted parking function and injective") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& c : enumerate_chains(n)) {
      auto l = lambda_chain(c);
      for (int& v : l) ++v;
      REQUIRE(oracle::is_parking(l));
      images.insert(l);
    }
    CHECK(images.size() == oracle::parking_count(n));
  }
}

TEST_CASE("pi and chain_to_basis are inverse and lambda recovers In") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : enumerate_recursive(n)) {
      const auto c = pi_chain(a);
      REQUIRE(chain_to_basis(c) == a);
      auto l = lambda_chain(c);
      for (int& v : l) ++v;
      const auto f = in_vector(a);
      REQUIRE(l == std::vector<int>(f.values().begin(), f.values().end()));
    }
    for (const auto& c : enumerate_chains(n)) REQUIRE(pi_chain(chain_to_basis(c)) == c);
  }
}

TEST_CASE("chain of (2,2,1)") {
  const auto c = pi_chain(reconstruct(ParkingFunction({2, 2, 1})));
  REQUIRE(c.partitions().size() == 4);
  CHECK(c.partitions()[1].to_string() == "{0}{1,3}{2}");
  CHECK(c.partitions()[2].to_string() == "{0}{1,2,3}");
  CHECK(lambda_chain(c) == std::vector<int>{1, 1, 0});
}
