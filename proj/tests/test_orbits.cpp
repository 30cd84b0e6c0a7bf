#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpw/bsgs.hpp"
#include "dpw/orbits.hpp"

using namespace dpw;

TEST_CASE("combinadic rank enumerates subsets in colex order") {
  CHECK(combinadic_rank({0, 1, 2}) == 0);
  CHECK(combinadic_rank({0, 1, 3}) == 1);
  CHECK(combinadic_rank({0, 2, 3}) == 2);
  CHECK(combinadic_rank({1, 2, 3}) == 3);
  CHECK(combinadic_rank({0, 1, 4}) == 4);
  CHECK(combinadic_rank({}) == 0);
  CHECK(combinadic_rank({7}) == 7);
}

TEST_CASE("orbit of the empty set and input validation") {
  RootSystem rs = enumerate_roots(4);
  PermAction act = build_action(rs, ActionMode::full);
  CHECK(orbit_size_of_subset(act, {}) == 1);
  CHECK_THROWS(orbit_size_of_subset(act, {0, 0}));
  CHECK_THROWS(orbit_size_of_subset(act, {-1}));
  CHECK_THROWS(orbit_size_of_subset(act, {act.ground_size}));
}

TEST_CASE("orbit sizes divide the group order and cover all subsets") {
  for (int n : {4, 5}) {
    RootSystem rs = enumerate_roots(n);
    PermAction act = build_action(rs, ActionMode::full);
    Bsgs bsgs(act);
    BigInt order = bsgs.order();
    for (int k = 1; k <= 3; ++k) {
      OrbitTable table = orbit_partition(act, k);
      BigInt total = 0;
      for (const OrbitInfo& o : table.orbits) {
        CHECK(order % BigInt(o.size) == 0);
        total += o.size;
        CHECK(orbit_size_of_subset(act, o.representative) == o.size);
      }
      BigInt expect = 1;  // C(ground, k)
      for (int i = 0; i < k; ++i) expect = expect * (act.ground_size - i) / (i + 1);
      CHECK(total == expect);
    }
  }
}

TEST_CASE("orbit ids agree with the orbit list") {
  RootSystem rs = enumerate_roots(4);
  PermAction act = build_action(rs, ActionMode::full);
  OrbitTable table = orbit_partition(act, 2, 50'000'000, true);
  REQUIRE(!table.orbit_id.empty());
  std::vector<std::uint64_t> counted(table.orbits.size(), 0);
  for (std::int32_t id : table.orbit_id) {
    REQUIRE(id >= 0);
    REQUIRE(id < (std::int32_t)table.orbits.size());
    ++counted[id];
  }
  for (size_t i = 0; i < table.orbits.size(); ++i) CHECK(counted[i] == table.orbits[i].size);
  for (const OrbitInfo& o : table.orbits)
    CHECK(table.orbit_id[combinadic_rank(o.representative)] ==
          (std::int32_t)(&o - table.orbits.data()));
}

TEST_CASE("the subset cap refuses oversized partitions") {
  RootSystem rs = enumerate_roots(8);
  PermAction act = build_action(rs, ActionMode::full);
  CHECK_THROWS(orbit_partition(act, 4));  // C(240,4) > 5*10^7
}

TEST_CASE("degree-one orbit examples") {
  RootSystem rs = enumerate_roots(8);
  PermAction full = build_action(rs, ActionMode::full);
  PermAction proj = build_action(rs, ActionMode::projective);

  // the projective action is transitive on the 120 pairs
  CHECK(orbit_size_of_subset(proj, {0}) == 120);
  CHECK(orbit_size_of_subset(full, {0}) == 240);

  // a root pair with product -1 (line intersection 0) lies in the 6720-orbit
  int i = 0, j = -1;
  for (size_t b = 1; b < rs.roots.size() && j < 0; ++b)
    if (inner(rs.roots[0], rs.roots[b]) == -1) j = (int)b;
  REQUIRE(j > 0);
  std::vector<std::vector<int>> orbit;
  CHECK(orbit_size_of_subset(full, {i, j}, &orbit) == 6720);
  CHECK(orbit.size() == 6720);
  // unordered consistency: the signed product is constant over the orbit
  for (const auto& pr : orbit)
    CHECK(inner(rs.roots[pr[0]], rs.roots[pr[1]]) == -1);
}
