#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpw/burnside.hpp"
#include "dpw/orbits.hpp"

using namespace dpw;

namespace {

CycleTypeCensus make_census(int ground, std::map<CycleType, BigInt> table) {
  CycleTypeCensus c;
  c.ground_size = ground;
  c.table = std::move(table);
  for (const auto& [t, n] : c.table) c.group_order += n;
  return c;
}

BigInt binom(int n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("generating function of hand-built censuses") {
  // identity on 3 points: (1+x)^3
  BigPoly f = fixed_subset_gf(make_census(3, {{{{1, 3}}, 1}}));
  CHECK(f == BigPoly{1, 3, 3, 1});

  // a single 3-cycle: 1 + x^3
  f = fixed_subset_gf(make_census(3, {{{{3, 1}}, 1}}));
  CHECK(f == BigPoly{1, 0, 0, 1});

  // S3 on 3 points: 6 + 6x + 6x^2 + 6x^3
  f = fixed_subset_gf(make_census(3, {{{{1, 3}}, 1}, {{{1, 1}, {2, 1}}, 3}, {{{3, 1}}, 2}}));
  CHECK(f == BigPoly{6, 6, 6, 6});
}

TEST_CASE("orbit counts for S3 and for the trivial group") {
  OrbitCountTable t =
      orbit_counts(make_census(3, {{{{1, 3}}, 1}, {{{1, 1}, {2, 1}}, 3}, {{{3, 1}}, 2}}));
  CHECK(t.counts == std::vector<BigInt>{1, 1, 1, 1});

  // trivial group on n points: N(k) = C(n, k)
  for (int n : {5, 12}) {
    OrbitCountTable triv = orbit_counts(make_census(n, {{{{1, n}}, 1}}));
    for (int k = 0; k <= n; ++k) CHECK(triv.counts[k] == binom(n, k));
  }
}

TEST_CASE("divisibility failure signals a corrupted census") {
  // identity plus two transpositions on 2 points is no group: the fixed-set
  // series (1+x)^2 + 2(1+x^2) = 3 + 2x + 3x^2 is not divisible by 3
  CycleTypeCensus bad = make_census(2, {{{{1, 2}}, 1}, {{{2, 1}}, 2}});
  CHECK_THROWS(orbit_counts(bad));
}

TEST_CASE("Weyl censuses: palindrome, divisibility, and the power check") {
  for (int n : {4, 5, 6}) {
    RootSystem rs = enumerate_roots(n);
    Bsgs bsgs(build_action(rs, ActionMode::full));
    CycleTypeCensus c = enumerate_cycle_types(bsgs, 2);
    OrbitCountTable t = orbit_counts(c);  // divisibility asserted inside

    const int pts = c.ground_size;
    CHECK(t.counts[0] == 1);
    CHECK(t.counts[pts] == 1);
    for (int k = 0; k <= pts; ++k) CHECK(t.counts[k] == t.counts[pts - k]);

    BigInt sum = 0;
    for (const BigInt& v : t.counts) sum += v;
    CHECK(sum == total_orbit_count_via_powers(c));
  }
}

TEST_CASE("Burnside agrees with direct orbit partitions") {
  for (int n : {4, 5}) {
    RootSystem rs = enumerate_roots(n);
    PermAction act = build_action(rs, ActionMode::full);
    CycleTypeCensus c = enumerate_cycle_types(Bsgs(act), 2);
    OrbitCountTable t = orbit_counts(c);
    for (int k = 1; k <= 3; ++k) {
      OrbitTable part = orbit_partition(act, k);
      CHECK(BigInt(part.orbits.size()) == t.counts[k]);
    }
  }
}
