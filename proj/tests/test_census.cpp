#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "dpw/census.hpp"

using namespace dpw;

namespace {

Perm cycle(int n, std::vector<int> pts) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = (std::uint8_t)i;
  for (size_t i = 0; i < pts.size(); ++i) img[pts[i]] = (std::uint8_t)pts[(i + 1) % pts.size()];
  return Perm::from_images(std::move(img));
}

std::set<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<Perm> all{Perm(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const Perm& a : snapshot)
      for (const Perm& g : gens)
        if (all.insert(compose(a, g)).second) grew = true;
  }
  return all;
}

// independent oracle: census by listing every element
std::map<CycleType, BigInt> census_by_listing(const std::vector<Perm>& gens, int n) {
  std::map<CycleType, BigInt> table;
  for (const Perm& g : closure(gens, n)) ++table[g.cycle_type()];
  return table;
}

}  // namespace

TEST_CASE("trivial group census") {
  Bsgs trivial(5, {});
  CycleTypeCensus c = enumerate_cycle_types(trivial);
  CHECK(c.group_order == BigInt(1));
  REQUIRE(c.table.size() == 1);
  CHECK(c.table.at({{1, 5}}) == BigInt(1));
}

TEST_CASE("census of S3 on 3 points") {
  Bsgs s3(3, {cycle(3, {0, 1}), cycle(3, {1, 2})});
  CycleTypeCensus c = enumerate_cycle_types(s3);
  CHECK(c.group_order == BigInt(6));
  CHECK(c.table.at({{1, 3}}) == BigInt(1));
  CHECK(c.table.at({{1, 1}, {2, 1}}) == BigInt(3));
  CHECK(c.table.at({{3, 1}}) == BigInt(2));
}

TEST_CASE("census of W(A1+A2) matches brute-force listing") {
  RootSystem rs = enumerate_roots(3);
  PermAction act = build_action(rs, ActionMode::full);
  CycleTypeCensus c = enumerate_cycle_types(Bsgs(act));
  CHECK(c.group_order == BigInt(12));
  auto oracle = census_by_listing(act.generators, act.ground_size);
  CHECK(c.table == oracle);
  CHECK(c.table.at({{1, 8}}) == BigInt(1));  // exactly one identity
}

TEST_CASE("census is independent of the worker partition") {
  for (int n : {4, 5}) {
    RootSystem rs = enumerate_roots(n);
    Bsgs bsgs(build_action(rs, ActionMode::full));
    CycleTypeCensus one = enumerate_cycle_types(bsgs, 1);
    CycleTypeCensus four = enumerate_cycle_types(bsgs, 4);
    CHECK(one.table == four.table);
    CHECK(one.group_order == four.group_order);
  }
}

TEST_CASE("census totals match the certified group order") {
  const long long orders[] = {12, 120, 1920, 51840};
  for (int n = 3; n <= 6; ++n) {
    RootSystem rs = enumerate_roots(n);
    Bsgs bsgs(build_action(rs, ActionMode::full));
    CycleTypeCensus c = enumerate_cycle_types(bsgs, 2);
    CHECK(c.group_order == bsgs.order());
    CHECK(c.group_order == BigInt(orders[n - 3]));
    // Burnside on points: sum count * (#fixed points) = |G| * #orbits.
    // The reducible A1+A2 system has two root orbits, the others one.
    BigInt fixed_sum = 0;
    for (const auto& [type, count] : c.table)
      for (auto [len, mult] : type)
        if (len == 1) fixed_sum += count * mult;
    CHECK(fixed_sum == c.group_order * (n == 3 ? 2 : 1));
  }
}

TEST_CASE("random sampling draws genuine group elements") {
  RootSystem rs = enumerate_roots(3);
  PermAction act = build_action(rs, ActionMode::full);
  Bsgs bsgs(act);
  CycleTypeCensus census = enumerate_cycle_types(bsgs);
  std::set<Perm> all = closure(act.generators, act.ground_size);
  std::mt19937_64 rng(123);
  std::set<Perm> seen;
  for (int i = 0; i < 300; ++i) {
    Perm g = random_element(bsgs, rng);
    CHECK(all.count(g) == 1);
    CHECK(census.table.count(g.cycle_type()) == 1);
    seen.insert(g);
  }
  CHECK(seen.size() == 12);  // 300 draws hit every element of a 12-element group
}

TEST_CASE("cache file round-trips bit-exactly") {
  RootSystem rs = enumerate_roots(4);
  CycleTypeCensus c = enumerate_cycle_types(Bsgs(build_action(rs, ActionMode::full)));
  std::string text = census_to_string(c, rs.type_label, "full");

  std::string path = "census_roundtrip_test.tmp";
  write_census_file(path, c, rs.type_label, "full");
  auto loaded = read_census_file(path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->tau == rs.type_label);
  CHECK(loaded->mode == "full");
  CHECK(loaded->census.ground_size == c.ground_size);
  CHECK(loaded->census.group_order == c.group_order);
  CHECK(loaded->census.table == c.table);
  CHECK(census_to_string(loaded->census, loaded->tau, loaded->mode) == text);

  std::ifstream f(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(bytes == text);
  std::remove(path.c_str());

  CHECK(!read_census_file("does_not_exist.census").has_value());
}

TEST_CASE("corrupted cache files are rejected") {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
  };
  std::string path = "census_bad_test.tmp";
  write(path, "census v2 A4 full 20 120\n");
  CHECK_THROWS(read_census_file(path));
  write(path, "census v1 A4 full 20 120\n1^20 : 2\n");  // counts do not sum
  CHECK_THROWS(read_census_file(path));
  write(path, "census v1 A4 full 20 1\n2^1 1^18 : 1\n");  // lengths descending
  CHECK_THROWS(read_census_file(path));
  std::remove(path.c_str());
}

TEST_CASE("ordering hash distinguishes modes and ranks") {
  RootSystem r8 = enumerate_roots(8);
  RootSystem r7 = enumerate_roots(7);
  CHECK(ordering_hash(r8, ActionMode::full) != ordering_hash(r8, ActionMode::projective));
  CHECK(ordering_hash(r8, ActionMode::full) != ordering_hash(r7, ActionMode::full));
  CHECK(census_cache_filename("E8", "full", 0xabcdef) ==
        "census_v1_E8_full_abcdef.txt");
}
