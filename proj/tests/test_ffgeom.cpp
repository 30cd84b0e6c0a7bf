#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpw/ffgeom.hpp"
#include "dpw/lattice.hpp"

using namespace dpw;
using F = PrimeField::F;

namespace {

PointConfig f19_config() {
  PrimeField K(19);
  return PointConfig(K, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 15}, {15, 4}, {11, 15}, {12, 16}}});
}

LineCurveClass cls(const std::string& s) { return parse_line_class(s); }

const char* kRefClasses[9] = {
    "[0; -1, 0, 0, 0, 0, 0, 0, 0]", "[3; 2, 1, 1, 1, 1, 1, 1, 0]",
    "[6; 3, 2, 2, 2, 2, 2, 2, 2]",  "[1; 1, 1, 0, 0, 0, 0, 0, 0]",
    "[2; 1, 0, 1, 1, 1, 1, 0, 0]",  "[3; 2, 0, 1, 1, 1, 1, 1, 1]",
    "[2; 1, 1, 1, 1, 1, 0, 0, 0]",  "[6; 2, 3, 2, 2, 2, 2, 2, 2]",
    "[6; 2, 2, 3, 2, 2, 2, 2, 2]"};

}  // namespace

TEST_CASE("line class parsing and validation") {
  LineCurveClass l2 = cls(kRefClasses[1]);
  CHECK(l2.d == 3);
  CHECK(l2.mu[0] == 2);
  CHECK(l2.mu[7] == 0);
  CHECK(!l2.exceptional());
  LineCurveClass l1 = cls(kRefClasses[0]);
  CHECK(l1.exceptional());
  CHECK(l1.exceptional_index() == 0);
  CHECK_THROWS(parse_line_class("[1; 1, 1, 1, 0, 0, 0, 0, 0]"));  // not a line class
  CHECK_THROWS(parse_line_class("[2; -1, 0, 1, 1, 1, 1, 0, 0]"));
  CHECK(LineCurveClass::intersection(l1, l2) == 2);
  CHECK(LineCurveClass::intersection(l1, cls(kRefClasses[2])) == 3);

  // every enumerated degree-1 line gives a valid class
  std::vector<Vec> lines = enumerate_lines(8);
  int exceptional = 0;
  for (const Vec& l : lines) {
    std::array<int, 8> mu{};
    for (int i = 1; i <= 8; ++i) mu[i - 1] = -l[i];
    LineCurveClass c(l[0], mu);
    if (c.exceptional()) ++exceptional;
  }
  CHECK(exceptional == 8);
}

TEST_CASE("general position holds for the reference configuration") {
  PointConfig cfg = f19_config();
  GeneralPosition gp = general_position_check(cfg);
  CHECK(gp.collinear_ok);
  CHECK(gp.conic_ok);
  CHECK(gp.cubic_ok);
  CHECK(gp.all());
}

TEST_CASE("general position detects degeneracies") {
  PrimeField K(19);
  // three collinear points
  PointConfig bad1(K, {{{0, 0}, {1, 1}, {2, 2}, {1, 0}, {2, 15}, {15, 4}, {11, 15}, {12, 16}}});
  CHECK(!general_position_check(bad1).collinear_ok);

  // six points on the conic x y = 1
  PointConfig bad2(K, {{{1, 1},
                        {2, 10},  // 2 * 10 = 1 mod 19
                        {3, 13},
                        {4, 5},
                        {5, 4},
                        {6, 16},
                        {0, 0},
                        {1, 0}}});
  GeneralPosition gp = general_position_check(bad2);
  CHECK(!gp.conic_ok);

  CHECK_THROWS(PointConfig(K, {{{0, 0}, {0, 0}, {0, 1}, {1, 1}, {2, 15}, {15, 4}, {11, 15}, {12, 16}}}));
}

TEST_CASE("interpolation of forced classes") {
  PointConfig cfg = f19_config();
  // the line through p1 = (0,0) and p2 = (1,0) is y = 0
  PlanePoly f = interpolate_curve(cls(kRefClasses[3]), cfg);
  CHECK(f.total_degree() == 1);
  CHECK(f.at(0, 1) == 1);
  CHECK(f.at(1, 0) == 0);
  CHECK(f.at(0, 0) == 0);

  // the conic through p1, p3, p4, p5, p6
  PlanePoly conic = interpolate_curve(cls(kRefClasses[4]), cfg);
  CHECK(conic.total_degree() == 2);
  const PrimeField& K = cfg.field;
  int through = 0;
  for (auto [x, y] : cfg.points)
    if (conic.eval(x, y) == 0) ++through;
  CHECK(through == 5);
  (void)K;

  // the sextic with a triple point: 28 - 27 = 1 dimensional system
  PlanePoly sextic = interpolate_curve(cls(kRefClasses[2]), cfg);
  CHECK(sextic.total_degree() == 6);
  CHECK(multiplicity_and_tangent_cone(sextic, 0, 0).multiplicity == 3);

  CHECK_THROWS(interpolate_curve(cls(kRefClasses[0]), cfg));  // exceptional
}

TEST_CASE("local multiplicities and tangent cones") {
  PrimeField K(19);
  PlanePoly cusp(K, 3);  // y^2 - x^3
  cusp.set(0, 2, 1);
  cusp.set(3, 0, K.neg(1));
  LocalType lt = multiplicity_and_tangent_cone(cusp, 0, 0);
  CHECK(lt.multiplicity == 2);
  CHECK(!lt.ordinary);

  PlanePoly node(K, 2);  // x y
  node.set(1, 1, 1);
  lt = multiplicity_and_tangent_cone(node, 0, 0);
  CHECK(lt.multiplicity == 2);
  CHECK(lt.ordinary);

  // beta(l2) has an ordinary double point at p1
  PointConfig cfg = f19_config();
  PlanePoly l2curve = interpolate_curve(cls(kRefClasses[1]), cfg);
  lt = multiplicity_and_tangent_cone(l2curve, 0, 0);
  CHECK(lt.multiplicity == 2);
  CHECK(lt.ordinary);
}

TEST_CASE("local intersection numbers") {
  PrimeField K(19);
  PlanePoly fx(K, 1), fy(K, 1);
  fx.set(1, 0, 1);
  fy.set(0, 1, 1);
  CHECK(local_intersection_multiplicity(fx, fy, 0, 0) == 1);

  PlanePoly parab(K, 2);  // y - x^2
  parab.set(0, 1, 1);
  parab.set(2, 0, K.neg(1));
  CHECK(local_intersection_multiplicity(fy, parab, 0, 0) == 2);

  // symmetry on a random battery
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    PlanePoly f(K, 3), g(K, 3);
    for (int mu = 0; mu <= 3; ++mu)
      for (int nu = 0; mu + nu <= 3; ++nu) {
        f.set(mu, nu, (F)(rng() % 19));
        g.set(mu, nu, (F)(rng() % 19));
      }
    f.set(0, 0, 0);
    g.set(0, 0, 0);  // both through the origin
    if (f.is_zero() || g.is_zero()) continue;
    long long ab, ba;
    try {
      ab = local_intersection_multiplicity(f, g, 0, 0);
      ba = local_intersection_multiplicity(g, f, 0, 0);
    } catch (const std::domain_error&) {
      continue;  // shared component in the random draw
    }
    CHECK(ab == ba);
  }

  // base-point intersections match the lattice products: l2 . l3 = 0 means
  // all 18 = 3*6 Bezout points sit on the base locus
  PointConfig cfg = f19_config();
  LineCurveClass a = cls(kRefClasses[1]), b = cls(kRefClasses[2]);
  CHECK(LineCurveClass::intersection(a, b) == 0);
  PlanePoly fa = interpolate_curve(a, cfg), fb = interpolate_curve(b, cfg);
  long long total = 0;
  for (int i = 0; i < 8; ++i) {
    long long got = local_intersection_multiplicity(fa, fb, cfg.points[i].first,
                                                    cfg.points[i].second);
    CHECK(got == (long long)a.mu[i] * b.mu[i]);
    total += got;
  }
  CHECK(total == 18);  // d_a * d_b

  // common component detection
  CHECK_THROWS(local_intersection_multiplicity(fx, fx, 0, 0));
}

TEST_CASE("pair profiles of the reference pairs") {
  PointConfig cfg = f19_config();
  std::mt19937_64 rng(2024);
  PairProfile p12 = pair_profile(cls(kRefClasses[0]), cls(kRefClasses[1]), cfg, rng);
  CHECK(p12.m == 2);
  CHECK(p12.base_contacts_ok);
  CHECK(p12.off_base_reduced);

  PairProfile p13 = pair_profile(cls(kRefClasses[0]), cls(kRefClasses[2]), cfg, rng);
  CHECK(p13.m == 3);
  CHECK(p13.base_contacts_ok);
  CHECK(p13.off_base_reduced);

  CHECK_THROWS(pair_profile(cls(kRefClasses[0]), cls(kRefClasses[0]), cfg, rng));
  CHECK_THROWS(pair_profile(cls(kRefClasses[0]), cls("[0; 0, -1, 0, 0, 0, 0, 0, 0]"), cfg, rng));

  // a non-exceptional pair exercising the resultant path
  PairProfile p45 = pair_profile(cls(kRefClasses[3]), cls(kRefClasses[4]), cfg, rng);
  CHECK(p45.m == 1);
  CHECK(p45.base_contacts_ok);
  CHECK(p45.off_base_reduced);
}

TEST_CASE("triple profiles of the five reference triples") {
  PointConfig cfg = f19_config();
  std::mt19937_64 rng(77);
  struct Row {
    int i, j, k;
    std::array<int, 3> t;
  };
  const Row rows[] = {{1, 4, 5, {1, 1, 1}},
                      {1, 4, 6, {1, 1, 2}},
                      {1, 3, 7, {1, 1, 3}},
                      {1, 6, 9, {1, 2, 2}},
                      {1, 6, 8, {2, 2, 2}}};
  for (const Row& row : rows) {
    TripleProfile tp = triple_profile(cls(kRefClasses[row.i - 1]), cls(kRefClasses[row.j - 1]),
                                      cls(kRefClasses[row.k - 1]), cfg, rng);
    CHECK(tp.t == row.t);
    CHECK(tp.common_point_free);
  }
}

TEST_CASE("a genuinely concurrent triple is detected") {
  // three base-point lines arranged to meet at the off-base point (0,0): the
  // triple-common-point check must come back false
  PrimeField K(101);
  std::mt19937_64 search(1);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    auto nz = [&] { return (F)(1 + search() % 100); };
    std::array<std::pair<F, F>, 8> pts = {{{nz(), 0},
                                           {nz(), 0},  // on y = 0
                                           {0, nz()},
                                           {0, nz()},  // on x = 0
                                           {0, 0},
                                           {0, 0},  // on y = x, filled below
                                           {(F)(search() % 101), (F)(search() % 101)},
                                           {(F)(search() % 101), (F)(search() % 101)}}};
    F e = nz(), f = nz();
    pts[4] = {e, e};
    pts[5] = {f, f};
    bool distinct = true;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        if (pts[i] == pts[j]) distinct = false;
    if (!distinct) continue;
    PointConfig cfg(K, pts);
    if (!general_position_check(cfg).all()) continue;
    std::mt19937_64 rng(99);
    TripleProfile tp = triple_profile(cls("[1; 1, 1, 0, 0, 0, 0, 0, 0]"),
                                      cls("[1; 0, 0, 1, 1, 0, 0, 0, 0]"),
                                      cls("[1; 0, 0, 0, 0, 1, 1, 0, 0]"), cfg, rng);
    CHECK(tp.t == std::array<int, 3>{1, 1, 1});
    CHECK(!tp.common_point_free);
    return;
  }
  FAIL("no general-position configuration found for the concurrency test");
}

TEST_CASE("general position is invariant under projective coordinate changes") {
  PrimeField K(19);
  std::mt19937_64 rng(31);
  auto transform_points = [&](const std::array<std::pair<F, F>, 8>& pts,
                              const std::array<std::array<F, 3>, 3>& m)
      -> std::optional<std::array<std::pair<F, F>, 8>> {
    std::array<std::pair<F, F>, 8> out;
    for (int i = 0; i < 8; ++i) {
      F hom[3] = {pts[i].first, pts[i].second, 1};
      F im[3];
      for (int r = 0; r < 3; ++r)
        im[r] = K.add(K.add(K.mul(m[r][0], hom[0]), K.mul(m[r][1], hom[1])), K.mul(m[r][2], hom[2]));
      if (im[2] == 0) return std::nullopt;
      F zi = K.inv(im[2]);
      out[i] = {K.mul(im[0], zi), K.mul(im[1], zi)};
    }
    return out;
  };
  auto random_invertible = [&] {
    for (;;) {
      std::array<std::array<F, 3>, 3> m;
      for (auto& row : m)
        for (auto& v : row) v = (F)(rng() % 19);
      // determinant by brute expansion
      long long det = (long long)m[0][0] * ((long long)m[1][1] * m[2][2] % 19 + 19 - (long long)m[1][2] * m[2][1] % 19) % 19;
      det = (det + (long long)m[0][1] * (19 - (long long)m[1][0] * m[2][2] % 19 + (long long)m[1][2] * m[2][0] % 19)) % 19;
      det = (det + (long long)m[0][2] * ((long long)m[1][0] * m[2][1] % 19 + 19 - (long long)m[1][1] * m[2][0] % 19)) % 19;
      if (det % 19) return m;
    }
  };

  PointConfig good = f19_config();
  PointConfig bad(K, {{{0, 0}, {1, 1}, {2, 2}, {1, 0}, {2, 15}, {15, 4}, {11, 15}, {12, 16}}});
  for (const PointConfig* cfg : {&good, &bad}) {
    GeneralPosition before = general_position_check(*cfg);
    int done = 0;
    while (done < 5) {
      auto m = random_invertible();
      auto pts = transform_points(cfg->points, m);
      if (!pts) continue;
      bool distinct = true;
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          if ((*pts)[i] == (*pts)[j]) distinct = false;
      if (!distinct) continue;  // cannot happen for an invertible map
      GeneralPosition after = general_position_check(PointConfig(K, *pts));
      CHECK(after.collinear_ok == before.collinear_ok);
      CHECK(after.conic_ok == before.conic_ok);
      CHECK(after.cubic_ok == before.cubic_ok);
      ++done;
    }
  }
}

TEST_CASE("interpolation output is normalized independently of scaling") {
  PointConfig cfg = f19_config();
  const PrimeField& K = cfg.field;
  PlanePoly f = interpolate_curve(cls(kRefClasses[5]), cfg);
  // the scalar is fixed by normalization: rescaling and renormalizing is a
  // no-op, so any solver (row order, pivoting) yields these coefficients
  for (F c = 1; c < 19; ++c) {
    PlanePoly g = f.scaled(c).normalized();
    CHECK(g.to_string() == f.to_string());
  }
  CHECK(f.normalized().to_string() == f.to_string());
}

TEST_CASE("ordinary tangency bundle criterion") {
  PrimeField K(19);
  // y^3 - x^4 y: auxiliary polynomial z^3 - z with distinct roots
  PlanePoly f(K, 6);
  f.set(0, 3, 1);
  f.set(4, 1, K.neg(1));
  CHECK(tm_singularity_check(f, 3, {0, 0}, {0, 0, 1}));

  // y^3 + x^5: the x^5 term violates condition (i)
  PlanePoly g(K, 6);
  g.set(0, 3, 1);
  g.set(5, 0, 1);
  CHECK(!tm_singularity_check(g, 3, {0, 0}, {0, 0, 1}));

  // (y - x^2)^2 (y + x^2): auxiliary polynomial with a double root
  PlanePoly h(K, 6);
  h.set(0, 3, 1);              // y^3
  h.set(2, 2, K.neg(1));       // -x^2 y^2
  h.set(4, 1, K.neg(1));       // -x^4 y
  h.set(6, 0, 1);              // x^6
  CHECK(!tm_singularity_check(h, 3, {0, 0}, {0, 0, 1}));

  CHECK_THROWS(tm_singularity_check(f, 3, {1, 0}, {0, 0, 1}));  // frame not normalized
  CHECK_THROWS(tm_singularity_check(f, 4, {0, 0}, {0, 0, 1}));  // degree below 2m
}

TEST_CASE("Bezout consistency for reference curve pairs") {
  PointConfig cfg = f19_config();
  std::mt19937_64 rng(4242);
  auto check_pair = [&](const LineCurveClass& a, const LineCurveClass& b) {
    PlanePoly fa = interpolate_curve(a, cfg), fb = interpolate_curve(b, cfg);
    std::vector<std::pair<std::pair<F, F>, long long>> base;
    for (int i = 0; i < 8; ++i) {
      if (a.mu[i] <= 0 || b.mu[i] <= 0) continue;
      long long got = local_intersection_multiplicity(fa, fb, cfg.points[i].first,
                                                      cfg.points[i].second);
      base.push_back({cfg.points[i], got});
    }
    CHECK(bezout_consistent(fa, fb, base, rng));
  };
  check_pair(cls(kRefClasses[1]), cls(kRefClasses[2]));
  check_pair(cls(kRefClasses[3]), cls(kRefClasses[4]));
  check_pair(cls(kRefClasses[5]), cls(kRefClasses[7]));
}
