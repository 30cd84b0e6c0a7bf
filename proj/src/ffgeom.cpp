#include "dpw/ffgeom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dpw {

namespace {

using F = PrimeField::F;

F det3(const PrimeField& K, const std::array<std::array<F, 3>, 3>& m) {
  F a = K.mul(m[0][0], K.sub(K.mul(m[1][1], m[2][2]), K.mul(m[1][2], m[2][1])));
  F b = K.mul(m[0][1], K.sub(K.mul(m[1][0], m[2][2]), K.mul(m[1][2], m[2][0])));
  F c = K.mul(m[0][2], K.sub(K.mul(m[1][0], m[2][1]), K.mul(m[1][1], m[2][0])));
  return K.add(K.sub(a, b), c);
}

std::array<std::array<F, 3>, 3> adjugate(const PrimeField& K,
                                         const std::array<std::array<F, 3>, 3>& m) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return K.sub(K.mul(m[r0][c0], m[r1][c1]), K.mul(m[r0][c1], m[r1][c0]));
  };
  std::array<std::array<F, 3>, 3> adj;
  adj[0] = {minor(1, 2, 1, 2), K.neg(minor(0, 2, 1, 2)), minor(0, 1, 1, 2)};
  adj[1] = {K.neg(minor(1, 2, 0, 2)), minor(0, 2, 0, 2), K.neg(minor(0, 1, 0, 2))};
  adj[2] = {minor(1, 2, 0, 1), K.neg(minor(0, 2, 0, 1)), minor(0, 1, 0, 1)};
  return adj;
}

}  // namespace

PointConfig::PointConfig(const PrimeField& K, std::array<std::pair<Fp, Fp>, 8> pts)
    : field(K), points(pts) {
  for (auto& [x, y] : points) {
    if (x >= K.p() || y >= K.p()) throw std::invalid_argument("PointConfig: coordinate not reduced");
  }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (points[i] == points[j]) throw std::invalid_argument("PointConfig: duplicate points");
}

GeneralPosition general_position_check(const PointConfig& cfg) {
  const PrimeField& K = cfg.field;
  const auto& p = cfg.points;
  GeneralPosition out;

  out.collinear_ok = true;
  for (int i = 0; i < 8 && out.collinear_ok; ++i)
    for (int j = i + 1; j < 8 && out.collinear_ok; ++j)
      for (int k = j + 1; k < 8; ++k) {
        std::array<std::array<F, 3>, 3> m = {{{p[i].first, p[i].second, 1},
                                              {p[j].first, p[j].second, 1},
                                              {p[k].first, p[k].second, 1}}};
        if (det3(K, m) == 0) {
          out.collinear_ok = false;
          break;
        }
      }

  // conic monomials x^2, xy, y^2, x, y, 1 at six of the points: rank must be 6
  auto conic_row = [&](int i) {
    F x = p[i].first, y = p[i].second;
    return std::vector<F>{K.mul(x, x), K.mul(x, y), K.mul(y, y), x, y, 1};
  };
  out.conic_ok = true;
  for (int skip1 = 0; skip1 < 8 && out.conic_ok; ++skip1)
    for (int skip2 = skip1 + 1; skip2 < 8; ++skip2) {
      std::vector<std::vector<F>> rows;
      for (int i = 0; i < 8; ++i)
        if (i != skip1 && i != skip2) rows.push_back(conic_row(i));
      if (!nullspace(K, rows, 6).empty()) {
        out.conic_ok = false;
        break;
      }
    }

  // ten cubic monomials; seven point conditions plus value and both first
  // Hasse derivatives at the eighth point: only the trivial cubic may remain
  const std::array<std::pair<int, int>, 10> cubics = {
      {{3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}}};
  auto monomial_eval = [&](int a, int b, F x, F y) { return K.mul(K.pow(x, a), K.pow(y, b)); };
  out.cubic_ok = true;
  for (int q = 0; q < 8 && out.cubic_ok; ++q) {
    std::vector<std::vector<F>> rows;
    for (int i = 0; i < 8; ++i) {
      if (i == q) continue;
      std::vector<F> row;
      for (auto [a, b] : cubics) row.push_back(monomial_eval(a, b, p[i].first, p[i].second));
      rows.push_back(std::move(row));
    }
    F x = p[q].first, y = p[q].second;
    std::vector<F> val, dx, dy;
    for (auto [a, b] : cubics) {
      val.push_back(monomial_eval(a, b, x, y));
      dx.push_back(a ? K.mul(K.from_int(a), monomial_eval(a - 1, b, x, y)) : 0);
      dy.push_back(b ? K.mul(K.from_int(b), monomial_eval(a, b - 1, x, y)) : 0);
    }
    rows.push_back(val);
    rows.push_back(dx);
    rows.push_back(dy);
    if (!nullspace(K, rows, 10).empty()) out.cubic_ok = false;
  }
  return out;
}

LineCurveClass::LineCurveClass(int d_, std::array<int, 8> mu_) : d(d_), mu(mu_) {
  long long nn = (long long)d * d, deg = 3LL * d;
  for (int m : mu) {
    nn -= (long long)m * m;
    deg -= m;
    if (m < -1) throw std::invalid_argument("LineCurveClass: multiplicity below -1");
  }
  if (nn != -1 || deg != 1)
    throw std::invalid_argument("LineCurveClass: not a line class (needs self-intersection -1 "
                                "and anticanonical degree 1)");
  bool has_neg = std::any_of(mu.begin(), mu.end(), [](int m) { return m < 0; });
  if (has_neg && !exceptional())
    throw std::invalid_argument("LineCurveClass: -1 entries only encode an exceptional class");
}

bool LineCurveClass::exceptional() const {
  if (d != 0) return false;
  int negs = 0, zeros = 0;
  for (int m : mu) {
    if (m == -1) ++negs;
    if (m == 0) ++zeros;
  }
  return negs == 1 && zeros == 7;
}

int LineCurveClass::exceptional_index() const {
  if (!exceptional()) return -1;
  for (int i = 0; i < 8; ++i)
    if (mu[i] == -1) return i;
  return -1;
}

int LineCurveClass::intersection(const LineCurveClass& a, const LineCurveClass& b) {
  long long s = (long long)a.d * b.d;
  for (int i = 0; i < 8; ++i) s -= (long long)a.mu[i] * b.mu[i];
  return (int)s;
}

std::string LineCurveClass::to_string() const {
  std::ostringstream os;
  os << "[" << d << "; ";
  for (int i = 0; i < 8; ++i) os << mu[i] << (i < 7 ? ", " : "]");
  return os.str();
}

LineCurveClass parse_line_class(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace((unsigned char)c)) s += c;
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("parse_line_class: expected \"[d; m1,...,m8]\"");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("parse_line_class: missing ';'");
  int d = std::stoi(s.substr(0, semi));
  std::array<int, 8> mu{};
  std::string rest = s.substr(semi + 1);
  std::istringstream is(rest);
  std::string tok;
  int i = 0;
  while (std::getline(is, tok, ',')) {
    if (i >= 8) throw std::invalid_argument("parse_line_class: too many multiplicities");
    mu[i++] = std::stoi(tok);
  }
  if (i != 8) throw std::invalid_argument("parse_line_class: expected 8 multiplicities");
  return LineCurveClass(d, mu);
}

PlanePoly interpolate_curve(const LineCurveClass& cls, const PointConfig& cfg) {
  if (cls.exceptional())
    throw std::invalid_argument("interpolate_curve: exceptional class has no plane curve");
  const PrimeField& K = cfg.field;
  const int d = cls.d;
  std::vector<std::pair<int, int>> monomials;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) monomials.emplace_back(a, b);

  // Pascal rows are exact in any characteristic
  std::vector<std::vector<F>> C(d + 1, std::vector<F>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j) C[i][j] = K.add(C[i - 1][j - 1], C[i - 1][j]);
  }

  std::vector<std::vector<F>> rows;
  for (int i = 0; i < 8; ++i) {
    if (cls.mu[i] <= 0) continue;
    F x = cfg.points[i].first, y = cfg.points[i].second;
    std::vector<F> px(d + 1, 1), py(d + 1, 1);
    for (int k = 1; k <= d; ++k) px[k] = K.mul(px[k - 1], x), py[k] = K.mul(py[k - 1], y);
    // Hasse derivative D^(j,k) f (p_i) = 0 for all j + k < mu_i
    for (int j = 0; j < cls.mu[i]; ++j)
      for (int k = 0; j + k < cls.mu[i]; ++k) {
        std::vector<F> row;
        for (auto [a, b] : monomials) {
          F v = 0;
          if (a >= j && b >= k)
            v = K.mul(K.mul(C[a][j], C[b][k]), K.mul(px[a - j], py[b - k]));
          row.push_back(v);
        }
        rows.push_back(std::move(row));
      }
  }

  auto kernel = nullspace(K, rows, (int)monomials.size());
  if (kernel.size() != 1)
    throw std::runtime_error("interpolate_curve: solution space has dimension " +
                             std::to_string(kernel.size()) + " for class " + cls.to_string());
  PlanePoly f(K, d);
  for (size_t t = 0; t < monomials.size(); ++t)
    f.set(monomials[t].first, monomials[t].second, kernel[0][t]);
  if (f.total_degree() != d)
    throw std::runtime_error("interpolate_curve: degenerate solution of lower degree for class " +
                             cls.to_string());
  for (int i = 0; i < 8; ++i) {
    int got = multiplicity_and_tangent_cone(f, cfg.points[i].first, cfg.points[i].second)
                  .multiplicity;
    if (got != cls.mu[i])
      throw std::runtime_error("interpolate_curve: multiplicity " + std::to_string(got) +
                               " at point " + std::to_string(i + 1) + ", expected " +
                               std::to_string(cls.mu[i]) + " for class " + cls.to_string());
  }
  return f.normalized();
}

LocalType multiplicity_and_tangent_cone(const PlanePoly& f, Fp qx, Fp qy) {
  if (f.is_zero()) throw std::domain_error("multiplicity_and_tangent_cone: zero polynomial");
  PlanePoly at0 = f.translated(qx, qy);
  LocalType out;
  out.multiplicity = at0.multiplicity_at_origin();
  out.tangent_cone = lowest_form(at0);
  out.ordinary = out.multiplicity == 0 || binary_form_squarefree(f.field(), out.tangent_cone);
  return out;
}

long long local_intersection_multiplicity(const PlanePoly& f0, const PlanePoly& g0, Fp qx,
                                          Fp qy) {
  const PrimeField& K = f0.field();
  PlanePoly f = f0.translated(qx, qy), g = g0.translated(qx, qy);
  long long total = 0;
  for (int guard = 0; guard < 1000000; ++guard) {
    if (f.is_zero() || g.is_zero())
      throw std::domain_error("local_intersection_multiplicity: common component detected");
    if (f.eval(0, 0) != 0 || g.eval(0, 0) != 0) return total;
    UPoly a = f.restrict_y0(), b = g.restrict_y0();
    if (a.empty() && b.empty())
      throw std::domain_error("local_intersection_multiplicity: common component detected");
    if (a.empty() || b.empty()) {
      if (a.empty()) {  // y | f and g(x,0) != 0
        f = f.divided_by_y();
        int ord = 0;
        while (b[ord] == 0) ++ord;  // I(y, g) = ord_0 g(x, 0)
        total += ord;
      } else {
        g = g.divided_by_y();
        int ord = 0;
        while (a[ord] == 0) ++ord;
        total += ord;
      }
      continue;
    }
    if (updeg(a) > updeg(b)) {
      std::swap(f, g);
      std::swap(a, b);
    }
    // cancel the top of g's restriction with a shifted multiple of f
    F c = K.mul(b.back(), K.inv(a.back()));
    PlanePoly shift(K, updeg(b) - updeg(a));
    shift.set(updeg(b) - updeg(a), 0, c);
    g = g.sub(f.mul(shift));
  }
  throw std::logic_error("local_intersection_multiplicity: no convergence");
}

namespace {

struct TransformedPair {
  PlanePoly f, g;
  std::array<std::pair<F, F>, 8> pts;
};

std::array<std::array<F, 3>, 3> random_matrix(const PrimeField& K, std::mt19937_64& rng) {
  for (;;) {
    std::array<std::array<F, 3>, 3> m;
    for (auto& row : m)
      for (auto& v : row) v = (F)(rng() % K.p());
    if (det3(K, m) != 0) return m;
  }
}

// Apply x -> M x to the curves (by substitution) and move the points by the
// inverse; returns nullopt if some point lands on the line at infinity.
std::optional<TransformedPair> apply_transform(const PlanePoly& f, const PlanePoly& g,
                                               const std::array<std::pair<F, F>, 8>& pts,
                                               const std::array<std::array<F, 3>, 3>& m) {
  const PrimeField& K = f.field();
  auto adj = adjugate(K, m);
  TransformedPair out{f.projective_transform(m), g.projective_transform(m), {}};
  for (int i = 0; i < 8; ++i) {
    F hom[3] = {pts[i].first, pts[i].second, 1};
    F im[3];
    for (int r = 0; r < 3; ++r)
      im[r] = K.add(K.add(K.mul(adj[r][0], hom[0]), K.mul(adj[r][1], hom[1])),
                    K.mul(adj[r][2], hom[2]));
    if (im[2] == 0) return std::nullopt;
    F zi = K.inv(im[2]);
    out.pts[i] = {K.mul(im[0], zi), K.mul(im[1], zi)};
  }
  return out;
}

bool shear_leading_ok(const PlanePoly& sheared, int expect_degree) {
  return sheared.total_degree() == expect_degree && sheared.at(0, expect_degree) != 0;
}

constexpr int kProjectiveAttempts = 6;
constexpr int kShearAttempts = 24;

}  // namespace

PairProfile pair_profile(const LineCurveClass& a, const LineCurveClass& b,
                         const PointConfig& cfg, std::mt19937_64& rng) {
  if (a.d == b.d && a.mu == b.mu)
    throw std::invalid_argument("pair_profile: classes must be distinct");
  if (a.exceptional() && b.exceptional())
    throw std::invalid_argument("pair_profile: at most one exceptional class");
  const PrimeField& K = cfg.field;
  PairProfile out;
  out.m = LineCurveClass::intersection(a, b);

  if (a.exceptional() || b.exceptional()) {
    const LineCurveClass& exc = a.exceptional() ? a : b;
    const LineCurveClass& other = a.exceptional() ? b : a;
    int i = exc.exceptional_index();
    PlanePoly f = interpolate_curve(other, cfg);
    LocalType lt = multiplicity_and_tangent_cone(f, cfg.points[i].first, cfg.points[i].second);
    // all contact with the exceptional class happens over p_i: an ordinary
    // mu-fold point there realizes the m = mu distinct intersections
    out.base_contacts_ok = lt.multiplicity == other.mu[i] && lt.ordinary;
    out.off_base_reduced = true;
    return out;
  }

  PlanePoly f = interpolate_curve(a, cfg), g = interpolate_curve(b, cfg);

  out.base_contacts_ok = true;
  for (int i = 0; i < 8; ++i) {
    if (a.mu[i] <= 0 || b.mu[i] <= 0) continue;
    long long expect = (long long)a.mu[i] * b.mu[i];
    long long got =
        local_intersection_multiplicity(f, g, cfg.points[i].first, cfg.points[i].second);
    LocalType la = multiplicity_and_tangent_cone(f, cfg.points[i].first, cfg.points[i].second);
    LocalType lb = multiplicity_and_tangent_cone(g, cfg.points[i].first, cfg.points[i].second);
    bool cones_coprime = binary_forms_coprime(K, la.tangent_cone, lb.tangent_cone);
    if ((got == expect) != cones_coprime)
      throw std::logic_error("pair_profile: multiplicity and tangent-cone criteria disagree");
    if (got != expect) out.base_contacts_ok = false;
  }

  // off-base locus via the base-stripped resultant
  const int da = f.total_degree(), db = g.total_degree();
  for (int pa = 0; pa < kProjectiveAttempts; ++pa) {
    std::array<std::array<F, 3>, 3> m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (pa > 0) m = random_matrix(K, rng);
    auto tp = apply_transform(f, g, cfg.points, m);
    if (!tp) continue;
    for (int sa = 0; sa < kShearAttempts; ++sa) {
      F t = sa == 0 ? 0 : (F)(rng() % K.p());
      PlanePoly fs = tp->f.sheared(t), gs = tp->g.sheared(t);
      if (!shear_leading_ok(fs, da) || !shear_leading_ok(gs, db)) continue;
      UPoly r = resultant_y(fs, gs);
      if (r.empty()) throw std::logic_error("pair_profile: vanishing resultant");
      bool strip_ok = true;
      for (int i = 0; i < 8 && strip_ok; ++i) {
        if (a.mu[i] <= 0 || b.mu[i] <= 0) continue;
        // the shear moves x-coordinates to x - t*y
        F xi = K.sub(tp->pts[i].first, K.mul(t, tp->pts[i].second));
        UPoly lin{K.neg(xi), 1};
        for (int k = 0; k < a.mu[i] * b.mu[i]; ++k) {
          if (ueval(K, r, xi) != 0) {
            strip_ok = false;
            break;
          }
          r = udiv_exact(K, r, lin);
        }
      }
      if (!strip_ok) continue;
      if (updeg(r) == out.m && usquarefree(K, r)) {
        out.off_base_reduced = true;
        return out;
      }
    }
  }
  throw std::runtime_error("pair_profile: shear retry budget exhausted for " + a.to_string() +
                           ", " + b.to_string());
}

namespace {

// gcd over F_p[x]/(h) of the y-polynomials of several curves at x = root(h),
// with rational base points on all curves divided out
bool extension_common_root(const PrimeField& K, const UPoly& h,
                           const std::vector<const PlanePoly*>& curves,
                           const std::vector<std::pair<F, F>>& shared_base_pts) {
  ExtField E(K, h);
  auto ypoly = [&](const PlanePoly& f) {
    EPoly out;
    for (int k = 0; k <= std::max(f.degree_y(), 0); ++k) {
      UPoly cx = f.coeff_of_y(k);
      out.push_back(E.reduce(cx));
    }
    enormalize(E, out);
    return out;
  };
  EPoly g = ypoly(*curves[0]);
  for (size_t i = 1; i < curves.size(); ++i) g = egcd_monic(E, std::move(g), ypoly(*curves[i]));
  if (edeg(g) <= 0) return false;
  if (updeg(h) == 1) {
    // rational slice: divide out base points sitting on this vertical line
    F x0 = K.neg(h[0]);  // h monic: x - x0
    for (auto [bx, by] : shared_base_pts) {
      if (bx != x0) continue;
      EPoly lin{E.from_base(K.neg(by)), E.from_base(1)};
      for (;;) {
        // evaluate g at y = by
        ExtField::E val = E.from_base(0);
        for (size_t k = g.size(); k-- > 0;)
          val = E.add(E.mul(val, E.from_base(by)), g[k]);
        if (!E.is_zero(val)) break;
        // exact division by (y - by)
        EPoly q(g.size() - 1);
        ExtField::E carry = E.from_base(0);
        for (size_t k = g.size(); k-- > 1;) {
          carry = E.add(g[k], E.mul(carry, E.from_base(by)));
          q[k - 1] = carry;
        }
        g = std::move(q);
        enormalize(E, g);
        if (g.empty()) break;
      }
      if (edeg(g) <= 0) break;
    }
  }
  return edeg(g) > 0;
}

}  // namespace

TripleProfile triple_profile(const LineCurveClass& a, const LineCurveClass& b,
                             const LineCurveClass& c, const PointConfig& cfg,
                             std::mt19937_64& rng) {
  auto same = [](const LineCurveClass& u, const LineCurveClass& v) {
    return u.d == v.d && u.mu == v.mu;
  };
  if (same(a, b) || same(a, c) || same(b, c))
    throw std::invalid_argument("triple_profile: classes must be distinct");
  int nexc = (int)a.exceptional() + (int)b.exceptional() + (int)c.exceptional();
  if (nexc > 1) throw std::invalid_argument("triple_profile: at most one exceptional class");

  const PrimeField& K = cfg.field;
  TripleProfile out;
  out.t = {LineCurveClass::intersection(a, b), LineCurveClass::intersection(b, c),
           LineCurveClass::intersection(a, c)};
  std::sort(out.t.begin(), out.t.end());

  // each pair must realize its intersection number transversally
  for (auto [u, v] : {std::pair{&a, &b}, {&b, &c}, {&a, &c}}) {
    PairProfile pp = pair_profile(*u, *v, cfg, rng);
    if (!pp.base_contacts_ok || !pp.off_base_reduced)
      throw std::invalid_argument("triple_profile: pair precondition failed for " +
                                  u->to_string() + ", " + v->to_string());
  }

  if (nexc == 1) {
    const LineCurveClass& exc = a.exceptional() ? a : (b.exceptional() ? b : c);
    const LineCurveClass& o1 = a.exceptional() ? b : a;
    const LineCurveClass& o2 = c.exceptional() ? b : c;
    int i = exc.exceptional_index();
    // the exceptional class lives entirely over p_i, so the only candidate
    // common point is p_i itself: the other two cones must be coprime there
    out.common_point_free = true;
    if (o1.mu[i] > 0 && o2.mu[i] > 0) {
      PlanePoly f = interpolate_curve(o1, cfg), g = interpolate_curve(o2, cfg);
      LocalType la = multiplicity_and_tangent_cone(f, cfg.points[i].first, cfg.points[i].second);
      LocalType lb = multiplicity_and_tangent_cone(g, cfg.points[i].first, cfg.points[i].second);
      out.common_point_free = binary_forms_coprime(K, la.tangent_cone, lb.tangent_cone);
    }
    return out;
  }

  PlanePoly f = interpolate_curve(a, cfg), g = interpolate_curve(b, cfg),
            h = interpolate_curve(c, cfg);

  // (a) base points on all three curves: no linear factor common to the
  // three tangent cones
  for (int i = 0; i < 8; ++i) {
    if (a.mu[i] <= 0 || b.mu[i] <= 0 || c.mu[i] <= 0) continue;
    F x = cfg.points[i].first, y = cfg.points[i].second;
    std::vector<BinaryForm> cones = {multiplicity_and_tangent_cone(f, x, y).tangent_cone,
                                     multiplicity_and_tangent_cone(g, x, y).tangent_cone,
                                     multiplicity_and_tangent_cone(h, x, y).tangent_cone};
    auto [xm, u] = binary_form_common(K, cones);
    if (xm > 0 || updeg(u) > 0) {
      out.common_point_free = false;
      return out;
    }
  }

  // (b) off the base locus: common x-coordinates of the a-b and a-c
  // intersections, by the gcd of the two base-stripped resultants
  const int da = f.total_degree(), db = g.total_degree(), dc = h.total_degree();
  for (int pa = 0; pa < kProjectiveAttempts; ++pa) {
    std::array<std::array<F, 3>, 3> m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (pa > 0) m = random_matrix(K, rng);
    auto t1 = apply_transform(f, g, cfg.points, m);
    auto t2 = apply_transform(f, h, cfg.points, m);
    if (!t1 || !t2) continue;
    for (int sa = 0; sa < kShearAttempts; ++sa) {
      F t = sa == 0 ? 0 : (F)(rng() % K.p());
      PlanePoly fs = t1->f.sheared(t), gs = t1->g.sheared(t), hs = t2->g.sheared(t);
      if (!shear_leading_ok(fs, da) || !shear_leading_ok(gs, db) ||
          !shear_leading_ok(hs, dc))
        continue;
      auto strip = [&](UPoly r, const LineCurveClass& u, const LineCurveClass& v) {
        for (int i = 0; i < 8; ++i) {
          if (u.mu[i] <= 0 || v.mu[i] <= 0) continue;
          F xi = K.sub(t1->pts[i].first, K.mul(t, t1->pts[i].second));
          UPoly lin{K.neg(xi), 1};
          for (int k = 0; k < u.mu[i] * v.mu[i]; ++k) {
            if (r.empty() || ueval(K, r, xi) != 0) return UPoly{};
            r = udiv_exact(K, r, lin);
          }
        }
        return r;
      };
      UPoly sab = strip(resultant_y(fs, gs), a, b);
      UPoly sac = strip(resultant_y(fs, hs), a, c);
      if (sab.empty() || sac.empty()) continue;  // stripping failed, new shear
      UPoly gcd = ugcd(K, sab, sac);
      if (updeg(gcd) == 0) {
        out.common_point_free = true;
        return out;
      }
      if (sa + 1 < kShearAttempts && pa + 1 < kProjectiveAttempts) continue;
      // persistent overlap: decide exactly in the extension field cut out by
      // each irreducible factor of the gcd
      std::vector<std::pair<F, F>> shared;
      for (int i = 0; i < 8; ++i)
        if (a.mu[i] > 0 && b.mu[i] > 0 && c.mu[i] > 0) {
          F xi = K.sub(t1->pts[i].first, K.mul(t, t1->pts[i].second));
          shared.push_back({xi, t1->pts[i].second});
        }
      bool found = false;
      for (const UPoly& irr : udistinct_irreducible_factors(K, gcd, rng())) {
        if (extension_common_root(K, irr, {&fs, &gs, &hs}, shared)) {
          found = true;
          break;
        }
      }
      out.common_point_free = !found;
      return out;
    }
  }
  throw std::runtime_error("triple_profile: shear retry budget exhausted");
}

bool tm_singularity_check(const PlanePoly& f, int m, std::pair<Fp, Fp> A,
                          std::array<Fp, 3> lambda_line) {
  if (A.first != 0 || A.second != 0 || lambda_line[0] != 0 || lambda_line[1] != 0 ||
      lambda_line[2] == 0)
    throw std::invalid_argument("tm_singularity_check: frame not normalized to A=(0,0), "
                                "Lambda={y=0}");
  if (m < 1) throw std::invalid_argument("tm_singularity_check: m must be positive");
  // the declared grid degree must reach 2m so that a_{2m,0} exists
  if (f.bound() < 2 * m)
    throw std::invalid_argument("tm_singularity_check: declared degree below 2m");
  const PrimeField& K = f.field();
  for (int mu = 0; mu <= f.bound(); ++mu)
    for (int nu = 0; mu + nu <= f.bound(); ++nu)
      if (mu + 2 * nu < 2 * m && f.at(mu, nu) != 0) return false;
  UPoly u(m + 1, 0);
  for (int k = 0; k <= m; ++k) u[k] = f.at(2 * (m - k), k);
  unormalize(u);
  if (updeg(u) != m) return false;  // a_{0,m} must not vanish
  return usquarefree(K, u);
}

bool bezout_consistent(const PlanePoly& f, const PlanePoly& g,
                       const std::vector<std::pair<std::pair<Fp, Fp>, long long>>& base_points,
                       std::mt19937_64& rng) {
  const PrimeField& K = f.field();
  const int da = f.total_degree(), db = g.total_degree();
  if (da < 1 || db < 1) throw std::invalid_argument("bezout_consistent: constant input");
  std::array<std::pair<F, F>, 8> pts{};
  if (base_points.size() > 8) throw std::invalid_argument("bezout_consistent: too many points");
  for (size_t i = 0; i < base_points.size(); ++i) pts[i] = base_points[i].first;

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::array<std::array<F, 3>, 3> m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (attempt > 0) m = random_matrix(K, rng);
    auto tp = apply_transform(f, g, pts, m);
    if (!tp) continue;
    if (tp->f.at(0, da) == 0 || tp->g.at(0, db) == 0) continue;
    if (!binary_forms_coprime(K, leading_form(tp->f), leading_form(tp->g))) continue;

    UPoly r = resultant_y(tp->f, tp->g);
    if (updeg(r) != da * db) return false;  // Bezout violated
    for (size_t i = 0; i < base_points.size(); ++i) {
      long long expect = base_points[i].second;
      if (uorder_at(K, r, tp->pts[i].first) < expect) return false;
    }
    return true;
  }
  throw std::runtime_error("bezout_consistent: no usable coordinate change found");
}

}  // namespace dpw
