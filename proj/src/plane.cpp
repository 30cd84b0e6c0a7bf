#include "dpw/plane.hpp"

#include <sstream>
#include <stdexcept>

namespace dpw {

PlanePoly::PlanePoly(const PrimeField& K, int degree_bound) : K_(K) {
  if (degree_bound < 0) degree_bound = 0;
  rows_.resize(degree_bound + 1);
  for (int mu = 0; mu <= degree_bound; ++mu) rows_[mu].assign(degree_bound + 1 - mu, 0);
}

PlanePoly::F PlanePoly::at(int mu, int nu) const {
  if (mu < 0 || nu < 0 || mu >= (int)rows_.size() || nu >= (int)rows_[mu].size()) return 0;
  return rows_[mu][nu];
}

void PlanePoly::set(int mu, int nu, F v) {
  if (mu < 0 || nu < 0) throw std::invalid_argument("PlanePoly::set: negative exponent");
  if (mu + nu > bound()) {
    int nb = mu + nu;
    rows_.resize(nb + 1);
    for (int m = 0; m <= nb; ++m) rows_[m].resize(nb + 1 - m, 0);
  }
  rows_[mu][nu] = v % K_.p();
}

bool PlanePoly::is_zero() const {
  for (const auto& row : rows_)
    for (F v : row)
      if (v) return false;
  return true;
}

int PlanePoly::total_degree() const {
  int d = -1;
  for (int mu = 0; mu < (int)rows_.size(); ++mu)
    for (int nu = 0; nu < (int)rows_[mu].size(); ++nu)
      if (rows_[mu][nu] && mu + nu > d) d = mu + nu;
  return d;
}

int PlanePoly::degree_y() const {
  int d = -1;
  for (int mu = 0; mu < (int)rows_.size(); ++mu)
    for (int nu = 0; nu < (int)rows_[mu].size(); ++nu)
      if (rows_[mu][nu] && nu > d) d = nu;
  return d;
}

PlanePoly::F PlanePoly::eval(F x, F y) const {
  // Horner in x over Horner-in-y rows
  F acc = 0;
  for (int mu = (int)rows_.size(); mu-- > 0;) {
    F row = 0;
    for (int nu = (int)rows_[mu].size(); nu-- > 0;) row = K_.add(K_.mul(row, y), rows_[mu][nu]);
    acc = K_.add(K_.mul(acc, x), row);
  }
  return acc;
}

PlanePoly PlanePoly::add(const PlanePoly& o) const {
  PlanePoly r(K_, std::max(bound(), o.bound()));
  for (int mu = 0; mu <= r.bound(); ++mu)
    for (int nu = 0; mu + nu <= r.bound(); ++nu) r.rows_[mu][nu] = K_.add(at(mu, nu), o.at(mu, nu));
  return r;
}

PlanePoly PlanePoly::sub(const PlanePoly& o) const {
  PlanePoly r(K_, std::max(bound(), o.bound()));
  for (int mu = 0; mu <= r.bound(); ++mu)
    for (int nu = 0; mu + nu <= r.bound(); ++nu) r.rows_[mu][nu] = K_.sub(at(mu, nu), o.at(mu, nu));
  return r;
}

PlanePoly PlanePoly::mul(const PlanePoly& o) const {
  int da = total_degree(), db = o.total_degree();
  if (da < 0 || db < 0) return PlanePoly(K_, 0);
  PlanePoly r(K_, da + db);
  for (int mu = 0; mu <= da; ++mu)
    for (int nu = 0; mu + nu <= da; ++nu) {
      F c = at(mu, nu);
      if (!c) continue;
      for (int mo = 0; mo <= db; ++mo)
        for (int no = 0; mo + no <= db; ++no) {
          F d = o.at(mo, no);
          if (!d) continue;
          F& slot = r.rows_[mu + mo][nu + no];
          slot = K_.add(slot, K_.mul(c, d));
        }
    }
  return r;
}

PlanePoly PlanePoly::scaled(F c) const {
  PlanePoly r = *this;
  for (auto& row : r.rows_)
    for (F& v : row) v = K_.mul(v, c);
  return r;
}

namespace {

// binomial coefficients mod p, valid for n < p (our degrees are tiny)
std::vector<std::vector<std::uint32_t>> binom_mod(const PrimeField& K, int n) {
  std::vector<std::vector<std::uint32_t>> c(n + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1 % K.p();
    for (int j = 1; j <= i; ++j) c[i][j] = K.add(c[i - 1][j - 1], j <= i - 1 ? c[i - 1][j] : 0);
  }
  return c;
}

}  // namespace

PlanePoly PlanePoly::translated(F a, F b) const {
  int d = std::max(total_degree(), 0);
  auto C = binom_mod(K_, d);
  // powers of a and b
  std::vector<F> pa(d + 1, 1 % K_.p()), pb(d + 1, 1 % K_.p());
  for (int i = 1; i <= d; ++i) pa[i] = K_.mul(pa[i - 1], a), pb[i] = K_.mul(pb[i - 1], b);
  PlanePoly r(K_, d);
  for (int mu = 0; mu <= d; ++mu)
    for (int nu = 0; mu + nu <= d; ++nu) {
      F c = at(mu, nu);
      if (!c) continue;
      for (int j = 0; j <= mu; ++j) {
        F cj = K_.mul(c, K_.mul(C[mu][j], pa[mu - j]));
        if (!cj) continue;
        for (int k = 0; k <= nu; ++k) {
          F& slot = r.rows_[j][k];
          slot = K_.add(slot, K_.mul(cj, K_.mul(C[nu][k], pb[nu - k])));
        }
      }
    }
  return r;
}

PlanePoly PlanePoly::sheared(F t) const {
  int d = std::max(total_degree(), 0);
  auto C = binom_mod(K_, d);
  std::vector<F> pt(d + 1, 1 % K_.p());
  for (int i = 1; i <= d; ++i) pt[i] = K_.mul(pt[i - 1], t);
  PlanePoly r(K_, d);
  for (int mu = 0; mu <= d; ++mu)
    for (int nu = 0; mu + nu <= d; ++nu) {
      F c = at(mu, nu);
      if (!c) continue;
      // x^mu -> sum_j C(mu,j) t^(mu-j) x^j y^(mu-j)
      for (int j = 0; j <= mu; ++j) {
        F& slot = r.rows_[j][nu + mu - j];
        slot = K_.add(slot, K_.mul(c, K_.mul(C[mu][j], pt[mu - j])));
      }
    }
  return r;
}

UPoly PlanePoly::restrict_y0() const {
  UPoly u(rows_.size(), 0);
  for (int mu = 0; mu < (int)rows_.size(); ++mu) u[mu] = at(mu, 0);
  unormalize(u);
  return u;
}

UPoly PlanePoly::coeff_of_y(int k) const {
  UPoly u(rows_.size(), 0);
  for (int mu = 0; mu < (int)rows_.size(); ++mu) u[mu] = at(mu, k);
  unormalize(u);
  return u;
}

PlanePoly PlanePoly::divided_by_y() const {
  for (int mu = 0; mu < (int)rows_.size(); ++mu)
    if (at(mu, 0)) throw std::logic_error("divided_by_y: y does not divide the polynomial");
  int d = std::max(total_degree() - 1, 0);
  PlanePoly r(K_, d);
  for (int mu = 0; mu <= d; ++mu)
    for (int nu = 0; mu + nu <= d; ++nu) r.rows_[mu][nu] = at(mu, nu + 1);
  return r;
}

int PlanePoly::multiplicity_at_origin() const {
  if (is_zero()) throw std::domain_error("multiplicity_at_origin: zero polynomial");
  for (int m = 0; m <= bound(); ++m)
    for (int mu = 0; mu <= m; ++mu)
      if (at(mu, m - mu)) return m;
  throw std::logic_error("multiplicity_at_origin: unreachable");
}

PlanePoly PlanePoly::normalized() const {
  for (int m = 0; m <= bound(); ++m)
    for (int mu = m; mu >= 0; --mu) {
      F c = at(mu, m - mu);
      if (c) return scaled(K_.inv(c));
    }
  return *this;  // zero polynomial
}

PlanePoly PlanePoly::projective_transform(const std::array<std::array<F, 3>, 3>& m) const {
  int d = total_degree();
  if (d < 0) return PlanePoly(K_, 0);
  auto linear = [&](int r) {
    PlanePoly l(K_, 1);
    l.set(1, 0, m[r][0]);
    l.set(0, 1, m[r][1]);
    l.set(0, 0, m[r][2]);
    return l;
  };
  PlanePoly lx = linear(0), ly = linear(1), lz = linear(2);
  std::vector<PlanePoly> px{PlanePoly(K_, 0)}, py{PlanePoly(K_, 0)}, pz{PlanePoly(K_, 0)};
  px[0].set(0, 0, 1);
  py[0].set(0, 0, 1);
  pz[0].set(0, 0, 1);
  for (int i = 1; i <= d; ++i) {
    px.push_back(px.back().mul(lx));
    py.push_back(py.back().mul(ly));
    pz.push_back(pz.back().mul(lz));
  }
  PlanePoly out(K_, d);
  for (int mu = 0; mu <= d; ++mu)
    for (int nu = 0; mu + nu <= d; ++nu) {
      F c = at(mu, nu);
      if (!c) continue;
      // homogenize x^mu y^nu with z^(d-mu-nu), then substitute
      PlanePoly term = px[mu].mul(py[nu]).mul(pz[d - mu - nu]).scaled(c);
      out = out.add(term);
    }
  return out;
}

std::string PlanePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= bound(); ++m)
    for (int mu = m; mu >= 0; --mu) {
      F c = at(mu, m - mu);
      if (!c) continue;
      if (!first) os << " + ";
      first = false;
      os << c;
      if (mu) os << " x^" << mu;
      if (m - mu) os << " y^" << (m - mu);
    }
  if (first) os << "0";
  return os.str();
}

BinaryForm lowest_form(const PlanePoly& f) {
  int m = f.multiplicity_at_origin();
  BinaryForm b;
  b.degree = m;
  b.coeff.resize(m + 1);
  for (int i = 0; i <= m; ++i) b.coeff[i] = f.at(m - i, i);
  return b;
}

BinaryForm leading_form(const PlanePoly& f) {
  int d = f.total_degree();
  if (d < 0) throw std::domain_error("leading_form: zero polynomial");
  BinaryForm b;
  b.degree = d;
  b.coeff.resize(d + 1);
  for (int i = 0; i <= d; ++i) b.coeff[i] = f.at(d - i, i);
  return b;
}

namespace {

// write F(x,y) = x^(deg - deg u) * u(y/x) * x^(deg u); u carries the
// non-x-part, the returned int the multiplicity of the factor x
std::pair<int, UPoly> dehom(const BinaryForm& f) {
  UPoly u(f.coeff);
  unormalize(u);
  return {f.degree - updeg(u), u};
}

}  // namespace

bool binary_form_squarefree(const PrimeField& K, const BinaryForm& f) {
  auto [xmult, u] = dehom(f);
  if (u.empty()) return false;  // zero form
  if (xmult > 1) return false;
  if (updeg(u) == 0) return true;
  return usquarefree(K, u);
}

bool binary_forms_coprime(const PrimeField& K, const BinaryForm& a, const BinaryForm& b) {
  auto [xa, ua] = dehom(a);
  auto [xb, ub] = dehom(b);
  if (ua.empty() || ub.empty()) return false;  // a zero form shares everything
  if (xa > 0 && xb > 0) return false;
  return updeg(ugcd(K, ua, ub)) == 0;
}

std::pair<int, UPoly> binary_form_common(const PrimeField& K,
                                         const std::vector<BinaryForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("binary_form_common: no forms");
  auto [xm, u] = dehom(forms[0]);
  for (size_t i = 1; i < forms.size(); ++i) {
    auto [xi, ui] = dehom(forms[i]);
    xm = std::min(xm, xi);
    u = ugcd(K, u, ui);
  }
  return {xm, u};
}

UPoly resultant_y(const PlanePoly& f, const PlanePoly& g) {
  const PrimeField& K = f.field();
  if (f.is_zero() || g.is_zero()) return {};
  int m = f.degree_y(), n = g.degree_y();
  if (m == 0 && n == 0) return {1 % K.p()};
  if (m == 0) {
    // Res(a(x), g) = a(x)^(deg_y g)
    UPoly a = f.coeff_of_y(0), r{1};
    for (int i = 0; i < n; ++i) r = umul(K, r, a);
    return r;
  }
  if (n == 0) {
    UPoly a = g.coeff_of_y(0), r{1};
    for (int i = 0; i < m; ++i) r = umul(K, r, a);
    return r;
  }

  // Sylvester matrix over F_p[x]: n rows of f's coefficients, m rows of g's
  int size = m + n;
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f.coeff_of_y(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff_of_y(n - k);

  // Bareiss fraction-free elimination; every division is exact in F_p[x]
  int sign = 1;
  UPoly prev{1};
  for (int k = 0; k + 1 < size; ++k) {
    if (s[k][k].empty()) {
      int piv = -1;
      for (int i = k + 1; i < size && piv < 0; ++i)
        if (!s[i][k].empty()) piv = i;
      if (piv < 0) return {};  // determinant vanishes identically
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        UPoly num = usub(K, umul(K, s[k][k], s[i][j]), umul(K, s[i][k], s[k][j]));
        s[i][j] = num.empty() ? UPoly{} : udiv_exact(K, num, prev);
      }
      s[i][k].clear();
    }
    prev = s[k][k];
  }
  UPoly det = s[size - 1][size - 1];
  if (sign < 0) det = uscale(K, std::move(det), K.neg(1));
  return det;
}

std::vector<std::vector<PrimeField::F>> nullspace(const PrimeField& K,
                                                  std::vector<std::vector<PrimeField::F>> rows,
                                                  int ncols) {
  using F = PrimeField::F;
  for (auto& r : rows)
    if ((int)r.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
  int nrows = (int)rows.size();
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int i = rank; i < nrows && piv < 0; ++i)
      if (rows[i][col]) piv = i;
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    F inv = K.inv(rows[rank][col]);
    for (int j = col; j < ncols; ++j) rows[rank][j] = K.mul(rows[rank][j], inv);
    for (int i = 0; i < nrows; ++i) {
      if (i == rank || !rows[i][col]) continue;
      F c = rows[i][col];
      for (int j = col; j < ncols; ++j) rows[i][j] = K.sub(rows[i][j], K.mul(c, rows[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = K.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dpw
