#include "dpw/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dpw {

long long inner(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("inner: rank mismatch");
  long long s = (long long)u[0] * v[0];
  for (size_t i = 1; i < u.size(); ++i) s -= (long long)u[i] * v[i];
  return s;
}

Vec vneg(const Vec& u) {
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = -u[i];
  return r;
}

Vec vadd(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vadd: rank mismatch");
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vec vsub(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vsub: rank mismatch");
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vec vscale(int c, const Vec& u) {
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = c * u[i];
  return r;
}

PicLattice::PicLattice(int n) : n_(n) {
  if (n < 3 || n > 8) throw std::invalid_argument("PicLattice: n must be in 3..8");
}

Vec PicLattice::h() const {
  Vec v(n_ + 1, 0);
  v[0] = 1;
  return v;
}

Vec PicLattice::e(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("PicLattice::e: index out of range");
  Vec v(n_ + 1, 0);
  v[i] = 1;
  return v;
}

Vec PicLattice::alpha() const {
  Vec v(n_ + 1, -1);
  v[0] = 3;
  return v;
}

Vec reflect(const Vec& r, const Vec& x) {
  if (inner(r, r) != -2) throw std::invalid_argument("reflect: vector has norm != -2");
  long long c = inner(r, x);
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + (int)c * r[i];
  return out;
}

namespace {

// All v in Z^{n+1} with v0 in [-b0, b0], <v,v> = norm and <v,alpha> = pairing.
// Bounded depth-first search over the coordinates; the negative-definite
// constraint sum v_i^2 = v0^2 - norm prunes almost everything.
std::vector<Vec> bounded_search(int n, int b0, long long norm, long long pairing) {
  std::vector<Vec> out;
  Vec v(n + 1, 0);
  std::function<void(int, long long, long long)> rec =
      // place coordinate i; sq = remaining sum of squares, lin = remaining sum
      [&](int i, long long sq, long long lin) {
        if (i == n + 1) {
          if (sq == 0 && lin == 0) out.push_back(v);
          return;
        }
        int remaining = n + 1 - i;  // coordinates still to place, this one included
        int cmax = 0;
        while ((long long)(cmax + 1) * (cmax + 1) <= sq) ++cmax;
        for (int c = -cmax; c <= cmax; ++c) {
          long long nsq = sq - (long long)c * c;
          long long nlin = lin - c;
          // Cauchy-Schwarz: the other remaining-1 coordinates sum to nlin
          // with squares summing to nsq.
          if ((long long)nlin * nlin > (long long)(remaining - 1) * nsq) continue;
          v[i] = c;
          rec(i + 1, nsq, nlin);
        }
        v[i] = 0;
      };
  // v0 separately: contributes +v0^2 to the norm and 3*v0 to the pairing.
  for (int c = -b0; c <= b0; ++c) {
    long long sq = (long long)c * c - norm;  // required sum of e-coordinate squares
    long long lin = pairing - 3LL * c;       // required sum of e-coordinates
    if (sq < 0) continue;
    if ((long long)lin * lin > (long long)n * sq) continue;
    v[0] = c;
    rec(1, sq, lin);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> standard_simple_roots(const PicLattice& lat) {
  std::vector<Vec> s;
  Vec r0 = lat.h();
  for (int i = 1; i <= 3; ++i) r0 = vsub(r0, lat.e(i));
  s.push_back(r0);
  for (int i = 1; i < lat.n(); ++i) s.push_back(vsub(lat.e(i), lat.e(i + 1)));
  return s;
}

}  // namespace

int RootSystem::index_of(const Vec& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r);
  if (it == roots.end() || *it != r) return -1;
  return (int)(it - roots.begin());
}

RootSystem enumerate_roots(int n) {
  PicLattice lat(n);
  // every root is line - alpha for a line of h-degree 0..6, so |r0| <= 3
  std::vector<Vec> roots = bounded_search(n, 3, -2, 0);
  std::vector<Vec> simple = standard_simple_roots(lat);
  DynkinGraph g = dynkin_diagram(simple);
  RootSystem rs{lat, std::move(simple), std::move(roots), diagram_type_label(g)};
  for (const Vec& s : rs.simple_roots)
    if (rs.index_of(s) < 0) throw std::logic_error("enumerate_roots: simple root missed by search");
  return rs;
}

std::vector<Vec> enumerate_lines(int n) {
  PicLattice lat(n);
  // (sum mu_i)^2 <= n*(d^2+1) bounds the h-degree; 7 is safe for every n <= 8
  return bounded_search(n, 7, -1, 1);
}

int line_h_degree(const Vec& line) { return line.at(0); }

int line_multiplicity(const Vec& line, int i) { return -line.at((size_t)i); }

Vec root_of_line(const PicLattice& lat, const Vec& line) {
  if (lat.n() != 8) throw std::invalid_argument("root_of_line: requires n = 8");
  return vsub(line, lat.alpha());
}

Vec line_of_root(const PicLattice& lat, const Vec& root) {
  if (lat.n() != 8) throw std::invalid_argument("line_of_root: requires n = 8");
  return vadd(root, lat.alpha());
}

Vec bertini(const PicLattice& lat, const Vec& line) {
  if (lat.n() != 8) throw std::invalid_argument("bertini: requires n = 8");
  return vsub(vscale(2, lat.alpha()), line);
}

bool DynkinGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (auto& e : edges)
    if (e.first == i && e.second == j) return true;
  return false;
}

DynkinGraph dynkin_diagram(const std::vector<Vec>& simple_roots) {
  DynkinGraph g;
  g.nodes = (int)simple_roots.size();
  for (int i = 0; i < g.nodes; ++i)
    for (int j = i + 1; j < g.nodes; ++j) {
      long long p = inner(simple_roots[i], simple_roots[j]);
      if (p == 1)
        g.edges.emplace_back(i, j);
      else if (p != 0)
        throw std::logic_error("dynkin_diagram: non-simply-laced product");
    }
  return g;
}

namespace {

bool perm_preserves(const DynkinGraph& a, const DynkinGraph& b, const std::vector<int>& p) {
  for (int i = 0; i < a.nodes; ++i)
    for (int j = i + 1; j < a.nodes; ++j)
      if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) return false;
  return true;
}

}  // namespace

int diagram_automorphism_count(const DynkinGraph& g) {
  std::vector<int> p(g.nodes);
  std::iota(p.begin(), p.end(), 0);
  int count = 0;
  do {
    if (perm_preserves(g, g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

bool diagram_isomorphic(const DynkinGraph& a, const DynkinGraph& b) {
  if (a.nodes != b.nodes || a.edges.size() != b.edges.size()) return false;
  std::vector<int> p(a.nodes);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (perm_preserves(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

namespace {

// Classify one connected simply laced tree component by its arm structure.
std::string component_label(const std::vector<int>& verts, const DynkinGraph& g) {
  int k = (int)verts.size();
  auto deg = [&](int v) {
    int d = 0;
    for (int u : verts)
      if (u != v && g.adjacent(u, v)) ++d;
    return d;
  };
  int branch = -1, maxdeg = 0;
  for (int v : verts) {
    int d = deg(v);
    if (d > maxdeg) maxdeg = d, branch = v;
    if (d > 3) throw std::logic_error("component_label: vertex degree > 3");
  }
  if (maxdeg <= 2) return "A" + std::to_string(k);
  // one degree-3 vertex; measure the three arm lengths
  std::vector<int> arms;
  for (int u : verts) {
    if (u == branch || !g.adjacent(u, branch)) continue;
    int len = 1, prev = branch, cur = u;
    for (;;) {
      int next = -1;
      for (int w : verts)
        if (w != prev && w != cur && g.adjacent(w, cur)) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("component_label: not a tree");
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(k);
  throw std::logic_error("component_label: not an ADE diagram");
}

}  // namespace

std::string diagram_type_label(const DynkinGraph& g) {
  std::vector<int> comp(g.nodes, -1);
  int ncomp = 0;
  for (int i = 0; i < g.nodes; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.nodes; ++u)
        if (comp[u] < 0 && g.adjacent(u, v)) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < g.nodes; ++i)
      if (comp[i] == c) verts.push_back(i);
    labels.push_back(component_label(verts, g));
  }
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  });
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "+";
    out += labels[i];
  }
  return out;
}

DynkinGraph reference_diagram(const std::string& label) {
  char family = label.at(0);
  int k = std::stoi(label.substr(1));
  DynkinGraph g;
  g.nodes = k;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) g.edges.emplace_back(i, i + 1);
  };
  if (family == 'A') {
    chain(0, k - 1);
  } else if (family == 'D') {
    if (k < 4) throw std::invalid_argument("reference_diagram: D needs rank >= 4");
    chain(0, k - 2);
    g.edges.emplace_back(k - 3, k - 1);
  } else if (family == 'E') {
    if (k < 6 || k > 8) throw std::invalid_argument("reference_diagram: E needs rank 6..8");
    chain(0, k - 2);
    g.edges.emplace_back(2, k - 1);
  } else {
    throw std::invalid_argument("reference_diagram: unknown family");
  }
  return g;
}

}  // namespace dpw
