#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dpw {

// Integer vector in the basis (h, e_1, ..., e_n) of Z^{1,n}.
// Index 0 is the h coordinate, indices 1..n are the e_i coordinates.
using Vec = std::vector<int>;

// Diagonal form diag(+1, -1, ..., -1): <u,v> = u0*v0 - sum_{i>=1} u_i*v_i.
long long inner(const Vec& u, const Vec& v);

Vec vneg(const Vec& u);
Vec vadd(const Vec& u, const Vec& v);
Vec vsub(const Vec& u, const Vec& v);
Vec vscale(int c, const Vec& u);

// The ambient lattice Z^{1,n} of a degree-(9-n) del Pezzo surface,
// with the anticanonical vector alpha = (3, -1, ..., -1).
class PicLattice {
public:
  explicit PicLattice(int n);  // 3 <= n <= 8
  int n() const { return n_; }
  int degree() const { return 9 - n_; }
  int rank() const { return n_ + 1; }
  Vec h() const;
  Vec e(int i) const;  // 1-based
  Vec alpha() const;

private:
  int n_;
};

// Reflection in a norm-(-2) vector: x -> x + <r,x> r.
// Throws if <r,r> != -2.
Vec reflect(const Vec& r, const Vec& x);

struct RootSystem {
  PicLattice lattice;
  std::vector<Vec> simple_roots;  // h-e1-e2-e3, e1-e2, ..., e_{n-1}-e_n
  std::vector<Vec> roots;         // all r with <r,r>=-2, <r,alpha>=0, lex sorted
  std::string type_label;         // "A1+A2", "A4", "D5", "E6", "E7", "E8"

  // Index of a root in the canonical (lex) order; -1 if absent.
  int index_of(const Vec& r) const;
};

RootSystem enumerate_roots(int n);

// All classes l with <l,l> = -1 and <l,alpha> = 1, lex sorted.
std::vector<Vec> enumerate_lines(int n);

int line_h_degree(const Vec& line);                 // <h, line> = line[0]
int line_multiplicity(const Vec& line, int i);      // <e_i, line> = -line[i]

// The degree-1 (n = 8) correspondence between lines and roots.
// All three throw unless the lattice has n = 8.
Vec root_of_line(const PicLattice& lat, const Vec& line);  // line - alpha
Vec line_of_root(const PicLattice& lat, const Vec& root);  // root + alpha
Vec bertini(const PicLattice& lat, const Vec& line);       // 2*alpha - line

// Dynkin diagram of a simple system: edge (i,j) iff <r_i,r_j> = 1.
// Off-diagonal products must lie in {0,1}; anything else throws.
struct DynkinGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // i < j

  bool adjacent(int i, int j) const;
};

DynkinGraph dynkin_diagram(const std::vector<Vec>& simple_roots);
int diagram_automorphism_count(const DynkinGraph& g);
bool diagram_isomorphic(const DynkinGraph& a, const DynkinGraph& b);

// ADE label of a (disjoint union of) simply laced diagram(s), e.g. "A1+A2".
std::string diagram_type_label(const DynkinGraph& g);

// Reference diagram for a single ADE component ("A4", "D5", "E8", ...).
DynkinGraph reference_diagram(const std::string& component_label);

}  // namespace dpw
