#pragma once

#include <array>
#include <string>

#include "dpw/gf.hpp"

namespace dpw {

// Dense bivariate polynomial over F_p in affine coordinates, coefficient
// c(mu, nu) of x^mu y^nu stored on a triangular grid mu + nu <= bound.
class PlanePoly {
public:
  using F = PrimeField::F;

  explicit PlanePoly(const PrimeField& K, int degree_bound = 0);

  const PrimeField& field() const { return K_; }
  int bound() const { return (int)rows_.size() - 1; }

  F at(int mu, int nu) const;
  void set(int mu, int nu, F v);  // grows the grid as needed

  bool is_zero() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_y() const;

  F eval(F x, F y) const;

  PlanePoly add(const PlanePoly& o) const;
  PlanePoly sub(const PlanePoly& o) const;
  PlanePoly mul(const PlanePoly& o) const;
  PlanePoly scaled(F c) const;

  PlanePoly translated(F a, F b) const;  // f(x + a, y + b)
  PlanePoly sheared(F t) const;          // f(x + t*y, y)

  UPoly restrict_y0() const;   // f(x, 0)
  UPoly coeff_of_y(int k) const;
  PlanePoly divided_by_y() const;  // throws unless y divides f

  // order of vanishing at the origin (total_degree + 1 sentinel never
  // occurs for nonzero f); throws for the zero polynomial
  int multiplicity_at_origin() const;

  // scale so that the first nonzero coefficient in graded order (degree
  // ascending, x-power descending within a degree) is 1
  PlanePoly normalized() const;

  // F'(x, y) = F_hom(M * (x, y, 1)) dehomogenized, deg preserved
  PlanePoly projective_transform(const std::array<std::array<F, 3>, 3>& m) const;

  std::string to_string() const;  // sparse "c x^a y^b" form, graded order

private:
  PrimeField K_;
  std::vector<std::vector<F>> rows_;  // rows_[mu][nu]
};

// Homogeneous binary form sum b_i x^(deg-i) y^i.
struct BinaryForm {
  int degree = 0;
  std::vector<PrimeField::F> coeff;  // size degree + 1
};

// the lowest-degree homogeneous part (tangent cone at the origin)
BinaryForm lowest_form(const PlanePoly& f);
// the top-degree homogeneous part
BinaryForm leading_form(const PlanePoly& f);

bool binary_form_squarefree(const PrimeField& K, const BinaryForm& f);
// is there a common projective root (common linear factor)?
bool binary_forms_coprime(const PrimeField& K, const BinaryForm& a, const BinaryForm& b);
// common linear-factor content of several forms: pair (common x-multiplicity,
// gcd of the dehomogenized parts)
std::pair<int, UPoly> binary_form_common(const PrimeField& K,
                                         const std::vector<BinaryForm>& forms);

// Res_y(f, g) as a polynomial in x (Bareiss fraction-free elimination on the
// Sylvester matrix over F_p[x]).
UPoly resultant_y(const PlanePoly& f, const PlanePoly& g);

// basis of the right kernel of the rows x cols matrix
std::vector<std::vector<PrimeField::F>> nullspace(const PrimeField& K,
                                                  std::vector<std::vector<PrimeField::F>> rows,
                                                  int ncols);

}  // namespace dpw
