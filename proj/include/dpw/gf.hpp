#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dpw/bsgs.hpp"  // BigInt

namespace dpw {

// Arithmetic in F_p for an odd prime p < 2^31.
class PrimeField {
public:
  using F = std::uint32_t;

  explicit PrimeField(std::uint32_t p);
  std::uint32_t p() const { return p_; }

  F add(F a, F b) const {
    F s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  F sub(F a, F b) const { return a >= b ? a - b : a + p_ - b; }
  F neg(F a) const { return a ? p_ - a : 0; }
  F mul(F a, F b) const { return (F)((std::uint64_t)a * b % p_); }
  F inv(F a) const;  // throws on 0
  F pow(F a, std::uint64_t e) const;
  F from_int(long long v) const {
    long long r = v % (long long)p_;
    return (F)(r < 0 ? r + p_ : r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

// Dense univariate polynomial over F_p, coefficient index = degree,
// no trailing zeros (the zero polynomial is the empty vector).
using UPoly = std::vector<std::uint32_t>;

int updeg(const UPoly& a);  // -1 for the zero polynomial
void unormalize(UPoly& a);
UPoly uadd(const PrimeField& K, const UPoly& a, const UPoly& b);
UPoly usub(const PrimeField& K, const UPoly& a, const UPoly& b);
UPoly umul(const PrimeField& K, const UPoly& a, const UPoly& b);
UPoly uscale(const PrimeField& K, UPoly a, std::uint32_t c);
std::pair<UPoly, UPoly> udivmod(const PrimeField& K, UPoly a, const UPoly& b);
UPoly udiv_exact(const PrimeField& K, const UPoly& a, const UPoly& b);  // throws on remainder
UPoly umonic(const PrimeField& K, UPoly a);
UPoly ugcd(const PrimeField& K, UPoly a, UPoly b);  // monic unless zero
UPoly uderiv(const PrimeField& K, const UPoly& a);
std::uint32_t ueval(const PrimeField& K, const UPoly& a, std::uint32_t x);
UPoly upow_mod(const PrimeField& K, UPoly base, const BigInt& e, const UPoly& mod);

// Multiplicity of the root x0 (0 if not a root).
int uorder_at(const PrimeField& K, const UPoly& a, std::uint32_t x0);

// Squarefree test over the perfect field F_p: gcd with the derivative is
// constant and the derivative is nonzero (a vanishing derivative means a
// p-th power).
bool usquarefree(const PrimeField& K, const UPoly& a);

// All distinct monic irreducible factors (multiplicities dropped), by
// squarefree reduction, distinct-degree splitting, and seeded
// Cantor-Zassenhaus equal-degree splitting.
std::vector<UPoly> udistinct_irreducible_factors(const PrimeField& K, UPoly a,
                                                 std::uint64_t seed);

// F_p[x] / (h) for an irreducible h; just enough for gcd computations of
// polynomials with ExtField coefficients.
class ExtField {
public:
  using E = UPoly;  // residues modulo h, degree < deg h

  ExtField(const PrimeField& K, UPoly h);
  const PrimeField& base() const { return K_; }
  int degree() const { return updeg(h_); }

  E from_base(std::uint32_t c) const { return c ? E{c} : E{}; }
  E reduce(const UPoly& a) const;
  E add(const E& a, const E& b) const { return uadd(K_, a, b); }
  E sub(const E& a, const E& b) const { return usub(K_, a, b); }
  E mul(const E& a, const E& b) const;
  E inv(const E& a) const;  // throws on 0 or a zero divisor
  bool is_zero(const E& a) const { return a.empty(); }

private:
  PrimeField K_;
  UPoly h_;
};

// polynomials in one variable with ExtField coefficients
using EPoly = std::vector<ExtField::E>;

void enormalize(const ExtField& K, EPoly& a);
int edeg(const EPoly& a);
EPoly egcd_monic(const ExtField& K, EPoly a, EPoly b);

}  // namespace dpw
