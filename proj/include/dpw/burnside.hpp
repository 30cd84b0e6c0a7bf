#pragma once

#include <vector>

#include "dpw/census.hpp"

namespace dpw {

// dense polynomial with arbitrary-precision coefficients, index = degree;
// trailing coefficient nonzero unless the polynomial is zero
using BigPoly = std::vector<BigInt>;

BigPoly poly_add(const BigPoly& a, const BigPoly& b);
BigPoly poly_mul(const BigPoly& a, const BigPoly& b);
BigPoly poly_pow(const BigPoly& a, unsigned e);

// F(x) = sum over cycle types of count * prod (1 + x^len)^mult.
// [x^k] F = sum over group elements of the number of fixed k-subsets.
BigPoly fixed_subset_gf(const CycleTypeCensus& census);

struct OrbitCountTable {
  int n_points = 0;
  std::vector<BigInt> counts;  // counts[k] = number of orbits on k-subsets
};

// Burnside: counts[k] = [x^k] F / |G|, divisibility checked for every k.
OrbitCountTable orbit_counts(const CycleTypeCensus& census);

// Independent route to sum_k N(k): (1/|G|) * sum over elements of 2^(number
// of cycles); must agree with F(1)/|G|.
BigInt total_orbit_count_via_powers(const CycleTypeCensus& census);

}  // namespace dpw
