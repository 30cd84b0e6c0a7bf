#include "dpw/burnside.hpp"

#include <stdexcept>

namespace dpw {

namespace {

void trim(BigPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

BigPoly poly_add(const BigPoly& a, const BigPoly& b) {
  BigPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

BigPoly poly_mul(const BigPoly& a, const BigPoly& b) {
  if (a.empty() || b.empty()) return {};
  BigPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

BigPoly poly_pow(const BigPoly& a, unsigned e) {
  BigPoly result{1};
  BigPoly base = a;
  while (e) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return result;
}

BigPoly fixed_subset_gf(const CycleTypeCensus& census) {
  BigPoly total;
  for (const auto& [type, count] : census.table) {
    BigPoly prod{1};
    for (auto [len, mult] : type) {
      BigPoly factor(len + 1, 0);
      factor[0] = 1;
      factor[len] = 1;  // 1 + x^len
      prod = poly_mul(prod, poly_pow(factor, (unsigned)mult));
    }
    for (auto& c : prod) c *= count;
    total = poly_add(total, prod);
  }
  return total;
}

OrbitCountTable orbit_counts(const CycleTypeCensus& census) {
  if (census.group_order == 0) throw std::invalid_argument("orbit_counts: empty census");
  BigPoly gf = fixed_subset_gf(census);
  OrbitCountTable out;
  out.n_points = census.ground_size;
  out.counts.assign(census.ground_size + 1, 0);
  if ((int)gf.size() != census.ground_size + 1)
    throw std::logic_error("orbit_counts: generating function has wrong degree");
  for (int k = 0; k <= census.ground_size; ++k) {
    BigInt q = gf[k] / census.group_order;
    if (q * census.group_order != gf[k])
      throw std::logic_error("orbit_counts: coefficient not divisible by the group order");
    out.counts[k] = q;
  }
  return out;
}

BigInt total_orbit_count_via_powers(const CycleTypeCensus& census) {
  BigInt total = 0;
  for (const auto& [type, count] : census.table) {
    int cycles = 0;
    for (auto [len, mult] : type) cycles += mult;
    total += count * (BigInt(1) << cycles);
  }
  BigInt q = total / census.group_order;
  if (q * census.group_order != total)
    throw std::logic_error("total_orbit_count_via_powers: sum not divisible by the group order");
  return q;
}

}  // namespace dpw
