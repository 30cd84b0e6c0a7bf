#include "dpw/gf.hpp"

#include <random>
#include <stdexcept>

namespace dpw {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p >= (1u << 31))
    throw std::invalid_argument("PrimeField: modulus must be an odd prime < 2^31");
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("PrimeField: modulus is composite");
}

PrimeField::F PrimeField::inv(F a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv of zero");
  // extended Euclid on (p, a)
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s0 < 0) s0 += p_;
  return (F)s0;
}

PrimeField::F PrimeField::pow(F a, std::uint64_t e) const {
  F r = 1 % p_;
  F b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int updeg(const UPoly& a) { return (int)a.size() - 1; }

void unormalize(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly uadd(const PrimeField& K, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  unormalize(r);
  return r;
}

UPoly usub(const PrimeField& K, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  unormalize(r);
  return r;
}

UPoly umul(const PrimeField& K, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (std::uint32_t)(((std::uint64_t)a[i] * b[j] + r[i + j]) % K.p());
  }
  unormalize(r);
  return r;
}

UPoly uscale(const PrimeField& K, UPoly a, std::uint32_t c) {
  for (auto& v : a) v = K.mul(v, c);
  unormalize(a);
  return a;
}

std::pair<UPoly, UPoly> udivmod(const PrimeField& K, UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("udivmod: division by zero polynomial");
  if (a.size() < b.size()) return {UPoly{}, std::move(a)};
  UPoly q(a.size() - b.size() + 1, 0);
  std::uint32_t lead_inv = K.inv(b.back());
  for (int i = (int)a.size() - (int)b.size(); i >= 0; --i) {
    std::uint32_t c = K.mul(a[i + b.size() - 1], lead_inv);
    if (c == 0) continue;
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] = K.sub(a[i + j], K.mul(c, b[j]));
  }
  unormalize(a);
  return {std::move(q), std::move(a)};
}

UPoly udiv_exact(const PrimeField& K, const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(K, a, b);
  if (!r.empty()) throw std::logic_error("udiv_exact: nonzero remainder");
  return q;
}

UPoly umonic(const PrimeField& K, UPoly a) {
  if (a.empty()) return a;
  return uscale(K, std::move(a), K.inv(a.back()));
}

UPoly ugcd(const PrimeField& K, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(K, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(K, std::move(a));
}

UPoly uderiv(const PrimeField& K, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], K.from_int((long long)i));
  unormalize(r);
  return r;
}

std::uint32_t ueval(const PrimeField& K, const UPoly& a, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
  return acc;
}

UPoly upow_mod(const PrimeField& K, UPoly base, const BigInt& e, const UPoly& mod) {
  if (updeg(mod) < 1) throw std::domain_error("upow_mod: modulus must have degree >= 1");
  if (e == 0) return udivmod(K, UPoly{1}, mod).second;
  UPoly r{1};
  base = udivmod(K, std::move(base), mod).second;
  for (std::size_t bit = boost::multiprecision::msb(e) + 1; bit-- > 0;) {
    r = udivmod(K, umul(K, r, r), mod).second;
    if (boost::multiprecision::bit_test(e, (unsigned)bit))
      r = udivmod(K, umul(K, r, base), mod).second;
  }
  return r;
}

int uorder_at(const PrimeField& K, const UPoly& a, std::uint32_t x0) {
  if (a.empty()) throw std::domain_error("uorder_at: zero polynomial");
  UPoly cur = a;
  UPoly lin{K.neg(x0), 1};  // x - x0
  int ord = 0;
  while (ueval(K, cur, x0) == 0) {
    cur = udiv_exact(K, cur, lin);
    ++ord;
  }
  return ord;
}

bool usquarefree(const PrimeField& K, const UPoly& a) {
  if (a.empty()) return false;
  if (updeg(a) == 0) return true;
  UPoly d = uderiv(K, a);
  if (d.empty()) return false;  // p-th power
  return updeg(ugcd(K, a, d)) == 0;
}

namespace {

// a(x) with a'(x) = 0 is b(x)^p with b[i] = a[i*p] (Frobenius fixes F_p)
UPoly upth_root(const PrimeField& K, const UPoly& a) {
  UPoly b;
  for (size_t i = 0; i < a.size(); i += K.p()) b.push_back(a[i]);
  unormalize(b);
  return b;
}

// Cantor-Zassenhaus split of a squarefree product of degree-d irreducibles.
void equal_degree_split(const PrimeField& K, const UPoly& f, int d, std::mt19937_64& rng,
                        std::vector<UPoly>& out) {
  if (updeg(f) == d) {
    out.push_back(umonic(K, f));
    return;
  }
  BigInt e = (boost::multiprecision::pow(BigInt(K.p()), d) - 1) / 2;
  for (;;) {
    UPoly r(updeg(f), 0);
    for (auto& c : r) c = (std::uint32_t)(rng() % K.p());
    unormalize(r);
    if (updeg(r) < 1) continue;
    UPoly s = upow_mod(K, r, e, f);
    if (s.empty()) continue;
    s[0] = K.sub(s[0], 1);  // s - 1
    unormalize(s);
    UPoly g = ugcd(K, s, f);
    if (updeg(g) > 0 && updeg(g) < updeg(f)) {
      equal_degree_split(K, g, d, rng, out);
      equal_degree_split(K, udiv_exact(K, f, g), d, rng, out);
      return;
    }
  }
}

void distinct_degree_split(const PrimeField& K, UPoly f, std::mt19937_64& rng,
                           std::vector<UPoly>& out) {
  // f squarefree and monic
  UPoly x{0, 1};
  UPoly frob = udivmod(K, x, f).second;  // x^(p^d) mod f, starting at d = 0
  for (int d = 1; 2 * d <= updeg(f); ++d) {
    frob = upow_mod(K, frob, BigInt(K.p()), f);
    UPoly diff = usub(K, frob, udivmod(K, x, f).second);
    UPoly g = ugcd(K, diff, f);
    if (updeg(g) > 0) {
      equal_degree_split(K, g, d, rng, out);
      f = udiv_exact(K, f, g);
      frob = udivmod(K, frob, f).second;
    }
  }
  if (updeg(f) > 0) out.push_back(umonic(K, f));
}

}  // namespace

std::vector<UPoly> udistinct_irreducible_factors(const PrimeField& K, UPoly a,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<UPoly> found;
  std::vector<UPoly> stack{umonic(K, std::move(a))};
  while (!stack.empty()) {
    UPoly f = std::move(stack.back());
    stack.pop_back();
    if (updeg(f) < 1) continue;
    UPoly d = uderiv(K, f);
    if (d.empty()) {
      stack.push_back(upth_root(K, f));
      continue;
    }
    UPoly g = ugcd(K, f, d);
    if (updeg(g) > 0) {
      stack.push_back(g);
      f = udiv_exact(K, f, g);
      if (updeg(f) < 1) continue;
    }
    distinct_degree_split(K, umonic(K, std::move(f)), rng, found);
  }
  // dedupe
  std::vector<UPoly> out;
  for (UPoly& f : found) {
    bool dup = false;
    for (const UPoly& g : out) dup = dup || g == f;
    if (!dup) out.push_back(std::move(f));
  }
  return out;
}

ExtField::ExtField(const PrimeField& K, UPoly h) : K_(K), h_(umonic(K, std::move(h))) {
  if (updeg(h_) < 1) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
}

ExtField::E ExtField::reduce(const UPoly& a) const { return udivmod(K_, a, h_).second; }

ExtField::E ExtField::mul(const E& a, const E& b) const {
  return udivmod(K_, umul(K_, a, b), h_).second;
}

ExtField::E ExtField::inv(const E& a) const {
  if (a.empty()) throw std::domain_error("ExtField::inv of zero");
  // extended Euclid in F_p[x]
  UPoly r0 = h_, r1 = a, s0 = {}, s1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = udivmod(K_, r0, r1);
    UPoly s2 = usub(K_, s0, umul(K_, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (updeg(r0) != 0)
    throw std::domain_error("ExtField::inv: element is a zero divisor (modulus not irreducible)");
  return uscale(K_, std::move(s0), K_.inv(r0[0]));
}

void enormalize(const ExtField& K, EPoly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

int edeg(const EPoly& a) { return (int)a.size() - 1; }

namespace {

EPoly erem(const ExtField& K, EPoly a, const EPoly& b) {
  ExtField::E lead_inv = K.inv(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    ExtField::E c = K.mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j + 1 < b.size(); ++j)
      a[shift + j] = K.sub(a[shift + j], K.mul(c, b[j]));
    a.pop_back();  // leading term cancels exactly
    enormalize(K, a);
  }
  return a;
}

}  // namespace

EPoly egcd_monic(const ExtField& K, EPoly a, EPoly b) {
  enormalize(K, a);
  enormalize(K, b);
  while (!b.empty()) {
    EPoly r = erem(K, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    ExtField::E li = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, li);
  }
  return a;
}

}  // namespace dpw
