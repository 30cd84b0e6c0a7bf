#include "dpw/bsgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpw {

Bsgs::Bsgs(const PermAction& action) : Bsgs(action.ground_size, action.generators) {}

Bsgs::Bsgs(int degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("Bsgs: generator degree mismatch");
  construct(generators);
}

std::vector<const Perm*> Bsgs::level_generators(int level) const {
  std::vector<const Perm*> out;
  for (const Perm& g : strong_) {
    bool fixes_prefix = true;
    for (int l = 0; l < level && fixes_prefix; ++l)
      fixes_prefix = g[base_[l]] == base_[l];
    if (fixes_prefix) out.push_back(&g);
  }
  return out;
}

void Bsgs::rebuild_orbit(int level) {
  BsgsLevel& lv = levels_[level];
  auto gens = level_generators(level);
  lv.orbit.clear();
  lv.orbit_pos.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.orbit_pos[lv.base_point] = 0;
  lv.transversal.push_back(Perm(degree_));
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    int p = lv.orbit[head];
    for (const Perm* g : gens) {
      int q = (*g)[p];
      if (lv.orbit_pos[q] >= 0) continue;
      lv.orbit_pos[q] = (int)lv.orbit.size();
      lv.orbit.push_back(q);
      lv.transversal.push_back(compose(lv.transversal[head], *g));
    }
  }
}

std::pair<Perm, int> Bsgs::sift_from(Perm g, int from) const {
  for (int l = from; l < (int)levels_.size(); ++l) {
    const BsgsLevel& lv = levels_[l];
    int p = g[lv.base_point];
    int pos = lv.orbit_pos[p];
    if (pos < 0) return {std::move(g), l};
    g = compose(g, lv.transversal[pos].inverse());
  }
  return {std::move(g), (int)levels_.size()};
}

namespace {

int smallest_moved(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  return -1;
}

}  // namespace

void Bsgs::construct(const std::vector<Perm>& generators) {
  for (const Perm& g : generators) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
  }
  if (strong_.empty()) return;  // trivial group: empty base, order 1

  int first = degree_;
  for (const Perm& g : strong_) {
    int m = smallest_moved(g);
    if (m >= 0 && m < first) first = m;
  }
  base_.push_back(first);
  levels_.push_back(BsgsLevel{first, {}, {}, {}});
  rebuild_orbit(0);

  int l = 0;
  while (l >= 0) {
    rebuild_orbit(l);
    BsgsLevel& lv = levels_[l];
    auto gens = level_generators(l);
    bool clean = true;
    for (size_t pos = 0; pos < lv.orbit.size() && clean; ++pos) {
      for (const Perm* x : gens) {
        // Schreier generator u_p * x * u_{p^x}^{-1}
        int q = (*x)[lv.orbit[pos]];
        Perm s = compose(compose(lv.transversal[pos], *x), lv.transversal[lv.orbit_pos[q]].inverse());
        if (s.is_identity()) continue;
        auto [res, drop] = sift_from(std::move(s), l + 1);
        if (res.is_identity()) continue;
        if (drop == (int)levels_.size()) {
          int b = smallest_moved(res);
          base_.push_back(b);
          levels_.push_back(BsgsLevel{b, {}, {}, {}});
        }
        strong_.push_back(std::move(res));
        for (int k = l + 1; k <= drop; ++k) rebuild_orbit(k);
        l = drop;
        clean = false;
        break;
      }
    }
    if (clean) --l;
  }
}

BigInt Bsgs::order() const {
  BigInt o = 1;
  for (const BsgsLevel& lv : levels_) o *= (unsigned)lv.orbit.size();
  return o;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, drop] = sift_from(g, 0);
  (void)drop;
  return res.is_identity();
}

}  // namespace dpw
