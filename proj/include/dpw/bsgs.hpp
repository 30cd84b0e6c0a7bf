#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dpw/action.hpp"
#include "dpw/perm.hpp"

namespace dpw {

using BigInt = boost::multiprecision::cpp_int;

// One level of a stabilizer chain: the fundamental orbit of the base point
// under the stabilizer of the earlier base points, with coset
// representatives u satisfying base^u = point.
struct BsgsLevel {
  int base_point = -1;
  std::vector<int> orbit;          // discovery order, orbit[0] == base_point
  std::vector<int> orbit_pos;      // point -> position in orbit, -1 if absent
  std::vector<Perm> transversal;   // indexed by orbit position
};

// Base and strong generating set built with the deterministic Schreier-Sims
// procedure. The base is chosen greedily: each base point is the smallest
// point moved by the generators of the current stabilizer.
class Bsgs {
public:
  explicit Bsgs(const PermAction& action);
  Bsgs(int degree, const std::vector<Perm>& generators);

  int degree() const { return degree_; }
  const std::vector<BsgsLevel>& levels() const { return levels_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }

  BigInt order() const;
  bool contains(const Perm& g) const;

private:
  void construct(const std::vector<Perm>& generators);
  void rebuild_orbit(int level);
  std::vector<const Perm*> level_generators(int level) const;
  // sift from the given level; returns the residue and the level at which
  // sifting stopped (levels_.size() if it ran through the whole chain)
  std::pair<Perm, int> sift_from(Perm g, int from) const;

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Perm> strong_;
  std::vector<BsgsLevel> levels_;
};

}  // namespace dpw
