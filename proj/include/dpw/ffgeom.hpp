#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>

#include "dpw/plane.hpp"

namespace dpw {

using Fp = PrimeField::F;

struct PointConfig {
  PrimeField field;
  std::array<std::pair<Fp, Fp>, 8> points;

  PointConfig(const PrimeField& K, std::array<std::pair<Fp, Fp>, 8> pts);
};

struct GeneralPosition {
  bool collinear_ok = false;  // no three points on a line
  bool conic_ok = false;      // no six points on a conic
  bool cubic_ok = false;      // no cubic through 7 points double at the 8th
  bool all() const { return collinear_ok && conic_ok && cubic_ok; }
};

GeneralPosition general_position_check(const PointConfig& cfg);

// A class [d; mu_1, ..., mu_8]; mu_i = -1 encodes the exceptional class over
// p_i (d = 0, all other mu zero). Construction checks the lattice relations
// d^2 - sum mu^2 = -1 and 3d - sum mu = 1.
struct LineCurveClass {
  int d = 0;
  std::array<int, 8> mu{};

  LineCurveClass(int d, std::array<int, 8> mu);
  bool exceptional() const;
  int exceptional_index() const;  // 0-based, -1 if not exceptional

  // d_a*d_b - sum mu_a mu_b
  static int intersection(const LineCurveClass& a, const LineCurveClass& b);

  std::string to_string() const;
};

LineCurveClass parse_line_class(const std::string& text);  // "[d; m1,...,m8]"

// Unique curve of degree d with multiplicity exactly mu_i at p_i; throws if
// the solution space does not have dimension 1, if a multiplicity
// overshoots, or if the class is exceptional.
PlanePoly interpolate_curve(const LineCurveClass& cls, const PointConfig& cfg);

struct LocalType {
  int multiplicity = 0;
  BinaryForm tangent_cone;
  bool ordinary = false;  // tangent cone squarefree
};

LocalType multiplicity_and_tangent_cone(const PlanePoly& f, Fp qx, Fp qy);

// Local intersection number at a rational point by the classical recursive
// reduction; throws if the curves share a component through the point.
long long local_intersection_multiplicity(const PlanePoly& f, const PlanePoly& g, Fp qx, Fp qy);

struct PairProfile {
  int m = 0;                     // lattice intersection number
  bool base_contacts_ok = false; // I_{p_i} = mu_i nu_i at every shared base point
  bool off_base_reduced = false; // m distinct transverse points away from the base
};

struct TripleProfile {
  std::array<int, 3> t{};
  bool common_point_free = false;
};

PairProfile pair_profile(const LineCurveClass& a, const LineCurveClass& b,
                         const PointConfig& cfg, std::mt19937_64& rng);

TripleProfile triple_profile(const LineCurveClass& a, const LineCurveClass& b,
                             const LineCurveClass& c, const PointConfig& cfg,
                             std::mt19937_64& rng);

// Coefficient test for an ordinary m-fold tangency bundle at the origin with
// tangent line y = 0: (i) a_{mu,nu} = 0 whenever mu + 2 nu < 2m, and (ii)
// a_{0,m} z^m + a_{2,m-1} z^{m-1} + ... + a_{2m,0} has m distinct roots.
// The frame must be normalized: A = (0,0) and Lambda = {y = 0}.
bool tm_singularity_check(const PlanePoly& f, int m, std::pair<Fp, Fp> A,
                          std::array<Fp, 3> lambda_line);

// Bezout cross-check: after a random projective change of coordinates with
// coprime leading forms, deg_x Res_y(f', g') = deg f * deg g and the known
// base-point factors divide it. Returns false only on arithmetic
// inconsistency; throws if no usable transform is found within the budget.
bool bezout_consistent(const PlanePoly& f, const PlanePoly& g,
                       const std::vector<std::pair<std::pair<Fp, Fp>, long long>>& base_points,
                       std::mt19937_64& rng);

}  // namespace dpw
