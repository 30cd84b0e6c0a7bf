#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dpw/action.hpp"
#include "dpw/lattice.hpp"
#include "dpw/orbits.hpp"

namespace dpw {

// --- classification of the 240 degree-1 line classes ------------------------

struct LineClassRow {
  int h_degree = 0;
  std::vector<int> pattern;  // multiplicities, sorted ascending
  int count = 0;
};

// Groups the 240 lines by (h-degree, multiplicity multiset). Throws unless
// the result is exactly the expected seven rows with counts 8, 28, 56, 56,
// 56, 28, 8.
std::vector<LineClassRow> classify_line_classes(const std::vector<Vec>& lines);

// Checks that l -> 2*alpha - l maps the h-degree-d class row bijectively
// onto the degree-(6-d) row.
bool bertini_degree_pairing_ok(const PicLattice& lat, const std::vector<Vec>& lines);

// Verifies that the four characterizations of a Bertini pair (partner map,
// intersection number 3, class sum 2*alpha, root sum 0) select the same
// pairs over all C(240,2), and returns how many pairs they select (120).
int ib_equivalence_check(const PicLattice& lat, const std::vector<Vec>& lines);

// --- orbit reports with invariant labels ------------------------------------

struct PairOrbitRow {
  int m = 0;  // intersection number of the two corresponding lines
  std::uint64_t size = 0;
  std::vector<int> representative;
};

struct TripleOrbitRow {
  std::array<int, 3> t{};  // non-decreasing pairwise intersection numbers
  std::uint64_t size = 0;
  std::vector<int> representative;
};

struct ProjPairOrbitRow {
  int c = 0;  // |<r, s>| over representatives, 0 or 1
  std::uint64_t size = 0;
  std::vector<int> representative;
};

struct ProjTripleOrbitRow {
  std::array<int, 3> c{};  // non-decreasing |<r_i, r_j>|
  int sign = 0;            // product of the three signed products; 0 if any factor is 0
  std::uint64_t size = 0;
  std::vector<int> representative;
};

// Each report asserts that its invariant is constant on every orbit and
// differs between orbits (for projective triples, (c, sign) jointly);
// violations throw. Rows are sorted by invariant.
std::vector<PairOrbitRow> pair_orbit_report(const RootSystem& rs, const PermAction& full);
std::vector<TripleOrbitRow> triple_orbit_report(const RootSystem& rs, const PermAction& full);
std::vector<ProjPairOrbitRow> projective_pair_report(const RootSystem& rs,
                                                     const PermAction& proj);
std::vector<ProjTripleOrbitRow> projective_triple_report(const RootSystem& rs,
                                                         const PermAction& proj);

// line intersection numbers m(l_i, l_j) for the 2k lines underlying k
// projective points; mirrors the multigraph pictures of the orbit figures
std::vector<std::vector<int>> projective_multigraph(const RootSystem& rs,
                                                    const PermAction& proj,
                                                    const std::vector<int>& points);

// Invariants used by the reports.
int pair_m(const RootSystem& rs, int root_i, int root_j);  // 1 + <r_i, r_j>

// --- disjoint tuples ---------------------------------------------------------

// Number of unordered n-sets of pairwise orthogonal lines (n-cliques of the
// orthogonality graph); equals |W(tau_n)| / n!.
std::uint64_t disjoint_tuple_count(const std::vector<Vec>& lines, int n);

}  // namespace dpw
