#pragma once

// Reference values the tool re-derives from scratch; any disagreement
// between a fresh computation and these tables is reported as a failure.

namespace dpw::golden {

struct Table1Row {
  int d;
  int n;
  const char* tau;
  long long weyl_order;
  int diagram_automorphisms;
  int line_count;
  long long disjoint_tuples;
};

inline constexpr Table1Row kTable1[6] = {
    {6, 3, "A1+A2", 12, 2, 6, 2},    {5, 4, "A4", 120, 2, 10, 5},
    {4, 5, "D5", 1920, 2, 16, 16},   {3, 6, "E6", 51840, 2, 27, 72},
    {2, 7, "E7", 2903040, 1, 56, 576}, {1, 8, "E8", 696729600, 1, 240, 17280},
};

inline constexpr long long kProjectiveGroupOrder = 348364800;

// orbit counts on k-subsets, starting at k = 1
inline constexpr long long kProjectiveNk[9] = {1, 2, 5, 15, 48, 212, 1116, 7388, 56946};
inline constexpr long long kFullNk[7] = {1, 4, 12, 62, 378, 3557, 45282};

// N(60) for the projective action exceeds 2.77 * 10^26
inline constexpr const char* kProjectiveN60LowerBound = "277000000000000000000000000";

inline constexpr unsigned long long kPairOrbitSizes[4] = {6720, 15120, 6720, 120};  // m = 0..3

struct TripleOrbit {
  int t[3];
  unsigned long long size;
};
inline constexpr TripleOrbit kTripleOrbits[12] = {
    {{0, 0, 0}, 60480}, {{0, 0, 1}, 181440}, {{0, 0, 2}, 6720},   {{0, 1, 1}, 483840},
    {{0, 1, 2}, 362880}, {{0, 2, 2}, 181440}, {{0, 2, 3}, 13440},  {{1, 1, 1}, 302400},
    {{1, 1, 2}, 483840}, {{1, 1, 3}, 15120},  {{1, 2, 2}, 181440}, {{2, 2, 2}, 2240},
};

// projective pair orbits keyed by |<r, s>|
inline constexpr unsigned long long kProjectivePairSizes[2] = {3780, 3360};  // c = 0, 1

struct ProjectiveTripleOrbit {
  int c[3];
  int sign;
  unsigned long long size;
};
inline constexpr ProjectiveTripleOrbit kProjectiveTripleOrbits[5] = {
    {{0, 0, 0}, 0, 37800}, {{0, 0, 1}, 0, 120960}, {{0, 1, 1}, 0, 90720},
    {{1, 1, 1}, -1, 30240}, {{1, 1, 1}, 1, 1120},
};

struct LineClassRowRef {
  int h_degree;
  const char* pattern;  // multiplicity pattern as value^count pairs
  int count;
};
inline constexpr LineClassRowRef kLineClassRows[7] = {
    {0, "(-1)^1 0^7", 8}, {1, "0^6 1^2", 28}, {2, "0^3 1^5", 56}, {3, "0^1 1^6 2^1", 56},
    {4, "1^5 2^3", 56},   {5, "1^2 2^6", 28}, {6, "2^7 3^1", 8},
};

// verification data over F_19
inline constexpr unsigned kVerifyPrime = 19;
inline constexpr unsigned kVerifyPoints[8][2] = {
    {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 15}, {15, 4}, {11, 15}, {12, 16}};

inline constexpr const char* kVerifyClasses[9] = {
    "[0; -1, 0, 0, 0, 0, 0, 0, 0]", "[3; 2, 1, 1, 1, 1, 1, 1, 0]",
    "[6; 3, 2, 2, 2, 2, 2, 2, 2]",  "[1; 1, 1, 0, 0, 0, 0, 0, 0]",
    "[2; 1, 0, 1, 1, 1, 1, 0, 0]",  "[3; 2, 0, 1, 1, 1, 1, 1, 1]",
    "[2; 1, 1, 1, 1, 1, 0, 0, 0]",  "[6; 2, 3, 2, 2, 2, 2, 2, 2]",
    "[6; 2, 2, 3, 2, 2, 2, 2, 2]"};

struct VerifyPair {
  int a, b;  // 1-based indices into kVerifyClasses
  int m;
};
inline constexpr VerifyPair kVerifyPairs[2] = {{1, 2, 2}, {1, 3, 3}};

struct VerifyTriple {
  int a, b, c;
  int t[3];
};
inline constexpr VerifyTriple kVerifyTriples[5] = {
    {1, 4, 5, {1, 1, 1}}, {1, 4, 6, {1, 1, 2}}, {1, 3, 7, {1, 1, 3}},
    {1, 6, 9, {1, 2, 2}}, {1, 6, 8, {2, 2, 2}},
};

}  // namespace dpw::golden
