#include "dpw/delpezzo.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace dpw {

std::vector<LineClassRow> classify_line_classes(const std::vector<Vec>& lines) {
  if (lines.size() != 240)
    throw std::invalid_argument("classify_line_classes: expected the 240 degree-1 lines");
  std::map<std::pair<int, std::vector<int>>, int> groups;
  for (const Vec& l : lines) {
    std::vector<int> mults;
    for (size_t i = 1; i < l.size(); ++i) mults.push_back(-l[i]);
    std::sort(mults.begin(), mults.end());
    ++groups[{line_h_degree(l), mults}];
  }
  auto pat = [](std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> v;
    for (auto [value, times] : runs) v.insert(v.end(), times, value);
    return v;
  };
  const std::vector<LineClassRow> expected = {
      {0, pat({{-1, 1}, {0, 7}}), 8}, {1, pat({{0, 6}, {1, 2}}), 28},
      {2, pat({{0, 3}, {1, 5}}), 56}, {3, pat({{0, 1}, {1, 6}, {2, 1}}), 56},
      {4, pat({{1, 5}, {2, 3}}), 56}, {5, pat({{1, 2}, {2, 6}}), 28},
      {6, pat({{2, 7}, {3, 1}}), 8},
  };
  std::vector<LineClassRow> rows;
  for (const auto& [key, count] : groups) rows.push_back({key.first, key.second, count});
  if (rows.size() != expected.size())
    throw std::logic_error("classify_line_classes: unexpected number of classes");
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].h_degree != expected[i].h_degree || rows[i].pattern != expected[i].pattern ||
        rows[i].count != expected[i].count)
      throw std::logic_error("classify_line_classes: a line does not match the known patterns");
  return rows;
}

bool bertini_degree_pairing_ok(const PicLattice& lat, const std::vector<Vec>& lines) {
  for (const Vec& l : lines) {
    Vec partner = bertini(lat, l);
    if (std::find(lines.begin(), lines.end(), partner) == lines.end()) return false;
    if (line_h_degree(l) + line_h_degree(partner) != 6) return false;
  }
  return true;
}

int ib_equivalence_check(const PicLattice& lat, const std::vector<Vec>& lines) {
  if (lat.n() != 8) throw std::invalid_argument("ib_equivalence_check: requires n = 8");
  Vec alpha2 = vscale(2, lat.alpha());
  int selected = 0;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const Vec &a = lines[i], &b = lines[j];
      bool partner = b == bertini(lat, a);
      bool product3 = inner(a, b) == 3;
      bool class_sum = vadd(a, b) == alpha2;
      bool root_sum =
          vadd(root_of_line(lat, a), root_of_line(lat, b)) == Vec(a.size(), 0);
      if (partner != product3 || partner != class_sum || partner != root_sum)
        throw std::logic_error("ib_equivalence_check: the four conditions disagree");
      if (partner) ++selected;
    }
  return selected;
}

int pair_m(const RootSystem& rs, int i, int j) {
  return 1 + (int)inner(rs.roots[i], rs.roots[j]);
}

std::vector<PairOrbitRow> pair_orbit_report(const RootSystem& rs, const PermAction& full) {
  if (full.mode != ActionMode::full)
    throw std::invalid_argument("pair_orbit_report: full action required");
  OrbitTable table = orbit_partition(full, 2, 50'000'000, true);

  std::vector<int> labels(table.orbits.size(), -1);
  for (size_t i = 0; i < rs.roots.size(); ++i)
    for (size_t j = i + 1; j < rs.roots.size(); ++j) {
      std::uint64_t rank = combinadic_rank({(int)i, (int)j});
      std::int32_t id = table.orbit_id[rank];
      int m = pair_m(rs, (int)i, (int)j);
      if (labels[id] < 0)
        labels[id] = m;
      else if (labels[id] != m)
        throw std::logic_error("pair_orbit_report: m is not constant on an orbit");
    }
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b])
        throw std::logic_error("pair_orbit_report: two orbits share the same m");

  std::vector<PairOrbitRow> rows;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    rows.push_back({labels[i], table.orbits[i].size, table.orbits[i].representative});
  std::sort(rows.begin(), rows.end(),
            [](const PairOrbitRow& a, const PairOrbitRow& b) { return a.m < b.m; });
  return rows;
}

std::vector<TripleOrbitRow> triple_orbit_report(const RootSystem& rs, const PermAction& full) {
  if (full.mode != ActionMode::full)
    throw std::invalid_argument("triple_orbit_report: full action required");
  OrbitTable table = orbit_partition(full, 3, 50'000'000, true);

  auto t_of = [&](int i, int j, int k) {
    std::array<int, 3> t{pair_m(rs, i, j), pair_m(rs, j, k), pair_m(rs, i, k)};
    std::sort(t.begin(), t.end());
    return t;
  };

  std::vector<std::array<int, 3>> labels(table.orbits.size(), {-1, -1, -1});
  const int n = (int)rs.roots.size();
  std::vector<int> tuple{0, 1, 2};
  std::uint64_t rank = 0;
  for (;;) {
    std::int32_t id = table.orbit_id[rank];
    auto t = t_of(tuple[0], tuple[1], tuple[2]);
    if (labels[id][0] < 0)
      labels[id] = t;
    else if (labels[id] != t)
      throw std::logic_error("triple_orbit_report: t is not constant on an orbit");
    ++rank;
    int i = 0;
    while (i + 1 < 3 && tuple[i] + 1 == tuple[i + 1]) ++i;
    if (i == 2 && tuple[i] + 1 == n) break;
    ++tuple[i];
    for (int j = 0; j < i; ++j) tuple[j] = j;
  }
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b])
        throw std::logic_error("triple_orbit_report: two orbits share the same t");

  std::vector<TripleOrbitRow> rows;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    rows.push_back({labels[i], table.orbits[i].size, table.orbits[i].representative});
  std::sort(rows.begin(), rows.end(),
            [](const TripleOrbitRow& a, const TripleOrbitRow& b) { return a.t < b.t; });
  return rows;
}

namespace {

int signed_root_product(const RootSystem& rs, const PermAction& proj, int p, int q) {
  return (int)inner(rs.roots[proj.pair_rep[p]], rs.roots[proj.pair_rep[q]]);
}

}  // namespace

std::vector<ProjPairOrbitRow> projective_pair_report(const RootSystem& rs,
                                                     const PermAction& proj) {
  if (proj.mode != ActionMode::projective)
    throw std::invalid_argument("projective_pair_report: projective action required");
  OrbitTable table = orbit_partition(proj, 2, 50'000'000, true);

  std::vector<int> labels(table.orbits.size(), -1);
  const int n = proj.ground_size;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c = std::abs(signed_root_product(rs, proj, i, j));
      std::int32_t id = table.orbit_id[combinadic_rank({i, j})];
      if (labels[id] < 0)
        labels[id] = c;
      else if (labels[id] != c)
        throw std::logic_error("projective_pair_report: invariant not constant on an orbit");
    }
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b])
        throw std::logic_error("projective_pair_report: invariant collision");

  std::vector<ProjPairOrbitRow> rows;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    rows.push_back({labels[i], table.orbits[i].size, table.orbits[i].representative});
  std::sort(rows.begin(), rows.end(),
            [](const ProjPairOrbitRow& a, const ProjPairOrbitRow& b) { return a.c < b.c; });
  return rows;
}

std::vector<ProjTripleOrbitRow> projective_triple_report(const RootSystem& rs,
                                                         const PermAction& proj) {
  if (proj.mode != ActionMode::projective)
    throw std::invalid_argument("projective_triple_report: projective action required");
  OrbitTable table = orbit_partition(proj, 3, 50'000'000, true);

  // label = (sorted |products|, sign); the sign is the product of the three
  // signed products over the canonical representatives and is well defined
  // because flipping one representative negates exactly two factors
  auto label_of = [&](int i, int j, int k) {
    int a = signed_root_product(rs, proj, i, j);
    int b = signed_root_product(rs, proj, j, k);
    int c = signed_root_product(rs, proj, i, k);
    std::array<int, 3> mags{std::abs(a), std::abs(b), std::abs(c)};
    std::sort(mags.begin(), mags.end());
    return std::make_pair(mags, a * b * c);
  };

  using Label = std::pair<std::array<int, 3>, int>;
  std::vector<Label> labels(table.orbits.size(), {{-1, -1, -1}, 0});
  const int n = proj.ground_size;
  std::vector<int> tuple{0, 1, 2};
  std::uint64_t rank = 0;
  for (;;) {
    std::int32_t id = table.orbit_id[rank];
    Label l = label_of(tuple[0], tuple[1], tuple[2]);
    if (labels[id].first[0] < 0)
      labels[id] = l;
    else if (labels[id] != l)
      throw std::logic_error("projective_triple_report: invariant not constant on an orbit");
    ++rank;
    int i = 0;
    while (i + 1 < 3 && tuple[i] + 1 == tuple[i + 1]) ++i;
    if (i == 2 && tuple[i] + 1 == n) break;
    ++tuple[i];
    for (int j = 0; j < i; ++j) tuple[j] = j;
  }
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b])
        throw std::logic_error("projective_triple_report: invariant collision");

  std::vector<ProjTripleOrbitRow> rows;
  for (size_t i = 0; i < table.orbits.size(); ++i)
    rows.push_back({labels[i].first, labels[i].second, table.orbits[i].size,
                    table.orbits[i].representative});
  std::sort(rows.begin(), rows.end(),
            [](const ProjTripleOrbitRow& a, const ProjTripleOrbitRow& b) {
              return std::make_pair(a.c, a.sign) < std::make_pair(b.c, b.sign);
            });
  return rows;
}

std::vector<std::vector<int>> projective_multigraph(const RootSystem& rs,
                                                    const PermAction& proj,
                                                    const std::vector<int>& points) {
  std::vector<int> root_ids;
  for (int p : points) {
    int rep = proj.pair_rep.at(p);
    root_ids.push_back(rep);
    root_ids.push_back(rs.index_of(vneg(rs.roots[rep])));
  }
  size_t m = root_ids.size();
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      mat[i][j] = i == j ? -1 : pair_m(rs, root_ids[i], root_ids[j]);
  return mat;
}

std::uint64_t disjoint_tuple_count(const std::vector<Vec>& lines, int n) {
  const int L = (int)lines.size();
  if (L > 256) throw std::invalid_argument("disjoint_tuple_count: too many lines");
  using Bits = std::array<std::uint64_t, 4>;
  std::vector<Bits> adj(L, Bits{0, 0, 0, 0});
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j)
      if (i != j && inner(lines[i], lines[j]) == 0) adj[i][j >> 6] |= 1ull << (j & 63);

  std::uint64_t count = 0;
  // ordered backtracking: candidates are neighbors of the whole partial
  // clique with index above the last chosen vertex
  std::function<void(const Bits&, int, int)> rec = [&](const Bits& cand, int from, int depth) {
    if (depth == n) {
      ++count;
      return;
    }
    for (int v = from; v < L; ++v) {
      if (!(cand[v >> 6] & (1ull << (v & 63)))) continue;
      Bits next;
      int remaining = 0;
      for (int w = 0; w < 4; ++w) {
        next[w] = cand[w] & adj[v][w];
        remaining += __builtin_popcountll(next[w]);
      }
      if (remaining + depth + 1 < n) continue;
      rec(next, v + 1, depth + 1);
    }
  };
  Bits all{0, 0, 0, 0};
  for (int v = 0; v < L; ++v) all[v >> 6] |= 1ull << (v & 63);
  rec(all, 0, 0);
  return count;
}

}  // namespace dpw
