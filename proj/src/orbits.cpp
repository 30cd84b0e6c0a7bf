#include "dpw/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dpw {

namespace {

// saturating at UINT64_MAX so oversized requests trip the cap check instead
// of wrapping
std::vector<std::vector<std::uint64_t>> binomial_table(int n, int k) {
  const std::uint64_t inf = ~0ull;
  auto sat_add = [inf](std::uint64_t a, std::uint64_t b) {
    return a > inf - b ? inf : a + b;
  };
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= std::min(i, k); ++j)
      c[i][j] = sat_add(c[i - 1][j - 1], i - 1 >= j ? c[i - 1][j] : 0);
  }
  return c;
}

void validate_subset(const PermAction& action, const std::vector<int>& subset) {
  for (int p : subset)
    if (p < 0 || p >= action.ground_size)
      throw std::invalid_argument("subset index out of range");
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("subset has duplicate elements");
}

}  // namespace

std::uint64_t combinadic_rank(const std::vector<int>& t) {
  static thread_local std::vector<std::vector<std::uint64_t>> c;
  int need_n = t.empty() ? 0 : t.back();
  if ((int)c.size() <= need_n || (t.size() && c[0].size() <= t.size()))
    c = binomial_table(std::max(need_n, 256), std::max<int>((int)t.size(), 8));
  std::uint64_t r = 0;
  for (size_t i = 0; i < t.size(); ++i) r += c[t[i]][i + 1];
  return r;
}

std::uint64_t orbit_size_of_subset(const PermAction& action, std::vector<int> subset,
                                   std::vector<std::vector<int>>* out) {
  validate_subset(action, subset);
  std::sort(subset.begin(), subset.end());
  std::set<std::vector<int>> seen{subset};
  std::vector<std::vector<int>> frontier{subset};
  if (out) {
    out->clear();
    out->push_back(subset);
  }
  while (!frontier.empty()) {
    std::vector<int> s = std::move(frontier.back());
    frontier.pop_back();
    for (const Perm& g : action.generators) {
      std::vector<int> im(s.size());
      for (size_t i = 0; i < s.size(); ++i) im[i] = g[s[i]];
      std::sort(im.begin(), im.end());
      if (seen.insert(im).second) {
        if (out) out->push_back(im);
        frontier.push_back(im);
      }
    }
  }
  return (std::uint64_t)seen.size();
}

OrbitTable orbit_partition(const PermAction& action, int k, std::uint64_t cap,
                           bool keep_orbit_ids) {
  const int n = action.ground_size;
  if (k < 0 || k > n) throw std::invalid_argument("orbit_partition: k out of range");
  auto binom = binomial_table(n, std::max(k, 1));
  const std::uint64_t total = binom[n][k];
  if (total > cap)
    throw std::invalid_argument(
        "orbit_partition: C(ground_size, k) exceeds the cap; use Burnside counting instead");

  OrbitTable table;
  table.ground_size = n;
  table.k = k;

  if (k == 0) {
    table.orbits.push_back({{}, 1});
    if (keep_orbit_ids) table.orbit_id.assign(1, 0);
    return table;
  }

  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  std::vector<std::int32_t> ids;
  if (keep_orbit_ids) ids.assign(total, -1);

  auto rank_of = [&](const int* t) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom[t[i]][i + 1];
    return r;
  };
  auto test_and_set = [&](std::uint64_t r) {
    std::uint64_t& w = visited[r >> 6];
    std::uint64_t bit = 1ull << (r & 63);
    if (w & bit) return true;
    w |= bit;
    return false;
  };

  // iterate all k-subsets in colex order (= increasing combinadic rank)
  std::vector<int> tuple(k);
  for (int i = 0; i < k; ++i) tuple[i] = i;
  std::vector<int> im(k);
  std::vector<std::vector<int>> frontier;
  std::uint64_t rank = 0;

  for (;;) {
    if (!(visited[rank >> 6] & (1ull << (rank & 63)))) {
      // new orbit seeded at the colex-minimal unvisited subset
      std::int32_t id = (std::int32_t)table.orbits.size();
      OrbitInfo info;
      info.representative = tuple;
      test_and_set(rank);
      if (keep_orbit_ids) ids[rank] = id;
      info.size = 1;
      frontier.clear();
      frontier.push_back(tuple);
      while (!frontier.empty()) {
        std::vector<int> s = std::move(frontier.back());
        frontier.pop_back();
        for (const Perm& g : action.generators) {
          for (int i = 0; i < k; ++i) im[i] = g[s[i]];
          // insertion sort; k is tiny
          for (int i = 1; i < k; ++i) {
            int v = im[i], j = i;
            while (j > 0 && im[j - 1] > v) {
              im[j] = im[j - 1];
              --j;
            }
            im[j] = v;
          }
          std::uint64_t r = rank_of(im.data());
          if (!test_and_set(r)) {
            if (keep_orbit_ids) ids[r] = id;
            ++info.size;
            frontier.push_back(im);
          }
        }
      }
      table.orbits.push_back(std::move(info));
    }
    // next subset in colex order
    ++rank;
    int i = 0;
    while (i + 1 < k && tuple[i] + 1 == tuple[i + 1]) ++i;
    if (i == k - 1 && tuple[i] + 1 == n) break;
    ++tuple[i];
    for (int j = 0; j < i; ++j) tuple[j] = j;
  }

  std::uint64_t covered = 0;
  for (const auto& o : table.orbits) covered += o.size;
  if (covered != total) throw std::logic_error("orbit_partition: orbits do not cover all subsets");
  if (keep_orbit_ids) table.orbit_id = std::move(ids);
  return table;
}

}  // namespace dpw
