#include "dpw/perm.hpp"

#include <algorithm>
#include <numeric>

namespace dpw {

std::vector<std::pair<int, int>> Perm::cycle_type() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<int> count(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    ++count[len];
  }
  std::vector<std::pair<int, int>> parts;
  for (int len = 1; len <= n; ++len)
    if (count[len]) parts.emplace_back(len, count[len]);
  return parts;
}

int Perm::order() const {
  long long o = 1;
  for (auto [len, mult] : cycle_type()) o = std::lcm(o, (long long)len);
  return (int)o;
}

}  // namespace dpw
