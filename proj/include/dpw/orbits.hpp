#pragma once

#include <cstdint>
#include <vector>

#include "dpw/action.hpp"

namespace dpw {

// Orbit of a k-subset of the ground set under the generated group: BFS
// closure of the canonical (sorted) form. Throws on duplicate or
// out-of-range indices. If out is non-null the full orbit is stored there
// as sorted tuples, in BFS discovery order.
std::uint64_t orbit_size_of_subset(const PermAction& action, std::vector<int> subset,
                                   std::vector<std::vector<int>>* out = nullptr);

struct OrbitInfo {
  std::vector<int> representative;  // colex-minimal member
  std::uint64_t size = 0;
};

struct OrbitTable {
  int ground_size = 0;
  int k = 0;
  std::vector<OrbitInfo> orbits;
  // orbit id per combinadic rank, filled only when requested
  std::vector<std::int32_t> orbit_id;
};

// Complete partition of all k-subsets into orbits. Subsets are tracked in a
// flat bitset indexed by combinadic rank; refuses to run if C(ground, k)
// exceeds the cap (use Burnside counting instead for large k).
OrbitTable orbit_partition(const PermAction& action, int k,
                           std::uint64_t cap = 50'000'000, bool keep_orbit_ids = false);

// rank of a strictly increasing tuple in the combinatorial number system
std::uint64_t combinadic_rank(const std::vector<int>& sorted_tuple);

}  // namespace dpw
