#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dpw/action.hpp"
#include "dpw/bsgs.hpp"

namespace dpw {

// cycle type = (length, multiplicity) pairs, lengths ascending
using CycleType = std::vector<std::pair<int, int>>;

struct CycleTypeCensus {
  int ground_size = 0;
  BigInt group_order = 0;  // sum of the counts
  std::map<CycleType, BigInt> table;
};

// Exact multiplicity table cycle type -> element count over the whole group,
// by depth-first traversal of the transversal chain with incremental partial
// products. Work is split across top-level coset representatives; each worker
// owns disjoint subtrees and the partial tables merge by pointwise addition,
// so the result does not depend on the worker count.
//
// progress, if set, receives (elements done, total elements) at a coarse
// throttle; calls may come from several threads but are serialized by an
// internal mutex.
CycleTypeCensus enumerate_cycle_types(
    const Bsgs& bsgs, int workers = 1,
    const std::function<void(std::uint64_t done, std::uint64_t total)>& progress = {});

// Uniform random group element: the product of uniformly chosen transversal
// representatives down the chain. Smoke-test aid; never behind any reported
// number.
Perm random_element(const Bsgs& bsgs, std::mt19937_64& rng);

// --- cache files -----------------------------------------------------------
//
// UTF-8 text, header "census v1 <tau> <mode> <ground_size> <group_order>",
// then one line per cycle type: "1^a 2^b ... : <count>", lengths ascending,
// counts in decimal, types in lexicographic order. Round-trips bit-exactly.

void write_census_file(const std::string& path, const CycleTypeCensus& census,
                       const std::string& tau, const std::string& mode);

struct CensusFile {
  std::string tau;
  std::string mode;
  CycleTypeCensus census;
};

// nullopt if the file does not exist; throws on a malformed file.
std::optional<CensusFile> read_census_file(const std::string& path);

std::string census_to_string(const CycleTypeCensus& census, const std::string& tau,
                             const std::string& mode);

// FNV-1a over the canonical root ordering (and pair mapping in projective
// mode); cache keys depend on it so stale files are never misread.
std::uint64_t ordering_hash(const RootSystem& rs, ActionMode mode);

std::string census_cache_filename(const std::string& tau, const std::string& mode,
                                  std::uint64_t hash);

}  // namespace dpw
