#pragma once

#include <vector>

#include "dpw/lattice.hpp"
#include "dpw/perm.hpp"

namespace dpw {

enum class ActionMode { full, projective };

// A Weyl group as a permutation group: generators are the simple
// reflections acting on the canonically ordered roots (full mode) or on
// the 120 pairs {r, -r} (projective mode, n = 8 only).
struct PermAction {
  int ground_size = 0;
  ActionMode mode = ActionMode::full;
  std::vector<Perm> generators;

  // projective mode only: pair id -> lex-smaller representative root index,
  // and root index -> pair id.
  std::vector<int> pair_rep;
  std::vector<int> pair_of_root;
};

PermAction build_action(const RootSystem& rs, ActionMode mode);

const char* mode_name(ActionMode mode);

}  // namespace dpw
