#include "dpw/action.hpp"

#include <stdexcept>

namespace dpw {

const char* mode_name(ActionMode mode) {
  return mode == ActionMode::full ? "full" : "projective";
}

PermAction build_action(const RootSystem& rs, ActionMode mode) {
  const int nroots = (int)rs.roots.size();
  PermAction act;
  act.mode = mode;

  // images of every root under every simple reflection
  std::vector<std::vector<int>> images(rs.simple_roots.size(), std::vector<int>(nroots));
  for (size_t g = 0; g < rs.simple_roots.size(); ++g)
    for (int i = 0; i < nroots; ++i) {
      int j = rs.index_of(reflect(rs.simple_roots[g], rs.roots[i]));
      if (j < 0) throw std::logic_error("build_action: reflection left the root set");
      images[g][i] = j;
    }

  if (mode == ActionMode::full) {
    act.ground_size = nroots;
    for (auto& im : images) {
      std::vector<std::uint8_t> v(im.begin(), im.end());
      act.generators.push_back(Perm::from_images(std::move(v)));
    }
    return act;
  }

  if (rs.lattice.n() != 8)
    throw std::invalid_argument("build_action: projective mode requires n = 8");

  act.pair_of_root.assign(nroots, -1);
  for (int i = 0; i < nroots; ++i) {
    if (act.pair_of_root[i] >= 0) continue;
    int j = rs.index_of(vneg(rs.roots[i]));
    if (j < 0 || j == i) throw std::logic_error("build_action: root set not closed under negation");
    int id = (int)act.pair_rep.size();
    act.pair_rep.push_back(i < j ? i : j);
    act.pair_of_root[i] = id;
    act.pair_of_root[j] = id;
  }
  act.ground_size = (int)act.pair_rep.size();

  for (auto& im : images) {
    std::vector<std::uint8_t> v(act.ground_size);
    for (int p = 0; p < act.ground_size; ++p)
      v[p] = (std::uint8_t)act.pair_of_root[im[act.pair_rep[p]]];
    act.generators.push_back(Perm::from_images(std::move(v)));
  }
  return act;
}

}  // namespace dpw
