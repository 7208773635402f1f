#pragma once

// Independent brute-force oracles. These deliberately avoid the search
// strategies used by the library (no backtracking, no propagation): full
// product spaces filtered by the defining equations.

#include <vector>

#include "xmodcat/fincat.hpp"
#include "xmodcat/xmod.hpp"

namespace xmodcat::oracle {

// Counts functors J -> C by filtering every (obj_map, mor_map) assignment.
inline std::uint64_t count_functors_naive(const FinCategory& j,
                                          const FinCategory& c) {
  if (j.num_objects() == 0) return 1;
  if (c.num_objects() == 0) return 0;
  std::uint64_t count = 0;
  std::vector<ObjId> obj(j.num_objects(), 0);
  while (true) {
    std::vector<MorId> mor(j.num_morphisms(), 0);
    bool mor_done = j.num_morphisms() == 0;
    if (mor_done) ++count;  // functor on a discrete shape with no morphisms
    while (!mor_done) {
      bool ok = true;
      for (MorId f = 0; f < j.num_morphisms() && ok; ++f)
        ok = c.dom(mor[f]) == obj[j.dom(f)] && c.cod(mor[f]) == obj[j.cod(f)];
      for (ObjId a = 0; a < j.num_objects() && ok; ++a)
        ok = mor[j.identity(a)] == c.identity(obj[a]);
      for (MorId g = 0; g < j.num_morphisms() && ok; ++g)
        for (MorId f = 0; f < j.num_morphisms() && ok; ++f) {
          if (!j.composable(g, f)) continue;
          MorId gf = j.raw_compose(g, f);
          if (gf < 0) continue;
          ok = c.raw_compose(mor[g], mor[f]) == mor[gf];
        }
      if (ok) ++count;
      std::size_t i = 0;
      while (i < mor.size() && ++mor[i] == c.num_morphisms()) {
        mor[i] = 0;
        ++i;
      }
      if (i == mor.size()) mor_done = true;
    }
    std::size_t i = 0;
    while (i < obj.size() && ++obj[i] == c.num_objects()) {
      obj[i] = 0;
      ++i;
    }
    if (i == obj.size()) break;
  }
  return count;
}

// Enumerates natural automorphism families of the coslice projection with
// no propagation: the full product of per-object automorphism choices
// filtered by every naturality square.
inline std::vector<std::vector<MorId>> isotropy_families_naive(
    const FinCategory& c, ObjId x) {
  Coslice slice = coslice(std::make_shared<FinCategory>(c), x);
  int k = static_cast<int>(slice.object_of.size());
  std::vector<std::vector<MorId>> candidates(k);
  for (int i = 0; i < k; ++i) {
    ObjId a = c.cod(slice.object_of[i]);
    for (MorId m : c.hom(a, a))
      if (c.is_invertible(m)) candidates[i].push_back(m);
  }
  std::vector<std::vector<MorId>> families;
  if (k == 0) {
    families.push_back({});
    return families;
  }
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<MorId> assign(k);
    for (int i = 0; i < k; ++i) assign[i] = candidates[i][pick[i]];
    bool ok = true;
    for (std::size_t m = 0; m < slice.triangle_of.size() && ok; ++m) {
      auto [i, g] = slice.triangle_of[m];
      int jj = slice.object_index(c.compose(g, slice.object_of[i]));
      ok = c.raw_compose(g, assign[i]) == c.raw_compose(assign[jj], g);
    }
    if (ok) families.push_back(std::move(assign));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == candidates[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  return families;
}

}  // namespace xmodcat::oracle
