#include "xmodcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace xmodcat {

FinCategory::FinCategory(int n_objects,
                         std::vector<std::pair<ObjId, ObjId>> mor_ends,
                         std::vector<MorId> identities,
                         const std::vector<std::tuple<MorId, MorId, MorId>>& comps)
    : n_objects_(n_objects),
      ends_(std::move(mor_ends)),
      identities_(std::move(identities)) {
  if (n_objects_ < 0) throw InputError("negative object count");
  if (static_cast<int>(identities_.size()) != n_objects_)
    throw InputError("identity table size mismatch");
  int n = num_morphisms();
  for (const auto& [d, c] : ends_)
    if (d < 0 || d >= n_objects_ || c < 0 || c >= n_objects_)
      throw InputError("morphism endpoint out of range");
  for (MorId i : identities_)
    if (i < 0 || i >= n) throw InputError("identity morphism id out of range");
  comp_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& [g, f, gf] : comps) {
    if (g < 0 || g >= n || f < 0 || f >= n || gf < 0 || gf >= n)
      throw InputError("composition triple id out of range");
    comp_[static_cast<std::size_t>(g) * n + f] = gf;
  }
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (!composable(g, f))
    throw InputError("compose(" + std::to_string(g) + ", " + std::to_string(f) +
                     "): not composable");
  MorId gf = raw_compose(g, f);
  if (gf < 0)
    throw InputError("composition table has no entry for (" + std::to_string(g) +
                     ", " + std::to_string(f) + ")");
  return gf;
}

std::vector<MorId> FinCategory::hom(ObjId a, ObjId b) const {
  check_obj(a);
  check_obj(b);
  std::vector<MorId> out;
  for (MorId f = 0; f < num_morphisms(); ++f)
    if (dom(f) == a && cod(f) == b) out.push_back(f);
  return out;
}

std::vector<MorId> FinCategory::morphisms_from(ObjId a) const {
  check_obj(a);
  std::vector<MorId> out;
  for (MorId f = 0; f < num_morphisms(); ++f)
    if (dom(f) == a) out.push_back(f);
  return out;
}

bool FinCategory::is_invertible(MorId f) const { return inverse(f).has_value(); }

std::optional<MorId> FinCategory::inverse(MorId f) const {
  for (MorId g : hom(cod(f), dom(f)))
    if (raw_compose(g, f) == identity(dom(f)) &&
        raw_compose(f, g) == identity(cod(f)))
      return g;
  return std::nullopt;
}

ValidationReport FinFunctor::validate() const {
  ValidationReport report;
  const FinCategory& j = *source;
  const FinCategory& c = *target;
  if (static_cast<int>(obj_map.size()) != j.num_objects() ||
      static_cast<int>(mor_map.size()) != j.num_morphisms()) {
    report.add("shape", "object/morphism map size mismatch");
    return report;
  }
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    MorId ff = mor_map[f];
    if (c.dom(ff) != obj_map[j.dom(f)] || c.cod(ff) != obj_map[j.cod(f)])
      report.add("typing", "morphism " + std::to_string(f));
  }
  for (ObjId a = 0; a < j.num_objects(); ++a)
    if (mor_map[j.identity(a)] != c.identity(obj_map[a]))
      report.add("identity", "object " + std::to_string(a));
  for (MorId g = 0; g < j.num_morphisms(); ++g)
    for (MorId f = 0; f < j.num_morphisms(); ++f) {
      if (!j.composable(g, f)) continue;
      MorId gf = j.raw_compose(g, f);
      if (gf < 0) continue;
      if (c.raw_compose(mor_map[g], mor_map[f]) != mor_map[gf])
        report.add("composition",
                   "pair (" + std::to_string(g) + ", " + std::to_string(f) + ")");
    }
  return report;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  f.obj_map.resize(c->num_objects());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  f.mor_map.resize(c->num_morphisms());
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor out;
  out.source = f.source;
  out.target = g.target;
  for (ObjId a : f.obj_map) out.obj_map.push_back(g.obj_map.at(a));
  for (MorId m : f.mor_map) out.mor_map.push_back(g.mor_map.at(m));
  return out;
}

ValidationReport NatTransformation::validate() const {
  ValidationReport report;
  const FinCategory& j = *source.source;
  const FinCategory& c = *source.target;
  if (static_cast<int>(components.size()) != j.num_objects()) {
    report.add("shape", "one component per source object required");
    return report;
  }
  for (ObjId a = 0; a < j.num_objects(); ++a) {
    MorId t = components[a];
    if (c.dom(t) != source.obj_map[a] || c.cod(t) != target.obj_map[a])
      report.add("typing", "component at object " + std::to_string(a));
  }
  if (!report.violations.empty()) return report;
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    // naturality: t_cod ∘ F(f) = G(f) ∘ t_dom
    MorId lhs = c.raw_compose(components[j.cod(f)], source.mor_map[f]);
    MorId rhs = c.raw_compose(target.mor_map[f], components[j.dom(f)]);
    if (lhs < 0 || rhs < 0 || lhs != rhs)
      report.add("naturality", "morphism " + std::to_string(f));
  }
  return report;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  int n = c.num_morphisms();
  for (MorId g = 0; g < n; ++g)
    for (MorId f = 0; f < n; ++f) {
      MorId gf = c.raw_compose(g, f);
      if (c.composable(g, f)) {
        if (gf < 0) {
          report.add("totality", "no composite for composable pair (" +
                                     std::to_string(g) + ", " + std::to_string(f) + ")");
        } else if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g)) {
          report.add("ill-typed composite",
                     "(" + std::to_string(g) + ", " + std::to_string(f) + ") -> " +
                         std::to_string(gf));
        }
      } else if (gf >= 0) {
        report.add("ill-typed composite",
                   "entry on non-composable pair (" + std::to_string(g) + ", " +
                       std::to_string(f) + ")");
      }
    }
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    MorId i = c.identity(a);
    if (c.dom(i) != a || c.cod(i) != a)
      report.add("identity", "identity of object " + std::to_string(a) +
                                 " is not an endomorphism");
  }
  for (MorId f = 0; f < n; ++f) {
    if (c.raw_compose(c.identity(c.cod(f)), f) != f)
      report.add("left identity law", "morphism " + std::to_string(f));
    if (c.raw_compose(f, c.identity(c.dom(f))) != f)
      report.add("right identity law", "morphism " + std::to_string(f));
  }
  for (MorId h = 0; h < n; ++h)
    for (MorId g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (MorId f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        MorId gf = c.raw_compose(g, f);
        MorId hg = c.raw_compose(h, g);
        if (gf < 0 || hg < 0) continue;  // reported as totality above
        if (c.raw_compose(h, gf) != c.raw_compose(hg, f))
          report.add("associativity", "triple (" + std::to_string(h) + ", " +
                                          std::to_string(g) + ", " +
                                          std::to_string(f) + ")");
      }
    }
  return report;
}

namespace {

// Backtracking over morphism images in id order; identities are forced and
// every composite already determined is checked on the spot.
void functor_backtrack(const FinCategory& j, const FinCategory& c,
                       const CatPtr& jp, const CatPtr& cp,
                       const std::vector<ObjId>& obj_map,
                       std::vector<MorId>& mor_map, MorId next, BudgetMeter& meter,
                       std::vector<FinFunctor>& out) {
  int n = j.num_morphisms();
  if (next == n) {
    out.push_back(FinFunctor{jp, cp, obj_map, mor_map});
    return;
  }
  ObjId td = obj_map[j.dom(next)];
  ObjId tc = obj_map[j.cod(next)];
  for (MorId img = 0; img < c.num_morphisms(); ++img) {
    if (c.dom(img) != td || c.cod(img) != tc) continue;
    meter.charge();
    bool forced_identity = false;
    for (ObjId a = 0; a < j.num_objects(); ++a)
      if (j.identity(a) == next) {
        forced_identity = true;
        if (img != c.identity(obj_map[a])) goto next_candidate;
      }
    (void)forced_identity;
    mor_map[next] = img;
    // check all composites among assigned morphisms
    for (MorId g = 0; g <= next; ++g)
      for (MorId f = 0; f <= next; ++f) {
        if (!j.composable(g, f)) continue;
        MorId gf = j.raw_compose(g, f);
        if (gf < 0 || gf > next) continue;
        if (c.raw_compose(mor_map[g], mor_map[f]) != mor_map[gf])
          goto undo_candidate;
      }
    functor_backtrack(j, c, jp, cp, obj_map, mor_map, next + 1, meter, out);
  undo_candidate:
    mor_map[next] = -1;
  next_candidate:;
  }
}

}  // namespace

std::vector<FinFunctor> enumerate_functors(const CatPtr& jp, const CatPtr& cp,
                                           const SearchBudget& budget) {
  const FinCategory& j = *jp;
  const FinCategory& c = *cp;
  BudgetMeter meter(budget);
  std::vector<FinFunctor> out;
  if (j.num_objects() == 0) {
    out.push_back(FinFunctor{jp, cp, {}, {}});
    return out;
  }
  if (c.num_objects() == 0) return out;
  std::vector<ObjId> obj_map(j.num_objects(), 0);
  while (true) {
    meter.charge();
    std::vector<MorId> mor_map(j.num_morphisms(), -1);
    functor_backtrack(j, c, jp, cp, obj_map, mor_map, 0, meter, out);
    std::size_t i = 0;
    while (i < obj_map.size() && ++obj_map[i] == c.num_objects()) {
      obj_map[i] = 0;
      ++i;
    }
    if (i == obj_map.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const FinFunctor& a, const FinFunctor& b) {
    return std::tie(a.obj_map, a.mor_map) < std::tie(b.obj_map, b.mor_map);
  });
  return out;
}

int Coslice::object_index(MorId f) const {
  auto it = std::lower_bound(object_of.begin(), object_of.end(), f);
  if (it == object_of.end() || *it != f)
    throw InputError("morphism " + std::to_string(f) + " is not a coslice object");
  return static_cast<int>(it - object_of.begin());
}

Coslice coslice(const CatPtr& cp, ObjId x) {
  const FinCategory& c = *cp;
  if (x < 0 || x >= c.num_objects()) throw InputError("unknown object id");
  Coslice result;
  result.object_of = c.morphisms_from(x);  // ascending morphism ids
  int k = static_cast<int>(result.object_of.size());
  std::map<MorId, int> index_of;
  for (int i = 0; i < k; ++i) index_of[result.object_of[i]] = i;

  // a coslice morphism (i, g) is the triangle g ∘ f_i = f_j
  std::vector<std::pair<ObjId, ObjId>> ends;
  std::vector<int> target_of;
  for (int i = 0; i < k; ++i) {
    MorId fi = result.object_of[i];
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (c.dom(g) != c.cod(fi)) continue;
      int j = index_of.at(c.compose(g, fi));
      result.triangle_of.push_back({i, g});
      ends.push_back({i, j});
      target_of.push_back(j);
    }
  }
  std::map<std::pair<int, MorId>, MorId> mor_index;
  for (std::size_t m = 0; m < result.triangle_of.size(); ++m)
    mor_index[result.triangle_of[m]] = static_cast<MorId>(m);

  std::vector<MorId> identities(k);
  for (int i = 0; i < k; ++i)
    identities[i] = mor_index.at({i, c.identity(c.cod(result.object_of[i]))});

  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (std::size_t m2 = 0; m2 < result.triangle_of.size(); ++m2)
    for (std::size_t m1 = 0; m1 < result.triangle_of.size(); ++m1) {
      if (ends[m2].first != ends[m1].second) continue;
      auto [i1, g1] = result.triangle_of[m1];
      auto [i2, g2] = result.triangle_of[m2];
      comps.emplace_back(static_cast<MorId>(m2), static_cast<MorId>(m1),
                         mor_index.at({i1, c.compose(g2, g1)}));
    }

  result.category = std::make_shared<FinCategory>(
      k, std::move(ends), std::move(identities), comps);

  FinFunctor proj;
  proj.source = result.category;
  proj.target = cp;
  for (int i = 0; i < k; ++i) proj.obj_map.push_back(c.cod(result.object_of[i]));
  for (const auto& [i, g] : result.triangle_of) proj.mor_map.push_back(g);
  result.projection = std::move(proj);
  return result;
}

std::vector<std::vector<ObjId>> pi0(const FinCategory& j) {
  int n = j.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    int a = find(j.dom(f)), b = find(j.cod(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<ObjId>> blocks;
  for (ObjId a = 0; a < n; ++a) blocks[find(a)].push_back(a);
  std::vector<std::vector<ObjId>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

bool is_connected(const FinCategory& j) {
  return j.num_objects() > 0 && pi0(j).size() == 1;
}

std::optional<ObjId> initial_object(const FinCategory& c) {
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    bool ok = true;
    for (ObjId a = 0; a < c.num_objects() && ok; ++a)
      ok = c.hom(x, a).size() == 1;
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<ElemId> LabeledGroup::element_of(MorId f) const {
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == f) return static_cast<ElemId>(i);
  return std::nullopt;
}

LabeledGroup automorphism_group_in_category(const FinCategory& c, ObjId a) {
  std::vector<MorId> autos;
  for (MorId f : c.hom(a, a))
    if (c.is_invertible(f)) autos.push_back(f);
  // identity is element 0, the rest keep morphism id order
  MorId id = c.identity(a);
  std::vector<MorId> label;
  label.push_back(id);
  for (MorId f : autos)
    if (f != id) label.push_back(f);
  int n = static_cast<int>(label.size());
  std::map<MorId, ElemId> elem_of;
  for (int i = 0; i < n; ++i) elem_of[label[i]] = i;
  std::vector<ElemId> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[i * n + j] = elem_of.at(c.compose(label[i], label[j]));
  return {FinGroup(n, std::move(mul)), std::move(label)};
}

}  // namespace xmodcat
