#include "xmodcat/fixtures.hpp"

#include <algorithm>
#include <random>

namespace xmodcat {

CatPtr discrete_category(int n) {
  std::vector<std::pair<ObjId, ObjId>> ends;
  std::vector<MorId> identities;
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (int a = 0; a < n; ++a) {
    ends.push_back({a, a});
    identities.push_back(a);
    comps.emplace_back(a, a, a);
  }
  return std::make_shared<FinCategory>(n, std::move(ends), std::move(identities),
                                       comps);
}

CatPtr terminal_category() { return discrete_category(1); }

CatPtr empty_category() { return discrete_category(0); }

CatPtr poset_category(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) le[a][a] = 1;
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw InputError("bad cover pair");
    le[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && le[a][b] && le[b][a])
        throw InputError("cover relation has a cycle");

  std::vector<std::pair<ObjId, ObjId>> ends;
  std::vector<std::vector<MorId>> index(n, std::vector<MorId>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (le[a][b]) {
        index[a][b] = static_cast<MorId>(ends.size());
        ends.push_back({a, b});
      }
  std::vector<MorId> identities;
  for (int a = 0; a < n; ++a) identities.push_back(index[a][a]);
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (le[a][b] && le[b][c])
          comps.emplace_back(index[b][c], index[a][b], index[a][c]);
  return std::make_shared<FinCategory>(n, std::move(ends), std::move(identities),
                                       comps);
}

CatPtr chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a + 1 < n; ++a) covers.push_back({a, a + 1});
  return poset_category(n, covers);
}

CatPtr walking_arrow() { return chain_poset(2); }

CatPtr span_category() { return poset_category(3, {{0, 1}, {0, 2}}); }

CatPtr cospan_category() { return poset_category(3, {{0, 2}, {1, 2}}); }

CatPtr parallel_pair_category() {
  // objects 0, 1; morphisms: id0, id1, f, g : 0 -> 1
  std::vector<std::pair<ObjId, ObjId>> ends = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
  std::vector<MorId> identities = {0, 1};
  std::vector<std::tuple<MorId, MorId, MorId>> comps = {
      {0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}, {3, 0, 3}, {1, 3, 3}};
  return std::make_shared<FinCategory>(2, std::move(ends), std::move(identities),
                                       comps);
}

CatPtr square_poset() {
  return poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

CatPtr delooping(const GrpPtr& g) { return delooping_diagram(g).cat; }

CatPtr idempotent_pair_category() {
  // one object with a single non-identity idempotent endomorphism
  std::vector<std::pair<ObjId, ObjId>> ends = {{0, 0}, {0, 0}};
  std::vector<std::tuple<MorId, MorId, MorId>> comps = {
      {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  return std::make_shared<FinCategory>(1, std::move(ends), std::vector<MorId>{0},
                                       comps);
}

CrossedModule representable_z2_module() {
  // Z2 with the idempotent acting by collapse; hom(*, -) then realizes the
  // underlying set of the value group, with the nonidentity element as the
  // universal point
  CatPtr base = idempotent_pair_category();
  GrpPtr z2 = cyclic_group(2);
  CrossedModule xm;
  xm.base = base;
  xm.groups = {z2};
  xm.on_morphisms = {identity_hom(z2), trivial_hom(z2, z2)};
  xm.gamma = {{base->identity(0), base->identity(0)}};
  return xm;
}

CrossedModule negation_module(const std::vector<GrpPtr>& abelian_groups,
                              const SearchBudget& budget) {
  for (const GrpPtr& g : abelian_groups)
    if (!g->is_abelian()) throw InputError("negation module needs abelian groups");
  GroupsDiagram d = full_groups_subcategory(abelian_groups, budget);
  GrpPtr z2 = cyclic_group(2);
  CrossedModule xm;
  xm.base = d.cat;
  for (std::size_t a = 0; a < abelian_groups.size(); ++a) {
    xm.groups.push_back(z2);
    GroupHom neg = inversion_hom(abelian_groups[a]);
    MorId neg_mor = -1;
    for (MorId m = 0; m < d.cat->num_morphisms(); ++m)
      if (d.cat->dom(m) == static_cast<ObjId>(a) &&
          d.cat->cod(m) == static_cast<ObjId>(a) && d.homs[m].map == neg.map)
        neg_mor = m;
    xm.gamma.push_back({d.cat->identity(static_cast<ObjId>(a)), neg_mor});
  }
  for (MorId f = 0; f < d.cat->num_morphisms(); ++f)
    xm.on_morphisms.push_back(identity_hom(z2));
  return xm;
}

CrossedModule thin_abelian_module(const CatPtr& thin_base,
                                  std::vector<GrpPtr> groups,
                                  std::vector<GroupHom> on_morphisms) {
  CrossedModule xm;
  xm.base = thin_base;
  xm.groups = std::move(groups);
  xm.on_morphisms = std::move(on_morphisms);
  for (ObjId a = 0; a < thin_base->num_objects(); ++a) {
    if (!xm.groups[a]->is_abelian())
      throw InputError("trivial action needs abelian groups");
    xm.gamma.push_back(
        std::vector<MorId>(xm.groups[a]->order(), thin_base->identity(a)));
  }
  return xm;
}

namespace {

CrossedModule constant_thin_module(const CatPtr& base, const GrpPtr& g) {
  std::vector<GrpPtr> groups(base->num_objects(), g);
  std::vector<GroupHom> on(base->num_morphisms(), identity_hom(g));
  return thin_abelian_module(base, std::move(groups), std::move(on));
}

}  // namespace

std::vector<Fixture> named_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"bz2_conj", conjugation_module(delooping_diagram(cyclic_group(2)))});
  out.push_back({"bz3_conj", conjugation_module(delooping_diagram(cyclic_group(3)))});
  out.push_back({"bs3_conj", conjugation_module(delooping_diagram(symmetric3()))});
  out.push_back({"grp3_conj", conjugation_module(full_groups_subcategory(
                                  {trivial_group(), cyclic_group(2), symmetric3()}))});
  out.push_back({"ab3_neg",
                 negation_module({trivial_group(), cyclic_group(2), cyclic_group(3)})});
  out.push_back({"poset01_z2", constant_thin_module(chain_poset(2), cyclic_group(2))});
  out.push_back({"diamond_z2", constant_thin_module(square_poset(), cyclic_group(2))});
  out.push_back({"cospan_z2", constant_thin_module(cospan_category(), cyclic_group(2))});
  out.push_back({"brep_z2", representable_z2_module()});
  out.push_back({"poset01_trivial", trivial_module(chain_poset(2))});
  out.push_back({"span_trivial", trivial_module(span_category())});
  out.push_back({"bz2_trivial", trivial_module(delooping(cyclic_group(2)))});
  out.push_back({"discrete2_trivial", trivial_module(discrete_category(2))});
  out.push_back({"terminal_trivial", trivial_module(terminal_category())});
  return out;
}

Fixture fixture(const std::string& name) {
  for (Fixture& f : named_fixtures())
    if (f.name == name) return std::move(f);
  throw InputError("unknown fixture: " + name);
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

GrpPtr random_abelian(std::mt19937_64& rng, int max_order) {
  std::vector<GrpPtr> stock = {trivial_group(), cyclic_group(2), cyclic_group(3),
                               cyclic_group(4), klein_four()};
  std::vector<GrpPtr> fit;
  for (const GrpPtr& g : stock)
    if (g->order() <= max_order) fit.push_back(g);
  return fit[pick(rng, fit.size())];
}

GroupHom random_hom(std::mt19937_64& rng, const GrpPtr& a, const GrpPtr& b) {
  auto homs = hom_set(a, b);
  return homs[pick(rng, homs.size())];
}

}  // namespace

CrossedModule random_crossed_module(std::uint64_t seed, const RandomCaps& caps) {
  std::mt19937_64 rng(seed);
  CrossedModule xm;
  switch (pick(rng, 5)) {
    case 0: {  // conjugation module on a delooping
      xm = conjugation_module(delooping_diagram(random_abelian(rng, caps.max_group_order)));
      break;
    }
    case 1: {  // conjugation module on a full subcategory of groups
      int count = 1 + static_cast<int>(pick(rng, std::min(caps.max_objects, 3)));
      std::vector<GrpPtr> groups;
      for (int i = 0; i < count; ++i)
        groups.push_back(random_abelian(rng, caps.max_group_order));
      GroupsDiagram d = full_groups_subcategory(groups);
      while (d.cat->num_morphisms() > 48 && groups.size() > 1) {
        groups.pop_back();
        d = full_groups_subcategory(groups);
      }
      xm = conjugation_module(d);
      break;
    }
    case 2: {  // constant-Z2 inversion module on abelian groups
      int count = 1 + static_cast<int>(pick(rng, std::min(caps.max_objects, 3)));
      std::vector<GrpPtr> groups;
      for (int i = 0; i < count; ++i)
        groups.push_back(random_abelian(rng, caps.max_group_order));
      xm = negation_module(groups);
      break;
    }
    case 3: {  // abelian copresheaf with trivial action on a free thin shape
      int kind = static_cast<int>(pick(rng, 4));
      CatPtr base;
      if (kind == 0) base = chain_poset(1 + static_cast<int>(pick(rng, caps.max_objects)));
      else if (kind == 1) base = discrete_category(1 + static_cast<int>(pick(rng, caps.max_objects)));
      else if (kind == 2 && caps.max_objects >= 3) base = span_category();
      else base = caps.max_objects >= 3 ? cospan_category() : chain_poset(2);
      std::vector<GrpPtr> groups;
      for (ObjId a = 0; a < base->num_objects(); ++a)
        groups.push_back(random_abelian(rng, caps.max_group_order));
      // fill morphism homs: identities forced, free arrows random, chains composed
      std::vector<GroupHom> on(base->num_morphisms());
      for (MorId f = 0; f < base->num_morphisms(); ++f) {
        ObjId a = base->dom(f), b = base->cod(f);
        on[f] = a == b ? identity_hom(groups[a])
                       : random_hom(rng, groups[a], groups[b]);
      }
      // repair composites so functoriality holds on chains: (a,b) = product of covers
      for (MorId f = 0; f < base->num_morphisms(); ++f) {
        ObjId a = base->dom(f), b = base->cod(f);
        if (b > a + 1) {
          // find the cover path a -> a+1 -> ... -> b when it exists
          GroupHom acc = identity_hom(groups[a]);
          bool chained = true;
          for (ObjId t = a; t < b; ++t) {
            MorId step = -1;
            for (MorId m = 0; m < base->num_morphisms(); ++m)
              if (base->dom(m) == t && base->cod(m) == t + 1) step = m;
            if (step < 0) {
              chained = false;
              break;
            }
            acc = compose(on[step], acc);
          }
          if (chained) on[f] = acc;
        }
      }
      xm = thin_abelian_module(base, std::move(groups), std::move(on));
      break;
    }
    default: {  // trivial module on a random base
      int kind = static_cast<int>(pick(rng, 3));
      CatPtr base;
      if (kind == 0) base = delooping(random_abelian(rng, caps.max_group_order));
      else if (kind == 1) base = chain_poset(1 + static_cast<int>(pick(rng, caps.max_objects)));
      else base = caps.max_objects >= 3 ? span_category() : discrete_category(2);
      xm = trivial_module(base);
      break;
    }
  }
  ValidationReport report = validate_crossed_module(xm);
  if (!report.ok())
    throw std::logic_error("random crossed module failed validation: " +
                           report.summary());
  return xm;
}

CrossedModule mutate_gamma_constant_identity(CrossedModule xm) {
  for (ObjId a = 0; a < xm.base->num_objects(); ++a)
    std::fill(xm.gamma[a].begin(), xm.gamma[a].end(), xm.base->identity(a));
  return xm;
}

CrossedModule mutate_on_morphism(CrossedModule xm) {
  for (MorId f = 0; f < xm.base->num_morphisms(); ++f) {
    bool is_id = false;
    for (ObjId a = 0; a < xm.base->num_objects(); ++a)
      if (xm.base->identity(a) == f) is_id = true;
    if (is_id) continue;
    GroupHom broken = trivial_hom(xm.on_morphisms[f].source, xm.on_morphisms[f].target);
    if (broken.map != xm.on_morphisms[f].map) {
      xm.on_morphisms[f] = std::move(broken);
      return xm;
    }
  }
  throw InputError("fixture has no morphism to break");
}

CrossedModule mutate_gamma_single_entry(CrossedModule xm) {
  for (ObjId a = 0; a < xm.base->num_objects(); ++a)
    for (ElemId alpha = 1; alpha < xm.group(a).order(); ++alpha)
      if (xm.gamma[a][alpha] != xm.base->identity(a)) {
        xm.gamma[a][alpha] = xm.base->identity(a);
        return xm;
      }
  throw InputError("fixture has no gamma entry to break");
}

}  // namespace xmodcat
