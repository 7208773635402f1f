#include "xmodcat/xmod.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace xmodcat {

bool CrossedModule::is_trivial() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const GrpPtr& g) { return g->order() == 1; });
}

ValidationReport validate_crossed_module(const CrossedModule& xm) {
  ValidationReport report;
  const FinCategory& c = *xm.base;
  if (static_cast<int>(xm.groups.size()) != c.num_objects() ||
      static_cast<int>(xm.on_morphisms.size()) != c.num_morphisms() ||
      static_cast<int>(xm.gamma.size()) != c.num_objects()) {
    report.add("shape", "per-object/per-morphism table size mismatch");
    return report;
  }

  // gamma_A is a homomorphism into the automorphisms of A
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    const FinGroup& ga = xm.group(a);
    if (static_cast<int>(xm.gamma[a].size()) != ga.order()) {
      report.add("shape", "gamma at object " + std::to_string(a));
      continue;
    }
    for (ElemId alpha = 0; alpha < ga.order(); ++alpha) {
      MorId m = xm.gamma_mor(a, alpha);
      if (c.dom(m) != a || c.cod(m) != a || !c.is_invertible(m))
        report.add("gamma typing", "gamma(" + std::to_string(alpha) +
                                       ") at object " + std::to_string(a) +
                                       " is not an automorphism");
    }
    if (xm.gamma_mor(a, 0) != c.identity(a))
      report.add("gamma homomorphism",
                 "gamma(identity) at object " + std::to_string(a));
    for (ElemId alpha = 0; alpha < ga.order(); ++alpha)
      for (ElemId beta = 0; beta < ga.order(); ++beta) {
        MorId lhs = xm.gamma_mor(a, ga.mul(alpha, beta));
        MorId rhs = c.raw_compose(xm.gamma_mor(a, alpha), xm.gamma_mor(a, beta));
        if (lhs != rhs)
          report.add("gamma homomorphism",
                     "object " + std::to_string(a) + ", pair (" +
                         std::to_string(alpha) + ", " + std::to_string(beta) + ")");
      }
  }

  // functoriality of G
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    const GroupHom& h = xm.on_morphisms[c.identity(a)];
    for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha)
      if (h(alpha) != alpha) {
        report.add("functoriality", "G(id_" + std::to_string(a) + ") != id");
        break;
      }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    const GroupHom& h = xm.on_morphisms[f];
    if (static_cast<int>(h.map.size()) != xm.group(c.dom(f)).order()) {
      report.add("shape", "G on morphism " + std::to_string(f));
      continue;
    }
    if (!h.is_homomorphism())
      report.add("functoriality",
                 "G(" + std::to_string(f) + ") is not a homomorphism");
  }
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      MorId gf = c.raw_compose(g, f);
      if (gf < 0) continue;
      for (ElemId alpha = 0; alpha < xm.group(c.dom(f)).order(); ++alpha)
        if (xm.act(gf, alpha) != xm.act(g, xm.act(f, alpha))) {
          report.add("functoriality", "G(g∘f) != G(g)∘G(f) at (g=" +
                                          std::to_string(g) + ", f=" +
                                          std::to_string(f) + ", alpha=" +
                                          std::to_string(alpha) + ")");
          break;
        }
    }

  // equivariance: f ∘ gamma_A(alpha) = gamma_B(G(f)alpha) ∘ f
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.dom(f), b = c.cod(f);
    for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha) {
      MorId lhs = c.raw_compose(f, xm.gamma_mor(a, alpha));
      MorId rhs = c.raw_compose(xm.gamma_mor(b, xm.act(f, alpha)), f);
      if (lhs < 0 || rhs < 0 || lhs != rhs)
        report.add("equivariance", "(f=" + std::to_string(f) + ", alpha=" +
                                       std::to_string(alpha) + ")");
    }
  }

  // Peiffer: G(gamma(alpha))beta = alpha beta alpha^-1
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    const FinGroup& ga = xm.group(a);
    for (ElemId alpha = 0; alpha < ga.order(); ++alpha)
      for (ElemId beta = 0; beta < ga.order(); ++beta) {
        ElemId lhs = xm.act(xm.gamma_mor(a, alpha), beta);
        ElemId rhs = ga.mul(ga.mul(alpha, beta), ga.inv(alpha));
        if (lhs != rhs)
          report.add("Peiffer", "object " + std::to_string(a) + ", (alpha=" +
                                    std::to_string(alpha) + ", beta=" +
                                    std::to_string(beta) + ")");
      }
  }
  return report;
}

GroupsDiagram delooping_diagram(const GrpPtr& g) {
  int n = g->order();
  std::vector<std::pair<ObjId, ObjId>> ends(n, {0, 0});
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) comps.emplace_back(a, b, g->mul(a, b));
  GroupsDiagram d;
  d.cat = std::make_shared<FinCategory>(1, std::move(ends), std::vector<MorId>{0},
                                        comps);
  d.groups = {g};
  for (ElemId a = 0; a < n; ++a) d.homs.push_back(conjugation_hom(g, a));
  d.conj_label.resize(1);
  for (ElemId a = 0; a < n; ++a) d.conj_label[0].push_back(a);
  return d;
}

GroupsDiagram full_groups_subcategory(const std::vector<GrpPtr>& groups,
                                      const SearchBudget& budget) {
  int k = static_cast<int>(groups.size());
  std::vector<std::pair<ObjId, ObjId>> ends;
  std::vector<GroupHom> homs;
  std::map<std::pair<std::pair<ObjId, ObjId>, std::vector<ElemId>>, MorId> index;
  for (ObjId i = 0; i < k; ++i)
    for (ObjId j = 0; j < k; ++j)
      for (GroupHom& h : hom_set(groups[i], groups[j], budget)) {
        index[{{i, j}, h.map}] = static_cast<MorId>(homs.size());
        ends.push_back({i, j});
        homs.push_back(std::move(h));
      }
  std::vector<MorId> identities(k);
  for (ObjId i = 0; i < k; ++i)
    identities[i] = index.at({{i, i}, identity_hom(groups[i]).map});
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (MorId g = 0; g < static_cast<MorId>(homs.size()); ++g)
    for (MorId f = 0; f < static_cast<MorId>(homs.size()); ++f) {
      if (ends[f].second != ends[g].first) continue;
      GroupHom gf = compose(homs[g], homs[f]);
      comps.emplace_back(g, f, index.at({{ends[f].first, ends[g].second}, gf.map}));
    }
  GroupsDiagram d;
  d.cat = std::make_shared<FinCategory>(k, std::move(ends), std::move(identities),
                                        comps);
  d.groups = groups;
  d.homs = std::move(homs);
  d.conj_label.resize(k);
  for (ObjId i = 0; i < k; ++i)
    for (ElemId a = 0; a < groups[i]->order(); ++a)
      d.conj_label[i].push_back(index.at({{i, i}, conjugation_hom(groups[i], a).map}));
  return d;
}

CrossedModule conjugation_module(const GroupsDiagram& d) {
  for (const GroupHom& h : d.homs)
    if (!h.is_homomorphism())
      throw InputError("groups diagram carries a non-homomorphism");
  CrossedModule xm;
  xm.base = d.cat;
  xm.groups = d.groups;
  xm.on_morphisms = d.homs;
  xm.gamma = d.conj_label;
  return xm;
}

CrossedModule trivial_module(const CatPtr& base) {
  CrossedModule xm;
  xm.base = base;
  GrpPtr one = trivial_group();
  for (ObjId a = 0; a < base->num_objects(); ++a) {
    xm.groups.push_back(one);
    xm.gamma.push_back({base->identity(a)});
  }
  for (MorId f = 0; f < base->num_morphisms(); ++f)
    xm.on_morphisms.push_back(identity_hom(one));
  return xm;
}

// --- isotropy ----------------------------------------------------------------

namespace {

struct FamilySearch {
  const FinCategory& c;
  const Coslice& slice;
  const std::vector<std::vector<MorId>>& candidates;  // per coslice object
  std::vector<std::vector<std::pair<int, int>>> edges; // per object: (other, mor)
};

// Checks all triangles between assigned components: g ∘ alpha_i = alpha_j ∘ g.
bool square_ok(const FinCategory& c, const Coslice& slice,
               const std::vector<MorId>& assign, int upto) {
  for (std::size_t m = 0; m < slice.triangle_of.size(); ++m) {
    auto [i, g] = slice.triangle_of[m];
    if (i > upto) continue;
    int j = slice.object_index(c.compose(g, slice.object_of[i]));
    if (j > upto) continue;
    if (c.raw_compose(g, assign[i]) != c.raw_compose(assign[j], g)) return false;
  }
  return true;
}

void family_backtrack(const FinCategory& c, const Coslice& slice,
                      const std::vector<std::vector<MorId>>& candidates,
                      std::vector<MorId>& assign, int next, BudgetMeter& meter,
                      std::vector<std::vector<MorId>>& out) {
  int k = static_cast<int>(slice.object_of.size());
  if (next == k) {
    out.push_back(assign);
    return;
  }
  for (MorId a : candidates[next]) {
    meter.charge();
    assign[next] = a;
    if (square_ok(c, slice, assign, next))
      family_backtrack(c, slice, candidates, assign, next + 1, meter, out);
    assign[next] = -1;
  }
}

}  // namespace

IsotropyGroup compute_isotropy(const CatPtr& cp, ObjId x,
                               const SearchBudget& budget, int workers) {
  const FinCategory& c = *cp;
  Coslice slice = coslice(cp, x);
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
  } else if (workers <= 1 || candidates[0].size() <= 1) {
    BudgetMeter meter(budget);
    std::vector<MorId> assign(k, -1);
    family_backtrack(c, slice, candidates, assign, 0, meter, families);
  } else {
    // shard on the root component; buckets are merged in candidate order
    int roots = static_cast<int>(candidates[0].size());
    std::vector<std::vector<std::vector<MorId>>> bucket(roots);
    std::atomic<int> next_root{0};
    std::atomic<bool> exceeded{false};
    SearchBudget per{budget.limit};
    auto work = [&]() {
      while (true) {
        int r = next_root.fetch_add(1);
        if (r >= roots || exceeded.load()) return;
        try {
          BudgetMeter meter(per);
          std::vector<MorId> assign(k, -1);
          assign[0] = candidates[0][r];
          if (square_ok(c, slice, assign, 0))
            family_backtrack(c, slice, candidates, assign, 1, meter, bucket[r]);
        } catch (const BudgetError&) {
          exceeded.store(true);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (exceeded.load()) throw BudgetError(budget.limit + 1, budget.limit);
    for (auto& b : bucket)
      for (auto& f : b) families.push_back(std::move(f));
  }

  // identity family first, the rest in lexicographic component order
  std::vector<MorId> ident(k);
  for (int i = 0; i < k; ++i) ident[i] = c.identity(c.cod(slice.object_of[i]));
  std::sort(families.begin(), families.end());
  std::vector<std::vector<MorId>> ordered;
  ordered.push_back(ident);
  for (auto& f : families)
    if (f != ident) ordered.push_back(std::move(f));

  std::map<std::vector<MorId>, ElemId> elem_of;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    elem_of[ordered[i]] = static_cast<ElemId>(i);

  int n = static_cast<int>(ordered.size());
  std::vector<ElemId> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<MorId> prod(k);
      for (int t = 0; t < k; ++t)
        prod[t] = c.compose(ordered[i][t], ordered[j][t]);
      auto it = elem_of.find(prod);
      if (it == elem_of.end())
        throw std::logic_error("isotropy families are not closed under composition");
      mul[static_cast<std::size_t>(i) * n + j] = it->second;
    }

  IsotropyGroup z;
  z.group = FinGroup(n, std::move(mul));
  for (auto& f : ordered) z.labels.push_back({x, std::move(f)});
  z.slice = std::move(slice);
  return z;
}

GroupHom isotropy_functor_action(const CatPtr& cp, MorId x,
                                 const IsotropyGroup& zx, const IsotropyGroup& zy) {
  const FinCategory& c = *cp;
  if (c.dom(x) != zx.labels.at(0).base_object ||
      c.cod(x) != zy.labels.at(0).base_object)
    throw InputError("morphism does not match the given isotropy groups");
  int ky = static_cast<int>(zy.slice.object_of.size());
  std::vector<ElemId> map;
  for (const IsotropyElement& alpha : zx.labels) {
    std::vector<MorId> reindexed(ky);
    for (int i = 0; i < ky; ++i) {
      MorId f = zy.slice.object_of[i];
      reindexed[i] = alpha.components[zx.slice.object_index(c.compose(f, x))];
    }
    ElemId found = -1;
    for (std::size_t e = 0; e < zy.labels.size(); ++e)
      if (zy.labels[e].components == reindexed) {
        found = static_cast<ElemId>(e);
        break;
      }
    if (found < 0)
      throw std::logic_error("reindexed family missing from target isotropy group");
    map.push_back(found);
  }
  auto src = std::make_shared<FinGroup>(zx.group);
  auto tgt = std::make_shared<FinGroup>(zy.group);
  return {src, tgt, std::move(map)};
}

GroupHom delta_hom(const IsotropyGroup& zx, const LabeledGroup& aut_x) {
  ObjId x = zx.labels.at(0).base_object;
  const FinCategory& c = *zx.slice.projection.target;
  int id_index = zx.slice.object_index(c.identity(x));
  std::vector<ElemId> map;
  for (const IsotropyElement& alpha : zx.labels) {
    auto e = aut_x.element_of(alpha.components[id_index]);
    if (!e) throw std::logic_error("delta image is not an automorphism");
    map.push_back(*e);
  }
  auto src = std::make_shared<FinGroup>(zx.group);
  auto tgt = std::make_shared<FinGroup>(aut_x.group);
  return {src, tgt, std::move(map)};
}

namespace {

std::vector<ElemId> comparison_map(const CrossedModule& xm, ObjId a,
                                   const IsotropyGroup& za) {
  const FinCategory& c = *xm.base;
  int k = static_cast<int>(za.slice.object_of.size());
  std::vector<ElemId> map;
  for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha) {
    std::vector<MorId> family(k);
    for (int i = 0; i < k; ++i) {
      MorId f = za.slice.object_of[i];
      family[i] = xm.gamma_mor(c.cod(f), xm.act(f, alpha));
    }
    ElemId found = -1;
    for (std::size_t e = 0; e < za.labels.size(); ++e)
      if (za.labels[e].components == family) {
        found = static_cast<ElemId>(e);
        break;
      }
    if (found < 0)
      throw std::logic_error("comparison image is not a natural family");
    map.push_back(found);
  }
  return map;
}

}  // namespace

CanonicalComparison canonical_comparison(const CrossedModule& xm,
                                         const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  CanonicalComparison result;
  for (ObjId a = 0; a < c.num_objects(); ++a)
    result.isotropy.push_back(compute_isotropy(xm.base, a, budget));

  for (ObjId a = 0; a < c.num_objects(); ++a) {
    auto src = std::make_shared<FinGroup>(xm.group(a));
    auto tgt = std::make_shared<FinGroup>(result.isotropy[a].group);
    result.per_object.push_back({src, tgt, comparison_map(xm, a, result.isotropy[a])});
    if (!result.per_object.back().is_homomorphism())
      result.morphism_check.add("homomorphism",
                                "comparison at object " + std::to_string(a));
  }

  // naturality: Z(f) ∘ comp_A = comp_B ∘ G(f)
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.dom(f), b = c.cod(f);
    GroupHom zf = isotropy_functor_action(xm.base, f, result.isotropy[a],
                                          result.isotropy[b]);
    for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha)
      if (zf(result.per_object[a](alpha)) !=
          result.per_object[b](xm.act(f, alpha)))
        result.morphism_check.add("naturality", "(f=" + std::to_string(f) +
                                                    ", alpha=" +
                                                    std::to_string(alpha) + ")");
  }

  // compatibility: delta_A ∘ comp_A = gamma_A
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    LabeledGroup aut = automorphism_group_in_category(c, a);
    GroupHom delta = delta_hom(result.isotropy[a], aut);
    for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha)
      if (aut.label[delta(result.per_object[a](alpha))] != xm.gamma_mor(a, alpha))
        result.morphism_check.add("compatibility",
                                  "object " + std::to_string(a) + ", alpha=" +
                                      std::to_string(alpha));
  }

  // uniqueness: exhaust all per-object hom families forming a crossed-module
  // morphism over the identity functor
  BudgetMeter meter(budget);
  std::vector<std::vector<GroupHom>> choices;
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    auto src = std::make_shared<FinGroup>(xm.group(a));
    auto tgt = std::make_shared<FinGroup>(result.isotropy[a].group);
    choices.push_back(hom_set(src, tgt, budget));
  }
  std::vector<std::size_t> pick(c.num_objects(), 0);
  std::uint64_t matches = 0;
  bool done = c.num_objects() == 0;
  while (!done) {
    meter.charge();
    ++result.candidates_checked;
    bool ok = true;
    // compatibility squares
    for (ObjId a = 0; a < c.num_objects() && ok; ++a) {
      const GroupHom& sigma = choices[a][pick[a]];
      const FinCategory& base = c;
      int id_index = result.isotropy[a].slice.object_index(base.identity(a));
      for (ElemId alpha = 0; alpha < xm.group(a).order() && ok; ++alpha)
        if (result.isotropy[a].labels[sigma(alpha)].components[id_index] !=
            xm.gamma_mor(a, alpha))
          ok = false;
    }
    // naturality squares
    for (MorId f = 0; f < c.num_morphisms() && ok; ++f) {
      ObjId a = c.dom(f), b = c.cod(f);
      GroupHom zf = isotropy_functor_action(xm.base, f, result.isotropy[a],
                                            result.isotropy[b]);
      for (ElemId alpha = 0; alpha < xm.group(a).order() && ok; ++alpha)
        if (zf(choices[a][pick[a]](alpha)) != choices[b][pick[b]](xm.act(f, alpha)))
          ok = false;
    }
    if (ok) ++matches;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) done = true;
  }
  result.unique = (matches == 1);
  return result;
}

CrossedModule isotropy_module(const CatPtr& cp, const SearchBudget& budget) {
  const FinCategory& c = *cp;
  std::vector<IsotropyGroup> zs;
  for (ObjId a = 0; a < c.num_objects(); ++a)
    zs.push_back(compute_isotropy(cp, a, budget));
  CrossedModule xm;
  xm.base = cp;
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    xm.groups.push_back(std::make_shared<FinGroup>(zs[a].group));
    std::vector<MorId> g;
    LabeledGroup aut = automorphism_group_in_category(c, a);
    GroupHom delta = delta_hom(zs[a], aut);
    for (ElemId e = 0; e < zs[a].group.order(); ++e)
      g.push_back(aut.label[delta(e)]);
    xm.gamma.push_back(std::move(g));
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    GroupHom zf = isotropy_functor_action(cp, f, zs[c.dom(f)], zs[c.cod(f)]);
    zf.source = xm.groups[c.dom(f)];
    zf.target = xm.groups[c.cod(f)];
    xm.on_morphisms.push_back(std::move(zf));
  }
  return xm;
}

}  // namespace xmodcat
