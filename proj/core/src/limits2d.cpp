#include "xmodcat/limits2d.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace xmodcat {

using nlohmann::json;

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exists: return "exists";
    case SearchStatus::NotExists: return "not-exists";
    case SearchStatus::NotApplicable: return "not-applicable";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SearchVerdict SearchVerdict::exists(json w, std::string why) {
  return {SearchStatus::Exists, std::move(w), std::move(why)};
}
SearchVerdict SearchVerdict::not_exists(json w, std::string why) {
  return {SearchStatus::NotExists, std::move(w), std::move(why)};
}
SearchVerdict SearchVerdict::not_applicable(std::string why) {
  return {SearchStatus::NotApplicable, json::object(), std::move(why)};
}

bool is_cocone(const Diagram& d, const Cocone& c) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  if (static_cast<int>(c.legs.size()) != j.num_objects()) return false;
  for (ObjId x = 0; x < j.num_objects(); ++x) {
    MorId leg = c.legs[x];
    if (base.dom(leg) != d.functor.obj_map[x] || base.cod(leg) != c.apex)
      return false;
  }
  for (MorId f = 0; f < j.num_morphisms(); ++f)
    if (base.raw_compose(c.legs[j.cod(f)], d.functor.mor_map[f]) != c.legs[j.dom(f)])
      return false;
  return true;
}

bool is_cone(const Diagram& d, const Cone& c) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  if (static_cast<int>(c.legs.size()) != j.num_objects()) return false;
  for (ObjId x = 0; x < j.num_objects(); ++x) {
    MorId leg = c.legs[x];
    if (base.dom(leg) != c.apex || base.cod(leg) != d.functor.obj_map[x])
      return false;
  }
  for (MorId f = 0; f < j.num_morphisms(); ++f)
    if (base.raw_compose(d.functor.mor_map[f], c.legs[j.dom(f)]) != c.legs[j.cod(f)])
      return false;
  return true;
}

namespace {

// Product enumeration of leg assignments filtered by naturality. Shapes and
// bases stay desk-sized, so no pruning is attempted.
template <typename Make, typename Check>
void enumerate_legs(const FinCategory& j,
                    const std::vector<std::vector<MorId>>& choices, Make make,
                    Check check) {
  if (j.num_objects() == 0) {
    make(std::vector<MorId>{});
    return;
  }
  for (const auto& ch : choices)
    if (ch.empty()) return;
  std::vector<std::size_t> pick(j.num_objects(), 0);
  while (true) {
    std::vector<MorId> legs(j.num_objects());
    for (ObjId x = 0; x < j.num_objects(); ++x) legs[x] = choices[x][pick[x]];
    if (check(legs)) make(std::move(legs));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
}

}  // namespace

std::vector<Cocone> cocones_on(const Diagram& d, ObjId apex) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  std::vector<std::vector<MorId>> choices;
  for (ObjId x = 0; x < j.num_objects(); ++x)
    choices.push_back(base.hom(d.functor.obj_map[x], apex));
  std::vector<Cocone> out;
  enumerate_legs(j, choices,
                 [&](std::vector<MorId> legs) {
                   out.push_back({apex, std::move(legs)});
                 },
                 [&](const std::vector<MorId>& legs) {
                   for (MorId f = 0; f < j.num_morphisms(); ++f)
                     if (base.raw_compose(legs[j.cod(f)], d.functor.mor_map[f]) !=
                         legs[j.dom(f)])
                       return false;
                   return true;
                 });
  return out;
}

std::vector<Cone> cones_on(const Diagram& d, ObjId apex) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  std::vector<std::vector<MorId>> choices;
  for (ObjId x = 0; x < j.num_objects(); ++x)
    choices.push_back(base.hom(apex, d.functor.obj_map[x]));
  std::vector<Cone> out;
  enumerate_legs(j, choices,
                 [&](std::vector<MorId> legs) {
                   out.push_back({apex, std::move(legs)});
                 },
                 [&](const std::vector<MorId>& legs) {
                   for (MorId f = 0; f < j.num_morphisms(); ++f)
                     if (base.raw_compose(d.functor.mor_map[f], legs[j.dom(f)]) !=
                         legs[j.cod(f)])
                       return false;
                   return true;
                 });
  return out;
}

std::optional<ColimitResult> colimit_1d(const Diagram& d,
                                        const SearchBudget& budget) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  BudgetMeter meter(budget);
  std::vector<std::vector<Cocone>> all(base.num_objects());
  for (ObjId b = 0; b < base.num_objects(); ++b) all[b] = cocones_on(d, b);

  std::optional<ColimitResult> best;
  int universal = 0;
  for (ObjId q = 0; q < base.num_objects(); ++q)
    for (const Cocone& cand : all[q]) {
      bool ok = true;
      for (ObjId b = 0; b < base.num_objects() && ok; ++b)
        for (const Cocone& target : all[b]) {
          int count = 0;
          for (MorId h : base.hom(q, b)) {
            meter.charge();
            bool match = true;
            for (ObjId x = 0; x < j.num_objects() && match; ++x)
              match = base.raw_compose(h, cand.legs[x]) == target.legs[x];
            if (match) ++count;
          }
          if (count != 1) {
            ok = false;
            break;
          }
        }
      if (ok) {
        ++universal;
        if (!best) best = ColimitResult{q, cand, 0};
      }
    }
  if (best) best->num_candidates = universal;
  return best;
}

std::optional<LimitResult> limit_1d(const Diagram& d, const SearchBudget& budget) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  BudgetMeter meter(budget);
  std::vector<std::vector<Cone>> all(base.num_objects());
  for (ObjId b = 0; b < base.num_objects(); ++b) all[b] = cones_on(d, b);

  std::optional<LimitResult> best;
  int universal = 0;
  for (ObjId l = 0; l < base.num_objects(); ++l)
    for (const Cone& cand : all[l]) {
      bool ok = true;
      for (ObjId b = 0; b < base.num_objects() && ok; ++b)
        for (const Cone& target : all[b]) {
          int count = 0;
          for (MorId h : base.hom(b, l)) {
            meter.charge();
            bool match = true;
            for (ObjId x = 0; x < j.num_objects() && match; ++x)
              match = base.raw_compose(cand.legs[x], h) == target.legs[x];
            if (match) ++count;
          }
          if (count != 1) {
            ok = false;
            break;
          }
        }
      if (ok) {
        ++universal;
        if (!best) best = LimitResult{l, cand, 0};
      }
    }
  if (best) best->num_candidates = universal;
  return best;
}

namespace {

// Elements valid as 2-cells f -> g, i.e. gamma(alpha) ∘ f = g.
std::vector<ElemId> cell_elements(const CrossedModule& xm, MorId f, MorId g) {
  const FinCategory& c = *xm.base;
  std::vector<ElemId> out;
  for (ElemId alpha = 0; alpha < xm.group(c.cod(f)).order(); ++alpha)
    if (c.raw_compose(xm.gamma_mor(c.cod(f), alpha), f) == g) out.push_back(alpha);
  return out;
}

}  // namespace

SearchVerdict check_2d_colimit(const CrossedModule& xm, const Diagram& d,
                               const ColimitResult& candidate) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  ObjId q = candidate.object;
  const std::vector<MorId>& legs = candidate.cocone.legs;

  auto components = pi0(j);
  for (ObjId b = 0; b < base.num_objects(); ++b) {
    auto homs = base.hom(q, b);
    for (MorId m1 : homs)
      for (MorId m2 : homs) {
        // whiskered cocones b_j = m1 ∘ leg_j, b'_j = m2 ∘ leg_j
        std::vector<MorId> w1(j.num_objects()), w2(j.num_objects());
        for (ObjId x = 0; x < j.num_objects(); ++x) {
          w1[x] = base.compose(m1, legs[x]);
          w2[x] = base.compose(m2, legs[x]);
        }
        // valid modification values per connected component of the shape
        std::vector<std::vector<ElemId>> comp_vals;
        bool impossible = false;
        for (const auto& block : components) {
          std::vector<ElemId> vals = cell_elements(xm, w1[block[0]], w2[block[0]]);
          for (std::size_t t = 1; t < block.size(); ++t) {
            std::vector<ElemId> next = cell_elements(xm, w1[block[t]], w2[block[t]]);
            std::vector<ElemId> merged;
            std::set_intersection(vals.begin(), vals.end(), next.begin(),
                                  next.end(), std::back_inserter(merged));
            vals = std::move(merged);
          }
          if (vals.empty()) {
            impossible = true;
            break;
          }
          comp_vals.push_back(std::move(vals));
        }
        if (impossible) continue;  // no modification between these cocones

        std::vector<ElemId> direct = cell_elements(xm, m1, m2);
        std::vector<std::size_t> pick(comp_vals.size(), 0);
        bool done = false;
        while (!done) {
          // one modification family: value per component
          std::vector<ElemId> matching;
          for (ElemId alpha : direct) {
            bool all = true;
            for (std::size_t t = 0; t < comp_vals.size(); ++t)
              if (comp_vals[t][pick[t]] != alpha) {
                all = false;
                break;
              }
            if (all) matching.push_back(alpha);
          }
          if (matching.size() != 1) {
            json family = json::array();
            for (std::size_t t = 0; t < comp_vals.size(); ++t)
              family.push_back(comp_vals[t][pick[t]]);
            return SearchVerdict::not_exists(
                {{"apex", b},
                 {"left", m1},
                 {"right", m2},
                 {"family", family},
                 {"matching_cells", matching.size()},
                 {"matching_elements", matching}},
                matching.empty() ? "modification induced by no 2-cell"
                                 : "modification induced by several 2-cells");
          }
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == comp_vals[i].size()) {
            pick[i] = 0;
            ++i;
          }
          if (i == pick.size()) done = true;
        }
      }
  }
  return SearchVerdict::exists(
      {{"object", q}, {"legs", candidate.cocone.legs}});
}

SearchVerdict check_2d_limit(const CrossedModule& xm, const Diagram& d,
                             const LimitResult& candidate) {
  const FinCategory& j = d.shape();
  const FinCategory& base = d.target();
  ObjId l = candidate.object;
  const std::vector<MorId>& legs = candidate.cone.legs;

  for (ObjId b = 0; b < base.num_objects(); ++b) {
    auto homs = base.hom(b, l);
    for (MorId h : homs)
      for (MorId k : homs) {
        // families alpha_j in G(D(j)), each a 2-cell leg_j∘h -> leg_j∘k,
        // compatible with G along the shape
        std::vector<std::vector<ElemId>> choices(j.num_objects());
        for (ObjId x = 0; x < j.num_objects(); ++x)
          choices[x] = cell_elements(xm, base.compose(legs[x], h),
                                     base.compose(legs[x], k));
        bool impossible =
            std::any_of(choices.begin(), choices.end(),
                        [](const std::vector<ElemId>& v) { return v.empty(); });
        if (impossible && j.num_objects() > 0) continue;

        std::vector<std::size_t> pick(j.num_objects(), 0);
        bool done = false;
        while (!done) {
          std::vector<ElemId> family(j.num_objects());
          for (ObjId x = 0; x < j.num_objects(); ++x)
            family[x] = choices[x][pick[x]];
          bool natural = true;
          for (MorId f = 0; f < j.num_morphisms() && natural; ++f)
            natural = xm.act(d.functor.mor_map[f], family[j.dom(f)]) ==
                      family[j.cod(f)];
          if (natural) {
            std::vector<ElemId> matching;
            for (ElemId alpha : cell_elements(xm, h, k)) {
              bool all = true;
              for (ObjId x = 0; x < j.num_objects() && all; ++x)
                all = xm.act(legs[x], alpha) == family[x];
              if (all) matching.push_back(alpha);
            }
            if (matching.size() != 1)
              return SearchVerdict::not_exists(
                  {{"apex", b},
                   {"left", h},
                   {"right", k},
                   {"family", family},
                   {"matching_cells", matching.size()},
                   {"matching_elements", matching}},
                  matching.empty() ? "cone family admits no amalgamation"
                                   : "cone family admits several amalgamations");
          }
          if (j.num_objects() == 0) break;
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == choices[i].size()) {
            pick[i] = 0;
            ++i;
          }
          if (i == pick.size()) done = true;
        }
      }
  }
  return SearchVerdict::exists({{"object", l}, {"legs", candidate.cone.legs}});
}

std::optional<Representation> representability_search(const CrossedModule& xm) {
  const FinCategory& c = *xm.base;
  for (ObjId r = 0; r < c.num_objects(); ++r)
    for (ElemId tau = 0; tau < xm.group(r).order(); ++tau) {
      bool ok = true;
      for (ObjId a = 0; a < c.num_objects() && ok; ++a) {
        std::vector<char> hit(xm.group(a).order(), 0);
        auto homs = c.hom(r, a);
        if (static_cast<int>(homs.size()) != xm.group(a).order()) {
          ok = false;
          break;
        }
        for (MorId f : homs) {
          ElemId v = xm.act(f, tau);
          if (hit[v]) {
            ok = false;
            break;
          }
          hit[v] = 1;
        }
      }
      if (ok) return Representation{r, tau};
    }
  return std::nullopt;
}

// --- weighted colimits ----------------------------------------------------------

namespace {

json cell_json(const TwoCell& c) { return {{"src", c.src}, {"elem", c.elem}}; }

// stabilizer-valued homs G_grp -> G(T) landing in {x : gamma(x)∘u = u}
std::vector<GroupHom> tensor_structure_homs(const CrossedModule& xm,
                                            const GrpPtr& g, MorId u,
                                            const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  ObjId t = c.cod(u);
  auto src = std::make_shared<FinGroup>(xm.group(t));
  std::vector<GroupHom> out;
  for (GroupHom& h : hom_set(g, src, budget)) {
    bool stab = true;
    for (ElemId x = 0; x < g->order() && stab; ++x)
      stab = c.raw_compose(xm.gamma_mor(t, h(x)), u) == u;
    if (stab) out.push_back(std::move(h));
  }
  return out;
}

SearchVerdict coinserter_search(const CrossedModule& xm, const CoinserterShape& s,
                                const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  if (c.dom(s.f) != c.dom(s.g) || c.cod(s.f) != c.cod(s.g))
    throw InputError("coinserter needs a parallel pair");
  ObjId b = c.cod(s.f);
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;

  for (ObjId cc = 0; cc < c.num_objects(); ++cc)
    for (MorId cmor : c.hom(b, cc))
      for (ElemId theta = 0; theta < xm.group(cc).order(); ++theta) {
        meter.charge();
        if (c.raw_compose(xm.gamma_mor(cc, theta), c.compose(cmor, s.f)) !=
            c.compose(cmor, s.g))
          continue;
        ++candidates;
        json fail;
        // one-dimensional universal property against every cone
        bool ok = true;
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
          for (MorId k : c.hom(b, dd)) {
            if (!ok) break;
            for (ElemId beta = 0; beta < xm.group(dd).order() && ok; ++beta) {
              if (c.raw_compose(xm.gamma_mor(dd, beta), c.compose(k, s.f)) !=
                  c.compose(k, s.g))
                continue;
              int count = 0;
              for (MorId q : c.hom(cc, dd)) {
                meter.charge();
                if (c.compose(q, cmor) == k && xm.act(q, theta) == beta) ++count;
              }
              if (count != 1) {
                ok = false;
                fail = {{"stage", "1d"}, {"apex", dd},   {"k", k},
                        {"beta", beta},  {"count", count}};
              }
            }
          }
        // two-dimensional universal property
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
          auto homs = c.hom(cc, dd);
          for (MorId qm : homs) {
            if (!ok) break;
            for (MorId rm : homs) {
              if (!ok) break;
              for (ElemId beta : cell_elements(xm, c.compose(qm, cmor),
                                               c.compose(rm, cmor))) {
                meter.charge();
                const FinGroup& gd = xm.group(dd);
                if (gd.mul(beta, xm.act(qm, theta)) !=
                    gd.mul(xm.act(rm, theta), beta))
                  continue;  // not a modification
                if (c.raw_compose(xm.gamma_mor(dd, beta), qm) != rm) {
                  ok = false;
                  fail = {{"stage", "2d"}, {"apex", dd}, {"q", qm},
                          {"r", rm},       {"beta", beta}};
                  break;
                }
              }
            }
          }
        }
        if (ok)
          return SearchVerdict::exists(
              {{"object", cc}, {"map", cmor}, {"theta", theta}});
        if (first_failure.is_null()) first_failure = fail;
      }
  return SearchVerdict::not_exists(
      {{"candidates_checked", candidates}, {"first_failure", first_failure}},
      candidates == 0 ? "no candidate satisfies the cone condition"
                      : "every candidate fails a universal property");
}

SearchVerdict coequifier_like_search(const CrossedModule& xm, const TwoCell& alpha,
                                     const TwoCell& beta, bool identify,
                                     const SearchBudget& budget) {
  // identify = coidentifier (beta plays no role, alpha must map to identity)
  const FinCategory& c = *xm.base;
  if (!identify) {
    if (alpha.src != beta.src ||
        two_cell_target(xm, alpha) != two_cell_target(xm, beta))
      throw InputError("coequifier needs parallel 2-cells");
  }
  ObjId b = c.cod(alpha.src);
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;
  auto collapses = [&](MorId k) {
    return identify ? xm.act(k, alpha.elem) == 0
                    : xm.act(k, alpha.elem) == xm.act(k, beta.elem);
  };

  for (ObjId cc = 0; cc < c.num_objects(); ++cc)
    for (MorId cmor : c.hom(b, cc)) {
      meter.charge();
      if (!collapses(cmor)) continue;
      ++candidates;
      json fail;
      bool ok = true;
      for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
        for (MorId k : c.hom(b, dd)) {
          if (!collapses(k)) continue;
          int count = 0;
          for (MorId q : c.hom(cc, dd)) {
            meter.charge();
            if (c.compose(q, cmor) == k) ++count;
          }
          if (count != 1) {
            ok = false;
            fail = {{"stage", "1d"}, {"apex", dd}, {"k", k}, {"count", count}};
            break;
          }
        }
      for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
        auto homs = c.hom(cc, dd);
        for (MorId qm : homs) {
          if (!ok) break;
          for (MorId rm : homs) {
            if (!ok) break;
            for (ElemId theta : cell_elements(xm, c.compose(qm, cmor),
                                              c.compose(rm, cmor))) {
              meter.charge();
              if (c.raw_compose(xm.gamma_mor(dd, theta), qm) != rm) {
                ok = false;
                fail = {{"stage", "2d"}, {"apex", dd}, {"q", qm},
                        {"r", rm},       {"theta", theta}};
                break;
              }
            }
          }
        }
      }
      if (ok) return SearchVerdict::exists({{"object", cc}, {"map", cmor}});
      if (first_failure.is_null()) first_failure = fail;
    }
  return SearchVerdict::not_exists(
      {{"candidates_checked", candidates},
       {"first_failure", first_failure},
       {"alpha", cell_json(alpha)},
       {"beta", identify ? json() : cell_json(beta)}},
      candidates == 0 ? "no candidate collapses the 2-cell data"
                      : "every candidate fails a universal property");
}

SearchVerdict tensor_search(const CrossedModule& xm, const TensorByGroupShape& s,
                            const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  ObjId b = s.object;
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;

  for (ObjId tt = 0; tt < c.num_objects(); ++tt)
    for (MorId u : c.hom(b, tt))
      for (const GroupHom& psi : tensor_structure_homs(xm, s.group, u, budget)) {
        meter.charge();
        ++candidates;
        json fail;
        bool ok = true;
        // 1d: every (k, phi) factors uniquely
        for (ObjId xx = 0; xx < c.num_objects() && ok; ++xx)
          for (MorId k : c.hom(b, xx)) {
            if (!ok) break;
            for (const GroupHom& phi :
                 tensor_structure_homs(xm, s.group, k, budget)) {
              meter.charge();
              int count = 0;
              for (MorId q : c.hom(tt, xx)) {
                if (c.compose(q, u) != k) continue;
                bool agrees = true;
                for (ElemId g = 0; g < s.group->order() && agrees; ++g)
                  agrees = xm.act(q, psi(g)) == phi(g);
                if (agrees) ++count;
              }
              if (count != 1) {
                ok = false;
                fail = {{"stage", "1d"}, {"apex", xx}, {"k", k}, {"count", count}};
                break;
              }
            }
          }
        // 2d
        for (ObjId xx = 0; xx < c.num_objects() && ok; ++xx) {
          auto homs = c.hom(tt, xx);
          for (MorId qm : homs) {
            if (!ok) break;
            for (MorId rm : homs) {
              if (!ok) break;
              for (ElemId beta :
                   cell_elements(xm, c.compose(qm, u), c.compose(rm, u))) {
                meter.charge();
                const FinGroup& gx = xm.group(xx);
                bool modification = true;
                for (ElemId g = 0; g < s.group->order() && modification; ++g)
                  modification = gx.mul(beta, xm.act(qm, psi(g))) ==
                                 gx.mul(xm.act(rm, psi(g)), beta);
                if (!modification) continue;
                if (c.raw_compose(xm.gamma_mor(xx, beta), qm) != rm) {
                  ok = false;
                  fail = {{"stage", "2d"}, {"apex", xx}, {"q", qm},
                          {"r", rm},       {"beta", beta}};
                  break;
                }
              }
            }
          }
        }
        if (ok)
          return SearchVerdict::exists(
              {{"object", tt}, {"map", u}, {"psi", psi.map}});
        if (first_failure.is_null()) first_failure = fail;
      }
  return SearchVerdict::not_exists(
      {{"candidates_checked", candidates}, {"first_failure", first_failure}},
      candidates == 0 ? "no structure candidate exists"
                      : "every candidate fails a universal property");
}

Diagram discrete_pair_diagram(const CatPtr& base, ObjId a, ObjId b) {
  std::vector<std::pair<ObjId, ObjId>> ends = {{0, 0}, {1, 1}};
  std::vector<std::tuple<MorId, MorId, MorId>> comps = {{0, 0, 0}, {1, 1, 1}};
  auto shape = std::make_shared<FinCategory>(2, std::move(ends),
                                             std::vector<MorId>{0, 1}, comps);
  FinFunctor f;
  f.source = shape;
  f.target = base;
  f.obj_map = {a, b};
  f.mor_map = {base->identity(a), base->identity(b)};
  return {std::move(f)};
}

Diagram empty_diagram(const CatPtr& base) {
  auto shape = std::make_shared<FinCategory>(
      0, std::vector<std::pair<ObjId, ObjId>>{}, std::vector<MorId>{},
      std::vector<std::tuple<MorId, MorId, MorId>>{});
  FinFunctor f;
  f.source = shape;
  f.target = base;
  return {std::move(f)};
}

}  // namespace

SearchVerdict search_weighted_colimit(const CrossedModule& xm,
                                      const ColimitShape& shape,
                                      const SearchBudget& budget) {
  const CatPtr& base = xm.base;
  if (const auto* s = std::get_if<CoinserterShape>(&shape))
    return coinserter_search(xm, *s, budget);
  if (const auto* s = std::get_if<CoequifierShape>(&shape))
    return coequifier_like_search(xm, s->alpha, s->beta, false, budget);
  if (const auto* s = std::get_if<CoidentifierShape>(&shape))
    return coequifier_like_search(xm, s->alpha, s->alpha, true, budget);
  if (const auto* s = std::get_if<TensorByGroupShape>(&shape))
    return tensor_search(xm, *s, budget);
  if (const auto* s = std::get_if<CoproductShape>(&shape)) {
    Diagram d = discrete_pair_diagram(base, s->a, s->b);
    auto one_d = colimit_1d(d, budget);
    if (!one_d)
      return SearchVerdict::not_exists(
          {{"reason", "no 1-categorical coproduct"}},
          "the base category has no coproduct of the pair");
    return check_2d_colimit(xm, d, *one_d);
  }
  // two-initial: the empty colimit
  Diagram d = empty_diagram(base);
  auto one_d = colimit_1d(d, budget);
  if (!one_d)
    return SearchVerdict::not_exists({{"reason", "no initial object"}},
                                     "the base category has no initial object");
  return check_2d_colimit(xm, d, *one_d);
}

// --- weighted limits -------------------------------------------------------------

namespace {

SearchVerdict inserter_search(const CrossedModule& xm, const InserterShape& s,
                              const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  if (c.dom(s.f) != c.dom(s.g) || c.cod(s.f) != c.cod(s.g))
    throw InputError("inserter needs a parallel pair");
  ObjId x = c.dom(s.f);
  ObjId a = c.cod(s.f);
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;

  for (ObjId ii = 0; ii < c.num_objects(); ++ii)
    for (MorId p : c.hom(ii, x))
      for (ElemId theta = 0; theta < xm.group(a).order(); ++theta) {
        meter.charge();
        if (c.raw_compose(xm.gamma_mor(a, theta), c.compose(s.f, p)) !=
            c.compose(s.g, p))
          continue;
        ++candidates;
        json fail;
        bool ok = true;
        // 1d: cones are (q : D -> X, beta) with gamma(beta) f q = g q;
        // whiskering the universal 2-cell keeps its element, so beta must
        // equal theta and q must lift uniquely through p.
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
          for (MorId q : c.hom(dd, x)) {
            if (!ok) break;
            for (ElemId beta = 0; beta < xm.group(a).order() && ok; ++beta) {
              if (c.raw_compose(xm.gamma_mor(a, beta), c.compose(s.f, q)) !=
                  c.compose(s.g, q))
                continue;
              int count = 0;
              for (MorId h : c.hom(dd, ii)) {
                meter.charge();
                if (c.compose(p, h) == q && beta == theta) ++count;
              }
              if (count != 1) {
                ok = false;
                fail = {{"stage", "1d"}, {"apex", dd},   {"q", q},
                        {"beta", beta},  {"count", count}};
              }
            }
          }
        // 2d
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
          auto homs = c.hom(dd, ii);
          for (MorId am : homs) {
            if (!ok) break;
            for (MorId bm : homs) {
              if (!ok) break;
              for (ElemId lambda :
                   cell_elements(xm, c.compose(p, am), c.compose(p, bm))) {
                meter.charge();
                const FinGroup& ga = xm.group(a);
                if (ga.mul(xm.act(s.g, lambda), theta) !=
                    ga.mul(theta, xm.act(s.f, lambda)))
                  continue;
                int count = 0;
                for (ElemId mu : cell_elements(xm, am, bm))
                  if (xm.act(p, mu) == lambda) ++count;
                if (count != 1) {
                  ok = false;
                  fail = {{"stage", "2d"},      {"apex", dd}, {"a", am},
                          {"b", bm},            {"lambda", lambda},
                          {"count", count}};
                  break;
                }
              }
            }
          }
        }
        if (ok)
          return SearchVerdict::exists(
              {{"object", ii}, {"map", p}, {"theta", theta}});
        if (first_failure.is_null()) first_failure = fail;
      }

  // canonical obstruction: with an initial object, the unique maps from 0
  // support a cone for every element of G(A), so two distinct elements rule
  // the inserter out
  json witness = {{"candidates_checked", candidates},
                  {"first_failure", first_failure}};
  auto zero = initial_object(c);
  if (zero && xm.group(a).order() > 1) {
    MorId bang = c.hom(*zero, x).at(0);
    witness["conflicting_cones"] = {{"apex", *zero},
                                    {"q", bang},
                                    {"elements", {0, 1}}};
  }
  return SearchVerdict::not_exists(witness,
                                   "no candidate satisfies both universal "
                                   "properties");
}

SearchVerdict equifier_search(const CrossedModule& xm, const EquifierShape& s,
                              const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  if (s.alpha.src != s.beta.src ||
      two_cell_target(xm, s.alpha) != two_cell_target(xm, s.beta))
    throw InputError("equifier needs parallel 2-cells");
  ObjId x = c.dom(s.alpha.src);
  // whiskering on the right keeps elements, so distinct elements can never
  // be equified: the trivial factorization forces equality
  if (s.alpha.elem != s.beta.elem)
    return SearchVerdict::not_exists(
        {{"alpha", cell_json(s.alpha)},
         {"beta", cell_json(s.beta)},
         {"reason", "right whiskering preserves elements"}},
        "distinct parallel 2-cells admit no equifying cone");

  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;
  for (ObjId ee = 0; ee < c.num_objects(); ++ee)
    for (MorId p : c.hom(ee, x)) {
      meter.charge();
      ++candidates;
      json fail;
      bool ok = true;
      for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
        for (MorId q : c.hom(dd, x)) {
          int count = 0;
          for (MorId h : c.hom(dd, ee)) {
            meter.charge();
            if (c.compose(p, h) == q) ++count;
          }
          if (count != 1) {
            ok = false;
            fail = {{"stage", "1d"}, {"apex", dd}, {"q", q}, {"count", count}};
            break;
          }
        }
      for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
        auto homs = c.hom(dd, ee);
        for (MorId am : homs) {
          if (!ok) break;
          for (MorId bm : homs) {
            if (!ok) break;
            for (ElemId lambda :
                 cell_elements(xm, c.compose(p, am), c.compose(p, bm))) {
              meter.charge();
              int count = 0;
              for (ElemId mu : cell_elements(xm, am, bm))
                if (xm.act(p, mu) == lambda) ++count;
              if (count != 1) {
                ok = false;
                fail = {{"stage", "2d"}, {"apex", dd},       {"a", am},
                        {"b", bm},       {"lambda", lambda}, {"count", count}};
                break;
              }
            }
          }
        }
      }
      if (ok) return SearchVerdict::exists({{"object", ee}, {"map", p}});
      if (first_failure.is_null()) first_failure = fail;
    }
  return SearchVerdict::not_exists(
      {{"candidates_checked", candidates}, {"first_failure", first_failure}},
      "no candidate satisfies both universal properties");
}

SearchVerdict comma_search(const CrossedModule& xm, const CommaShape& s,
                           const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  if (c.cod(s.f) != c.cod(s.g)) throw InputError("comma needs a cospan");
  ObjId x = c.dom(s.f), y = c.dom(s.g), a = c.cod(s.f);
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;

  for (ObjId pp = 0; pp < c.num_objects(); ++pp)
    for (MorId p : c.hom(pp, x))
      for (MorId q : c.hom(pp, y))
        for (ElemId theta = 0; theta < xm.group(a).order(); ++theta) {
          meter.charge();
          if (c.raw_compose(xm.gamma_mor(a, theta), c.compose(s.f, p)) !=
              c.compose(s.g, q))
            continue;
          ++candidates;
          json fail;
          bool ok = true;
          for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
            for (MorId u : c.hom(dd, x)) {
              if (!ok) break;
              for (MorId v : c.hom(dd, y)) {
                if (!ok) break;
                for (ElemId beta = 0; beta < xm.group(a).order(); ++beta) {
                  if (c.raw_compose(xm.gamma_mor(a, beta), c.compose(s.f, u)) !=
                      c.compose(s.g, v))
                    continue;
                  int count = 0;
                  for (MorId h : c.hom(dd, pp)) {
                    meter.charge();
                    if (c.compose(p, h) == u && c.compose(q, h) == v &&
                        beta == theta)
                      ++count;
                  }
                  if (count != 1) {
                    ok = false;
                    fail = {{"stage", "1d"}, {"apex", dd},   {"u", u},
                            {"v", v},        {"beta", beta}, {"count", count}};
                    break;
                  }
                }
              }
            }
          for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
            auto homs = c.hom(dd, pp);
            for (MorId am : homs) {
              if (!ok) break;
              for (MorId bm : homs) {
                if (!ok) break;
                for (ElemId l1 :
                     cell_elements(xm, c.compose(p, am), c.compose(p, bm))) {
                  if (!ok) break;
                  for (ElemId l2 :
                       cell_elements(xm, c.compose(q, am), c.compose(q, bm))) {
                    meter.charge();
                    const FinGroup& ga = xm.group(a);
                    if (ga.mul(xm.act(s.g, l2), theta) !=
                        ga.mul(theta, xm.act(s.f, l1)))
                      continue;
                    int count = 0;
                    for (ElemId mu : cell_elements(xm, am, bm))
                      if (xm.act(p, mu) == l1 && xm.act(q, mu) == l2) ++count;
                    if (count != 1) {
                      ok = false;
                      fail = {{"stage", "2d"}, {"apex", dd}, {"a", am},
                              {"b", bm},       {"count", count}};
                      break;
                    }
                  }
                }
              }
            }
          }
          if (ok)
            return SearchVerdict::exists(
                {{"object", pp}, {"p", p}, {"q", q}, {"theta", theta}});
          if (first_failure.is_null()) first_failure = fail;
        }
  json witness = {{"candidates_checked", candidates},
                  {"first_failure", first_failure}};
  auto zero = initial_object(c);
  if (zero && xm.group(a).order() > 1)
    witness["conflicting_cones"] = {{"apex", *zero}, {"elements", {0, 1}}};
  return SearchVerdict::not_exists(witness,
                                   "no candidate satisfies both universal "
                                   "properties");
}

SearchVerdict cotensor_search(const CrossedModule& xm, const CotensorBy2Shape& s,
                              const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  ObjId a = s.object;
  BudgetMeter meter(budget);
  json first_failure;
  std::uint64_t candidates = 0;

  for (ObjId pp = 0; pp < c.num_objects(); ++pp)
    for (MorId u : c.hom(pp, a))
      for (ElemId theta = 0; theta < xm.group(a).order(); ++theta) {
        meter.charge();
        MorId v = c.compose(xm.gamma_mor(a, theta), u);
        ++candidates;
        json fail;
        bool ok = true;
        // 1d: arrows of the hom-category on D correspond to maps into P
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd)
          for (MorId xx : c.hom(dd, a)) {
            if (!ok) break;
            for (ElemId beta = 0; beta < xm.group(a).order() && ok; ++beta) {
              MorId yy = c.compose(xm.gamma_mor(a, beta), xx);
              int count = 0;
              for (MorId h : c.hom(dd, pp)) {
                meter.charge();
                if (c.compose(u, h) == xx && c.compose(v, h) == yy &&
                    beta == theta)
                  ++count;
              }
              if (count != 1) {
                ok = false;
                fail = {{"stage", "1d"}, {"apex", dd},   {"x", xx},
                        {"beta", beta},  {"count", count}};
              }
            }
          }
        // 2d: squares of 2-cells over theta
        for (ObjId dd = 0; dd < c.num_objects() && ok; ++dd) {
          auto homs = c.hom(dd, pp);
          for (MorId am : homs) {
            if (!ok) break;
            for (MorId bm : homs) {
              if (!ok) break;
              for (ElemId l0 :
                   cell_elements(xm, c.compose(u, am), c.compose(u, bm))) {
                if (!ok) break;
                for (ElemId l1 :
                     cell_elements(xm, c.compose(v, am), c.compose(v, bm))) {
                  meter.charge();
                  const FinGroup& ga = xm.group(a);
                  if (ga.mul(l1, theta) != ga.mul(theta, l0)) continue;
                  int count = 0;
                  for (ElemId mu : cell_elements(xm, am, bm))
                    if (xm.act(u, mu) == l0 && xm.act(v, mu) == l1) ++count;
                  if (count != 1) {
                    ok = false;
                    fail = {{"stage", "2d"}, {"apex", dd}, {"a", am},
                            {"b", bm},       {"count", count}};
                    break;
                  }
                }
              }
            }
          }
        }
        if (ok)
          return SearchVerdict::exists(
              {{"object", pp}, {"u", u}, {"v", v}, {"theta", theta}});
        if (first_failure.is_null()) first_failure = fail;
      }
  json witness = {{"candidates_checked", candidates},
                  {"first_failure", first_failure}};
  auto zero = initial_object(c);
  if (zero && xm.group(a).order() > 1)
    witness["conflicting_cones"] = {{"apex", *zero}, {"elements", {0, 1}}};
  return SearchVerdict::not_exists(witness,
                                   "no candidate satisfies both universal "
                                   "properties");
}

// --- weighted cones -------------------------------------------------------------

// A W-weighted cone on B: per shape object j a functor W(j) -> C_G(B, D(j)),
// stored as object images (1-cells) and arrow images (elements).
struct WeightedCone {
  ObjId apex;
  std::vector<std::vector<MorId>> obj_part;    // per j, per W(j) object
  std::vector<std::vector<ElemId>> arr_part;   // per j, per W(j) morphism

  bool operator==(const WeightedCone&) const = default;
  bool operator<(const WeightedCone& o) const {
    return std::tie(apex, obj_part, arr_part) <
           std::tie(o.apex, o.obj_part, o.arr_part);
  }
};

bool weighted_cone_valid(const CrossedModule& xm, const Weight& w,
                         const Diagram& d, const WeightedCone& cone) {
  const FinCategory& j = *w.shape;
  const FinCategory& base = d.target();
  for (ObjId jj = 0; jj < j.num_objects(); ++jj) {
    const FinCategory& wj = *w.values[jj];
    ObjId dj = d.functor.obj_map[jj];
    for (int ww = 0; ww < wj.num_objects(); ++ww) {
      MorId m = cone.obj_part[jj][ww];
      if (base.dom(m) != cone.apex || base.cod(m) != dj) return false;
    }
    for (MorId mw = 0; mw < wj.num_morphisms(); ++mw) {
      // arrow image must be a 2-cell F(dom) -> F(cod)
      ElemId e = cone.arr_part[jj][mw];
      MorId from = cone.obj_part[jj][wj.dom(mw)];
      MorId to = cone.obj_part[jj][wj.cod(mw)];
      if (base.raw_compose(xm.gamma_mor(dj, e), from) != to) return false;
    }
    // functoriality of the component
    for (int ww = 0; ww < wj.num_objects(); ++ww)
      if (cone.arr_part[jj][wj.identity(ww)] != 0) return false;
    for (MorId g = 0; g < wj.num_morphisms(); ++g)
      for (MorId f = 0; f < wj.num_morphisms(); ++f) {
        if (!wj.composable(g, f)) continue;
        MorId gf = wj.raw_compose(g, f);
        if (gf < 0) continue;
        if (cone.arr_part[jj][gf] !=
            xm.group(dj).mul(cone.arr_part[jj][g], cone.arr_part[jj][f]))
          return false;
      }
  }
  // naturality across the shape: F_k ∘ W(f) = (D(f) ∘ -) ∘ F_j
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    ObjId jj = j.dom(f), kk = j.cod(f);
    const FinFunctor& wf = w.on_morphisms[f];
    MorId df = d.functor.mor_map[f];
    const FinCategory& wj = *w.values[jj];
    for (int ww = 0; ww < wj.num_objects(); ++ww)
      if (cone.obj_part[kk][wf.obj_map[ww]] !=
          base.raw_compose(df, cone.obj_part[jj][ww]))
        return false;
    for (MorId mw = 0; mw < wj.num_morphisms(); ++mw)
      if (cone.arr_part[kk][wf.mor_map[mw]] !=
          xm.act(df, cone.arr_part[jj][mw]))
        return false;
  }
  return true;
}

std::vector<WeightedCone> weighted_cones_on(const CrossedModule& xm,
                                            const Weight& w, const Diagram& d,
                                            ObjId apex, BudgetMeter& meter) {
  const FinCategory& j = *w.shape;
  const FinCategory& base = d.target();
  // flatten all (j, w-object) and (j, w-morphism) slots
  std::vector<std::pair<int, int>> obj_slots, arr_slots;
  for (ObjId jj = 0; jj < j.num_objects(); ++jj) {
    for (int ww = 0; ww < w.values[jj]->num_objects(); ++ww)
      obj_slots.push_back({jj, ww});
    for (MorId mw = 0; mw < w.values[jj]->num_morphisms(); ++mw)
      arr_slots.push_back({jj, mw});
  }
  std::vector<WeightedCone> out;
  std::vector<std::vector<MorId>> obj_choice(obj_slots.size());
  for (std::size_t i = 0; i < obj_slots.size(); ++i)
    obj_choice[i] = base.hom(apex, d.functor.obj_map[obj_slots[i].first]);
  for (const auto& ch : obj_choice)
    if (ch.empty()) return out;

  std::vector<std::size_t> pick(obj_slots.size(), 0);
  while (true) {
    meter.charge();
    WeightedCone cone;
    cone.apex = apex;
    cone.obj_part.resize(j.num_objects());
    cone.arr_part.resize(j.num_objects());
    for (ObjId jj = 0; jj < j.num_objects(); ++jj) {
      cone.obj_part[jj].resize(w.values[jj]->num_objects());
      cone.arr_part[jj].assign(w.values[jj]->num_morphisms(), 0);
    }
    for (std::size_t i = 0; i < obj_slots.size(); ++i)
      cone.obj_part[obj_slots[i].first][obj_slots[i].second] = obj_choice[i][pick[i]];

    // enumerate arrow elements on top of the object part
    std::vector<std::size_t> apick(arr_slots.size(), 0);
    bool adone = arr_slots.empty();
    if (adone) {
      if (weighted_cone_valid(xm, w, d, cone)) out.push_back(cone);
    }
    while (!adone) {
      meter.charge();
      for (std::size_t i = 0; i < arr_slots.size(); ++i)
        cone.arr_part[arr_slots[i].first][arr_slots[i].second] =
            static_cast<ElemId>(apick[i]);
      if (weighted_cone_valid(xm, w, d, cone)) out.push_back(cone);
      std::size_t i = 0;
      while (i < arr_slots.size()) {
        int order = xm.group(d.functor.obj_map[arr_slots[i].first]).order();
        if (++apick[i] == static_cast<std::size_t>(order)) {
          apick[i] = 0;
          ++i;
        } else {
          break;
        }
      }
      if (i == arr_slots.size()) adone = true;
    }

    if (obj_slots.empty()) break;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == obj_choice[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedCone whisker_weighted_cone(const Diagram& d, const WeightedCone& cone,
                                   ObjId apex, MorId h) {
  const FinCategory& base = d.target();
  WeightedCone out = cone;
  out.apex = apex;
  for (std::size_t jj = 0; jj < out.obj_part.size(); ++jj)
    for (auto& m : out.obj_part[jj]) m = base.compose(m, h);
  // right whiskering keeps every element
  return out;
}

SearchVerdict conical_search(const CrossedModule& xm, const ConicalShape& s,
                             const SearchBudget& budget) {
  const FinCategory& base = s.diagram.target();
  const FinCategory& j = *s.weight.shape;
  if (static_cast<int>(s.weight.values.size()) != j.num_objects() ||
      static_cast<int>(s.weight.on_morphisms.size()) != j.num_morphisms())
    throw InputError("weight data does not match its shape");
  BudgetMeter meter(budget);

  std::vector<std::vector<WeightedCone>> all(base.num_objects());
  for (ObjId b = 0; b < base.num_objects(); ++b)
    all[b] = weighted_cones_on(xm, s.weight, s.diagram, b, meter);

  json first_failure;
  std::uint64_t candidates = 0;
  for (ObjId l = 0; l < base.num_objects(); ++l)
    for (const WeightedCone& u : all[l]) {
      ++candidates;
      json fail;
      bool ok = true;
      // 1d: h -> u∘h is a bijection Hom(B, L) -> cones(B)
      for (ObjId b = 0; b < base.num_objects() && ok; ++b) {
        std::map<WeightedCone, int> hits;
        for (const WeightedCone& target : all[b]) hits[target] = 0;
        for (MorId h : base.hom(b, l)) {
          meter.charge();
          WeightedCone image = whisker_weighted_cone(s.diagram, u, b, h);
          auto it = hits.find(image);
          if (it == hits.end()) {
            ok = false;
            fail = {{"stage", "1d"}, {"apex", b}, {"reason", "image is not a cone"}};
            break;
          }
          ++it->second;
        }
        if (!ok) break;
        for (const auto& [target, count] : hits)
          if (count != 1) {
            ok = false;
            fail = {{"stage", "1d"}, {"apex", b}, {"count", count}};
            break;
          }
      }
      // 2d: modifications between whiskered cones correspond to 2-cells
      for (ObjId b = 0; b < base.num_objects() && ok; ++b) {
        auto homs = base.hom(b, l);
        for (MorId h1 : homs) {
          if (!ok) break;
          for (MorId h2 : homs) {
            if (!ok) break;
            // slots: per (j, w-object) a 2-cell element
            std::vector<std::pair<int, int>> slots;
            std::vector<std::vector<ElemId>> choice;
            for (ObjId jj = 0; jj < j.num_objects(); ++jj)
              for (int ww = 0; ww < s.weight.values[jj]->num_objects(); ++ww) {
                slots.push_back({jj, ww});
                choice.push_back(cell_elements(
                    xm, base.compose(u.obj_part[jj][ww], h1),
                    base.compose(u.obj_part[jj][ww], h2)));
              }
            bool impossible =
                std::any_of(choice.begin(), choice.end(),
                            [](const auto& v) { return v.empty(); });
            if (impossible && !slots.empty()) continue;
            std::vector<std::size_t> pick(slots.size(), 0);
            bool done = false;
            while (!done && ok) {
              meter.charge();
              std::vector<std::vector<ElemId>> m(j.num_objects());
              for (ObjId jj = 0; jj < j.num_objects(); ++jj)
                m[jj].resize(s.weight.values[jj]->num_objects());
              for (std::size_t i = 0; i < slots.size(); ++i)
                m[slots[i].first][slots[i].second] = choice[i][pick[i]];
              // modification conditions
              bool valid = true;
              for (ObjId jj = 0; jj < j.num_objects() && valid; ++jj) {
                const FinCategory& wj = *s.weight.values[jj];
                ObjId dj = s.diagram.functor.obj_map[jj];
                for (MorId mw = 0; mw < wj.num_morphisms() && valid; ++mw) {
                  // naturality inside W(j): m(cod) · sigma(mw) = sigma'(mw) · m(dom)
                  ElemId sigma = u.arr_part[jj][mw];  // preserved by whiskering
                  valid = xm.group(dj).mul(m[jj][wj.cod(mw)], sigma) ==
                          xm.group(dj).mul(sigma, m[jj][wj.dom(mw)]);
                }
              }
              for (MorId f = 0; f < j.num_morphisms() && valid; ++f) {
                ObjId jj = j.dom(f), kk = j.cod(f);
                const FinFunctor& wf = s.weight.on_morphisms[f];
                MorId df = s.diagram.functor.mor_map[f];
                for (int ww = 0; ww < s.weight.values[jj]->num_objects() && valid;
                     ++ww)
                  valid = m[kk][wf.obj_map[ww]] == xm.act(df, m[jj][ww]);
              }
              if (valid) {
                int matches = 0;
                for (ElemId alpha : cell_elements(xm, h1, h2)) {
                  bool all = true;
                  for (std::size_t i = 0; i < slots.size() && all; ++i)
                    all = xm.act(u.obj_part[slots[i].first][slots[i].second],
                                 alpha) == m[slots[i].first][slots[i].second];
                  if (all) ++matches;
                }
                if (slots.empty()) matches = static_cast<int>(
                    cell_elements(xm, h1, h2).size());
                if (matches != 1) {
                  ok = false;
                  fail = {{"stage", "2d"},
                          {"apex", b},
                          {"left", h1},
                          {"right", h2},
                          {"count", matches}};
                }
              }
              if (slots.empty()) break;
              std::size_t i = 0;
              while (i < pick.size() && ++pick[i] == choice[i].size()) {
                pick[i] = 0;
                ++i;
              }
              if (i == pick.size()) done = true;
            }
          }
        }
      }
      if (ok) {
        json obj_part = json::array();
        for (const auto& per : u.obj_part) obj_part.push_back(per);
        return SearchVerdict::exists({{"object", l}, {"cone_objects", obj_part}});
      }
      if (first_failure.is_null()) first_failure = fail;
    }
  return SearchVerdict::not_exists(
      {{"candidates_checked", candidates}, {"first_failure", first_failure}},
      candidates == 0 ? "no weighted cone exists"
                      : "no cone satisfies both universal properties");
}

}  // namespace

SearchVerdict search_weighted_limit(const CrossedModule& xm,
                                    const LimitShape& shape,
                                    const SearchBudget& budget) {
  if (const auto* s = std::get_if<InserterShape>(&shape))
    return inserter_search(xm, *s, budget);
  if (const auto* s = std::get_if<EquifierShape>(&shape))
    return equifier_search(xm, *s, budget);
  if (const auto* s = std::get_if<CommaShape>(&shape))
    return comma_search(xm, *s, budget);
  if (const auto* s = std::get_if<CotensorBy2Shape>(&shape))
    return cotensor_search(xm, *s, budget);
  if (const auto* s = std::get_if<ProductShape>(&shape)) {
    Diagram d = discrete_pair_diagram(xm.base, s->a, s->b);
    auto one_d = limit_1d(d, budget);
    if (!one_d)
      return SearchVerdict::not_exists(
          {{"reason", "no 1-categorical product"}},
          "the base category has no product of the pair");
    return check_2d_limit(xm, d, *one_d);
  }
  return conical_search(xm, std::get<ConicalShape>(shape), budget);
}

ConeTrivialityReport weighted_cone_triviality(const CrossedModule& xm,
                                              const Weight& w, const Diagram& d,
                                              const SearchBudget& budget) {
  ConeTrivialityReport report;
  const FinCategory& base = d.target();
  auto zero = initial_object(base);
  if (!zero) {
    report.applicable = false;
    report.not_applicable_reason = "base category has no initial object";
    return report;
  }
  BudgetMeter meter(budget);

  // the trivial cone on 0 must exist: constant components through the
  // unique maps out of 0, identity elements everywhere
  {
    WeightedCone trivial;
    trivial.apex = *zero;
    trivial.obj_part.resize(w.shape->num_objects());
    trivial.arr_part.resize(w.shape->num_objects());
    for (ObjId jj = 0; jj < w.shape->num_objects(); ++jj) {
      MorId bang = base.hom(*zero, d.functor.obj_map[jj]).at(0);
      trivial.obj_part[jj].assign(w.values[jj]->num_objects(), bang);
      trivial.arr_part[jj].assign(w.values[jj]->num_morphisms(), 0);
    }
    if (!weighted_cone_valid(xm, w, d, trivial))
      throw std::logic_error("trivial weighted cone failed validation");
  }

  for (ObjId b = 0; b < base.num_objects() && !report.has_nontrivial_cone; ++b)
    for (const WeightedCone& cone : weighted_cones_on(xm, w, d, b, meter)) {
      for (ObjId jj = 0; jj < w.shape->num_objects(); ++jj)
        for (ElemId e : cone.arr_part[jj])
          if (e != 0) {
            report.has_nontrivial_cone = true;
            report.nontrivial_witness = {
                {"apex", b}, {"shape_object", jj}, {"element", e}};
          }
      if (report.has_nontrivial_cone) break;
    }

  SearchVerdict direct = search_weighted_limit(xm, ConicalShape{w, d}, budget);
  if (direct.status != SearchStatus::NotApplicable)
    report.limit_exists = direct.status == SearchStatus::Exists;
  if (report.has_nontrivial_cone && report.limit_exists == true)
    report.consistent = false;
  return report;
}

std::optional<LimitResult> weighted_limit_via_pi0(const CrossedModule&,
                                                  const Weight& w,
                                                  const Diagram& d,
                                                  const SearchBudget& budget) {
  const FinCategory& j = *w.shape;
  // objects of the collapsed shape: (shape object, connected component of W(j))
  std::vector<std::vector<std::vector<ObjId>>> comps(j.num_objects());
  std::vector<std::pair<int, int>> objs;
  std::map<std::pair<int, int>, int> obj_index;
  for (ObjId jj = 0; jj < j.num_objects(); ++jj) {
    comps[jj] = pi0(*w.values[jj]);
    for (std::size_t cix = 0; cix < comps[jj].size(); ++cix) {
      obj_index[{jj, static_cast<int>(cix)}] = static_cast<int>(objs.size());
      objs.push_back({jj, static_cast<int>(cix)});
    }
  }
  auto component_of = [&](ObjId jj, ObjId w_obj) {
    for (std::size_t cix = 0; cix < comps[jj].size(); ++cix)
      if (std::find(comps[jj][cix].begin(), comps[jj][cix].end(), w_obj) !=
          comps[jj][cix].end())
        return static_cast<int>(cix);
    throw std::logic_error("object missing from its pi0 partition");
  };

  // morphisms: a shape morphism f : j -> k per component of W(j)
  std::vector<std::pair<ObjId, ObjId>> ends;
  std::vector<std::pair<MorId, int>> mor_data;  // (shape morphism, component)
  std::map<std::pair<MorId, int>, MorId> mor_index;
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    ObjId jj = j.dom(f), kk = j.cod(f);
    for (std::size_t cix = 0; cix < comps[jj].size(); ++cix) {
      ObjId rep = comps[jj][cix][0];
      int image = component_of(kk, w.on_morphisms[f].obj_map[rep]);
      mor_index[{f, static_cast<int>(cix)}] = static_cast<MorId>(ends.size());
      ends.push_back({obj_index.at({jj, static_cast<int>(cix)}),
                      obj_index.at({kk, image})});
      mor_data.push_back({f, static_cast<int>(cix)});
    }
  }
  std::vector<MorId> identities(objs.size());
  for (std::size_t o = 0; o < objs.size(); ++o)
    identities[o] = mor_index.at({j.identity(objs[o].first), objs[o].second});
  std::vector<std::tuple<MorId, MorId, MorId>> comps_table;
  for (std::size_t m2 = 0; m2 < mor_data.size(); ++m2)
    for (std::size_t m1 = 0; m1 < mor_data.size(); ++m1) {
      if (ends[m1].second != ends[m2].first) continue;
      auto [f1, c1] = mor_data[m1];
      auto [f2, c2] = mor_data[m2];
      comps_table.emplace_back(static_cast<MorId>(m2), static_cast<MorId>(m1),
                               mor_index.at({j.compose(f2, f1), c1}));
    }
  auto el_shape = std::make_shared<FinCategory>(
      static_cast<int>(objs.size()), std::move(ends), std::move(identities),
      comps_table);

  FinFunctor df;
  df.source = el_shape;
  df.target = d.functor.target;
  for (const auto& [jj, cix] : objs) df.obj_map.push_back(d.functor.obj_map[jj]);
  for (const auto& [f, cix] : mor_data)
    df.mor_map.push_back(d.functor.mor_map[f]);
  return limit_1d(Diagram{std::move(df)}, budget);
}

ObstructionReport obstruction_report(const CrossedModule& xm,
                                     const SearchBudget& budget) {
  ObstructionReport report;
  const FinCategory& c = *xm.base;
  auto zero = initial_object(c);
  if (!zero) {
    report.applicable = false;
    report.not_applicable_reason = "base category has no initial object";
    report.two_initial = SearchVerdict::not_applicable(report.not_applicable_reason);
    return report;
  }
  report.g_trivial = xm.is_trivial();
  report.two_initial = search_weighted_colimit(xm, TwoInitialShape{}, budget);

  Diagram zz = discrete_pair_diagram(xm.base, *zero, *zero);
  if (auto coprod = colimit_1d(zz, budget))
    report.two_coproduct = check_2d_colimit(xm, zz, *coprod);

  bool ti = report.two_initial.status == SearchStatus::Exists;
  report.equivalence_holds = (report.g_trivial == ti);
  if (report.two_coproduct) {
    bool tc = report.two_coproduct->status == SearchStatus::Exists;
    report.equivalence_holds = report.equivalence_holds && (report.g_trivial == tc);
  }
  report.details = {{"g_trivial", report.g_trivial},
                    {"two_initial", to_string(report.two_initial.status)}};
  if (report.two_coproduct)
    report.details["two_coproduct"] = to_string(report.two_coproduct->status);
  else
    report.details["two_coproduct"] = "absent (no 0+0 in the base)";
  return report;
}

}  // namespace xmodcat
