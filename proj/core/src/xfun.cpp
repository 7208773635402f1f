#include "xmodcat/xfun.hpp"

#include <string>

namespace xmodcat {

ValidationReport validate_xmod_morphism(const XModMorphism& m) {
  ValidationReport report;
  const CrossedModule& g = *m.source;
  const CrossedModule& h = *m.target;
  const FinCategory& c = *g.base;
  const FinCategory& d = *h.base;

  ValidationReport functor_check = m.functor.validate();
  for (auto& v : functor_check.violations)
    report.add("base functor " + v.rule, v.witness);
  if (static_cast<int>(m.sigma.size()) != c.num_objects()) {
    report.add("shape", "one sigma component per source object required");
    return report;
  }
  for (ObjId a = 0; a < c.num_objects(); ++a)
    if (!m.sigma[a].is_homomorphism())
      report.add("sigma homomorphism", "object " + std::to_string(a));

  // naturality: sigma_B ∘ G(f) = H(F f) ∘ sigma_A
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.dom(f), b = c.cod(f);
    for (ElemId alpha = 0; alpha < g.group(a).order(); ++alpha)
      if (m.sigma[b](g.act(f, alpha)) !=
          h.act(m.functor.mor_map[f], m.sigma[a](alpha)))
        report.add("sigma naturality", "(f=" + std::to_string(f) + ", alpha=" +
                                           std::to_string(alpha) + ")");
  }

  // compatibility: delta_{FA}(sigma(alpha)) = F(gamma_A(alpha))
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    ObjId fa = m.functor.obj_map[a];
    for (ElemId alpha = 0; alpha < g.group(a).order(); ++alpha) {
      MorId lhs = h.gamma_mor(fa, m.sigma[a](alpha));
      MorId rhs = m.functor.mor_map[g.gamma_mor(a, alpha)];
      if (lhs != rhs)
        report.add("action square", "object " + std::to_string(a) + ", alpha=" +
                                        std::to_string(alpha));
    }
    (void)d;
  }
  return report;
}

ValidationReport validate_xmod_2cell(const XMod2Cell& c2) {
  ValidationReport report;
  const XModMorphism& from = *c2.from;
  const XModMorphism& to = *c2.to;
  if (from.source != to.source || from.target != to.target) {
    report.add("shape", "2-cell requires parallel morphisms");
    return report;
  }
  ValidationReport nat = c2.tau.validate();
  for (auto& v : nat.violations) report.add("tau " + v.rule, v.witness);
  if (!report.violations.empty()) return report;

  const CrossedModule& g = *from.source;
  const CrossedModule& h = *from.target;
  for (ObjId a = 0; a < g.base->num_objects(); ++a)
    for (ElemId alpha = 0; alpha < g.group(a).order(); ++alpha)
      if (to.sigma[a](alpha) != h.act(c2.tau.components[a], from.sigma[a](alpha)))
        report.add("theta identity", "object " + std::to_string(a) + ", alpha=" +
                                         std::to_string(alpha));
  return report;
}

CanonicalToGroups canonical_2functor_to_groups(const CrossedModule& xm,
                                               const std::vector<GrpPtr>& targets,
                                               const SearchBudget& budget) {
  const FinCategory& c = *xm.base;
  CanonicalToGroups out;
  out.target_diagram = full_groups_subcategory(targets, budget);
  out.target_module = std::make_shared<const CrossedModule>(
      conjugation_module(out.target_diagram));

  FinFunctor f;
  f.source = xm.base;
  f.target = out.target_diagram.cat;
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    int found = -1;
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (targets[t]->same_table(xm.group(a))) {
        found = static_cast<int>(t);
        break;
      }
    if (found < 0)
      throw InputError("value group at object " + std::to_string(a) +
                       " is missing from the target subcategory");
    f.obj_map.push_back(found);
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    ObjId a = f.obj_map[c.dom(m)], b = f.obj_map[c.cod(m)];
    const std::vector<ElemId>& map = xm.on_morphisms[m].map;
    MorId found = -1;
    for (MorId t = 0; t < out.target_diagram.cat->num_morphisms(); ++t)
      if (out.target_diagram.cat->dom(t) == a &&
          out.target_diagram.cat->cod(t) == b &&
          out.target_diagram.homs[t].map == map) {
        found = t;
        break;
      }
    if (found < 0)
      throw InputError("the action of morphism " + std::to_string(m) +
                       " is missing from the target subcategory");
    f.mor_map.push_back(found);
  }

  XModMorphism morphism;
  morphism.source = std::make_shared<const CrossedModule>(xm);
  morphism.target = out.target_module;
  morphism.functor = std::move(f);
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    auto src = std::make_shared<FinGroup>(xm.group(a));
    morphism.sigma.push_back({src, targets[morphism.functor.obj_map[a]],
                              identity_hom(src).map});
  }
  out.morphism = std::move(morphism);
  return out;
}

MorId apply_on_one_cell(const XModMorphism& m, MorId f) {
  return m.functor.mor_map.at(f);
}

TwoCell apply_on_two_cell(const XModMorphism& m, const TwoCell& cell) {
  ObjId b = m.source->base->cod(cell.src);
  return {apply_on_one_cell(m, cell.src), m.sigma[b](cell.elem)};
}

ValidationReport check_functoriality(const XModMorphism& m) {
  ValidationReport report;
  const CrossedModule& g = *m.source;
  const CrossedModule& h = *m.target;
  const FinCategory& c = *g.base;

  // every image of a valid 2-cell must be a valid 2-cell with matching target
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (ElemId alpha = 0; alpha < g.group(c.cod(f)).order(); ++alpha) {
      TwoCell cell{f, alpha};
      TwoCell image = apply_on_two_cell(m, cell);
      MorId expect = m.functor.mor_map[two_cell_target(g, cell)];
      if (two_cell_target(h, image) != expect)
        report.add("2-cell image typing",
                   "(f=" + std::to_string(f) + ", alpha=" + std::to_string(alpha) +
                       ")");
    }
  // identity 2-cells
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    TwoCell image = apply_on_two_cell(m, identity_two_cell(g, f));
    if (image.elem != 0)
      report.add("identity preservation", "1-cell " + std::to_string(f));
  }
  // vertical composition
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId b = c.cod(f);
    for (ElemId a1 = 0; a1 < g.group(b).order(); ++a1) {
      TwoCell first{f, a1};
      MorId mid = two_cell_target(g, first);
      for (ElemId a2 = 0; a2 < g.group(b).order(); ++a2) {
        TwoCell second{mid, a2};
        TwoCell lhs = apply_on_two_cell(m, vcompose(g, second, first));
        TwoCell rhs = vcompose(h, apply_on_two_cell(m, second),
                               apply_on_two_cell(m, first));
        if (!(lhs == rhs))
          report.add("vertical preservation",
                     "(f=" + std::to_string(f) + ", a1=" + std::to_string(a1) +
                         ", a2=" + std::to_string(a2) + ")");
      }
    }
  }
  // horizontal composition
  for (MorId f2 = 0; f2 < c.num_morphisms(); ++f2)
    for (MorId f1 = 0; f1 < c.num_morphisms(); ++f1) {
      if (!c.composable(f2, f1)) continue;
      for (ElemId b2 = 0; b2 < g.group(c.cod(f2)).order(); ++b2)
        for (ElemId b1 = 0; b1 < g.group(c.cod(f1)).order(); ++b1) {
          TwoCell beta{f2, b2}, alpha{f1, b1};
          TwoCell lhs = apply_on_two_cell(m, hcompose(g, beta, alpha));
          TwoCell rhs = hcompose(h, apply_on_two_cell(m, beta),
                                 apply_on_two_cell(m, alpha));
          if (!(lhs == rhs))
            report.add("horizontal preservation",
                       "(f2=" + std::to_string(f2) + ", f1=" + std::to_string(f1) +
                           ", b2=" + std::to_string(b2) + ", b1=" +
                           std::to_string(b1) + ")");
        }
    }
  return report;
}

TwoCellCountComparison compare_two_cell_counts(const XModMorphism& m, MorId f,
                                               MorId g) {
  TwoCellCountComparison out;
  out.f = f;
  out.g = g;
  out.upstairs = two_cells(*m.source, f, g).size();
  out.downstairs = two_cells(*m.target, apply_on_one_cell(m, f),
                             apply_on_one_cell(m, g))
                       .size();
  return out;
}

}  // namespace xmodcat
