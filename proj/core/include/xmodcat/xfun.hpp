#pragma once

#include <vector>

#include "xmodcat/twocat.hpp"
#include "xmodcat/xmod.hpp"

namespace xmodcat {

using XmPtr = std::shared_ptr<const CrossedModule>;

/// A morphism of crossed modules: a base functor F together with natural
/// components sigma_A : G(A) -> H(F A) compatible with the actions.
struct XModMorphism {
  XmPtr source;
  XmPtr target;
  FinFunctor functor;
  std::vector<GroupHom> sigma;  // per source object
};

ValidationReport validate_xmod_morphism(const XModMorphism& m);

/// A 2-cell between parallel crossed-module morphisms: a natural
/// transformation tau with theta = (H tau) ∘ sigma at every object.
struct XMod2Cell {
  const XModMorphism* from;
  const XModMorphism* to;
  NatTransformation tau;
};

ValidationReport validate_xmod_2cell(const XMod2Cell& c);

/// The canonical 2-functor into the conjugation module on a finite full
/// subcategory of groups: F = G on objects and morphisms, sigma the
/// identity on each G(A). The target subcategory must contain every value
/// group by exact table; all homomorphisms between them are present by
/// fullness.
struct CanonicalToGroups {
  GroupsDiagram target_diagram;
  XmPtr target_module;
  XModMorphism morphism;  // functor/sigma into target_module
};

CanonicalToGroups canonical_2functor_to_groups(const CrossedModule& xm,
                                               const std::vector<GrpPtr>& targets,
                                               const SearchBudget& budget = {});

MorId apply_on_one_cell(const XModMorphism& m, MorId f);
TwoCell apply_on_two_cell(const XModMorphism& m, const TwoCell& cell);

/// Exhaustive preservation of identities and vertical/horizontal
/// composites over every composable pair of 2-cells.
ValidationReport check_functoriality(const XModMorphism& m);

/// 2-cell counts between a parallel pair upstairs and between its images
/// downstairs; unequal counts exhibit failure of fullness on 2-cells.
struct TwoCellCountComparison {
  MorId f, g;
  std::size_t upstairs = 0;
  std::size_t downstairs = 0;
};

TwoCellCountComparison compare_two_cell_counts(const XModMorphism& m, MorId f,
                                               MorId g);

}  // namespace xmodcat
