#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmodcat/fincat.hpp"
#include "xmodcat/groupkit.hpp"

namespace xmodcat {

/// A crossed module on a finite category: a group-valued copresheaf G
/// together with action maps gamma_A : G(A) -> Aut(A) satisfying the
/// equivariance square and the Peiffer identity.
struct CrossedModule {
  CatPtr base;
  std::vector<GrpPtr> groups;            // per object
  std::vector<GroupHom> on_morphisms;    // per morphism: G(f)
  std::vector<std::vector<MorId>> gamma; // per object: element -> acting automorphism

  const FinGroup& group(ObjId a) const { return *groups.at(a); }
  ElemId act(MorId f, ElemId alpha) const { return on_morphisms.at(f)(alpha); }
  MorId gamma_mor(ObjId a, ElemId alpha) const { return gamma.at(a).at(alpha); }

  bool is_trivial() const;  // every G(A) is the trivial group
};

/// Exhaustive check of functoriality, the gamma homomorphism property,
/// every equivariance square and every Peiffer instance, each violation
/// reported with its witness.
ValidationReport validate_crossed_module(const CrossedModule& xm);

/// A category whose objects carry table groups and whose morphisms carry
/// homomorphisms between them, plus the morphism acting as conjugation by
/// each group element. This is the substrate for conjugation modules.
struct GroupsDiagram {
  CatPtr cat;
  std::vector<GrpPtr> groups;
  std::vector<GroupHom> homs;                   // per morphism
  std::vector<std::vector<MorId>> conj_label;   // per object, per element
};

/// The delooping BG: one object, morphisms are the group elements, and the
/// morphism for g carries conjugation by g.
GroupsDiagram delooping_diagram(const GrpPtr& g);

/// The full subcategory of groups spanned by the given tables: morphisms
/// are all homomorphisms, in hom_set order per (source, target) block.
GroupsDiagram full_groups_subcategory(const std::vector<GrpPtr>& groups,
                                      const SearchBudget& budget = {});

/// G(A) = the group at A, G(f) = the carried homomorphism, gamma_A(alpha) =
/// conjugation by alpha.
CrossedModule conjugation_module(const GroupsDiagram& d);

/// The locally discrete case: every G(A) trivial.
CrossedModule trivial_module(const CatPtr& base);

// --- isotropy ----------------------------------------------------------------

/// One natural automorphism of the coslice projection: an invertible
/// endomorphism of cod(f) for every coslice object f of X.
struct IsotropyElement {
  ObjId base_object;
  std::vector<MorId> components;  // per coslice object index
};

/// The isotropy group Z(X) as a table group; element 0 is the family of
/// identities and the remaining labels are sorted by component vector.
struct IsotropyGroup {
  FinGroup group;
  std::vector<IsotropyElement> labels;
  Coslice slice;
};

/// All natural automorphism families of the coslice projection, found by
/// component backtracking with triangle propagation. Root candidates may be
/// explored by several workers; the result is schedule-independent.
IsotropyGroup compute_isotropy(const CatPtr& c, ObjId x,
                               const SearchBudget& budget = {}, int workers = 1);

/// The reindexing homomorphism Z(X) -> Z(Y) along x : X -> Y,
/// alpha |-> (f |-> alpha_{f ∘ x}).
GroupHom isotropy_functor_action(const CatPtr& c, MorId x,
                                 const IsotropyGroup& zx, const IsotropyGroup& zy);

/// delta : Z(X) -> Aut(X), alpha |-> alpha_{id_X}.
GroupHom delta_hom(const IsotropyGroup& zx, const LabeledGroup& aut_x);

/// The comparison G(A) -> Z(A) at every object, alpha |-> (f |-> gamma(G(f)alpha)),
/// plus whether it is the unique crossed-module morphism into the isotropy
/// module over the identity functor.
struct CanonicalComparison {
  std::vector<GroupHom> per_object;      // G(A) -> Z(A).group
  std::vector<IsotropyGroup> isotropy;   // per object
  ValidationReport morphism_check;       // naturality + compatibility squares
  bool unique = false;
  std::uint64_t candidates_checked = 0;
};

CanonicalComparison canonical_comparison(const CrossedModule& xm,
                                         const SearchBudget& budget = {});

/// The isotropy crossed module (Z, delta) of the base category.
CrossedModule isotropy_module(const CatPtr& c, const SearchBudget& budget = {});

}  // namespace xmodcat
