#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "xmodcat/twocat.hpp"
#include "xmodcat/xmod.hpp"

namespace xmodcat {

/// A diagram in the base category; its shape is treated as locally discrete.
struct Diagram {
  FinFunctor functor;

  const FinCategory& shape() const { return *functor.source; }
  const FinCategory& target() const { return *functor.target; }
};

struct Cocone {
  ObjId apex;
  std::vector<MorId> legs;  // per shape object, D(j) -> apex
};

struct Cone {
  ObjId apex;
  std::vector<MorId> legs;  // per shape object, apex -> D(j)
};

bool is_cocone(const Diagram& d, const Cocone& c);
bool is_cone(const Diagram& d, const Cone& c);
std::vector<Cocone> cocones_on(const Diagram& d, ObjId apex);
std::vector<Cone> cones_on(const Diagram& d, ObjId apex);

/// Least universal witness by (apex, legs); num_candidates counts all
/// universal apex/legs pairs found (the isomorphism class size).
struct ColimitResult {
  ObjId object;
  Cocone cocone;
  int num_candidates = 0;
};
struct LimitResult {
  ObjId object;
  Cone cone;
  int num_candidates = 0;
};

std::optional<ColimitResult> colimit_1d(const Diagram& d,
                                        const SearchBudget& budget = {});
std::optional<LimitResult> limit_1d(const Diagram& d,
                                    const SearchBudget& budget = {});

enum class SearchStatus { Exists, NotExists, NotApplicable, BudgetExceeded };

std::string to_string(SearchStatus s);

/// Outcome of a universal-property search. NotExists always carries a
/// finite witness so the failure can be re-validated independently.
struct SearchVerdict {
  SearchStatus status;
  nlohmann::json witness;  // Exists: the universal data; NotExists: obstruction
  std::string reason;

  static SearchVerdict exists(nlohmann::json w, std::string why = "");
  static SearchVerdict not_exists(nlohmann::json w, std::string why);
  static SearchVerdict not_applicable(std::string why);
};

/// Two-dimensional universal property of a 1-categorical colimit: every
/// modification between whiskered cocones must be induced by a unique
/// 2-cell between the factorizations. Modification families are per-object
/// elements that agree whenever the shape has a connecting morphism.
SearchVerdict check_2d_colimit(const CrossedModule& xm, const Diagram& d,
                               const ColimitResult& candidate);
SearchVerdict check_2d_limit(const CrossedModule& xm, const Diagram& d,
                             const LimitResult& candidate);

/// Searches for (R, tau) such that f |-> G(f)tau is a bijection
/// hom(R, A) -> G(A) for every object A.
struct Representation {
  ObjId object;
  ElemId element;
};
std::optional<Representation> representability_search(const CrossedModule& xm);

// --- weighted colimit shapes ---------------------------------------------------

struct CoinserterShape { MorId f, g; };              // parallel pair A ⇉ B
struct CoequifierShape { TwoCell alpha, beta; };     // parallel 2-cells f -> g
struct CoidentifierShape { TwoCell alpha; };
struct TensorByGroupShape { GrpPtr group; ObjId object; };
struct CoproductShape { ObjId a, b; };
struct TwoInitialShape {};

using ColimitShape = std::variant<CoinserterShape, CoequifierShape,
                                  CoidentifierShape, TensorByGroupShape,
                                  CoproductShape, TwoInitialShape>;

SearchVerdict search_weighted_colimit(const CrossedModule& xm,
                                      const ColimitShape& shape,
                                      const SearchBudget& budget = {});

// --- weighted limit shapes -----------------------------------------------------

struct InserterShape { MorId f, g; };                // parallel pair X ⇉ A
struct EquifierShape { TwoCell alpha, beta; };
struct CommaShape { MorId f, g; };                   // cospan X -> A <- Y
struct CotensorBy2Shape { ObjId object; };
struct ProductShape { ObjId a, b; };

/// A Cat-valued weight on a locally discrete shape.
struct Weight {
  CatPtr shape;
  std::vector<CatPtr> values;              // per shape object
  std::vector<FinFunctor> on_morphisms;    // per shape morphism
};

struct ConicalShape {
  Weight weight;
  Diagram diagram;
};

using LimitShape = std::variant<InserterShape, EquifierShape, CommaShape,
                                CotensorBy2Shape, ProductShape, ConicalShape>;

SearchVerdict search_weighted_limit(const CrossedModule& xm,
                                    const LimitShape& shape,
                                    const SearchBudget& budget = {});

// --- obstruction machinery ------------------------------------------------------

/// Builds the trivial weighted cone on the initial object and reports
/// whether any weighted cone carries a nontrivial 2-cell; when one does, a
/// weighted limit is ruled out and the witness cone is returned.
struct ConeTrivialityReport {
  bool applicable = true;
  std::string not_applicable_reason;
  bool has_nontrivial_cone = false;
  nlohmann::json nontrivial_witness;
  std::optional<bool> limit_exists;  // from the direct search, when run
  bool consistent = true;            // nontrivial cone implies no limit
};

ConeTrivialityReport weighted_cone_triviality(const CrossedModule& xm,
                                              const Weight& w, const Diagram& d,
                                              const SearchBudget& budget = {});

/// The weighted limit computed 1-categorically over the pi0-collapsed
/// weight (a conical limit over the category of elements of pi0 ∘ W).
std::optional<LimitResult> weighted_limit_via_pi0(const CrossedModule& xm,
                                                  const Weight& w,
                                                  const Diagram& d,
                                                  const SearchBudget& budget = {});

/// When the base has an initial object: evaluates "G trivial", "0 is
/// 2-initial" and, when 0+0 exists 1-categorically, "0+0 is a 2-coproduct",
/// and asserts the biconditional between the evaluated items.
struct ObstructionReport {
  bool applicable = true;
  std::string not_applicable_reason;
  bool g_trivial = false;
  SearchVerdict two_initial;
  std::optional<SearchVerdict> two_coproduct;  // absent if 0+0 does not exist
  bool equivalence_holds = false;
  nlohmann::json details;
};

ObstructionReport obstruction_report(const CrossedModule& xm,
                                     const SearchBudget& budget = {});

}  // namespace xmodcat
