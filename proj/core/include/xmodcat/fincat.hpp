#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "xmodcat/common.hpp"
#include "xmodcat/groupkit.hpp"

namespace xmodcat {

/// A finite category as explicit object/morphism lists with a dense
/// composition table. Objects and morphisms carry stable integer ids;
/// every enumeration in the library follows id order.
class FinCategory {
 public:
  FinCategory() = default;

  /// comps lists (g, f, g∘f) triples; pairs that are not listed stay
  /// undefined. Structural shape (sizes, id ranges) is enforced here,
  /// the category axioms are checked by validate_category.
  FinCategory(int n_objects, std::vector<std::pair<ObjId, ObjId>> mor_ends,
              std::vector<MorId> identities,
              const std::vector<std::tuple<MorId, MorId, MorId>>& comps);

  int num_objects() const { return n_objects_; }
  int num_morphisms() const { return static_cast<int>(ends_.size()); }
  ObjId dom(MorId f) const { return ends_[check_mor(f)].first; }
  ObjId cod(MorId f) const { return ends_[check_mor(f)].second; }
  MorId identity(ObjId a) const { return identities_[check_obj(a)]; }

  bool composable(MorId g, MorId f) const { return dom(g) == cod(f); }

  /// g∘f; throws InputError on a non-composable pair or a hole in the table.
  MorId compose(MorId g, MorId f) const;

  /// Raw table lookup, -1 where undefined. Used by the validator.
  MorId raw_compose(MorId g, MorId f) const {
    return comp_[check_mor(g) * num_morphisms() + check_mor(f)];
  }

  std::vector<MorId> hom(ObjId a, ObjId b) const;          // id order
  std::vector<MorId> morphisms_from(ObjId a) const;        // id order
  bool is_invertible(MorId f) const;
  std::optional<MorId> inverse(MorId f) const;

 private:
  ObjId check_obj(ObjId a) const {
    if (a < 0 || a >= n_objects_) throw InputError("object id out of range");
    return a;
  }
  MorId check_mor(MorId f) const {
    if (f < 0 || f >= static_cast<int>(ends_.size()))
      throw InputError("morphism id out of range");
    return f;
  }

  int n_objects_ = 0;
  std::vector<std::pair<ObjId, ObjId>> ends_;
  std::vector<MorId> identities_;
  std::vector<MorId> comp_;  // dense table, -1 = undefined
};

using CatPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId on_object(ObjId a) const { return obj_map.at(a); }
  MorId on_morphism(MorId f) const { return mor_map.at(f); }

  ValidationReport validate() const;
};

FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

struct NatTransformation {
  FinFunctor source;
  FinFunctor target;
  std::vector<MorId> components;  // per source-category object

  ValidationReport validate() const;
};

// --- operations -------------------------------------------------------------

/// Exhaustive check of the category axioms; lists every violated instance.
ValidationReport validate_category(const FinCategory& c);

/// All functors j -> c in lexicographic (obj_map, mor_map) order.
std::vector<FinFunctor> enumerate_functors(const CatPtr& j, const CatPtr& c,
                                           const SearchBudget& budget = {});

/// The coslice x/c: objects are morphisms out of x (in id order), morphisms
/// are commuting triangles. Morphism ids follow (source object, mediating
/// morphism) lexicographic order.
struct Coslice {
  CatPtr category;
  FinFunctor projection;               // to the base category
  std::vector<MorId> object_of;        // coslice object index -> base morphism
  std::vector<std::pair<int, MorId>> triangle_of;  // coslice mor -> (src obj, g)

  int object_index(MorId f) const;     // inverse of object_of
};

Coslice coslice(const CatPtr& c, ObjId x);

bool is_connected(const FinCategory& j);

/// Connected components as a partition of objects; blocks are sorted by
/// least member and each block is sorted.
std::vector<std::vector<ObjId>> pi0(const FinCategory& j);

/// Least object with exactly one morphism to every object, if any.
std::optional<ObjId> initial_object(const FinCategory& c);

/// The invertible endomorphisms of an object as a table group, together
/// with the morphism id carried by each element. Element 0 is id_a.
struct LabeledGroup {
  FinGroup group;
  std::vector<MorId> label;  // element id -> morphism id

  std::optional<ElemId> element_of(MorId f) const;
};

LabeledGroup automorphism_group_in_category(const FinCategory& c, ObjId a);

}  // namespace xmodcat
