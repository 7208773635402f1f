#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xmodcat/fincat.hpp"
#include "xmodcat/xmod.hpp"

namespace xmodcat {

// --- stock categories ---------------------------------------------------------

CatPtr discrete_category(int n);
CatPtr terminal_category();
CatPtr empty_category();

/// Thin category of a partial order on 0..n-1 given by cover pairs (a,b)
/// meaning a < b; the reflexive-transitive closure is taken. Morphism ids
/// run over pairs (a, b) with a <= b in lexicographic order.
CatPtr poset_category(int n, const std::vector<std::pair<int, int>>& covers);

CatPtr chain_poset(int n);        // 0 < 1 < ... < n-1
CatPtr walking_arrow();           // chain_poset(2)
CatPtr span_category();           // 1 <- 0 -> 2 (apex 0 is initial)
CatPtr cospan_category();         // 0 -> 2 <- 1
CatPtr parallel_pair_category();  // two objects, two parallel arrows
CatPtr square_poset();            // the poset product 2 x 2
CatPtr delooping(const GrpPtr& g);
CatPtr idempotent_pair_category();

// --- stock crossed modules -----------------------------------------------------

/// Constant-Z2 module on a diagram of abelian groups: G(A) = Z2, G(f) = id,
/// and the nontrivial element acts by inversion x -> x^-1.
CrossedModule negation_module(const std::vector<GrpPtr>& abelian_groups,
                              const SearchBudget& budget = {});

/// Constant Z2 on the idempotent-pair base; the underlying set functor of
/// the value groups is representable with the nonidentity element as the
/// universal point.
CrossedModule representable_z2_module();

/// Abelian groups with the trivial action on a thin base category; valid
/// because thin categories have no nontrivial automorphisms.
CrossedModule thin_abelian_module(const CatPtr& thin_base,
                                  std::vector<GrpPtr> groups,
                                  std::vector<GroupHom> on_morphisms);

// --- named fixture corpus -------------------------------------------------------

struct Fixture {
  std::string name;
  CrossedModule xm;
};

/// Every named fixture used by the test and acceptance sweeps.
std::vector<Fixture> named_fixtures();

Fixture fixture(const std::string& name);  // throws InputError if unknown

// --- seeded random instances ----------------------------------------------------

struct RandomCaps {
  int max_objects = 3;
  int max_group_order = 4;
};

/// A random valid crossed module, reproducible from the seed. Generation
/// draws from families that satisfy the axioms by construction and the
/// result is re-validated before being returned.
CrossedModule random_crossed_module(std::uint64_t seed, const RandomCaps& caps = {});

// --- documented single-field mutations (for rejection tests) --------------------

CrossedModule mutate_gamma_constant_identity(CrossedModule xm);  // breaks Peiffer
CrossedModule mutate_on_morphism(CrossedModule xm);              // breaks functoriality
CrossedModule mutate_gamma_single_entry(CrossedModule xm);       // breaks equivariance

}  // namespace xmodcat
