#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodcat/groupkit.hpp"

namespace xmodcat {

/// A map between presented groups: a word of the target per generator of
/// the source. Relator preservation is checked against finite panels, not
/// globally.
struct PresentedMap {
  GroupPresentation source;
  GroupPresentation target;
  std::vector<Word> images;  // per source generator

  Word apply(const Word& w) const;  // substitute generator images, reduce
};

/// Per-panel check that every source relator maps to a word the panel
/// cannot distinguish from the identity.
ValidationReport validate_presented_map(
    const PresentedMap& m,
    const std::vector<std::pair<std::string, GrpPtr>>& panel,
    const SearchBudget& budget = {});

/// Fresh letters are drawn from t0, t1, ...; a collision with an existing
/// generator is renamed and reported.
struct FreshLetterReport {
  std::vector<std::pair<std::string, std::string>> renamed;  // (wanted, used)
};

/// HNN-style presentation: target generators plus a stable letter t with
/// relators t·f(a)·t^-1·g(a)^-1 for every source generator a.
struct CoinserterPresentation {
  GroupPresentation presentation;
  std::string stable_letter;
  FreshLetterReport letters;
};

CoinserterPresentation coinserter_presentation(const PresentedMap& f,
                                               const PresentedMap& g);

/// Adds the relator alpha·beta^-1 (coequifier) or alpha (coidentifier).
GroupPresentation coequifier_presentation(const GroupPresentation& b,
                                          const Word& alpha, const Word& beta);
GroupPresentation coidentifier_presentation(const GroupPresentation& b,
                                            const Word& alpha);

/// Generators of b plus one commuting stable letter per element of x:
/// relators t_x·b·t_x^-1·b^-1 for every generator b.
struct TensorPresentation {
  GroupPresentation presentation;
  std::vector<std::string> letters;
  FreshLetterReport renames;
};

TensorPresentation tensor_by_free_group_presentation(
    const std::vector<std::string>& x, const GroupPresentation& b);

/// Exact verification of the coinserter's one-dimensional universal
/// property at a finite group K: homs out of the coinserter presentation
/// must biject with pairs (k : target -> K, conjugator beta) satisfying
/// beta·k(f(a))·beta^-1 = k(g(a)) for every source generator.
struct HomCountVerdict {
  std::uint64_t lhs = 0;  // homs out of the constructed presentation
  std::uint64_t rhs = 0;  // structures counted directly
  bool equal() const { return lhs == rhs; }
};

HomCountVerdict verify_coinserter_by_homcount(const GroupPresentation& p,
                                              const PresentedMap& f,
                                              const PresentedMap& g,
                                              const FinGroup& k,
                                              const SearchBudget& budget = {},
                                              int workers = 1);

/// count_homs(p, K) must equal the homs B -> K merging alpha and beta
/// (beta empty = coidentifier: alpha must map to the identity).
HomCountVerdict verify_coequifier_by_homcount(const GroupPresentation& p,
                                              const GroupPresentation& b,
                                              const Word& alpha, const Word& beta,
                                              const FinGroup& k,
                                              const SearchBudget& budget = {},
                                              int workers = 1);

/// Homs out of the tensor presentation must biject with pairs
/// (k : b -> K, per-letter element of the centralizer of the image of k).
HomCountVerdict verify_tensor_by_homcount(const TensorPresentation& t,
                                          const GroupPresentation& b,
                                          const FinGroup& k,
                                          const SearchBudget& budget = {},
                                          int workers = 1);

}  // namespace xmodcat
