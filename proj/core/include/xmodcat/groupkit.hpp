#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmodcat/common.hpp"

namespace xmodcat {

/// A finite group as a dense multiplication table. Element ids are
/// 0..order-1 and the identity is always element 0.
class FinGroup {
 public:
  FinGroup() = default;
  FinGroup(int order, std::vector<ElemId> mul);

  int order() const { return order_; }
  ElemId identity() const { return 0; }
  ElemId mul(ElemId a, ElemId b) const { return mul_[index(a, b)]; }
  ElemId inv(ElemId a) const { return inv_[check(a)]; }
  const std::vector<ElemId>& table() const { return mul_; }

  bool is_abelian() const;
  bool same_table(const FinGroup& other) const;

  /// Greedy generating set: repeatedly adds the least element that enlarges
  /// the generated subgroup. Identity-only groups yield an empty set.
  std::vector<ElemId> generating_set() const;

  ValidationReport validate() const;

 private:
  int index(ElemId a, ElemId b) const { return check(a) * order_ + check(b); }
  ElemId check(ElemId a) const {
    if (a < 0 || a >= order_) throw InputError("group element id out of range");
    return a;
  }

  int order_ = 0;
  std::vector<ElemId> mul_;
  std::vector<ElemId> inv_;
};

using GrpPtr = std::shared_ptr<const FinGroup>;

/// A homomorphism between table groups, stored as the full element map.
struct GroupHom {
  GrpPtr source;
  GrpPtr target;
  std::vector<ElemId> map;

  ElemId operator()(ElemId a) const { return map.at(a); }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

GroupHom identity_hom(const GrpPtr& g);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom conjugation_hom(const GrpPtr& g, ElemId a);     // x -> a x a^-1
GroupHom inversion_hom(const GrpPtr& g);                 // x -> x^-1 (abelian only)
GroupHom trivial_hom(const GrpPtr& source, const GrpPtr& target);

/// All homomorphisms source -> target, sorted by their element maps.
/// Backtracks over a greedy generating set of the source.
std::vector<GroupHom> hom_set(const GrpPtr& source, const GrpPtr& target,
                              const SearchBudget& budget = {});

// --- free words and presentations ------------------------------------------

/// A word over abstract generators: entry +i stands for generator i-1,
/// entry -i for its formal inverse. Valid words are freely reduced.
using Word = std::vector<std::int32_t>;

Word free_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // reduced concatenation
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Generators plus freely reduced relator words. Relators that reduce to the
/// empty word are dropped at construction.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  static GroupPresentation make(std::vector<std::string> generators,
                                std::vector<Word> relators);
  std::string to_text() const;  // "< a, b | a^2, b^3 >"
};

/// Left-to-right table evaluation of a word under a generator assignment.
ElemId eval_word(const Word& w, const std::vector<ElemId>& assignment,
                 const FinGroup& k);

/// Number of generator assignments into k under which every relator
/// evaluates to the identity; equals |Hom(presented group, k)| exactly.
/// The assignment space may be split across workers; the count is
/// schedule-independent.
std::uint64_t count_homs(const GroupPresentation& p, const FinGroup& k,
                         const SearchBudget& budget = {}, int workers = 1);

/// The satisfying assignments themselves, in odometer order.
std::vector<std::vector<ElemId>> list_homs(const GroupPresentation& p,
                                           const FinGroup& k,
                                           const SearchBudget& budget = {});

/// Multiplication-table presentation of a table group: one generator per
/// element and one relator per table entry.
GroupPresentation table_presentation(const FinGroup& g);

// --- stock groups -----------------------------------------------------------

GrpPtr trivial_group();
GrpPtr cyclic_group(int n);
GrpPtr symmetric3();          // permutations of 3 points, lex one-line order
GrpPtr dihedral_group(int n); // symmetries of the n-gon, order 2n
GrpPtr klein_four();
GrpPtr direct_product(const GrpPtr& a, const GrpPtr& b);

/// Stock lookup by name ("Z1".."Z6", "V4", "S3", "D4"); empty if unknown.
GrpPtr stock_group(const std::string& name);

/// The default verification panel: Z2, Z3, Z4, S3, D4, Z2xZ2.
std::vector<std::pair<std::string, GrpPtr>> default_panel();

}  // namespace xmodcat
