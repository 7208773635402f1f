#include "xmodcat/grpcolim.hpp"

#include <algorithm>
#include <set>

namespace xmodcat {

Word PresentedMap::apply(const Word& w) const {
  Word out;
  for (std::int32_t x : w) {
    int idx = std::abs(x) - 1;
    if (idx >= static_cast<int>(images.size()))
      throw InputError("map has no image for generator " + std::to_string(idx));
    Word piece = x > 0 ? images[idx] : word_inverse(images[idx]);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(std::move(out));
}

ValidationReport validate_presented_map(
    const PresentedMap& m, const std::vector<std::pair<std::string, GrpPtr>>& panel,
    const SearchBudget& budget) {
  ValidationReport report;
  if (m.images.size() != m.source.generators.size()) {
    report.add("shape", "one image word per source generator required");
    return report;
  }
  for (const Word& w : m.images)
    for (std::int32_t x : w)
      if (std::abs(x) > static_cast<int>(m.target.generators.size()))
        report.add("shape", "image word references unknown target generator");
  if (!report.violations.empty()) return report;
  for (const auto& [name, k] : panel) {
    for (const auto& assignment : list_homs(m.target, *k, budget))
      for (std::size_t r = 0; r < m.source.relators.size(); ++r) {
        Word image = m.apply(m.source.relators[r]);
        if (eval_word(image, assignment, *k) != 0)
          report.add("relator preservation",
                     "relator " + std::to_string(r) + " detected in " + name);
      }
  }
  return report;
}

namespace {

std::string fresh_letter(const std::set<std::string>& taken, int& counter) {
  while (true) {
    std::string name = "t" + std::to_string(counter++);
    if (!taken.count(name)) return name;
  }
}

}  // namespace

CoinserterPresentation coinserter_presentation(const PresentedMap& f,
                                               const PresentedMap& g) {
  if (f.source.generators != g.source.generators ||
      f.target.generators != g.target.generators)
    throw InputError("coinserter needs maps with common source and target");
  CoinserterPresentation out;
  std::set<std::string> taken(f.target.generators.begin(),
                              f.target.generators.end());
  int counter = 0;
  out.stable_letter = fresh_letter(taken, counter);
  if (out.stable_letter != "t0")
    out.letters.renamed.push_back({"t0", out.stable_letter});

  std::vector<std::string> gens = f.target.generators;
  gens.push_back(out.stable_letter);
  std::int32_t t = static_cast<std::int32_t>(gens.size());

  std::vector<Word> relators = f.target.relators;
  for (std::size_t a = 0; a < f.source.generators.size(); ++a) {
    Word w = {t};
    Word fa = f.images[a];
    Word ga_inv = word_inverse(g.images[a]);
    w.insert(w.end(), fa.begin(), fa.end());
    w.push_back(-t);
    w.insert(w.end(), ga_inv.begin(), ga_inv.end());
    relators.push_back(std::move(w));
  }
  out.presentation = GroupPresentation::make(std::move(gens), std::move(relators));
  return out;
}

GroupPresentation coequifier_presentation(const GroupPresentation& b,
                                          const Word& alpha, const Word& beta) {
  std::vector<Word> relators = b.relators;
  relators.push_back(word_concat(alpha, word_inverse(beta)));
  return GroupPresentation::make(b.generators, std::move(relators));
}

GroupPresentation coidentifier_presentation(const GroupPresentation& b,
                                            const Word& alpha) {
  std::vector<Word> relators = b.relators;
  relators.push_back(alpha);
  return GroupPresentation::make(b.generators, std::move(relators));
}

TensorPresentation tensor_by_free_group_presentation(
    const std::vector<std::string>& x, const GroupPresentation& b) {
  TensorPresentation out;
  std::set<std::string> taken(b.generators.begin(), b.generators.end());
  std::vector<std::string> gens = b.generators;
  int counter = 0;
  for (const std::string& wanted : x) {
    std::string name = wanted;
    if (taken.count(name)) {
      name = fresh_letter(taken, counter);
      out.renames.renamed.push_back({wanted, name});
    }
    taken.insert(name);
    out.letters.push_back(name);
    gens.push_back(name);
  }
  std::vector<Word> relators = b.relators;
  int nb = static_cast<int>(b.generators.size());
  for (std::size_t i = 0; i < out.letters.size(); ++i) {
    std::int32_t t = static_cast<std::int32_t>(nb + i + 1);
    for (int gen = 1; gen <= nb; ++gen)
      relators.push_back({t, gen, -t, -gen});
  }
  out.presentation = GroupPresentation::make(std::move(gens), std::move(relators));
  return out;
}

HomCountVerdict verify_coinserter_by_homcount(const GroupPresentation& p,
                                              const PresentedMap& f,
                                              const PresentedMap& g,
                                              const FinGroup& k,
                                              const SearchBudget& budget,
                                              int workers) {
  HomCountVerdict v;
  v.lhs = count_homs(p, k, budget, workers);
  for (const auto& assignment : list_homs(f.target, k, budget)) {
    for (ElemId beta = 0; beta < k.order(); ++beta) {
      bool ok = true;
      for (std::size_t a = 0; a < f.source.generators.size() && ok; ++a) {
        ElemId fa = eval_word(f.images[a], assignment, k);
        ElemId ga = eval_word(g.images[a], assignment, k);
        ok = k.mul(k.mul(beta, fa), k.inv(beta)) == ga;
      }
      if (ok) ++v.rhs;
    }
  }
  return v;
}

HomCountVerdict verify_coequifier_by_homcount(const GroupPresentation& p,
                                              const GroupPresentation& b,
                                              const Word& alpha, const Word& beta,
                                              const FinGroup& k,
                                              const SearchBudget& budget,
                                              int workers) {
  HomCountVerdict v;
  v.lhs = count_homs(p, k, budget, workers);
  for (const auto& assignment : list_homs(b, k, budget)) {
    ElemId va = eval_word(alpha, assignment, k);
    ElemId vb = eval_word(beta, assignment, k);
    if (va == vb) ++v.rhs;
  }
  return v;
}

HomCountVerdict verify_tensor_by_homcount(const TensorPresentation& t,
                                          const GroupPresentation& b,
                                          const FinGroup& k,
                                          const SearchBudget& budget,
                                          int workers) {
  HomCountVerdict v;
  v.lhs = count_homs(t.presentation, k, budget, workers);
  for (const auto& assignment : list_homs(b, k, budget)) {
    // centralizer of the image of the assignment
    std::uint64_t central = 0;
    for (ElemId z = 0; z < k.order(); ++z) {
      bool commutes = true;
      for (ElemId img : assignment)
        if (k.mul(z, img) != k.mul(img, z)) {
          commutes = false;
          break;
        }
      if (commutes) ++central;
    }
    std::uint64_t per_letter = 1;
    for (std::size_t i = 0; i < t.letters.size(); ++i) per_letter *= central;
    v.rhs += per_letter;
  }
  return v;
}

}  // namespace xmodcat
