#include "xmodcat/groupkit.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace xmodcat {

std::string ValidationReport::summary() const {
  if (!applicable) return "not applicable: " + not_applicable_reason;
  if (violations.empty()) return "valid";
  std::string s = std::to_string(violations.size()) + " violation(s):";
  for (const auto& v : violations) s += "\n  [" + v.rule + "] " + v.witness;
  return s;
}

FinGroup::FinGroup(int order, std::vector<ElemId> mul)
    : order_(order), mul_(std::move(mul)) {
  if (order_ < 1) throw InputError("group order must be >= 1");
  if (static_cast<int>(mul_.size()) != order_ * order_)
    throw InputError("group table size mismatch");
  for (ElemId v : mul_)
    if (v < 0 || v >= order_) throw InputError("group table entry out of range");
  inv_.assign(order_, -1);
  for (ElemId a = 0; a < order_; ++a)
    for (ElemId b = 0; b < order_; ++b)
      if (this->mul(a, b) == 0 && this->mul(b, a) == 0) inv_[a] = b;
  // Holes in inv_ are reported by validate(), not here.
}

bool FinGroup::is_abelian() const {
  for (ElemId a = 0; a < order_; ++a)
    for (ElemId b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FinGroup::same_table(const FinGroup& other) const {
  return order_ == other.order_ && mul_ == other.mul_;
}

std::vector<ElemId> FinGroup::generating_set() const {
  std::vector<ElemId> gens;
  std::vector<char> generated(order_, 0);
  generated[0] = 1;
  int count = 1;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (ElemId a = 0; a < order_; ++a) {
        if (!generated[a]) continue;
        for (ElemId b = 0; b < order_; ++b) {
          if (!generated[b]) continue;
          ElemId c = mul(a, b);
          if (!generated[c]) {
            generated[c] = 1;
            ++count;
            grew = true;
          }
        }
      }
    }
  };
  while (count < order_) {
    ElemId next = -1;
    for (ElemId a = 0; a < order_; ++a)
      if (!generated[a]) {
        next = a;
        break;
      }
    gens.push_back(next);
    generated[next] = 1;
    ++count;
    close();
  }
  return gens;
}

ValidationReport FinGroup::validate() const {
  ValidationReport report;
  for (ElemId a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      report.add("identity", "element " + std::to_string(a));
    if (inv_[a] < 0)
      report.add("inverse", "element " + std::to_string(a) + " has no two-sided inverse");
  }
  for (ElemId a = 0; a < order_; ++a)
    for (ElemId b = 0; b < order_; ++b)
      for (ElemId c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          report.add("associativity",
                     "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
  return report;
}

bool GroupHom::is_homomorphism() const {
  if (static_cast<int>(map.size()) != source->order()) return false;
  for (ElemId v : map)
    if (v < 0 || v >= target->order()) return false;
  if (map[0] != 0) return false;
  for (ElemId a = 0; a < source->order(); ++a)
    for (ElemId b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(target->order(), 0);
  for (ElemId v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GroupHom identity_hom(const GrpPtr& g) {
  std::vector<ElemId> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (g.source->order() != f.target->order())
    throw InputError("hom composition: size mismatch");
  std::vector<ElemId> map(f.source->order());
  for (ElemId a = 0; a < f.source->order(); ++a) map[a] = g.map[f.map[a]];
  return {f.source, g.target, std::move(map)};
}

GroupHom conjugation_hom(const GrpPtr& g, ElemId a) {
  std::vector<ElemId> map(g->order());
  for (ElemId x = 0; x < g->order(); ++x)
    map[x] = g->mul(g->mul(a, x), g->inv(a));
  return {g, g, std::move(map)};
}

GroupHom inversion_hom(const GrpPtr& g) {
  if (!g->is_abelian())
    throw InputError("inversion is a homomorphism only for abelian groups");
  std::vector<ElemId> map(g->order());
  for (ElemId x = 0; x < g->order(); ++x) map[x] = g->inv(x);
  return {g, g, std::move(map)};
}

GroupHom trivial_hom(const GrpPtr& source, const GrpPtr& target) {
  return {source, target, std::vector<ElemId>(source->order(), 0)};
}

namespace {

// Extends a generator assignment to a full map by closing under right
// multiplication, then rechecks every (element, generator) product.
bool extend_assignment(const FinGroup& g, const FinGroup& h,
                       const std::vector<ElemId>& gens,
                       const std::vector<ElemId>& images,
                       std::vector<ElemId>& out) {
  out.assign(g.order(), -1);
  out[0] = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (ElemId x = 0; x < g.order(); ++x) {
      if (out[x] < 0) continue;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        ElemId y = g.mul(x, gens[i]);
        ElemId v = h.mul(out[x], images[i]);
        if (out[y] < 0) {
          out[y] = v;
          grew = true;
        } else if (out[y] != v) {
          return false;
        }
      }
    }
  }
  for (ElemId x = 0; x < g.order(); ++x)
    if (out[x] < 0) return false;  // generators failed to reach x
  return true;
}

}  // namespace

std::vector<GroupHom> hom_set(const GrpPtr& source, const GrpPtr& target,
                              const SearchBudget& budget) {
  BudgetMeter meter(budget);
  std::vector<ElemId> gens = source->generating_set();
  std::vector<GroupHom> result;
  if (gens.empty()) {
    result.push_back(trivial_hom(source, target));
    return result;
  }
  std::vector<ElemId> images(gens.size(), 0);
  std::vector<ElemId> map;
  while (true) {
    meter.charge();
    // prune: image order must divide generator order
    bool plausible = true;
    for (std::size_t i = 0; i < gens.size() && plausible; ++i) {
      ElemId acc = 0;
      ElemId p = gens[i];
      ElemId q = images[i];
      // walk powers of the generator; its image must hit 0 in lockstep
      ElemId accq = 0;
      do {
        acc = source->mul(acc, p);
        accq = target->mul(accq, q);
      } while (acc != 0);
      if (accq != 0) plausible = false;
    }
    if (plausible && extend_assignment(*source, *target, gens, images, map)) {
      GroupHom h{source, target, map};
      if (h.is_homomorphism()) result.push_back(std::move(h));
    }
    // odometer over generator images
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == target->order()) {
      images[i] = 0;
      ++i;
    }
    if (i == images.size()) break;
  }
  std::sort(result.begin(), result.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
  return result;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (std::int32_t x : w) {
    if (x == 0) throw InputError("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    int idx = std::abs(w[i]) - 1;
    s += idx < static_cast<int>(names.size()) ? names[idx]
                                              : "g" + std::to_string(idx);
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

GroupPresentation GroupPresentation::make(std::vector<std::string> generators,
                                          std::vector<Word> relators) {
  GroupPresentation p;
  p.generators = std::move(generators);
  for (auto& r : relators) {
    Word reduced = free_reduce(std::move(r));
    for (std::int32_t x : reduced)
      if (std::abs(x) > static_cast<int>(p.generators.size()))
        throw InputError("relator references unknown generator");
    if (!reduced.empty()) p.relators.push_back(std::move(reduced));
  }
  return p;
}

std::string GroupPresentation::to_text() const {
  std::string s = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i];
  }
  s += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) s += ", ";
    s += word_to_string(relators[i], generators);
  }
  s += " >";
  return s;
}

ElemId eval_word(const Word& w, const std::vector<ElemId>& assignment,
                 const FinGroup& k) {
  ElemId acc = 0;
  for (std::int32_t x : w) {
    int idx = std::abs(x) - 1;
    if (idx >= static_cast<int>(assignment.size()))
      throw InputError("word references unbound generator " + std::to_string(idx));
    ElemId v = assignment[idx];
    if (x < 0) v = k.inv(v);
    acc = k.mul(acc, v);
  }
  return acc;
}

namespace {

bool assignment_satisfies(const GroupPresentation& p, const FinGroup& k,
                          const std::vector<ElemId>& assignment) {
  for (const Word& r : p.relators)
    if (eval_word(r, assignment, k) != 0) return false;
  return true;
}

std::vector<ElemId> nth_assignment(std::uint64_t n, int n_gens, int order) {
  std::vector<ElemId> a(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    a[i] = static_cast<ElemId>(n % order);
    n /= order;
  }
  return a;
}

}  // namespace

std::uint64_t count_homs(const GroupPresentation& p, const FinGroup& k,
                         const SearchBudget& budget, int workers) {
  int n_gens = static_cast<int>(p.generators.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n_gens; ++i) {
    total *= static_cast<std::uint64_t>(k.order());
    if (total > budget.limit) throw BudgetError(total, budget.limit);
  }
  if (workers < 1) workers = 1;
  if (n_gens == 0) return assignment_satisfies(p, k, {}) ? 1 : 0;

  // Fixed index blocks, combined in block order: the result cannot depend
  // on the scheduling of the workers.
  std::uint64_t n_blocks = std::min<std::uint64_t>(total, 64);
  std::vector<std::uint64_t> block_count(n_blocks, 0);
  std::atomic<std::uint64_t> next_block{0};
  auto work = [&]() {
    while (true) {
      std::uint64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      std::uint64_t lo = total * b / n_blocks;
      std::uint64_t hi = total * (b + 1) / n_blocks;
      std::uint64_t cnt = 0;
      for (std::uint64_t n = lo; n < hi; ++n)
        if (assignment_satisfies(p, k, nth_assignment(n, n_gens, k.order())))
          ++cnt;
      block_count[b] = cnt;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::uint64_t sum = 0;
  for (std::uint64_t c : block_count) sum += c;
  return sum;
}

std::vector<std::vector<ElemId>> list_homs(const GroupPresentation& p,
                                           const FinGroup& k,
                                           const SearchBudget& budget) {
  int n_gens = static_cast<int>(p.generators.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n_gens; ++i) {
    total *= static_cast<std::uint64_t>(k.order());
    if (total > budget.limit) throw BudgetError(total, budget.limit);
  }
  std::vector<std::vector<ElemId>> out;
  for (std::uint64_t n = 0; n < total; ++n) {
    auto a = nth_assignment(n, n_gens, k.order());
    if (assignment_satisfies(p, k, a)) out.push_back(std::move(a));
  }
  return out;
}

GroupPresentation table_presentation(const FinGroup& g) {
  std::vector<std::string> names;
  for (ElemId a = 0; a < g.order(); ++a) names.push_back("e" + std::to_string(a));
  std::vector<Word> relators;
  relators.push_back({1});  // e0 is the identity
  for (ElemId a = 0; a < g.order(); ++a)
    for (ElemId b = 0; b < g.order(); ++b) {
      // e_a e_b e_{ab}^-1
      relators.push_back({static_cast<std::int32_t>(a + 1),
                          static_cast<std::int32_t>(b + 1),
                          static_cast<std::int32_t>(-(g.mul(a, b) + 1))});
    }
  return GroupPresentation::make(std::move(names), std::move(relators));
}

// --- stock groups -----------------------------------------------------------

GrpPtr trivial_group() { return cyclic_group(1); }

GrpPtr cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be >= 1");
  std::vector<ElemId> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return std::make_shared<FinGroup>(n, std::move(mul));
}

GrpPtr symmetric3() {
  // one-line permutations of {0,1,2} in lexicographic order; 0 = identity
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<ElemId> mul(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];  // a after b
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      mul[a * 6 + b] = find(c);
    }
  return std::make_shared<FinGroup>(6, std::move(mul));
}

GrpPtr dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral parameter must be >= 1");
  // elements 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s
  int m = 2 * n;
  auto id_of = [&](int rot, bool refl) { return (refl ? n : 0) + ((rot % n + n) % n); };
  std::vector<ElemId> mul(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ia = a % n;
      bool ra = a >= n;
      int ib = b % n;
      bool rb = b >= n;
      // (r^ia s^ra)(r^ib s^rb) = r^(ia + ib * (ra ? -1 : 1)) s^(ra^rb)
      int rot = ia + (ra ? -ib : ib);
      mul[a * m + b] = id_of(rot, ra != rb);
    }
  return std::make_shared<FinGroup>(m, std::move(mul));
}

GrpPtr klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

GrpPtr direct_product(const GrpPtr& a, const GrpPtr& b) {
  int na = a->order(), nb = b->order(), n = na * nb;
  std::vector<ElemId> mul(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      mul[x * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
  return std::make_shared<FinGroup>(n, std::move(mul));
}

GrpPtr stock_group(const std::string& name) {
  if (name == "Z1" || name == "1") return trivial_group();
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z5") return cyclic_group(5);
  if (name == "Z6") return cyclic_group(6);
  if (name == "V4" || name == "Z2xZ2") return klein_four();
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral_group(4);
  return nullptr;
}

std::vector<std::pair<std::string, GrpPtr>> default_panel() {
  return {{"Z2", cyclic_group(2)},   {"Z3", cyclic_group(3)},
          {"Z4", cyclic_group(4)},   {"S3", symmetric3()},
          {"D4", dihedral_group(4)}, {"Z2xZ2", klein_four()}};
}

}  // namespace xmodcat
