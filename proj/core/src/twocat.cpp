#include "xmodcat/twocat.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace xmodcat {

namespace {

std::string cell_str(const TwoCell& c) {
  return "(src=" + std::to_string(c.src) + ", elem=" + std::to_string(c.elem) + ")";
}

}  // namespace

MorId two_cell_target(const CrossedModule& xm, const TwoCell& cell) {
  const FinCategory& c = *xm.base;
  return c.compose(xm.gamma_mor(c.cod(cell.src), cell.elem), cell.src);
}

TwoCell identity_two_cell(const CrossedModule& xm, MorId f) {
  (void)xm;
  return {f, 0};
}

std::vector<TwoCell> two_cells(const CrossedModule& xm, MorId f, MorId g) {
  const FinCategory& c = *xm.base;
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
    throw InputError("two_cells: morphisms are not parallel");
  std::vector<TwoCell> out;
  for (ElemId alpha = 0; alpha < xm.group(c.cod(f)).order(); ++alpha)
    if (two_cell_target(xm, {f, alpha}) == g) out.push_back({f, alpha});
  return out;
}

TwoCell vcompose(const CrossedModule& xm, const TwoCell& after,
                 const TwoCell& first) {
  const FinCategory& c = *xm.base;
  if (two_cell_target(xm, first) != after.src)
    throw InputError("vcompose: target of first != source of second");
  ObjId b = c.cod(first.src);
  return {first.src, xm.group(b).mul(after.elem, first.elem)};
}

TwoCell hcompose(const CrossedModule& xm, const TwoCell& beta,
                 const TwoCell& alpha) {
  const FinCategory& c = *xm.base;
  if (c.dom(beta.src) != c.cod(alpha.src))
    throw InputError("hcompose: 1-cells are not composable");
  ObjId tgt = c.cod(beta.src);
  ElemId carried = xm.group(tgt).mul(beta.elem, xm.act(beta.src, alpha.elem));
  return {c.compose(beta.src, alpha.src), carried};
}

TwoCell whisker_left(const CrossedModule& xm, MorId h, const TwoCell& alpha) {
  return hcompose(xm, identity_two_cell(xm, h), alpha);
}

TwoCell whisker_right(const CrossedModule& xm, const TwoCell& alpha, MorId h) {
  return hcompose(xm, alpha, identity_two_cell(xm, h));
}

TwoCell vertical_inverse(const CrossedModule& xm, const TwoCell& alpha) {
  const FinCategory& c = *xm.base;
  ObjId b = c.cod(alpha.src);
  return {two_cell_target(xm, alpha), xm.group(b).inv(alpha.elem)};
}

int HomGroupoid::arrow_index(const TwoCell& cell) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i] == cell) return static_cast<int>(i);
  return -1;
}

HomGroupoid hom_groupoid(const CrossedModule& xm, ObjId a, ObjId b) {
  HomGroupoid h;
  h.source = a;
  h.target = b;
  h.objects = xm.base->hom(a, b);
  for (MorId f : h.objects)
    for (ElemId alpha = 0; alpha < xm.group(b).order(); ++alpha)
      h.arrows.push_back({f, alpha});
  int n = static_cast<int>(h.arrows.size());
  h.vcomp.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (two_cell_target(xm, h.arrows[j]) == h.arrows[i].src)
        h.vcomp[i][j] = h.arrow_index(vcompose(xm, h.arrows[i], h.arrows[j]));
  return h;
}

int TwoCategoryData::find_cell(MorId src, MorId tgt, int nth) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].src == src && cells[i].tgt == tgt && nth-- == 0)
      return static_cast<int>(i);
  return -1;
}

TwoCategoryData build_two_category(const CrossedModule& xm) {
  const FinCategory& c = *xm.base;
  TwoCategoryData t;
  t.base = xm.base;
  std::map<TwoCell, int> index;
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (ElemId alpha = 0; alpha < xm.group(c.cod(f)).order(); ++alpha) {
      index[{f, alpha}] = static_cast<int>(t.cells.size());
      t.cells.push_back({f, two_cell_target(xm, {f, alpha})});
    }
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    t.identity2.push_back(index.at({f, 0}));
  int n = static_cast<int>(t.cells.size());
  auto cell_at = [&](int i) {
    // recover (src, elem) from the insertion order
    int seen = 0;
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      int count = xm.group(c.cod(f)).order();
      if (i < seen + count) return TwoCell{f, i - seen};
      seen += count;
    }
    throw std::logic_error("cell id out of range");
  };
  t.vcomp.assign(n, std::vector<int>(n, -1));
  t.hcomp.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TwoCell b = cell_at(i), a = cell_at(j);
      if (two_cell_target(xm, a) == b.src)
        t.vcomp[i][j] = index.at(vcompose(xm, b, a));
      if (c.dom(b.src) == c.cod(a.src))
        t.hcomp[i][j] = index.at(hcompose(xm, b, a));
    }
  return t;
}

ValidationReport validate_two_category_data(const TwoCategoryData& t) {
  ValidationReport report;
  const FinCategory& c = *t.base;
  int n = static_cast<int>(t.cells.size());
  auto src_of = [&](int i) { return t.cells[i].src; };
  auto tgt_of = [&](int i) { return t.cells[i].tgt; };

  // typing of the tables
  for (int i = 0; i < n; ++i) {
    MorId f = src_of(i), g = tgt_of(i);
    if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
      report.add("2-cell typing", "cell " + std::to_string(i));
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    int e = t.identity2[f];
    if (src_of(e) != f || tgt_of(e) != f)
      report.add("identity 2-cell typing", "1-cell " + std::to_string(f));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = t.vcomp[i][j];
      bool v_ok = tgt_of(j) == src_of(i);
      if (v_ok != (v >= 0))
        report.add("vertical totality",
                   "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (v >= 0 && (src_of(v) != src_of(j) || tgt_of(v) != tgt_of(i)))
        report.add("vertical typing",
                   "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      int h = t.hcomp[i][j];
      bool h_ok = c.dom(src_of(i)) == c.cod(src_of(j));
      if (h_ok != (h >= 0))
        report.add("horizontal totality",
                   "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (h >= 0 && (src_of(h) != c.raw_compose(src_of(i), src_of(j)) ||
                     tgt_of(h) != c.raw_compose(tgt_of(i), tgt_of(j))))
        report.add("horizontal typing",
                   "(" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  if (!report.violations.empty()) return report;

  // vertical category laws within each hom
  for (int i = 0; i < n; ++i) {
    if (t.vcomp[i][t.identity2[src_of(i)]] != i)
      report.add("vertical right unit", "cell " + std::to_string(i));
    if (t.vcomp[t.identity2[tgt_of(i)]][i] != i)
      report.add("vertical left unit", "cell " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.vcomp[i][j] < 0) continue;
      for (int k = 0; k < n; ++k) {
        if (t.vcomp[j][k] < 0) continue;
        if (t.vcomp[i][t.vcomp[j][k]] != t.vcomp[t.vcomp[i][j]][k])
          report.add("vertical associativity",
                     "(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                         std::to_string(k) + ")");
      }
    }

  // horizontal units and associativity
  for (int i = 0; i < n; ++i) {
    ObjId a = c.dom(src_of(i)), b = c.cod(src_of(i));
    if (t.hcomp[i][t.identity2[c.identity(a)]] != i)
      report.add("horizontal right unit", "cell " + std::to_string(i));
    if (t.hcomp[t.identity2[c.identity(b)]][i] != i)
      report.add("horizontal left unit", "cell " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.hcomp[i][j] < 0) continue;
      for (int k = 0; k < n; ++k) {
        if (t.hcomp[j][k] < 0) continue;
        if (t.hcomp[i][t.hcomp[j][k]] != t.hcomp[t.hcomp[i][j]][k])
          report.add("horizontal associativity",
                     "(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                         std::to_string(k) + ")");
      }
    }

  // interchange: (b' ∘v b) ∘h (a' ∘v a) = (b' ∘h a') ∘v (b ∘h a)
  for (int b2 = 0; b2 < n; ++b2)
    for (int b1 = 0; b1 < n; ++b1) {
      if (t.vcomp[b2][b1] < 0) continue;
      for (int a2 = 0; a2 < n; ++a2) {
        if (c.dom(src_of(b1)) != c.cod(src_of(a2))) continue;
        for (int a1 = 0; a1 < n; ++a1) {
          if (t.vcomp[a2][a1] < 0) continue;
          int lhs = t.hcomp[t.vcomp[b2][b1]][t.vcomp[a2][a1]];
          int h1 = t.hcomp[b1][a1];
          int h2 = t.hcomp[b2][a2];
          if (lhs < 0 || h1 < 0 || h2 < 0 || t.vcomp[h2][h1] != lhs)
            report.add("interchange",
                       "(" + std::to_string(b2) + ", " + std::to_string(b1) +
                           ", " + std::to_string(a2) + ", " + std::to_string(a1) +
                           ")");
        }
      }
    }
  return report;
}

ValidationReport validate_two_category(const CrossedModule& xm) {
  const FinCategory& c = *xm.base;
  TwoCategoryData data = build_two_category(xm);
  ValidationReport report = validate_two_category_data(data);

  // the two horizontal formulas agree: beta·G(f2)(alpha) = (G(g2)alpha)·beta
  for (MorId f2 = 0; f2 < c.num_morphisms(); ++f2)
    for (MorId f1 = 0; f1 < c.num_morphisms(); ++f1) {
      if (!c.composable(f2, f1)) continue;
      ObjId mid = c.cod(f1), top = c.cod(f2);
      for (ElemId beta = 0; beta < xm.group(top).order(); ++beta)
        for (ElemId alpha = 0; alpha < xm.group(mid).order(); ++alpha) {
          MorId g2 = two_cell_target(xm, {f2, beta});
          ElemId left = xm.group(top).mul(beta, xm.act(f2, alpha));
          ElemId right = xm.group(top).mul(xm.act(g2, alpha), beta);
          if (left != right)
            report.add("horizontal formulas disagree",
                       "(f2=" + std::to_string(f2) + ", f1=" + std::to_string(f1) +
                           ", beta=" + std::to_string(beta) + ", alpha=" +
                           std::to_string(alpha) + ")");
        }
    }
  return report;
}

ValidationReport check_contractible_loops(const TwoCategoryData& t) {
  ValidationReport report;
  const FinCategory& c = *t.base;
  int n = static_cast<int>(t.cells.size());
  for (int i = 0; i < n; ++i) {
    MorId f = t.cells[i].src;
    ObjId b = c.cod(f);
    int id_f = t.identity2[f];
    int count = 0;
    for (int loop = 0; loop < n; ++loop) {
      if (t.cells[loop].src != c.identity(b)) continue;
      if (t.hcomp[loop][id_f] == i) ++count;
    }
    if (count != 1)
      report.add("contractible loop factorization",
                 "cell " + std::to_string(i) + " has " + std::to_string(count) +
                     " decompositions");
  }
  return report;
}

ValidationReport check_contractible_loops(const CrossedModule& xm) {
  return check_contractible_loops(build_two_category(xm));
}

ValidationReport check_locally_groupoidal(const TwoCategoryData& t) {
  ValidationReport report;
  int n = static_cast<int>(t.cells.size());
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n && !found; ++j)
      found = t.vcomp[j][i] == t.identity2[t.cells[i].src] &&
              t.vcomp[i][j] == t.identity2[t.cells[i].tgt];
    if (!found)
      report.add("vertical inverse", "cell " + std::to_string(i));
  }
  return report;
}

ValidationReport check_locally_groupoidal(const CrossedModule& xm) {
  return check_locally_groupoidal(build_two_category(xm));
}

ExtractedModule extract_crossed_module(const TwoCategoryData& t) {
  {
    ValidationReport pre = check_contractible_loops(t);
    ValidationReport pre2 = check_locally_groupoidal(t);
    if (!pre.ok() || !pre2.ok())
      throw InputError("2-category data is not right-generated by contractible "
                       "loops / locally groupoidal");
  }
  const FinCategory& c = *t.base;
  ExtractedModule out;
  out.xm.base = t.base;
  out.element_cells.resize(c.num_objects());

  // loops at id_A, with the identity 2-cell first
  std::vector<std::vector<int>> loops(c.num_objects());
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    loops[a].push_back(t.identity2[c.identity(a)]);
    for (int i = 0; i < static_cast<int>(t.cells.size()); ++i)
      if (t.cells[i].src == c.identity(a) && i != loops[a][0])
        loops[a].push_back(i);
  }

  // group law on loops: b * a = vcomp(hcomp(b, id2(tgt a)), a)
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    int n = static_cast<int>(loops[a].size());
    std::map<int, ElemId> elem_of;
    for (int i = 0; i < n; ++i) elem_of[loops[a][i]] = i;
    std::vector<ElemId> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int whiskered = t.hcomp[loops[a][i]][t.identity2[t.cells[loops[a][j]].tgt]];
        int prod = whiskered < 0 ? -1 : t.vcomp[whiskered][loops[a][j]];
        if (prod < 0 || !elem_of.count(prod))
          throw InputError("loop composite escapes the loops at the identity");
        mul[static_cast<std::size_t>(i) * n + j] = elem_of.at(prod);
      }
    out.xm.groups.push_back(std::make_shared<FinGroup>(n, std::move(mul)));
    std::vector<MorId> g;
    for (int i = 0; i < n; ++i) g.push_back(t.cells[loops[a][i]].tgt);
    out.xm.gamma.push_back(std::move(g));
    out.element_cells[a] = loops[a];
  }

  // G(f): the unique loop at id_B whose right whisker by f equals id_f ∘h loop
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.dom(f), b = c.cod(f);
    std::vector<ElemId> map;
    for (int la : loops[a]) {
      int pushed = t.hcomp[t.identity2[f]][la];
      ElemId image = -1;
      for (std::size_t e = 0; e < loops[b].size(); ++e)
        if (t.hcomp[loops[b][e]][t.identity2[f]] == pushed) {
          image = static_cast<ElemId>(e);
          break;
        }
      if (image < 0)
        throw InputError("whiskered loop has no contractible decomposition");
      map.push_back(image);
    }
    out.xm.on_morphisms.push_back(
        {out.xm.groups[a], out.xm.groups[b], std::move(map)});
  }
  return out;
}

bool round_trips(const CrossedModule& xm) {
  const FinCategory& c = *xm.base;
  ExtractedModule ex = extract_crossed_module(build_two_category(xm));

  // the canonical relabeling sends alpha to the cell (id_A, alpha)
  std::vector<std::vector<ElemId>> to_ex(c.num_objects());
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    const FinGroup& ga = xm.group(a);
    to_ex[a].assign(ga.order(), -1);
    for (ElemId alpha = 0; alpha < ga.order(); ++alpha) {
      // locate the data cell for (id_A, alpha), then its extracted index
      int nth = alpha;  // cells at a fixed src are in element order
      int cell = -1;
      int seen = 0;
      for (MorId f = 0; f < c.num_morphisms(); ++f) {
        int count = xm.group(c.cod(f)).order();
        if (f == c.identity(a)) cell = seen + nth;
        seen += count;
      }
      for (std::size_t e = 0; e < ex.element_cells[a].size(); ++e)
        if (ex.element_cells[a][e] == cell) to_ex[a][alpha] = static_cast<ElemId>(e);
      if (to_ex[a][alpha] < 0) return false;
    }
    if (ex.xm.group(a).order() != ga.order()) return false;
    for (ElemId x = 0; x < ga.order(); ++x) {
      if (ex.xm.gamma_mor(a, to_ex[a][x]) != xm.gamma_mor(a, x)) return false;
      for (ElemId y = 0; y < ga.order(); ++y)
        if (ex.xm.group(a).mul(to_ex[a][x], to_ex[a][y]) != to_ex[a][ga.mul(x, y)])
          return false;
    }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    ObjId a = c.dom(f), b = c.cod(f);
    for (ElemId alpha = 0; alpha < xm.group(a).order(); ++alpha)
      if (ex.xm.act(f, to_ex[a][alpha]) != to_ex[b][xm.act(f, alpha)]) return false;
  }
  return true;
}

ValidationReport initial_hom_check(const CrossedModule& xm) {
  ValidationReport report;
  const FinCategory& c = *xm.base;
  std::optional<ObjId> zero = initial_object(c);
  if (!zero) {
    report.applicable = false;
    report.not_applicable_reason = "base category has no initial object";
    return report;
  }
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    HomGroupoid h = hom_groupoid(xm, *zero, a);
    if (h.objects.size() != 1) {
      report.add("single object",
                 "hom(" + std::to_string(*zero) + ", " + std::to_string(a) +
                     ") has " + std::to_string(h.objects.size()) + " 1-cells");
      continue;
    }
    const FinGroup& ga = xm.group(a);
    if (static_cast<int>(h.arrows.size()) != ga.order()) {
      report.add("arrow count",
                 "object " + std::to_string(a) + ": " +
                     std::to_string(h.arrows.size()) + " arrows vs group order " +
                     std::to_string(ga.order()));
      continue;
    }
    // arrows are (u, alpha) in element order; composition must match G(A)
    for (ElemId x = 0; x < ga.order(); ++x)
      for (ElemId y = 0; y < ga.order(); ++y)
        if (h.vcomp[x][y] != ga.mul(x, y))
          report.add("composition table",
                     "object " + std::to_string(a) + " at " + cell_str(h.arrows[x]) +
                         " ∘ " + cell_str(h.arrows[y]));
  }
  return report;
}

}  // namespace xmodcat
