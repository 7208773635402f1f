#pragma once

#include <optional>
#include <vector>

#include "xmodcat/xmod.hpp"

namespace xmodcat {

/// A 2-cell of the induced 2-category: a source 1-cell f : A -> B plus an
/// element of G(B). The target is derived, gamma(elem) ∘ f, and is never
/// stored independently.
struct TwoCell {
  MorId src;
  ElemId elem;

  bool operator==(const TwoCell&) const = default;
  bool operator<(const TwoCell& o) const {
    return src != o.src ? src < o.src : elem < o.elem;
  }
};

MorId two_cell_target(const CrossedModule& xm, const TwoCell& cell);
TwoCell identity_two_cell(const CrossedModule& xm, MorId f);

/// All 2-cells f -> g: the elements alpha of G(cod f) with gamma(alpha)∘f = g.
std::vector<TwoCell> two_cells(const CrossedModule& xm, MorId f, MorId g);

/// Vertical composite: multiplication of the elements.
TwoCell vcompose(const CrossedModule& xm, const TwoCell& after,
                 const TwoCell& first);

/// Horizontal composite of beta : f2 -> g2 with alpha : f1 -> g1,
/// carried by the element beta · G(f2)(alpha).
TwoCell hcompose(const CrossedModule& xm, const TwoCell& beta,
                 const TwoCell& alpha);

TwoCell whisker_left(const CrossedModule& xm, MorId h, const TwoCell& alpha);
TwoCell whisker_right(const CrossedModule& xm, const TwoCell& alpha, MorId h);

TwoCell vertical_inverse(const CrossedModule& xm, const TwoCell& alpha);

/// The hom-groupoid C_G(A, B): objects are the morphisms A -> B, arrows are
/// the 2-cells between them, composition is multiplication in G(B).
struct HomGroupoid {
  ObjId source;
  ObjId target;
  std::vector<MorId> objects;
  std::vector<TwoCell> arrows;
  std::vector<std::vector<int>> vcomp;  // arrow ids; -1 where not composable

  int arrow_index(const TwoCell& cell) const;
};

HomGroupoid hom_groupoid(const CrossedModule& xm, ObjId a, ObjId b);

// --- explicit finite 2-category data ------------------------------------------

/// A finite strict 2-category over an explicit base: all 2-cells with dense
/// ids, vertical and horizontal composition tables, and identity 2-cells.
struct TwoCategoryData {
  CatPtr base;
  struct Cell {
    MorId src;
    MorId tgt;
  };
  std::vector<Cell> cells;
  std::vector<int> identity2;            // per 1-cell
  std::vector<std::vector<int>> vcomp;   // -1 where undefined
  std::vector<std::vector<int>> hcomp;   // -1 where undefined

  int find_cell(MorId src, MorId tgt, int nth = 0) const;
};

/// Materializes C_G: cells are (source 1-cell, element) pairs in
/// lexicographic order.
TwoCategoryData build_two_category(const CrossedModule& xm);

/// Exhaustive strict-2-category laws on explicit data: vertical and
/// horizontal units and associativity, typing, and the interchange law.
ValidationReport validate_two_category_data(const TwoCategoryData& t);

/// Laws plus the crossed-module-specific checks: agreement of the two
/// horizontal composition formulas and consistency with the tables.
ValidationReport validate_two_category(const CrossedModule& xm);

/// Every 2-cell alpha : f -> g factors uniquely as a loop at the identity
/// whiskered by f.
ValidationReport check_contractible_loops(const TwoCategoryData& t);
ValidationReport check_contractible_loops(const CrossedModule& xm);

/// Every 2-cell has a vertical inverse.
ValidationReport check_locally_groupoidal(const TwoCategoryData& t);
ValidationReport check_locally_groupoidal(const CrossedModule& xm);

/// Rebuilds a crossed module from 2-category data: G(A) is the loops at
/// id_A under the induced group law, gamma is the target 1-cell, and G(f)
/// comes from the unique contractible-loop decomposition of the whisker.
/// element_cells records which data cell realizes each extracted element.
struct ExtractedModule {
  CrossedModule xm;
  std::vector<std::vector<int>> element_cells;  // per object, per element
};

ExtractedModule extract_crossed_module(const TwoCategoryData& t);

/// Component-wise comparison of a crossed module with the one extracted
/// from its own induced 2-category, under the canonical relabeling.
bool round_trips(const CrossedModule& xm);

/// With an initial object 0, every hom-groupoid C_G(0, A) must have one
/// object and exactly |G(A)| arrows composing as G(A) does.
ValidationReport initial_hom_check(const CrossedModule& xm);

}  // namespace xmodcat
