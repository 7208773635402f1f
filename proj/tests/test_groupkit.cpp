#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xmodcat/groupkit.hpp"

using namespace xmodcat;

TEST_CASE("stock group tables satisfy the group axioms") {
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "V4", "S3", "D4"}) {
    GrpPtr g = stock_group(name);
    REQUIRE(g);
    CAPTURE(name);
    CHECK(g->validate().ok());
  }
  CHECK(dihedral_group(4)->order() == 8);
  CHECK_FALSE(dihedral_group(4)->is_abelian());
  CHECK(klein_four()->is_abelian());
}

TEST_CASE("hom_set counts") {
  auto z2 = cyclic_group(2);
  auto z3 = cyclic_group(3);
  auto s3 = symmetric3();

  CHECK(hom_set(z2, z2).size() == 2);
  // e plus the three transpositions
  CHECK(hom_set(z2, s3).size() == 4);
  // S3 abelianizes to Z2, so only the trivial map reaches Z3
  CHECK(hom_set(s3, z3).size() == 1);
  CHECK(hom_set(s3, s3).size() == 10);
  CHECK(hom_set(s3, z2).size() == 2);
}

TEST_CASE("hom_set output satisfies the homomorphism invariant") {
  auto d4 = dihedral_group(4);
  auto s3 = symmetric3();
  auto homs = hom_set(d4, s3);
  for (const auto& h : homs) CHECK(h.is_homomorphism());
  // canonical order: sorted by element map
  for (std::size_t i = 1; i < homs.size(); ++i)
    CHECK(homs[i - 1].map < homs[i].map);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
  CHECK(free_reduce({1, -2, 2, -1}) == Word{});
  CHECK_THROWS_AS(free_reduce({0}), InputError);
}

TEST_CASE("free_reduce is idempotent and length-nonincreasing") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      std::int32_t letter = static_cast<std::int32_t>(rng() % 3) + 1;
      w.push_back(rng() % 2 ? letter : -letter);
    }
    Word once = free_reduce(w);
    CHECK(once.size() <= w.size());
    CHECK(free_reduce(once) == once);
  }
}

TEST_CASE("eval_word") {
  auto z2 = cyclic_group(2);
  auto s3 = symmetric3();
  CHECK(eval_word({}, {}, *z2) == 0);
  CHECK(eval_word({1, 1}, {1}, *z2) == 0);

  // conjugating one transposition by another gives the third
  ElemId t12 = 2;  // swaps the first two points
  ElemId t13 = 5;  // swaps the outer points
  ElemId conj = eval_word({1, 2, -1}, {t12, t13}, *s3);
  CHECK(conj != t12);
  CHECK(conj != t13);
  CHECK(s3->mul(conj, conj) == 0);  // still an involution
  CHECK_THROWS_AS(eval_word({3}, {0, 0}, *z2), InputError);
}

TEST_CASE("count_homs on presentations") {
  auto z2 = cyclic_group(2);
  auto s3 = symmetric3();

  GroupPresentation b2 = GroupPresentation::make({"b"}, {{1, 1}});
  CHECK(count_homs(b2, *z2) == 2);

  GroupPresentation b2t = GroupPresentation::make({"b", "t"}, {{1, 1}});
  CHECK(count_homs(b2t, *z2) == 4);

  GroupPresentation s3p = GroupPresentation::make(
      {"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  CHECK(count_homs(s3p, *s3) == 10);
  CHECK(list_homs(s3p, *s3).size() == 10);
}

TEST_CASE("count_homs is schedule-independent across worker counts") {
  auto d4 = dihedral_group(4);
  GroupPresentation s3p = GroupPresentation::make(
      {"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  std::uint64_t base = count_homs(s3p, *d4, {}, 1);
  for (int workers : {2, 3, 7})
    CHECK(count_homs(s3p, *d4, {}, workers) == base);
}

TEST_CASE("count_homs budget failure names the requirement") {
  auto d4 = dihedral_group(4);
  GroupPresentation wide =
      GroupPresentation::make({"a", "b", "c", "d"}, {});
  try {
    count_homs(wide, *d4, SearchBudget{100});
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required() > 100);
    CHECK(e.limit() == 100);
  }
}

TEST_CASE("table presentations count the same homs as hom_set") {
  std::vector<GrpPtr> small = {trivial_group(), cyclic_group(2), cyclic_group(3),
                               klein_four(), cyclic_group(4), symmetric3()};
  std::vector<GrpPtr> targets = {cyclic_group(2), cyclic_group(3),
                                 symmetric3(), dihedral_group(4)};
  for (const GrpPtr& q : small)
    for (const GrpPtr& k : targets) {
      if (q->order() > 6 || k->order() > 8) continue;
      GroupPresentation p = table_presentation(*q);
      SearchBudget big{2'000'000'000ULL};
      CAPTURE(q->order());
      CAPTURE(k->order());
      CHECK(count_homs(p, *k, big) == hom_set(q, k).size());
    }
}

TEST_CASE("presentation text rendering") {
  GroupPresentation p = GroupPresentation::make({"x", "y"}, {{1, 1}, {2, 2, 2}});
  CHECK(p.to_text() == "< x, y | x x, y y y >");
  GroupPresentation free2 = GroupPresentation::make({"a", "b"}, {});
  CHECK(free2.to_text() == "< a, b |  >");
}

TEST_CASE("empty relators are dropped, unknown generators rejected") {
  GroupPresentation p = GroupPresentation::make({"x"}, {{1, -1}, {1, 1}});
  CHECK(p.relators.size() == 1);
  CHECK_THROWS_AS(GroupPresentation::make({"x"}, {{2}}), InputError);
}
