#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xmodcat/fixtures.hpp"
#include "xmodcat/xfun.hpp"

using namespace xmodcat;

namespace {

XModMorphism identity_morphism(const XmPtr& xm) {
  XModMorphism m;
  m.source = xm;
  m.target = xm;
  m.functor = identity_functor(xm->base);
  for (ObjId a = 0; a < xm->base->num_objects(); ++a) {
    auto g = xm->groups[a];
    m.sigma.push_back(identity_hom(g));
  }
  return m;
}

}  // namespace

TEST_CASE("identity morphisms validate on every fixture") {
  for (const auto& f : named_fixtures()) {
    CAPTURE(f.name);
    auto xm = std::make_shared<const CrossedModule>(f.xm);
    CHECK(validate_xmod_morphism(identity_morphism(xm)).ok());
  }
}

TEST_CASE("a group hom between deloopings induces a module morphism") {
  auto src = std::make_shared<const CrossedModule>(fixture("bs3_conj").xm);
  auto tgt = std::make_shared<const CrossedModule>(fixture("bz2_conj").xm);
  // the sign map S3 -> Z2 sends the transposition ids to 1
  auto s3 = src->groups[0];
  auto z2 = tgt->groups[0];
  std::vector<ElemId> sign = {0, 1, 1, 0, 0, 1};
  GroupHom hom{s3, z2, sign};
  REQUIRE(hom.is_homomorphism());

  XModMorphism m;
  m.source = src;
  m.target = tgt;
  m.functor.source = src->base;
  m.functor.target = tgt->base;
  m.functor.obj_map = {0};
  m.functor.mor_map = sign;  // morphisms of BG are the elements
  m.sigma = {hom};
  CHECK(validate_xmod_morphism(m).ok());
  CHECK(check_functoriality(m).ok());
}

TEST_CASE("a trivialized sigma breaks the action square on BS3") {
  auto src = std::make_shared<const CrossedModule>(fixture("bs3_conj").xm);
  XModMorphism m = identity_morphism(src);
  m.sigma[0] = trivial_hom(src->groups[0], src->groups[0]);
  ValidationReport r = validate_xmod_morphism(m);
  CHECK_FALSE(r.ok());
  bool square = false;
  for (const auto& v : r.violations) square |= v.rule == "action square";
  CHECK(square);
}

TEST_CASE("xmod 2-cells: tau must intertwine the sigmas") {
  auto xm = std::make_shared<const CrossedModule>(fixture("bs3_conj").xm);
  XModMorphism id = identity_morphism(xm);

  // conjugating by a fixed element gives a parallel morphism, and the
  // element itself is the connecting 2-cell
  ElemId a = 3;  // a three-cycle
  auto s3 = xm->groups[0];
  GroupHom conj = conjugation_hom(s3, a);
  XModMorphism inner;
  inner.source = xm;
  inner.target = xm;
  inner.functor.source = xm->base;
  inner.functor.target = xm->base;
  inner.functor.obj_map = {0};
  inner.functor.mor_map = conj.map;
  inner.sigma = {conj};
  REQUIRE(validate_xmod_morphism(inner).ok());

  XMod2Cell cell{&id, &inner, {id.functor, inner.functor, {a}}};
  CHECK(validate_xmod_2cell(cell).ok());

  // the wrong component fails the theta identity
  XMod2Cell bad{&id, &inner, {id.functor, inner.functor, {s3->mul(a, a)}}};
  CHECK_FALSE(validate_xmod_2cell(bad).ok());
}

TEST_CASE("canonical 2-functor to groups validates on the named fixtures") {
  struct Case {
    const char* fixture_name;
    std::vector<GrpPtr> targets;
  };
  std::vector<Case> cases = {
      {"bz2_conj", {cyclic_group(2)}},
      {"bs3_conj", {symmetric3()}},
      {"grp3_conj", {trivial_group(), cyclic_group(2), symmetric3()}},
      {"ab3_neg", {cyclic_group(2)}},
      {"poset01_z2", {cyclic_group(2)}},
      {"poset01_trivial", {trivial_group()}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.fixture_name);
    CanonicalToGroups canon =
        canonical_2functor_to_groups(fixture(c.fixture_name).xm, c.targets);
    CHECK(validate_xmod_morphism(canon.morphism).ok());
    CHECK(check_functoriality(canon.morphism).ok());
    for (const GroupHom& s : canon.morphism.sigma) CHECK(s.is_bijective());
  }
}

TEST_CASE("canonical 2-functor rejects a target missing the value groups") {
  CHECK_THROWS_AS(
      canonical_2functor_to_groups(fixture("bs3_conj").xm, {cyclic_group(2)}),
      InputError);
}

TEST_CASE("the negation fixture shows non-fullness on 2-cells: 1 vs 2") {
  CrossedModule neg = fixture("ab3_neg").xm;
  CanonicalToGroups canon = canonical_2functor_to_groups(neg, {cyclic_group(2)});
  REQUIRE(validate_xmod_morphism(canon.morphism).ok());

  // upstairs: the identity on Z3 and its negation are connected by exactly
  // one 2-cell; downstairs both map to id_Z2, which carries two 2-cells
  const FinCategory& c = *neg.base;
  ObjId z3 = 2;
  MorId id_z3 = c.identity(z3);
  MorId negation = neg.gamma_mor(z3, 1);
  TwoCellCountComparison cmp =
      compare_two_cell_counts(canon.morphism, id_z3, negation);
  CHECK(cmp.upstairs == 1);
  CHECK(cmp.downstairs == 2);
}

TEST_CASE("images of 2-cells compose functorially on random modules") {
  for (std::uint64_t seed = 300; seed < 306; ++seed) {
    CAPTURE(seed);
    CrossedModule xm = random_crossed_module(seed);
    std::vector<GrpPtr> targets;
    for (const GrpPtr& g : xm.groups) {
      bool seen = false;
      for (const GrpPtr& t : targets) seen |= t->same_table(*g);
      if (!seen) targets.push_back(g);
    }
    CanonicalToGroups canon = canonical_2functor_to_groups(xm, targets);
    CHECK(validate_xmod_morphism(canon.morphism).ok());
    CHECK(check_functoriality(canon.morphism).ok());
  }
}

TEST_CASE("projection to the trivial module collapses all 2-cells") {
  auto src = std::make_shared<const CrossedModule>(fixture("poset01_z2").xm);
  auto dst = std::make_shared<const CrossedModule>(
      trivial_module(src->base));
  XModMorphism proj;
  proj.source = src;
  proj.target = dst;
  proj.functor = identity_functor(src->base);
  for (ObjId a = 0; a < src->base->num_objects(); ++a)
    proj.sigma.push_back(trivial_hom(src->groups[a], dst->groups[a]));
  CHECK(validate_xmod_morphism(proj).ok());
  CHECK(check_functoriality(proj).ok());
  for (MorId f = 0; f < src->base->num_morphisms(); ++f)
    for (ElemId alpha = 0; alpha < src->group(src->base->cod(f)).order(); ++alpha)
      CHECK(apply_on_two_cell(proj, {f, alpha}).elem == 0);
}
