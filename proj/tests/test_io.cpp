#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xmodcat/fixtures.hpp"
#include "xmodcat/io.hpp"

using namespace xmodcat;

TEST_CASE("categories round-trip through JSON") {
  for (const auto& f : named_fixtures()) {
    CAPTURE(f.name);
    json doc = category_to_json(*f.xm.base);
    CatPtr back = category_from_json(doc);
    CHECK(back->num_objects() == f.xm.base->num_objects());
    CHECK(back->num_morphisms() == f.xm.base->num_morphisms());
    CHECK(category_to_json(*back) == doc);
  }
}

TEST_CASE("groups round-trip through JSON") {
  for (const char* name : {"Z1", "Z4", "V4", "S3", "D4"}) {
    GrpPtr g = stock_group(name);
    json doc = group_to_json(*g);
    GrpPtr back = group_from_json(doc);
    CHECK(back->same_table(*g));
  }
}

TEST_CASE("crossed modules round-trip through JSON") {
  for (const auto& f : named_fixtures()) {
    CAPTURE(f.name);
    json doc = xmod_to_json(f.xm);
    CrossedModule back = xmod_from_json(f.xm.base, doc);
    CHECK(xmod_to_json(back) == doc);
    CHECK(validate_crossed_module(back).ok());
  }
}

TEST_CASE("presentations round-trip through JSON") {
  GroupPresentation p = GroupPresentation::make(
      {"x", "y"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  json doc = presentation_to_json(p);
  GroupPresentation back = presentation_from_json(doc);
  CHECK(back.generators == p.generators);
  CHECK(back.relators == p.relators);
}

TEST_CASE("whole instances round-trip") {
  Instance instance;
  CrossedModule xm = fixture("grp3_conj").xm;
  instance.category = xm.base;
  instance.xmod = xm;
  instance.presentations.emplace(
      "B", GroupPresentation::make({"b"}, {{1, 1}}));
  instance.payload = {{"shape", "two_initial"}};
  json doc = serialize_instance(instance);
  Instance back = parse_instance(doc);
  CHECK(serialize_instance(back) == doc);
}

TEST_CASE("schema violations are reported as input errors") {
  CHECK_THROWS_AS(parse_instance(json::array()), InputError);
  CHECK_THROWS_AS(parse_instance({{"schema", "v2"}}), InputError);

  json bad_cat = {{"schema", "v1"},
                  {"category",
                   {{"objects", {0, 2}},
                    {"morphisms", json::array()},
                    {"identity", json::array()},
                    {"composition", json::array()}}}};
  CHECK_THROWS_AS(parse_instance(bad_cat), InputError);

  // a crossed module without its category
  json orphan = {{"schema", "v1"},
                 {"crossed_module", {{"groups", json::array()}}}};
  CHECK_THROWS_AS(parse_instance(orphan), InputError);
}

TEST_CASE("instances with invalid axioms are rejected at parse time") {
  // composition table with a hole
  json doc = {{"schema", "v1"},
              {"category",
               {{"objects", {0}},
                {"morphisms", {{0, 0, 0}, {1, 0, 0}}},
                {"identity", {0}},
                {"composition", {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}}}}};
  CHECK_THROWS_AS(parse_instance(doc), InputError);
}

TEST_CASE("maps must reference known presentations and match arities") {
  json doc = {{"schema", "v1"},
              {"presentations",
               {{"B", {{"generators", {"b"}}, {"relators", {{1, 1}}}}}}},
              {"maps",
               {{"f",
                 {{"source", "missing"}, {"target", "B"}, {"images", json::array()}}}}}};
  CHECK_THROWS_AS(parse_instance(doc), InputError);
}
