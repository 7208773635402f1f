#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "xmodcat/fixtures.hpp"
#include "xmodcat/io.hpp"

using namespace xmodcat;

namespace {

std::string tmp_path(const std::string& name) {
  return std::string("cli_") + name;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(XMODCAT_CLI_PATH) + " " + args + " 2> /dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_instance(const std::string& path, const json& doc) {
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

json instance_for(const std::string& fixture_name, json payload = {}) {
  Instance instance;
  CrossedModule xm = fixture(fixture_name).xm;
  instance.category = xm.base;
  instance.xmod = std::move(xm);
  instance.payload = std::move(payload);
  return serialize_instance(instance);
}

}  // namespace

TEST_CASE("validate exits 0 on the BS3 conjugation instance") {
  std::string path = tmp_path("bs3.json");
  write_instance(path, instance_for("bs3_conj"));
  CHECK(run_cli("validate " + path + " --report " + tmp_path("bs3_report.json")) == 0);
  json report = read_json_file(tmp_path("bs3_report.json"));
  CHECK(report["results"]["summary"] == "crossed module valid");
}

TEST_CASE("validate exits 1 on a broken crossed module") {
  std::string path = tmp_path("broken.json");
  Instance instance;
  CrossedModule xm = mutate_gamma_constant_identity(fixture("bs3_conj").xm);
  instance.category = xm.base;
  instance.xmod = std::move(xm);
  write_instance(path, serialize_instance(instance));
  CHECK(run_cli("validate " + path) == 1);
}

TEST_CASE("schema errors exit 2") {
  std::string path = tmp_path("bad.json");
  std::ofstream(path) << "{\"schema\": \"v1\", \"category\": 7}\n";
  CHECK(run_cli("validate " + path) == 2);
  CHECK(run_cli("validate /nonexistent/nothing.json") == 2);
}

TEST_CASE("unknown panel groups exit 2") {
  std::string path = tmp_path("panel.json");
  std::ofstream(path) << R"({"schema":"v1","presentations":{"B":{"generators":["b"],"relators":[[1,1]]}},"maps":{"f":{"source":"B","target":"B","images":[[1]]}}})" << "\n";
  CHECK(run_cli("validate " + path + " --panel Q8") == 2);
}

TEST_CASE("budget failures exit 3") {
  std::string path = tmp_path("budget.json");
  write_instance(path, instance_for("bs3_conj"));
  CHECK(run_cli("isotropy " + path + " --budget 2") == 3);
}

TEST_CASE("search two_initial on a nontrivial instance exits 1 with a witness") {
  std::string path = tmp_path("grp3.json");
  write_instance(path, instance_for("grp3_conj", {{"shape", "two_initial"}}));
  std::string report_path = tmp_path("grp3_report.json");
  CHECK(run_cli("search " + path + " --report " + report_path) == 1);
  json report = read_json_file(report_path);
  CHECK(report["results"]["verdict"]["status"] == "not-exists");
  CHECK(report["results"]["verdict"]["witness"]["matching_cells"] == 2);
  CHECK(report["results"]["verdict"]["witness"]["matching_elements"].size() == 2);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  std::string path = tmp_path("det.json");
  write_instance(path, instance_for("grp3_conj"));
  std::string r1 = tmp_path("det1.json");
  std::string r2 = tmp_path("det2.json");
  std::string r4 = tmp_path("det4.json");
  CHECK(run_cli("isotropy " + path + " --report " + r1 + " --workers 1") == 0);
  CHECK(run_cli("isotropy " + path + " --report " + r2 + " --workers 1") == 0);
  CHECK(run_cli("isotropy " + path + " --report " + r4 + " --workers 4") == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(slurp(r1) == slurp(r4));
}

TEST_CASE("generated instances are reproducible byte-for-byte from the seed") {
  std::string a = tmp_path("gen_a.json");
  std::string b = tmp_path("gen_b.json");
  CHECK(run_cli("generate --kind random-xmod --seed 7 --out " + a) == 0);
  CHECK(run_cli("generate --kind random-xmod --seed 7 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  // generated instances pass validation
  CHECK(run_cli("validate " + a) == 0);

  std::string c = tmp_path("gen_c.json");
  CHECK(run_cli("generate --kind random-xmod --seed 8 --out " + c) == 0);
  CHECK(run_cli("validate " + c) == 0);
}

TEST_CASE("generate covers the documented fixture kinds") {
  std::string z2 = tmp_path("gen_z2.json");
  CHECK(run_cli("generate --kind delooping --group Z2 --out " + z2) == 0);
  json delooped = read_json_file(z2);
  CHECK(delooped["category"]["morphisms"].size() == 2);

  std::string poset = tmp_path("gen_poset.json");
  CHECK(run_cli("generate --kind poset --objects 2 --covers '0<1' --out " + poset) == 0);
  json chain = read_json_file(poset);
  CHECK(chain["category"]["objects"].size() == 2);
  CHECK(run_cli("validate " + poset) == 0);
}

TEST_CASE("the coinserter pipeline from the worked example") {
  std::string path = tmp_path("coins.json");
  json doc = {{"schema", "v1"},
              {"presentations",
               {{"H", {{"generators", json::array()}, {"relators", json::array()}}},
                {"B", {{"generators", {"b"}}, {"relators", {{1, 1}}}}}}},
              {"maps",
               {{"f", {{"source", "H"}, {"target", "B"}, {"images", json::array()}}},
                {"g", {{"source", "H"}, {"target", "B"}, {"images", json::array()}}}}},
              {"payload", {{"construction", "coinserter"}, {"f", "f"}, {"g", "g"}}}};
  write_instance(path, doc);
  std::string report_path = tmp_path("coins_report.json");
  CHECK(run_cli("verify-homcount " + path + " --panel Z2 --report " + report_path) == 0);
  json report = read_json_file(report_path);
  CHECK(report["results"]["all_equal"] == true);
  CHECK(report["results"]["panel"][0]["lhs"] == 4);
  CHECK(report["results"]["panel"][0]["rhs"] == 4);
  CHECK(report["results"]["presentation"]["text"] == "< b, t0 | b b >");

  // the plain coinserter command emits the presentation itself
  std::string pres_report = tmp_path("coins_pres.json");
  json doc2 = doc;
  doc2["payload"] = {{"f", "f"}, {"g", "g"}};
  write_instance(path, doc2);
  CHECK(run_cli("coinserter " + path + " --report " + pres_report) == 0);
  json pres = read_json_file(pres_report);
  CHECK(pres["results"]["stable_letter"] == "t0");
}

TEST_CASE("two-cells and extend-functor commands") {
  CrossedModule neg = fixture("ab3_neg").xm;
  ObjId z3 = 2;
  MorId id_z3 = neg.base->identity(z3);
  MorId negation = neg.gamma_mor(z3, 1);

  std::string path = tmp_path("neg.json");
  write_instance(path,
                 instance_for("ab3_neg", {{"f", id_z3}, {"g", negation}}));
  std::string report_path = tmp_path("neg_cells.json");
  CHECK(run_cli("two-cells " + path + " --report " + report_path) == 0);
  json cells = read_json_file(report_path);
  CHECK(cells["results"]["count"] == 1);

  write_instance(path,
                 instance_for("ab3_neg", {{"count_pair",
                                           {{"f", id_z3}, {"g", negation}}}}));
  std::string ext_path = tmp_path("neg_extend.json");
  CHECK(run_cli("extend-functor " + path + " --report " + ext_path) == 0);
  json ext = read_json_file(ext_path);
  CHECK(ext["results"]["count_pair"]["upstairs"] == 1);
  CHECK(ext["results"]["count_pair"]["downstairs"] == 2);
}

TEST_CASE("obstructions command grades the equivalences") {
  std::string path = tmp_path("obs_triv.json");
  write_instance(path, instance_for("poset01_trivial"));
  CHECK(run_cli("obstructions " + path) == 0);

  write_instance(path, instance_for("poset01_z2"));
  std::string report_path = tmp_path("obs_z2.json");
  CHECK(run_cli("obstructions " + path + " --report " + report_path) == 1);
  json report = read_json_file(report_path);
  CHECK(report["results"]["equivalence_holds"] == true);
  CHECK(report["results"]["g_trivial"] == false);
}

TEST_CASE("check-2d without a 1d colimit reports not-applicable") {
  // the coequalizer of the two loops of BZ2 has no 1-categorical colimit
  CrossedModule xm = fixture("bz2_conj").xm;
  json shape = category_to_json(*parallel_pair_category());
  json payload = {{"kind", "colimit"},
                  {"diagram",
                   {{"shape", shape},
                    {"objects", {0, 0}},
                    {"morphisms", {0, 0, 0, 1}}}}};
  std::string path = tmp_path("no1d.json");
  write_instance(path, instance_for("bz2_conj", payload));
  std::string report_path = tmp_path("no1d_report.json");
  CHECK(run_cli("check-2d " + path + " --report " + report_path) == 0);
  json report = read_json_file(report_path);
  CHECK(report["results"]["one_dimensional"] == "absent");
  CHECK(report["results"]["verdict"] == "not-applicable");
}

TEST_CASE("check-2d command on a pushout diagram") {
  CrossedModule xm = fixture("diamond_z2").xm;
  auto diamond = xm.base;
  json shape = category_to_json(*span_category());
  MorId f01 = diamond->hom(0, 1).at(0);
  MorId f02 = diamond->hom(0, 2).at(0);
  json payload = {
      {"kind", "colimit"},
      {"diagram",
       {{"shape", shape},
        {"objects", {0, 1, 2}},
        {"morphisms",
         {diamond->identity(0), f01, f02, diamond->identity(1),
          diamond->identity(2)}}}}};
  std::string path = tmp_path("check2d.json");
  write_instance(path, instance_for("diamond_z2", payload));
  std::string report_path = tmp_path("check2d_report.json");
  CHECK(run_cli("check-2d " + path + " --report " + report_path) == 0);
  json report = read_json_file(report_path);
  CHECK(report["results"]["one_dimensional"]["object"] == 3);
  CHECK(report["results"]["verdict"]["status"] == "exists");
}
