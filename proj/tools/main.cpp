// Command-line front end: loads a JSON instance, dispatches one command,
// and writes a deterministic JSON report. Exit codes: 0 all verdicts pass,
// 1 a mathematical verdict is negative, 2 input/schema error, 3 budget
// exceeded. Timings go to stderr so reports stay byte-stable.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xmodcat/fixtures.hpp"
#include "xmodcat/io.hpp"
#include "xmodcat/limits2d.hpp"
#include "xmodcat/twocat.hpp"
#include "xmodcat/xfun.hpp"

using namespace xmodcat;

namespace {

struct CommonOptions {
  std::string instance_path;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string panel = "Z2,Z3,Z4,S3,D4,Z2xZ2";
  std::string report_path;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_instance = true) {
  if (needs_instance)
    cmd->add_option("instance", opts.instance_path, "instance JSON file")
        ->required();
  cmd->add_option("--budget", opts.budget, "search candidate cap");
  cmd->add_option("--seed", opts.seed, "generator seed")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--panel", opts.panel, "comma-separated stock group names");
  cmd->add_option("--report", opts.report_path, "write the report here");
  cmd->add_option("--workers", opts.workers, "worker threads for search kernels")
      ->check(CLI::PositiveNumber);
}

std::vector<std::pair<std::string, GrpPtr>> parse_panel(const std::string& names) {
  std::vector<std::pair<std::string, GrpPtr>> panel;
  std::stringstream ss(names);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    GrpPtr g = stock_group(name);
    if (!g) throw InputError("unknown panel group: " + name);
    panel.push_back({name, g});
  }
  if (panel.empty()) throw InputError("empty verification panel");
  return panel;
}

const json& payload_field(const json& payload, const char* key) {
  auto it = payload.find(key);
  if (it == payload.end())
    throw InputError(std::string("payload is missing \"") + key + "\"");
  return *it;
}

TwoCell cell_from_payload(const json& doc) {
  return {payload_field(doc, "src").get<int>(),
          payload_field(doc, "elem").get<int>()};
}

Word word_from_payload(const json& doc) {
  Word w;
  for (const json& v : doc) w.push_back(v.get<std::int32_t>());
  return free_reduce(std::move(w));
}

json report_from(const ValidationReport& r) {
  json out;
  out["ok"] = r.ok();
  if (!r.applicable) {
    out["applicable"] = false;
    out["reason"] = r.not_applicable_reason;
    return out;
  }
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"rule", v.rule}, {"witness", v.witness}});
  out["violations"] = violations;
  return out;
}

json verdict_json(const SearchVerdict& v) {
  return {{"status", to_string(v.status)},
          {"witness", v.witness},
          {"reason", v.reason}};
}

const CrossedModule& require_xmod(const Instance& instance) {
  if (!instance.xmod)
    throw InputError("this command needs a crossed_module in the instance");
  return *instance.xmod;
}

const GroupPresentation& require_presentation(const Instance& instance,
                                              const std::string& name) {
  auto it = instance.presentations.find(name);
  if (it == instance.presentations.end())
    throw InputError("unknown presentation: " + name);
  return it->second;
}

const PresentedMap& require_map(const Instance& instance,
                                const std::string& name) {
  auto it = instance.maps.find(name);
  if (it == instance.maps.end()) throw InputError("unknown map: " + name);
  return it->second;
}

// exit decision: 1 when any verdict carries a negative mathematical outcome
struct Outcome {
  json report;
  bool negative = false;
};

Outcome run_validate(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  if (!instance.category) {
    // presentation-only instance: check the maps against the panel
    if (instance.maps.empty() && instance.presentations.empty())
      throw InputError("validate needs a category or presentations");
    auto panel = parse_panel(opts.panel);
    json maps = json::object();
    bool all_ok = true;
    for (const auto& [name, m] : instance.maps) {
      ValidationReport r =
          validate_presented_map(m, panel, SearchBudget{opts.budget});
      maps[name] = report_from(r);
      all_ok &= r.ok();
    }
    out.report["maps"] = maps;
    out.report["presentations"] = instance.presentations.size();
    out.report["summary"] =
        all_ok ? "presentations valid" : "a presented map breaks a relator";
    out.negative = !all_ok;
    return out;
  }
  ValidationReport cat = validate_category(*instance.category);
  out.report["category"] = report_from(cat);
  out.negative |= !cat.ok();
  if (instance.xmod) {
    ValidationReport xr = validate_crossed_module(*instance.xmod);
    out.report["crossed_module"] = report_from(xr);
    out.negative |= !xr.ok();
    if (xr.ok()) {
      ValidationReport laws = validate_two_category(*instance.xmod);
      out.report["two_category_laws"] = report_from(laws);
      out.report["contractible_loops"] =
          report_from(check_contractible_loops(*instance.xmod));
      out.report["locally_groupoidal"] =
          report_from(check_locally_groupoidal(*instance.xmod));
      out.negative |= !laws.ok();
    }
    out.report["summary"] =
        xr.ok() ? "crossed module valid" : "crossed module invalid";
  } else {
    out.report["summary"] = cat.ok() ? "category valid" : "category invalid";
  }
  return out;
}

Outcome run_isotropy(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  if (!instance.category) throw InputError("isotropy needs a category");
  SearchBudget budget{opts.budget};
  std::vector<ObjId> objects;
  if (instance.payload.contains("object"))
    objects.push_back(instance.payload["object"].get<int>());
  else
    for (ObjId a = 0; a < instance.category->num_objects(); ++a)
      objects.push_back(a);
  json per_object = json::array();
  for (ObjId x : objects) {
    IsotropyGroup z = compute_isotropy(instance.category, x, budget, opts.workers);
    LabeledGroup aut = automorphism_group_in_category(*instance.category, x);
    GroupHom delta = delta_hom(z, aut);
    std::vector<char> hit(aut.group.order(), 0);
    bool injective = true;
    for (ElemId e : delta.map) {
      if (hit[e]) injective = false;
      hit[e] = 1;
    }
    json families = json::array();
    for (const auto& label : z.labels) families.push_back(label.components);
    per_object.push_back({{"object", x},
                          {"order", z.group.order()},
                          {"table", z.group.table()},
                          {"families", families},
                          {"delta_injective", injective}});
  }
  out.report["isotropy"] = per_object;
  return out;
}

Outcome run_two_cells(const Instance& instance, const CommonOptions&) {
  Outcome out;
  const CrossedModule& xm = require_xmod(instance);
  MorId f = payload_field(instance.payload, "f").get<int>();
  MorId g = payload_field(instance.payload, "g").get<int>();
  json cells = json::array();
  for (const TwoCell& c : two_cells(xm, f, g))
    cells.push_back({{"src", c.src}, {"elem", c.elem}});
  out.report["two_cells"] = cells;
  out.report["count"] = cells.size();
  return out;
}

Outcome run_check_2d(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  const CrossedModule& xm = require_xmod(instance);
  SearchBudget budget{opts.budget};
  std::string kind = payload_field(instance.payload, "kind").get<std::string>();
  Diagram d =
      diagram_from_json(instance.category, payload_field(instance.payload, "diagram"));
  if (kind == "colimit") {
    auto r = colimit_1d(d, budget);
    if (!r) {
      out.report["one_dimensional"] = "absent";
      out.report["verdict"] = "not-applicable";
      return out;
    }
    out.report["one_dimensional"] = {{"object", r->object},
                                     {"legs", r->cocone.legs},
                                     {"isomorphic_candidates", r->num_candidates}};
    SearchVerdict v = check_2d_colimit(xm, d, *r);
    out.report["verdict"] = verdict_json(v);
    out.negative = v.status != SearchStatus::Exists;
  } else if (kind == "limit") {
    auto r = limit_1d(d, budget);
    if (!r) {
      out.report["one_dimensional"] = "absent";
      out.report["verdict"] = "not-applicable";
      return out;
    }
    out.report["one_dimensional"] = {{"object", r->object},
                                     {"legs", r->cone.legs},
                                     {"isomorphic_candidates", r->num_candidates}};
    SearchVerdict v = check_2d_limit(xm, d, *r);
    out.report["verdict"] = verdict_json(v);
    out.negative = v.status != SearchStatus::Exists;
  } else {
    throw InputError("check-2d kind must be \"colimit\" or \"limit\"");
  }
  return out;
}

Outcome run_search(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  const CrossedModule& xm = require_xmod(instance);
  SearchBudget budget{opts.budget};
  const json& p = instance.payload;
  std::string shape = payload_field(p, "shape").get<std::string>();
  SearchVerdict v{SearchStatus::NotApplicable, json::object(), ""};
  if (shape == "coinserter")
    v = search_weighted_colimit(
        xm,
        CoinserterShape{payload_field(p, "f").get<int>(),
                        payload_field(p, "g").get<int>()},
        budget);
  else if (shape == "coequifier")
    v = search_weighted_colimit(
        xm,
        CoequifierShape{cell_from_payload(payload_field(p, "alpha")),
                        cell_from_payload(payload_field(p, "beta"))},
        budget);
  else if (shape == "coidentifier")
    v = search_weighted_colimit(
        xm, CoidentifierShape{cell_from_payload(payload_field(p, "alpha"))},
        budget);
  else if (shape == "tensor_by_group") {
    GrpPtr g;
    const json& group_arg = payload_field(p, "group");
    g = group_arg.is_string() ? stock_group(group_arg.get<std::string>())
                              : group_from_json(group_arg);
    if (!g) throw InputError("unknown tensor group");
    v = search_weighted_colimit(
        xm, TensorByGroupShape{g, payload_field(p, "object").get<int>()}, budget);
  } else if (shape == "coproduct")
    v = search_weighted_colimit(xm,
                                CoproductShape{payload_field(p, "a").get<int>(),
                                               payload_field(p, "b").get<int>()},
                                budget);
  else if (shape == "two_initial")
    v = search_weighted_colimit(xm, TwoInitialShape{}, budget);
  else if (shape == "inserter")
    v = search_weighted_limit(
        xm,
        InserterShape{payload_field(p, "f").get<int>(),
                      payload_field(p, "g").get<int>()},
        budget);
  else if (shape == "equifier")
    v = search_weighted_limit(
        xm,
        EquifierShape{cell_from_payload(payload_field(p, "alpha")),
                      cell_from_payload(payload_field(p, "beta"))},
        budget);
  else if (shape == "comma")
    v = search_weighted_limit(xm,
                              CommaShape{payload_field(p, "f").get<int>(),
                                         payload_field(p, "g").get<int>()},
                              budget);
  else if (shape == "cotensor_by_2")
    v = search_weighted_limit(
        xm, CotensorBy2Shape{payload_field(p, "object").get<int>()}, budget);
  else if (shape == "product")
    v = search_weighted_limit(xm,
                              ProductShape{payload_field(p, "a").get<int>(),
                                           payload_field(p, "b").get<int>()},
                              budget);
  else if (shape == "conical")
    v = search_weighted_limit(
        xm,
        ConicalShape{weight_from_json(payload_field(p, "weight")),
                     diagram_from_json(instance.category,
                                       payload_field(p, "diagram"))},
        budget);
  else
    throw InputError("unknown search shape: " + shape);
  out.report["shape"] = shape;
  out.report["verdict"] = verdict_json(v);
  out.negative = v.status == SearchStatus::NotExists;
  if (v.status == SearchStatus::BudgetExceeded)
    throw BudgetError(opts.budget + 1, opts.budget);
  return out;
}

Outcome run_obstructions(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  const CrossedModule& xm = require_xmod(instance);
  ObstructionReport r = obstruction_report(xm, SearchBudget{opts.budget});
  if (!r.applicable) {
    out.report["applicable"] = false;
    out.report["reason"] = r.not_applicable_reason;
    return out;
  }
  out.report["applicable"] = true;
  out.report["g_trivial"] = r.g_trivial;
  out.report["two_initial"] = verdict_json(r.two_initial);
  if (r.two_coproduct)
    out.report["two_coproduct"] = verdict_json(*r.two_coproduct);
  out.report["equivalence_holds"] = r.equivalence_holds;
  out.negative = !r.g_trivial || !r.equivalence_holds;
  return out;
}

Outcome run_coinserter(const Instance& instance, const CommonOptions&) {
  Outcome out;
  const PresentedMap& f =
      require_map(instance, payload_field(instance.payload, "f").get<std::string>());
  const PresentedMap& g =
      require_map(instance, payload_field(instance.payload, "g").get<std::string>());
  CoinserterPresentation co = coinserter_presentation(f, g);
  out.report["presentation"] = presentation_to_json(co.presentation);
  out.report["stable_letter"] = co.stable_letter;
  json renames = json::array();
  for (const auto& [wanted, used] : co.letters.renamed)
    renames.push_back({{"wanted", wanted}, {"used", used}});
  out.report["renamed"] = renames;
  return out;
}

Outcome run_coequifier(const Instance& instance, const CommonOptions&, bool identify) {
  Outcome out;
  const GroupPresentation& b = require_presentation(
      instance, payload_field(instance.payload, "presentation").get<std::string>());
  Word alpha = word_from_payload(payload_field(instance.payload, "alpha"));
  GroupPresentation result =
      identify ? coidentifier_presentation(b, alpha)
               : coequifier_presentation(
                     b, alpha, word_from_payload(payload_field(instance.payload, "beta")));
  out.report["presentation"] = presentation_to_json(result);
  return out;
}

Outcome run_tensor_free(const Instance& instance, const CommonOptions&) {
  Outcome out;
  const GroupPresentation& b = require_presentation(
      instance, payload_field(instance.payload, "presentation").get<std::string>());
  std::vector<std::string> letters;
  if (instance.payload.contains("letters"))
    for (const json& l : instance.payload["letters"])
      letters.push_back(l.get<std::string>());
  else
    for (int i = 0; i < payload_field(instance.payload, "count").get<int>(); ++i)
      letters.push_back("t" + std::to_string(i));
  TensorPresentation t = tensor_by_free_group_presentation(letters, b);
  out.report["presentation"] = presentation_to_json(t.presentation);
  out.report["letters"] = t.letters;
  json renames = json::array();
  for (const auto& [wanted, used] : t.renames.renamed)
    renames.push_back({{"wanted", wanted}, {"used", used}});
  out.report["renamed"] = renames;
  return out;
}

Outcome run_verify_homcount(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  SearchBudget budget{opts.budget};
  auto panel = parse_panel(opts.panel);
  const json& p = instance.payload;
  std::string construction = payload_field(p, "construction").get<std::string>();
  json rows = json::array();
  bool all_equal = true;
  auto push_row = [&](const std::string& name, const HomCountVerdict& v) {
    rows.push_back({{"panel_group", name},
                    {"lhs", v.lhs},
                    {"rhs", v.rhs},
                    {"equal", v.equal()}});
    all_equal &= v.equal();
  };
  if (construction == "coinserter") {
    const PresentedMap& f =
        require_map(instance, payload_field(p, "f").get<std::string>());
    const PresentedMap& g =
        require_map(instance, payload_field(p, "g").get<std::string>());
    CoinserterPresentation co = coinserter_presentation(f, g);
    out.report["presentation"] = presentation_to_json(co.presentation);
    for (const auto& [name, k] : panel)
      push_row(name, verify_coinserter_by_homcount(co.presentation, f, g, *k,
                                                   budget, opts.workers));
  } else if (construction == "coequifier" || construction == "coidentifier") {
    const GroupPresentation& b = require_presentation(
        instance, payload_field(p, "presentation").get<std::string>());
    Word alpha = word_from_payload(payload_field(p, "alpha"));
    Word beta = construction == "coequifier"
                    ? word_from_payload(payload_field(p, "beta"))
                    : Word{};
    GroupPresentation result = construction == "coequifier"
                                   ? coequifier_presentation(b, alpha, beta)
                                   : coidentifier_presentation(b, alpha);
    out.report["presentation"] = presentation_to_json(result);
    for (const auto& [name, k] : panel)
      push_row(name, verify_coequifier_by_homcount(result, b, alpha, beta, *k,
                                                   budget, opts.workers));
  } else if (construction == "tensor_free") {
    const GroupPresentation& b = require_presentation(
        instance, payload_field(p, "presentation").get<std::string>());
    std::vector<std::string> letters;
    for (const json& l : payload_field(p, "letters"))
      letters.push_back(l.get<std::string>());
    TensorPresentation t = tensor_by_free_group_presentation(letters, b);
    out.report["presentation"] = presentation_to_json(t.presentation);
    for (const auto& [name, k] : panel)
      push_row(name, verify_tensor_by_homcount(t, b, *k, budget, opts.workers));
  } else {
    throw InputError("unknown construction: " + construction);
  }
  out.report["panel"] = rows;
  out.report["all_equal"] = all_equal;
  out.negative = !all_equal;
  return out;
}

Outcome run_extend_functor(const Instance& instance, const CommonOptions& opts) {
  Outcome out;
  const CrossedModule& xm = require_xmod(instance);
  std::vector<GrpPtr> targets;
  for (const GrpPtr& g : xm.groups) {
    bool seen = false;
    for (const GrpPtr& t : targets) seen |= t->same_table(*g);
    if (!seen) targets.push_back(g);
  }
  CanonicalToGroups canon =
      canonical_2functor_to_groups(xm, targets, SearchBudget{opts.budget});
  ValidationReport morphism = validate_xmod_morphism(canon.morphism);
  ValidationReport functorial = check_functoriality(canon.morphism);
  out.report["morphism"] = report_from(morphism);
  out.report["functoriality"] = report_from(functorial);
  out.report["target_objects"] = targets.size();
  out.negative = !morphism.ok() || !functorial.ok();
  if (instance.payload.contains("count_pair")) {
    const json& pair = instance.payload["count_pair"];
    TwoCellCountComparison cmp = compare_two_cell_counts(
        canon.morphism, payload_field(pair, "f").get<int>(),
        payload_field(pair, "g").get<int>());
    out.report["count_pair"] = {{"f", cmp.f},
                                {"g", cmp.g},
                                {"upstairs", cmp.upstairs},
                                {"downstairs", cmp.downstairs}};
  }
  return out;
}

struct GenerateOptions {
  std::string kind;
  std::string group = "Z2";
  std::string groups = "Z1,Z2,S3";
  std::string covers = "0<1";
  int objects = 2;
  int max_objects = 3;
  int max_group = 4;
  std::string out_path;
};

json generate_instance(const GenerateOptions& g, const CommonOptions& opts) {
  Instance instance;
  if (g.kind == "delooping") {
    GrpPtr grp = stock_group(g.group);
    if (!grp) throw InputError("unknown stock group: " + g.group);
    GroupsDiagram d = delooping_diagram(grp);
    instance.category = d.cat;
    instance.xmod = conjugation_module(d);
  } else if (g.kind == "poset") {
    std::vector<std::pair<int, int>> covers;
    std::stringstream ss(g.covers);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto lt = item.find('<');
      if (lt == std::string::npos) throw InputError("covers look like 0<1,0<2");
      covers.push_back({std::stoi(item.substr(0, lt)),
                        std::stoi(item.substr(lt + 1))});
    }
    instance.category = poset_category(g.objects, covers);
    instance.xmod = trivial_module(instance.category);
  } else if (g.kind == "groups-subcategory") {
    std::vector<GrpPtr> groups;
    std::stringstream ss(g.groups);
    std::string name;
    while (std::getline(ss, name, ',')) {
      GrpPtr grp = stock_group(name);
      if (!grp) throw InputError("unknown stock group: " + name);
      groups.push_back(grp);
    }
    GroupsDiagram d = full_groups_subcategory(groups);
    instance.category = d.cat;
    instance.xmod = conjugation_module(d);
  } else if (g.kind == "random-xmod") {
    RandomCaps caps{g.max_objects, g.max_group};
    CrossedModule xm = random_crossed_module(opts.seed, caps);
    instance.category = xm.base;
    instance.xmod = std::move(xm);
  } else {
    throw InputError("unknown fixture kind: " + g.kind);
  }
  if (instance.xmod) {
    ValidationReport r = validate_crossed_module(*instance.xmod);
    if (!r.ok())
      throw std::logic_error("generated instance failed validation: " +
                             r.summary());
  }
  return serialize_instance(instance);
}

int dispatch(const std::string& command, const CommonOptions& opts,
             Outcome (*runner)(const Instance&, const CommonOptions&)) {
  auto start = std::chrono::steady_clock::now();
  json doc = read_json_file(opts.instance_path);
  Instance instance = parse_instance(doc);
  Outcome out = runner(instance, opts);
  json report;
  report["schema"] = "report-v1";
  report["command"] = command;
  report["instance"] = opts.instance_path;
  report["budget"] = opts.budget;
  if (opts.seed_set) report["seed"] = opts.seed;
  report["results"] = out.report;
  report["exit"] = out.negative ? 1 : 0;
  std::string text = report.dump(2) + "\n";
  if (opts.report_path.empty())
    std::cout << text;
  else
    write_text_file(opts.report_path, text);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cerr << "xmodcat " << command << ": " << ms << " ms\n";
  return out.negative ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossed modules on finite categories: induced 2-categories, "
               "isotropy groups, and 2-(co)limit searches"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    Outcome (*runner)(const Instance&, const CommonOptions&);
  };
  std::vector<Sub> subs = {
      {"validate", "check category, crossed module and 2-category laws",
       run_validate},
      {"isotropy", "isotropy groups by exhaustive family search", run_isotropy},
      {"two-cells", "list the 2-cells between a parallel pair", run_two_cells},
      {"obstructions", "evaluate the 2-initial / 2-coproduct equivalences",
       run_obstructions},
      {"coinserter", "HNN-style coinserter presentation", run_coinserter},
      {"tensor-free", "tensor by a free group, presentation level",
       run_tensor_free},
      {"verify-homcount", "exact hom-count verification over the panel",
       run_verify_homcount},
      {"extend-functor", "canonical 2-functor into the 2-category of groups",
       run_extend_functor},
      {"check-2d", "2-dimensional universal property of a 1d (co)limit",
       run_check_2d},
      {"search", "search a weighted (co)limit shape", run_search},
  };

  std::vector<std::unique_ptr<CommonOptions>> option_blocks;
  std::vector<std::pair<CLI::App*, std::size_t>> bound;
  for (const Sub& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    option_blocks.push_back(std::make_unique<CommonOptions>());
    add_common(cmd, *option_blocks.back());
    bound.push_back({cmd, option_blocks.size() - 1});
  }

  // coequifier / coidentifier share a runner with a flag
  CLI::App* coeq = app.add_subcommand("coequifier", "add the relator alpha beta^-1");
  option_blocks.push_back(std::make_unique<CommonOptions>());
  add_common(coeq, *option_blocks.back());
  std::size_t coeq_idx = option_blocks.size() - 1;
  CLI::App* coid = app.add_subcommand("coidentifier", "add the relator alpha");
  option_blocks.push_back(std::make_unique<CommonOptions>());
  add_common(coid, *option_blocks.back());
  std::size_t coid_idx = option_blocks.size() - 1;

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a fixture instance");
  option_blocks.push_back(std::make_unique<CommonOptions>());
  CommonOptions& gen_common = *option_blocks.back();
  generate->add_option("--kind", gen.kind,
                       "delooping | poset | groups-subcategory | random-xmod")
      ->required();
  generate->add_option("--group", gen.group, "stock group for delooping");
  generate->add_option("--groups", gen.groups, "stock groups, comma separated");
  generate->add_option("--covers", gen.covers, "poset covers like 0<1,0<2");
  generate->add_option("--objects", gen.objects, "poset object count");
  generate->add_option("--max-objects", gen.max_objects, "random cap");
  generate->add_option("--max-group", gen.max_group, "random group order cap");
  generate->add_option("--seed", gen_common.seed, "random seed");
  generate->add_option("--out", gen.out_path, "write the instance here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      json doc = generate_instance(gen, gen_common);
      std::string text = doc.dump(2) + "\n";
      if (gen.out_path.empty())
        std::cout << text;
      else
        write_text_file(gen.out_path, text);
      return 0;
    }
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (bound[i].first->parsed())
        return dispatch(subs[i].name, *option_blocks[bound[i].second],
                        subs[i].runner);
    if (coeq->parsed()) {
      auto runner = [](const Instance& inst, const CommonOptions& o) {
        return run_coequifier(inst, o, false);
      };
      return dispatch("coequifier", *option_blocks[coeq_idx], runner);
    }
    if (coid->parsed()) {
      auto runner = [](const Instance& inst, const CommonOptions& o) {
        return run_coequifier(inst, o, true);
      };
      return dispatch("coidentifier", *option_blocks[coid_idx], runner);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
