#include "xmodcat/io.hpp"

#include <fstream>

namespace xmodcat {

namespace {

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw InputError(std::string(key) + ": expected integer");
  return v.get<int>();
}

}  // namespace

json category_to_json(const FinCategory& c) {
  json objects = json::array();
  for (ObjId a = 0; a < c.num_objects(); ++a) objects.push_back(a);
  json morphisms = json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    morphisms.push_back({f, c.dom(f), c.cod(f)});
  json identity = json::array();
  for (ObjId a = 0; a < c.num_objects(); ++a) identity.push_back(c.identity(a));
  json composition = json::array();
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f = 0; f < c.num_morphisms(); ++f)
      if (c.raw_compose(g, f) >= 0)
        composition.push_back({g, f, c.raw_compose(g, f)});
  return {{"objects", objects},
          {"morphisms", morphisms},
          {"identity", identity},
          {"composition", composition}};
}

CatPtr category_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("category: expected object");
  const json& objects = field(doc, "objects");
  int n = static_cast<int>(objects.size());
  for (int a = 0; a < n; ++a)
    if (!objects[a].is_number_integer() || objects[a].get<int>() != a)
      throw InputError("category.objects must be the dense list 0..n-1");
  const json& morphisms = field(doc, "morphisms");
  std::vector<std::pair<ObjId, ObjId>> ends;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const json& triple = morphisms[i];
    if (!triple.is_array() || triple.size() != 3)
      throw InputError("category.morphisms entries are [id, dom, cod]");
    if (triple[0].get<int>() != static_cast<int>(i))
      throw InputError("category.morphisms must be listed in id order");
    ends.push_back({triple[1].get<int>(), triple[2].get<int>()});
  }
  std::vector<MorId> identities;
  for (const json& v : field(doc, "identity")) identities.push_back(v.get<int>());
  std::vector<std::tuple<MorId, MorId, MorId>> comps;
  for (const json& triple : field(doc, "composition")) {
    if (!triple.is_array() || triple.size() != 3)
      throw InputError("category.composition entries are [g, f, gf]");
    comps.emplace_back(triple[0].get<int>(), triple[1].get<int>(),
                       triple[2].get<int>());
  }
  try {
    return std::make_shared<FinCategory>(n, std::move(ends), std::move(identities),
                                         comps);
  } catch (const InputError& e) {
    throw InputError(std::string("category: ") + e.what());
  }
}

json group_to_json(const FinGroup& g) {
  json table = json::array();
  for (ElemId v : g.table()) table.push_back(v);
  return {{"order", g.order()}, {"table", table}};
}

GrpPtr group_from_json(const json& doc) {
  int order = int_field(doc, "order");
  std::vector<ElemId> table;
  for (const json& v : field(doc, "table")) table.push_back(v.get<int>());
  try {
    return std::make_shared<FinGroup>(order, std::move(table));
  } catch (const InputError& e) {
    throw InputError(std::string("group: ") + e.what());
  }
}

json xmod_to_json(const CrossedModule& xm) {
  json groups = json::array();
  for (const GrpPtr& g : xm.groups) groups.push_back(group_to_json(*g));
  json on_morphisms = json::array();
  for (const GroupHom& h : xm.on_morphisms) on_morphisms.push_back(h.map);
  json gamma = json::array();
  for (const auto& g : xm.gamma) gamma.push_back(g);
  return {{"groups", groups}, {"on_morphisms", on_morphisms}, {"gamma", gamma}};
}

CrossedModule xmod_from_json(const CatPtr& base, const json& doc) {
  CrossedModule xm;
  xm.base = base;
  for (const json& g : field(doc, "groups")) xm.groups.push_back(group_from_json(g));
  if (static_cast<int>(xm.groups.size()) != base->num_objects())
    throw InputError("crossed_module.groups: one table per object required");
  const json& on = field(doc, "on_morphisms");
  if (static_cast<int>(on.size()) != base->num_morphisms())
    throw InputError("crossed_module.on_morphisms: one map per morphism required");
  for (MorId f = 0; f < base->num_morphisms(); ++f) {
    std::vector<ElemId> map;
    for (const json& v : on[f]) map.push_back(v.get<int>());
    xm.on_morphisms.push_back(
        {xm.groups[base->dom(f)], xm.groups[base->cod(f)], std::move(map)});
  }
  for (const json& g : field(doc, "gamma")) {
    std::vector<MorId> row;
    for (const json& v : g) row.push_back(v.get<int>());
    xm.gamma.push_back(std::move(row));
  }
  if (static_cast<int>(xm.gamma.size()) != base->num_objects())
    throw InputError("crossed_module.gamma: one row per object required");
  return xm;
}

json presentation_to_json(const GroupPresentation& p) {
  json relators = json::array();
  for (const Word& w : p.relators) relators.push_back(w);
  return {{"generators", p.generators},
          {"relators", relators},
          {"text", p.to_text()}};
}

GroupPresentation presentation_from_json(const json& doc) {
  std::vector<std::string> generators;
  for (const json& g : field(doc, "generators"))
    generators.push_back(g.get<std::string>());
  std::vector<Word> relators;
  for (const json& r : field(doc, "relators")) {
    Word w;
    for (const json& v : r) w.push_back(v.get<std::int32_t>());
    relators.push_back(std::move(w));
  }
  try {
    return GroupPresentation::make(std::move(generators), std::move(relators));
  } catch (const InputError& e) {
    throw InputError(std::string("presentation: ") + e.what());
  }
}

json presented_map_to_json(const PresentedMap& m) {
  json images = json::array();
  for (const Word& w : m.images) images.push_back(w);
  return {{"source", presentation_to_json(m.source)},
          {"target", presentation_to_json(m.target)},
          {"images", images}};
}

json functor_to_json(const FinFunctor& f) {
  return {{"objects", f.obj_map}, {"morphisms", f.mor_map}};
}

FinFunctor functor_from_json(const CatPtr& source, const CatPtr& target,
                             const json& doc) {
  FinFunctor f;
  f.source = source;
  f.target = target;
  for (const json& v : field(doc, "objects")) f.obj_map.push_back(v.get<int>());
  for (const json& v : field(doc, "morphisms")) f.mor_map.push_back(v.get<int>());
  ValidationReport r = f.validate();
  if (!r.ok()) throw InputError("functor: " + r.summary());
  return f;
}

Diagram diagram_from_json(const CatPtr& base, const json& doc) {
  CatPtr shape = category_from_json(field(doc, "shape"));
  ValidationReport r = validate_category(*shape);
  if (!r.ok()) throw InputError("diagram shape: " + r.summary());
  return {functor_from_json(shape, base, doc)};
}

Weight weight_from_json(const json& doc) {
  Weight w;
  w.shape = category_from_json(field(doc, "shape"));
  ValidationReport r = validate_category(*w.shape);
  if (!r.ok()) throw InputError("weight shape: " + r.summary());
  for (const json& v : field(doc, "values")) {
    CatPtr value = category_from_json(v);
    ValidationReport rv = validate_category(*value);
    if (!rv.ok()) throw InputError("weight value: " + rv.summary());
    w.values.push_back(value);
  }
  if (static_cast<int>(w.values.size()) != w.shape->num_objects())
    throw InputError("weight: one value category per shape object required");
  const json& on = field(doc, "on_morphisms");
  if (static_cast<int>(on.size()) != w.shape->num_morphisms())
    throw InputError("weight: one functor per shape morphism required");
  for (MorId f = 0; f < w.shape->num_morphisms(); ++f)
    w.on_morphisms.push_back(functor_from_json(
        w.values[w.shape->dom(f)], w.values[w.shape->cod(f)], on[f]));
  return w;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  if (field(doc, "schema").get<std::string>() != "v1")
    throw InputError("instance: unsupported schema version");
  Instance out;
  if (doc.contains("category")) {
    out.category = category_from_json(doc["category"]);
    ValidationReport r = validate_category(*out.category);
    if (!r.ok()) throw InputError("instance category: " + r.summary());
  }
  if (doc.contains("crossed_module")) {
    if (!out.category)
      throw InputError("crossed_module requires a category in the same instance");
    out.xmod = xmod_from_json(out.category, doc["crossed_module"]);
  }
  if (doc.contains("presentations"))
    for (const auto& [name, p] : doc["presentations"].items())
      out.presentations.emplace(name, presentation_from_json(p));
  if (doc.contains("maps"))
    for (const auto& [name, m] : doc["maps"].items()) {
      PresentedMap pm;
      auto source_it = out.presentations.find(field(m, "source").get<std::string>());
      auto target_it = out.presentations.find(field(m, "target").get<std::string>());
      if (source_it == out.presentations.end() ||
          target_it == out.presentations.end())
        throw InputError("map \"" + name + "\" references unknown presentation");
      pm.source = source_it->second;
      pm.target = target_it->second;
      for (const json& w : field(m, "images")) {
        Word word;
        for (const json& v : w) word.push_back(v.get<std::int32_t>());
        pm.images.push_back(free_reduce(std::move(word)));
      }
      if (pm.images.size() != pm.source.generators.size())
        throw InputError("map \"" + name + "\": one image per source generator");
      out.maps.emplace(name, std::move(pm));
    }
  if (doc.contains("payload")) out.payload = doc["payload"];
  return out;
}

json serialize_instance(const Instance& instance) {
  json doc;
  doc["schema"] = "v1";
  if (instance.category) doc["category"] = category_to_json(*instance.category);
  if (instance.xmod) doc["crossed_module"] = xmod_to_json(*instance.xmod);
  if (!instance.presentations.empty()) {
    json p = json::object();
    for (const auto& [name, pres] : instance.presentations)
      p[name] = presentation_to_json(pres);
    doc["presentations"] = p;
  }
  if (!instance.payload.is_null()) doc["payload"] = instance.payload;
  return doc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return doc;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace xmodcat
