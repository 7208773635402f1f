#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "xmodcat/fincat.hpp"
#include "xmodcat/grpcolim.hpp"
#include "xmodcat/limits2d.hpp"
#include "xmodcat/xmod.hpp"

namespace xmodcat {

using json = nlohmann::json;

/// One instance document (schema "v1"): an optional category plus optional
/// crossed module, named presentations and presented maps, and a raw
/// command payload. All parse failures raise InputError.
struct Instance {
  CatPtr category;
  std::optional<CrossedModule> xmod;
  std::map<std::string, GroupPresentation> presentations;
  std::map<std::string, PresentedMap> maps;
  json payload;
};

json category_to_json(const FinCategory& c);
CatPtr category_from_json(const json& doc);

json group_to_json(const FinGroup& g);
GrpPtr group_from_json(const json& doc);

json xmod_to_json(const CrossedModule& xm);
CrossedModule xmod_from_json(const CatPtr& base, const json& doc);

json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const json& doc);

json presented_map_to_json(const PresentedMap& m);

json functor_to_json(const FinFunctor& f);
FinFunctor functor_from_json(const CatPtr& source, const CatPtr& target,
                             const json& doc);

/// Diagram payload: {"shape": <category>, "objects": [...], "morphisms": [...]}.
Diagram diagram_from_json(const CatPtr& base, const json& doc);

/// Weight payload: {"shape": ..., "values": [...], "on_morphisms": [...]}.
Weight weight_from_json(const json& doc);

Instance parse_instance(const json& doc);
json serialize_instance(const Instance& instance);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace xmodcat
