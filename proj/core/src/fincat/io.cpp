#include "coframes/fincat/io.hpp"

#include <map>

#include "../json_internal.hpp"

namespace coframes::detail {

using fincat::CategoryFile;
using fincat::FinCategory;
using fincat::MorphismClass;

CategoryFile category_from_json(const json& j, const std::string& where) {
  auto at = [&](const std::string& s) { return where.empty() ? s : where + "." + s; };
  if (j.contains("kind") && j["kind"] != "category") throw ParseError(at("kind"), "expected \"category\"");

  FinCategory::Builder b;
  std::map<std::string, int> objects;
  const json& objs = field(j, "objects", where);
  if (!objs.is_array()) throw ParseError(at("objects"), "expected an array");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string loc = at("objects[" + std::to_string(i) + "]");
    std::string name = as_string(objs[i], loc);
    if (!objects.emplace(name, b.object_count()).second) throw ParseError(loc, "duplicate object '" + name + "'");
    b.add_object(std::move(name));
  }

  std::map<std::string, int> morphisms;
  const json& mors = field(j, "morphisms", where);
  if (!mors.is_array()) throw ParseError(at("morphisms"), "expected an array");
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const std::string loc = at("morphisms[" + std::to_string(i) + "]");
    std::string id = as_string(field(mors[i], "id", loc), loc + ".id");
    const std::string src = as_string(field(mors[i], "src", loc), loc + ".src");
    const std::string tgt = as_string(field(mors[i], "tgt", loc), loc + ".tgt");
    if (!objects.count(src)) throw ParseError(loc + ".src", "unknown object '" + src + "'");
    if (!objects.count(tgt)) throw ParseError(loc + ".tgt", "unknown object '" + tgt + "'");
    // Duplicate ids are kept so that validate_category can report them.
    morphisms.emplace(id, b.morphism_count());
    b.add_morphism(std::move(id), objects[src], objects[tgt]);
  }

  auto morphism = [&](const json& v, const std::string& loc) {
    const std::string name = as_string(v, loc);
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ParseError(loc, "unknown morphism '" + name + "'");
    return it->second;
  };

  const json& ids = field(j, "identities", where);
  if (!ids.is_object()) throw ParseError(at("identities"), "expected an object");
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    const std::string loc = at("identities." + it.key());
    auto obj = objects.find(it.key());
    if (obj == objects.end()) throw ParseError(loc, "unknown object '" + it.key() + "'");
    b.set_identity(obj->second, morphism(it.value(), loc));
  }

  const json& comp = field(j, "compose", where);
  if (!comp.is_array()) throw ParseError(at("compose"), "expected an array");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string loc = at("compose[" + std::to_string(i) + "]");
    if (!comp[i].is_array() || comp[i].size() != 3) throw ParseError(loc, "expected [g, f, g∘f]");
    b.set_composite(morphism(comp[i][0], loc + "[0]"), morphism(comp[i][1], loc + "[1]"),
                    morphism(comp[i][2], loc + "[2]"));
  }

  CategoryFile out;
  out.category = b.build();
  if (j.contains("weq")) {
    const json& w = j["weq"];
    if (!w.is_array()) throw ParseError(at("weq"), "expected an array");
    MorphismClass s(out.category.morphism_count());
    for (std::size_t i = 0; i < w.size(); ++i) s.insert(morphism(w[i], at("weq[" + std::to_string(i) + "]")));
    out.weq = std::move(s);
  }
  return out;
}

json category_to_json(const FinCategory& c, const MorphismClass* weq) {
  json j;
  j["kind"] = "category";
  j["objects"] = json::array();
  for (int x = 0; x < c.object_count(); ++x) j["objects"].push_back(c.object_name(x));
  j["morphisms"] = json::array();
  for (int m = 0; m < c.morphism_count(); ++m)
    j["morphisms"].push_back({{"id", c.morphism_name(m)},
                              {"src", c.object_name(c.source(m))},
                              {"tgt", c.object_name(c.target(m))}});
  j["identities"] = json::object();
  for (int x = 0; x < c.object_count(); ++x)
    if (c.identity(x) >= 0) j["identities"][c.object_name(x)] = c.morphism_name(c.identity(x));
  j["compose"] = json::array();
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.outgoing(c.target(f))) {
      auto h = c.compose(g, f);
      if (h) j["compose"].push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(*h)});
    }
  if (weq) {
    j["weq"] = json::array();
    for (int m : weq->members()) j["weq"].push_back(c.morphism_name(m));
  }
  return j;
}

}  // namespace coframes::detail

namespace coframes::fincat {

CategoryFile read_category(std::string_view text) {
  return detail::category_from_json(detail::parse_text(text), "");
}

std::string write_category(const FinCategory& c, const MorphismClass* weq) {
  return detail::category_to_json(c, weq).dump(2) + "\n";
}

}  // namespace coframes::fincat
