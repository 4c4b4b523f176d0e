#include "coframes/sset/io.hpp"

#include <map>

#include "../json_internal.hpp"

namespace coframes::sset {

using detail::json;

TruncatedSSet read_sset(std::string_view text) {
  const json j = detail::parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (j.contains("kind") && j["kind"] != "sset") throw ParseError("kind", "expected \"sset\"");
  const int cap = detail::as_int(detail::field(j, "cap", ""), "cap");
  if (cap < 0) throw ParseError("cap", "must be non-negative");
  const json& simplices = detail::field(j, "simplices", "");
  if (!simplices.is_array() || static_cast<int>(simplices.size()) != cap + 1)
    throw ParseError("simplices", "expected one name list per dimension 0..cap");

  TruncatedSSet::Builder b(cap);
  std::map<std::string, std::pair<int, int>> where;  // name -> (dim, index)
  for (int d = 0; d <= cap; ++d) {
    const std::string loc = "simplices[" + std::to_string(d) + "]";
    if (!simplices[d].is_array()) throw ParseError(loc, "expected an array");
    for (std::size_t i = 0; i < simplices[d].size(); ++i) {
      const std::string sloc = loc + "[" + std::to_string(i) + "]";
      std::string name = detail::as_string(simplices[d][i], sloc);
      if (where.count(name)) throw ParseError(sloc, "duplicate simplex '" + name + "'");
      where[name] = {d, b.add_simplex(d, name)};
    }
  }
  auto triples = [&](const char* key, bool faces) {
    const json& list = detail::field(j, key, "");
    if (!list.is_array()) throw ParseError(key, "expected an array");
    for (std::size_t t = 0; t < list.size(); ++t) {
      const std::string loc = std::string(key) + "[" + std::to_string(t) + "]";
      if (!list[t].is_array() || list[t].size() != 3) throw ParseError(loc, "expected [simplex, index, result]");
      auto lookup = [&](const json& v, const std::string& l) {
        const std::string name = detail::as_string(v, l);
        auto it = where.find(name);
        if (it == where.end()) throw ParseError(l, "unknown simplex '" + name + "'");
        return it->second;
      };
      const auto [d, s] = lookup(list[t][0], loc + "[0]");
      const int i = detail::as_int(list[t][1], loc + "[1]");
      const auto [rd, r] = lookup(list[t][2], loc + "[2]");
      if (i < 0 || i > d) throw ParseError(loc + "[1]", "index out of range");
      if (rd != (faces ? d - 1 : d + 1)) throw ParseError(loc + "[2]", "result has the wrong dimension");
      if (faces)
        b.set_face(d, s, i, r);
      else
        b.set_degeneracy(d, s, i, r);
    }
  };
  triples("faces", true);
  triples("degeneracies", false);
  try {
    return b.build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("faces", e.what());
  }
}

std::string write_sset(const TruncatedSSet& k) {
  std::map<std::string, int> seen;
  json j;
  j["kind"] = "sset";
  j["cap"] = k.cap();
  j["simplices"] = json::array();
  j["faces"] = json::array();
  j["degeneracies"] = json::array();
  for (int d = 0; d <= k.cap(); ++d) {
    json names = json::array();
    for (int s = 0; s < k.count(d); ++s) {
      if (seen[k.name(d, s)]++) throw Error("write_sset: simplex name '" + k.name(d, s) + "' is not unique");
      names.push_back(k.name(d, s));
    }
    j["simplices"].push_back(std::move(names));
  }
  for (int d = 0; d <= k.cap(); ++d)
    for (int s = 0; s < k.count(d); ++s)
      for (int i = 0; i <= d; ++i) {
        if (d > 0) j["faces"].push_back({k.name(d, s), i, k.name(d - 1, k.face(d, s, i))});
        if (d < k.cap()) j["degeneracies"].push_back({k.name(d, s), i, k.name(d + 1, k.degeneracy(d, s, i))});
      }
  return j.dump(2) + "\n";
}

}  // namespace coframes::sset
