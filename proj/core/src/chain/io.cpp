#include "coframes/chain/io.hpp"

#include <map>

#include "../json_internal.hpp"
#include "coframes/fincat/io.hpp"

namespace coframes::chain {

using detail::json;

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int p, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string rl = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw ParseError(rl, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      const json& v = j[r][c];
      if (!v.is_number_integer()) throw ParseError(rl + "[" + std::to_string(c) + "]", "expected an integer");
      m.set(r, c, v.get<long long>());
    }
  }
  return m;
}

json complex_body(const ChainComplex& x) {
  json j;
  j["lo"] = x.lo();
  j["hi"] = x.hi();
  json dims = json::array(), diffs = json::array();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    dims.push_back(x.dim(n));
    if (n > x.lo()) diffs.push_back({{"degree", n}, {"matrix", matrix_to_json(x.d(n))}});
  }
  j["dims"] = dims;
  j["differentials"] = diffs;
  return j;
}

ChainComplex complex_from_body(const json& j, int p, const std::string& where) {
  const std::string at = where.empty() ? "" : where + ".";
  const int lo = detail::as_int(detail::field(j, "lo", where), at + "lo");
  const int hi = detail::as_int(detail::field(j, "hi", where), at + "hi");
  const json& dj = detail::field(j, "dims", where);
  if (!dj.is_array() || static_cast<int>(dj.size()) != std::max(0, hi - lo + 1))
    throw ParseError(at + "dims", "expected one dimension per degree in [lo, hi]");
  std::vector<int> dims;
  for (std::size_t k = 0; k < dj.size(); ++k) {
    const int d = detail::as_int(dj[k], at + "dims[" + std::to_string(k) + "]");
    if (d < 0) throw ParseError(at + "dims[" + std::to_string(k) + "]", "negative dimension");
    dims.push_back(d);
  }
  auto dim = [&](int n) { return n < lo || n > hi ? 0 : dims[n - lo]; };
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) diffs.emplace_back(p, dim(n - 1), dim(n));
  const json& list = detail::field(j, "differentials", where);
  if (!list.is_array()) throw ParseError(at + "differentials", "expected an array");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string l = at + "differentials[" + std::to_string(k) + "]";
    const int n = detail::as_int(detail::field(list[k], "degree", l), l + ".degree");
    if (n <= lo || n > hi) throw ParseError(l + ".degree", "degree outside (lo, hi]");
    diffs[n - lo] = matrix_from_json(detail::field(list[k], "matrix", l), p, dim(n - 1), dim(n), l + ".matrix");
  }
  try {
    return ChainComplex(p, lo, std::move(dims), std::move(diffs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where.empty() ? "differentials" : where, e.what());
  }
}

int read_prime(const json& j) {
  const int p = detail::as_int(detail::field(j, "prime", ""), "prime");
  if (!is_prime(p)) throw ParseError("prime", std::to_string(p) + " is not prime");
  return p;
}

json blocks_to_json(const ChainMap& f) {
  json blocks = json::array();
  const int lo = common_lo(*f.source, *f.target), hi = common_hi(*f.source, *f.target);
  for (int n = lo; n <= hi; ++n) {
    const Matrix m = f.at(n);
    if (m.rows() * m.cols() == 0) continue;
    blocks.push_back({{"degree", n}, {"matrix", matrix_to_json(m)}});
  }
  return blocks;
}

ChainMap blocks_from_json(const json& list, const ComplexPtr& x, const ComplexPtr& y, const std::string& where) {
  if (!list.is_array()) throw ParseError(where, "expected an array of blocks");
  const int p = x->prime();
  std::map<int, Matrix> given;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string l = where + "[" + std::to_string(k) + "]";
    const int n = detail::as_int(detail::field(list[k], "degree", l), l + ".degree");
    if (given.count(n)) throw ParseError(l + ".degree", "duplicate degree");
    given[n] = matrix_from_json(detail::field(list[k], "matrix", l), p, y->dim(n), x->dim(n), l + ".matrix");
  }
  ChainMap f = ChainMap::build(x, y, [&](int n) {
    auto it = given.find(n);
    return it == given.end() ? Matrix(p, y->dim(n), x->dim(n)) : it->second;
  });
  if (auto v = chain_map_violation(f); !v.empty()) throw ParseError(where, v);
  return f;
}

}  // namespace

ChainComplex read_complex(std::string_view text) {
  const json j = detail::parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (j.contains("kind") && j["kind"] != "complex") throw ParseError("kind", "expected \"complex\"");
  return complex_from_body(j, read_prime(j), "");
}

std::string write_complex(const ChainComplex& x) {
  json j = complex_body(x);
  j["kind"] = "complex";
  j["prime"] = x.prime();
  return j.dump(2) + "\n";
}

ChainMap read_chain_map(std::string_view text) {
  const json j = detail::parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (j.contains("kind") && j["kind"] != "chain-map") throw ParseError("kind", "expected \"chain-map\"");
  const int p = read_prime(j);
  auto x = share(complex_from_body(detail::field(j, "source", ""), p, "source"));
  auto y = share(complex_from_body(detail::field(j, "target", ""), p, "target"));
  return blocks_from_json(detail::field(j, "blocks", ""), x, y, "blocks");
}

std::string write_chain_map(const ChainMap& f) {
  json j;
  j["kind"] = "chain-map";
  j["prime"] = f.source->prime();
  j["source"] = complex_body(*f.source);
  j["target"] = complex_body(*f.target);
  j["blocks"] = blocks_to_json(f);
  return j.dump(2) + "\n";
}

DiagramFile read_diagram(std::string_view text, const CategoryLoader& load) {
  const json j = detail::parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (j.contains("kind") && j["kind"] != "diagram") throw ParseError("kind", "expected \"diagram\"");
  const int p = read_prime(j);
  const json& cj = detail::field(j, "category", "");
  fincat::CategoryFile cf;
  if (cj.is_string()) {
    if (!load) throw ParseError("category", "category references are not supported here");
    std::string body;
    try {
      body = load(cj.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError("category", e.what());
    }
    try {
      cf = fincat::read_category(body);
    } catch (const ParseError& e) {
      throw ParseError("category(" + cj.get<std::string>() + ")", e.what());
    }
  } else {
    cf = detail::category_from_json(cj, "category");
  }
  if (auto report = fincat::validate_category(cf.category); !report.ok())
    throw ParseError("category", "not a category: " + report.violations.front().law);
  DiagramFile out;
  out.weq = cf.weq;
  auto index = fincat::share(std::move(cf.category));
  const fincat::FinCategory& c = *index;
  ChainDiagram& x = out.diagram;
  x.index = index;
  const json& objects = detail::field(j, "objects", "");
  if (!objects.is_object()) throw ParseError("objects", "expected an object keyed by object name");
  for (auto it = objects.begin(); it != objects.end(); ++it)
    if (!c.find_object(it.key())) throw ParseError("objects." + it.key(), "unknown object");
  for (int o = 0; o < c.object_count(); ++o) {
    const std::string& name = c.object_name(o);
    auto it = objects.find(name);
    if (it == objects.end()) throw ParseError("objects." + name, "missing complex");
    x.objects.push_back(share(complex_from_body(*it, p, "objects." + name)));
  }
  const json& maps = detail::field(j, "maps", "");
  if (!maps.is_object()) throw ParseError("maps", "expected an object keyed by morphism name");
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    auto m = c.find_morphism(it.key());
    if (!m) throw ParseError("maps." + it.key(), "unknown morphism");
    if (c.is_identity(*m)) throw ParseError("maps." + it.key(), "identities are implied");
  }
  for (int m = 0; m < c.morphism_count(); ++m) {
    const std::string& name = c.morphism_name(m);
    const ComplexPtr& a = x.objects[c.source(m)];
    const ComplexPtr& b = x.objects[c.target(m)];
    if (c.is_identity(m)) {
      x.maps.push_back(ChainMap::identity(a));
      continue;
    }
    auto it = maps.find(name);
    if (it == maps.end()) throw ParseError("maps." + name, "missing map");
    x.maps.push_back(blocks_from_json(*it, a, b, "maps." + name));
  }
  if (auto v = diagram_violation(x); !v.empty()) throw ParseError("maps", v);
  return out;
}

std::string write_diagram(const ChainDiagram& x, const fincat::MorphismClass* weq,
                          const std::optional<std::string>& category_ref) {
  const fincat::FinCategory& c = *x.index;
  json j;
  j["kind"] = "diagram";
  j["prime"] = x.prime();
  if (category_ref)
    j["category"] = *category_ref;
  else
    j["category"] = detail::category_to_json(c, weq);
  json objects = json::object(), maps = json::object();
  for (int o = 0; o < c.object_count(); ++o) objects[c.object_name(o)] = complex_body(*x.objects[o]);
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) maps[c.morphism_name(m)] = blocks_to_json(x.maps[m]);
  j["objects"] = objects;
  j["maps"] = maps;
  return j.dump(2) + "\n";
}

}  // namespace coframes::chain
