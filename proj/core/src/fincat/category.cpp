#include "coframes/fincat/category.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "coframes/error.hpp"

namespace coframes::fincat {

// ---------------------------------------------------------------------------
// FinCategory

int FinCategory::slot(int g, int f) const {
  const int x = tgt_[f];
  return pos_out_[g] * static_cast<int>(in_[x].size()) + pos_in_[f];
}

std::optional<int> FinCategory::compose(int g, int f) const {
  if (src_[g] != tgt_[f]) return std::nullopt;
  const int h = table_[tgt_[f]][slot(g, f)];
  if (h < 0) return std::nullopt;
  return h;
}

int FinCategory::composite(int g, int f) const {
  auto h = compose(g, f);
  if (!h)
    throw Error("composite undefined for (" + morphism_names_[g] + ", " +
                morphism_names_[f] + ")");
  return *h;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m : out_[a])
    if (tgt_[m] == b) out.push_back(m);
  return out;
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  for (int i = 0; i < object_count(); ++i)
    if (object_names_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> FinCategory::find_morphism(std::string_view name) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphism_names_[i] == name) return i;
  return std::nullopt;
}

std::vector<int> FinCategory::non_identities() const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (!is_identity(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Builder

int FinCategory::Builder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identity_.push_back(-1);
  return object_count() - 1;
}

int FinCategory::Builder::add_morphism(std::string name, int src, int tgt) {
  if (src < 0 || src >= object_count() || tgt < 0 || tgt >= object_count())
    throw Error("morphism '" + name + "' has an unknown endpoint");
  names_.push_back(std::move(name));
  src_.push_back(src);
  tgt_.push_back(tgt);
  return morphism_count() - 1;
}

int FinCategory::Builder::add_identity(int obj, std::string name) {
  if (name.empty()) name = "id_" + objects_.at(obj);
  const int m = add_morphism(std::move(name), obj, obj);
  identity_[obj] = m;
  return m;
}

void FinCategory::Builder::set_identity(int obj, int m) { identity_.at(obj) = m; }

void FinCategory::Builder::set_composite(int g, int f, int result) {
  composites_.push_back({g, f, result});
}

FinCategory FinCategory::Builder::allocate() const {
  FinCategory c;
  c.object_names_ = objects_;
  c.morphism_names_ = names_;
  c.src_ = src_;
  c.tgt_ = tgt_;
  c.identity_ = identity_;
  const int n = object_count();
  const int m = morphism_count();
  c.in_.assign(n, {});
  c.out_.assign(n, {});
  c.pos_in_.assign(m, 0);
  c.pos_out_.assign(m, 0);
  for (int k = 0; k < m; ++k) {
    c.pos_in_[k] = static_cast<int>(c.in_[tgt_[k]].size());
    c.in_[tgt_[k]].push_back(k);
    c.pos_out_[k] = static_cast<int>(c.out_[src_[k]].size());
    c.out_[src_[k]].push_back(k);
  }
  c.table_.resize(n);
  for (int x = 0; x < n; ++x) c.table_[x].assign(c.in_[x].size() * c.out_[x].size(), -1);
  return c;
}

FinCategory FinCategory::Builder::build() const {
  FinCategory c = allocate();
  for (const auto& t : composites_) {
    if (c.src_[t.g] != c.tgt_[t.f]) {
      c.stray_.push_back({t.g, t.f, t.h});
      continue;
    }
    c.table_[c.tgt_[t.f]][c.slot(t.g, t.f)] = t.h;
  }
  return c;
}

FinCategory FinCategory::Builder::build(const std::function<int(int, int)>& compose) const {
  FinCategory c = allocate();
  for (int x = 0; x < c.object_count(); ++x)
    for (int g : c.out_[x])
      for (int f : c.in_[x]) c.table_[x][c.slot(g, f)] = compose(g, f);
  return c;
}

// ---------------------------------------------------------------------------
// MorphismClass

MorphismClass::MorphismClass(int universe, std::span<const int> members)
    : member_(universe, 0) {
  for (int m : members) {
    if (m < 0 || m >= universe) throw Error("morphism class member out of range");
    member_[m] = 1;
  }
}

MorphismClass MorphismClass::identities(const FinCategory& c) {
  MorphismClass s(c.morphism_count());
  for (int x = 0; x < c.object_count(); ++x)
    if (c.identity(x) >= 0) s.insert(c.identity(x));
  return s;
}

MorphismClass MorphismClass::all(const FinCategory& c) {
  MorphismClass s(c.morphism_count());
  for (int m = 0; m < c.morphism_count(); ++m) s.insert(m);
  return s;
}

MorphismClass MorphismClass::isomorphisms(const FinCategory& c) {
  MorphismClass s(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g : c.hom(c.target(f), c.source(f))) {
      auto gf = c.compose(g, f);
      auto fg = c.compose(f, g);
      if (gf && fg && c.is_identity(*gf) && c.is_identity(*fg)) {
        s.insert(f);
        break;
      }
    }
  }
  return s;
}

bool MorphismClass::insert(int m) {
  if (member_.at(m)) return false;
  member_[m] = 1;
  return true;
}

std::vector<int> MorphismClass::members() const {
  std::vector<int> out;
  for (int m = 0; m < universe(); ++m)
    if (member_[m]) out.push_back(m);
  return out;
}

int MorphismClass::size() const {
  return static_cast<int>(std::count(member_.begin(), member_.end(), 1));
}

bool MorphismClass::subset_of(const MorphismClass& other) const {
  if (other.universe() != universe()) return false;
  for (int m = 0; m < universe(); ++m)
    if (member_[m] && !other.member_[m]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Functors

CatFunctor CatFunctor::identity(CategoryPtr c) {
  CatFunctor f;
  f.source = c;
  f.target = c;
  f.object_map.resize(c->object_count());
  f.morphism_map.resize(c->morphism_count());
  for (int i = 0; i < c->object_count(); ++i) f.object_map[i] = i;
  for (int i = 0; i < c->morphism_count(); ++i) f.morphism_map[i] = i;
  return f;
}

CatFunctor CatFunctor::compose(const CatFunctor& second, const CatFunctor& first) {
  CatFunctor f;
  f.source = first.source;
  f.target = second.target;
  f.object_map.resize(first.object_map.size());
  f.morphism_map.resize(first.morphism_map.size());
  for (std::size_t i = 0; i < first.object_map.size(); ++i)
    f.object_map[i] = second.object_map[first.object_map[i]];
  for (std::size_t i = 0; i < first.morphism_map.size(); ++i)
    f.morphism_map[i] = second.morphism_map[first.morphism_map[i]];
  return f;
}

std::string functor_violation(const CatFunctor& f) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  if (static_cast<int>(f.object_map.size()) != s.object_count() ||
      static_cast<int>(f.morphism_map.size()) != s.morphism_count())
    return "map sizes do not match the source category";
  for (int m = 0; m < s.morphism_count(); ++m) {
    const int fm = f.morphism_map[m];
    if (fm < 0 || fm >= t.morphism_count()) return "morphism " + s.morphism_name(m) + " unmapped";
    if (t.source(fm) != f.object_map[s.source(m)] || t.target(fm) != f.object_map[s.target(m)])
      return "endpoints of " + s.morphism_name(m) + " not preserved";
  }
  for (int x = 0; x < s.object_count(); ++x)
    if (f.morphism_map[s.identity(x)] != t.identity(f.object_map[x]))
      return "identity of " + s.object_name(x) + " not preserved";
  for (int x = 0; x < s.object_count(); ++x)
    for (int g : s.outgoing(x))
      for (int h : s.incoming(x)) {
        const int gh = s.composite(g, h);
        auto image = t.compose(f.morphism_map[g], f.morphism_map[h]);
        if (!image || *image != f.morphism_map[gh])
          return "composite (" + s.morphism_name(g) + ", " + s.morphism_name(h) +
                 ") not preserved";
      }
  return {};
}

bool is_fully_faithful(const CatFunctor& f) {
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  for (int a = 0; a < s.object_count(); ++a)
    for (int b = 0; b < s.object_count(); ++b) {
      auto src = s.hom(a, b);
      auto tgt = t.hom(f.object_map[a], f.object_map[b]);
      if (src.size() != tgt.size()) return false;
      std::vector<int> images;
      for (int m : src) images.push_back(f.morphism_map[m]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
  return true;
}

bool is_homotopical(const CatFunctor& f, const MorphismClass& source_weq,
                    const MorphismClass& target_weq) {
  for (int m : source_weq.members())
    if (!target_weq.contains(f.morphism_map[m])) return false;
  return true;
}

bool same_maps(const CatFunctor& a, const CatFunctor& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport r;
  auto name = [&](int m) { return c.morphism_name(m); };

  {
    std::map<std::string, int> seen;
    for (int m = 0; m < c.morphism_count(); ++m)
      if (!seen.emplace(name(m), m).second)
        r.violations.push_back({"unique morphism ids", {name(m)}});
  }
  for (const auto& s : c.stray_composites())
    r.violations.push_back({"composite defined on a non-composable pair", {name(s.g), name(s.f)}});

  bool identities_ok = true;
  for (int x = 0; x < c.object_count(); ++x) {
    const int e = c.identity(x);
    if (e < 0) {
      r.violations.push_back({"identity exists", {c.object_name(x)}});
      identities_ok = false;
    } else if (c.source(e) != x || c.target(e) != x) {
      r.violations.push_back({"identity is an endomorphism", {c.object_name(x), name(e)}});
      identities_ok = false;
    }
  }

  bool table_ok = true;
  for (int x = 0; x < c.object_count(); ++x)
    for (int g : c.outgoing(x))
      for (int f : c.incoming(x)) {
        auto h = c.compose(g, f);
        if (!h) {
          r.violations.push_back({"composite defined on every composable pair", {name(g), name(f)}});
          table_ok = false;
        } else if (*h < 0 || *h >= c.morphism_count() || c.source(*h) != c.source(f) ||
                   c.target(*h) != c.target(g)) {
          r.violations.push_back({"composite has the right endpoints", {name(g), name(f)}});
          table_ok = false;
        }
      }
  if (!table_ok) return r;

  if (identities_ok) {
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.composite(c.identity(c.target(f)), f) != f)
        r.violations.push_back({"left identity law", {name(f)}});
      if (c.composite(f, c.identity(c.source(f))) != f)
        r.violations.push_back({"right identity law", {name(f)}});
    }
  }

  for (int y = 0; y < c.object_count(); ++y)
    for (int g : c.incoming(y))
      for (int h : c.outgoing(y))
        for (int f : c.incoming(c.source(g))) {
          // (h g) f == h (g f)
          const int left = c.composite(c.composite(h, g), f);
          const int right = c.composite(h, c.composite(g, f));
          if (left != right) r.violations.push_back({"associativity", {name(h), name(g), name(f)}});
        }
  return r;
}

// ---------------------------------------------------------------------------
// Products

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  FinCategory::Builder b;
  const int dn = d.object_count();
  const int dm = d.morphism_count();
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < dn; ++y) b.add_object("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < dm; ++g)
      b.add_morphism("(" + c.morphism_name(f) + "," + d.morphism_name(g) + ")",
                     c.source(f) * dn + d.source(g), c.target(f) * dn + d.target(g));
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < dn; ++y) b.set_identity(x * dn + y, c.identity(x) * dm + d.identity(y));
  return b.build([&](int g, int f) {
    return c.composite(g / dm, f / dm) * dm + d.composite(g % dm, f % dm);
  });
}

CatFunctor product_projection(const CategoryPtr& product, const CategoryPtr& c,
                              const CategoryPtr& d, int which) {
  CatFunctor p;
  p.source = product;
  p.target = which == 0 ? c : d;
  const int dn = d->object_count();
  const int dm = d->morphism_count();
  p.object_map.resize(product->object_count());
  p.morphism_map.resize(product->morphism_count());
  for (int i = 0; i < product->object_count(); ++i) p.object_map[i] = which == 0 ? i / dn : i % dn;
  for (int i = 0; i < product->morphism_count(); ++i)
    p.morphism_map[i] = which == 0 ? i / dm : i % dm;
  return p;
}

MorphismClass product_class(const FinCategory& c, const MorphismClass& wc, const FinCategory& d,
                            const MorphismClass& wd) {
  const int dm = d.morphism_count();
  MorphismClass s(c.morphism_count() * dm);
  for (int f : wc.members())
    for (int g : wd.members()) s.insert(f * dm + g);
  return s;
}

// ---------------------------------------------------------------------------
// Standard categories

FinCategory poset(int n, const std::vector<std::pair<int, int>>& relations) {
  // reflexive-transitive closure
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) le[i][i] = 1;
  for (auto [a, b] : relations) le.at(a).at(b) = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (le[i][k])
        for (int j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw Error("poset relations contain a cycle");

  FinCategory::Builder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) {
        if (i == j)
          id[i][j] = b.add_identity(i);
        else
          id[i][j] = b.add_morphism(std::to_string(i) + "->" + std::to_string(j), i, j);
      }
  std::vector<int> src, tgt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) {
        src.push_back(i);
        tgt.push_back(j);
      }
  // morphism index order matches the (i, j) scan above
  return b.build([&](int g, int f) { return id[src[f]][tgt[g]]; });
}

FinCategory ordinal(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) rel.emplace_back(i, i + 1);
  return poset(n + 1, rel);
}

FinCategory discrete(int n) { return poset(n, {}); }

FinCategory empty_category() { return FinCategory::Builder{}.build(); }

FinCategory commutative_square() {
  FinCategory sq = product_category(ordinal(1), ordinal(1));
  return sq;
}

FinCategory zigzag() {
  return free_category(4, {{0, 1}, {2, 1}, {2, 3}}, {"A", "B", "C", "D"}, {"a", "w", "c"});
}

FinCategory free_category(int vertices, const std::vector<std::pair<int, int>>& arrows,
                          const std::vector<std::string>& vertex_names,
                          const std::vector<std::string>& arrow_names) {
  // Enumerate paths; a path is a sequence of arrow indices, first arrow applied first.
  std::vector<std::vector<int>> out(vertices);
  for (std::size_t a = 0; a < arrows.size(); ++a) out.at(arrows[a].first).push_back(static_cast<int>(a));

  auto vname = [&](int v) {
    return vertex_names.empty() ? std::to_string(v) : vertex_names.at(v);
  };
  auto aname = [&](int a) {
    if (!arrow_names.empty()) return arrow_names.at(a);
    return a < 26 ? std::string(1, static_cast<char>('a' + a)) : "e" + std::to_string(a);
  };

  FinCategory::Builder b;
  for (int v = 0; v < vertices; ++v) b.add_object(vname(v));
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> paths;
  std::vector<int> path_src;
  for (int v = 0; v < vertices; ++v) {
    const int id = b.add_identity(v);
    index[{-1 - v}] = id;
    paths.push_back({});
    path_src.push_back(v);
  }
  // BFS by length; a path longer than the vertex count means a cycle.
  std::vector<std::vector<int>> frontier;
  for (std::size_t a = 0; a < arrows.size(); ++a) frontier.push_back({static_cast<int>(a)});
  int length = 1;
  while (!frontier.empty()) {
    if (length > vertices) throw Error("free_category: quiver has a directed cycle");
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      std::string nm;
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!nm.empty()) nm += ".";
        nm += aname(*it);
      }
      const int src = arrows[p.front()].first;
      const int tgt = arrows[p.back()].second;
      index[p] = b.add_morphism(nm, src, tgt);
      paths.push_back(p);
      path_src.push_back(src);
      for (int a : out[tgt]) {
        auto q = p;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    ++length;
  }
  return b.build([&](int g, int f) {
    if (paths[f].empty()) return g;
    if (paths[g].empty()) return f;
    auto p = paths[f];
    p.insert(p.end(), paths[g].begin(), paths[g].end());
    return index.at(p);
  });
}

}  // namespace coframes::fincat
