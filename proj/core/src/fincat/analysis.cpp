#include "coframes/fincat/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "coframes/error.hpp"

namespace coframes::fincat {

namespace {

// Kahn's algorithm on the object digraph of non-identity morphisms.
// Returns the topological order, or the leftover objects when a cycle exists.
std::pair<std::vector<int>, bool> topological_order(const FinCategory& c) {
  const int n = c.object_count();
  std::vector<int> indeg(n, 0);
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m)) ++indeg[c.target(m)];
  std::vector<int> order;
  std::vector<int> stack;
  for (int x = n - 1; x >= 0; --x)
    if (indeg[x] == 0) stack.push_back(x);
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int m : c.outgoing(x)) {
      if (c.is_identity(m)) continue;
      if (--indeg[c.target(m)] == 0) stack.push_back(c.target(m));
    }
  }
  return {order, static_cast<int>(order.size()) == n};
}

}  // namespace

std::optional<DegreeAssignment> is_direct(const FinCategory& c) {
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m) && c.source(m) == c.target(m)) return std::nullopt;
  auto [order, acyclic] = topological_order(c);
  if (!acyclic) return std::nullopt;
  DegreeAssignment d;
  d.degree.assign(c.object_count(), 0);
  for (int x : order)
    for (int m : c.outgoing(x))
      if (!c.is_identity(m)) d.degree[c.target(m)] = std::max(d.degree[c.target(m)], d.degree[x] + 1);
  return d;
}

std::vector<int> directness_obstruction(const FinCategory& c) {
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m) && c.source(m) == c.target(m)) return {m};
  auto [order, acyclic] = topological_order(c);
  if (acyclic) return {};
  // Every leftover object lies on or behind a cycle among leftovers; walk
  // backwards along leftover non-identity morphisms until a repeat.
  std::vector<char> left(c.object_count(), 1);
  for (int x : order) left[x] = 0;
  int start = -1;
  for (int x = 0; x < c.object_count(); ++x)
    if (left[x]) {
      start = x;
      break;
    }
  std::vector<int> pos(c.object_count(), -1);
  std::vector<int> via;
  int x = start;
  while (pos[x] < 0) {
    pos[x] = static_cast<int>(via.size());
    int chosen = -1;
    for (int m : c.incoming(x))
      if (!c.is_identity(m) && left[c.source(m)]) {
        chosen = m;
        break;
      }
    via.push_back(chosen);
    x = c.source(chosen);
  }
  std::vector<int> cycle(via.begin() + pos[x], via.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::vector<int> objects_by_degree(const DegreeAssignment& d) {
  std::vector<int> order(d.degree.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.degree[a] < d.degree[b]; });
  return order;
}

LatchingCategory latching_category(const CategoryPtr& cp, int object) {
  const FinCategory& c = *cp;
  if (!is_direct(c)) throw Error("latching_category: category is not direct");

  LatchingCategory lc;
  std::map<int, int> obj_of_arrow;
  for (int f : c.incoming(object)) {
    if (c.is_identity(f)) continue;
    obj_of_arrow[f] = static_cast<int>(lc.arrow.size());
    lc.arrow.push_back(f);
  }

  FinCategory::Builder b;
  for (int f : lc.arrow) b.add_object(c.morphism_name(f));
  std::map<std::tuple<int, int, int>, int> index;  // (u, from, to)
  std::vector<std::tuple<int, int, int>> key;
  for (std::size_t a = 0; a < lc.arrow.size(); ++a) {
    const int f = lc.arrow[a];
    for (int u : c.outgoing(c.source(f))) {
      for (int g : c.hom(c.target(u), object)) {
        if (c.is_identity(g)) continue;
        if (c.composite(g, u) != f) continue;
        const int to = obj_of_arrow.at(g);
        std::string name = c.morphism_name(u) + ":" + c.morphism_name(f) + "->" + c.morphism_name(g);
        const int id = b.add_morphism(std::move(name), static_cast<int>(a), to);
        if (c.is_identity(u)) b.set_identity(static_cast<int>(a), id);
        index[{u, static_cast<int>(a), to}] = id;
        key.emplace_back(u, static_cast<int>(a), to);
        lc.underlying.push_back(u);
      }
    }
  }
  auto cat = b.build([&](int second, int first) {
    auto [u2, from2, to2] = key[second];
    auto [u1, from1, to1] = key[first];
    (void)from2;
    (void)to1;
    return index.at({c.composite(u2, u1), from1, to2});
  });
  lc.category = share(std::move(cat));
  lc.forget.source = lc.category;
  lc.forget.target = cp;
  for (int f : lc.arrow) lc.forget.object_map.push_back(c.source(f));
  lc.forget.morphism_map = lc.underlying;
  return lc;
}

std::vector<int> indecomposables(const FinCategory& c) {
  std::vector<char> decomposable(c.morphism_count(), 0);
  for (int x = 0; x < c.object_count(); ++x)
    for (int g : c.outgoing(x)) {
      if (c.is_identity(g)) continue;
      for (int f : c.incoming(x)) {
        if (c.is_identity(f)) continue;
        decomposable[c.composite(g, f)] = 1;
      }
    }
  std::vector<int> out;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!c.is_identity(m) && !decomposable[m]) out.push_back(m);
  return out;
}

namespace {

std::vector<int> factorization_counts(const FinCategory& c, const DegreeAssignment& d, int cap) {
  std::vector<char> indec(c.morphism_count(), 0);
  for (int m : indecomposables(c)) indec[m] = 1;
  std::vector<int> order = c.non_identities();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.degree[c.target(a)] - d.degree[c.source(a)] < d.degree[c.target(b)] - d.degree[c.source(b)];
  });
  std::vector<int> count(c.morphism_count(), 0);
  for (int m : order) {
    long total = indec[m] ? 1 : 0;
    // last letter g indecomposable, remainder h non-identity, g ∘ h = m
    for (int g : c.incoming(c.target(m))) {
      if (!indec[g]) continue;
      for (int h : c.hom(c.source(m), c.source(g))) {
        if (c.is_identity(h)) continue;
        if (c.composite(g, h) == m) total += count[h];
      }
    }
    count[m] = static_cast<int>(std::min<long>(total, cap));
  }
  return count;
}

}  // namespace

int factorization_count(const FinCategory& c, int m, int cap) {
  auto d = is_direct(c);
  if (!d) throw Error("factorization_count: category is not direct");
  if (c.is_identity(m)) return 1;
  return factorization_counts(c, *d, cap)[m];
}

std::optional<Quiver> is_free(const FinCategory& c) {
  // A finite free category has no non-identity cycles, hence is direct.
  auto d = is_direct(c);
  if (!d) return std::nullopt;
  auto counts = factorization_counts(c, *d, 2);
  for (int m : c.non_identities())
    if (counts[m] != 1) return std::nullopt;
  Quiver q;
  q.vertices = c.object_count();
  q.arrows = indecomposables(c);
  return q;
}

MorphismClass closure(const FinCategory& c, const MorphismClass& seed, ClosureMode mode) {
  MorphismClass s = seed;
  for (int x = 0; x < c.object_count(); ++x) s.insert(c.identity(x));
  bool changed = true;
  while (changed) {
    changed = false;
    if (mode == ClosureMode::TwoOfThree) {
      for (int x = 0; x < c.object_count(); ++x)
        for (int g : c.outgoing(x))
          for (int f : c.incoming(x)) {
            const int h = c.composite(g, f);
            const int members = s.contains(f) + s.contains(g) + s.contains(h);
            if (members >= 2) {
              changed |= s.insert(f);
              changed |= s.insert(g);
              changed |= s.insert(h);
            }
          }
    } else {
      for (int g = 0; g < c.morphism_count(); ++g) {
        std::vector<int> fs, hs;
        for (int f : c.incoming(c.source(g)))
          if (s.contains(c.composite(g, f))) fs.push_back(f);
        if (fs.empty()) continue;
        for (int h : c.outgoing(c.target(g)))
          if (s.contains(c.composite(h, g))) hs.push_back(h);
        if (hs.empty()) continue;
        changed |= s.insert(g);
        for (int f : fs) changed |= s.insert(f);
        for (int h : hs) {
          changed |= s.insert(h);
          for (int f : fs) changed |= s.insert(c.composite(h, c.composite(g, f)));
        }
      }
    }
  }
  return s;
}

std::vector<int> closure_violation(const FinCategory& c, const MorphismClass& s, ClosureMode mode) {
  for (int x = 0; x < c.object_count(); ++x)
    if (!s.contains(c.identity(x))) return {c.identity(x)};
  if (mode == ClosureMode::TwoOfThree) {
    for (int x = 0; x < c.object_count(); ++x)
      for (int g : c.outgoing(x))
        for (int f : c.incoming(x)) {
          const int h = c.composite(g, f);
          const int members = s.contains(f) + s.contains(g) + s.contains(h);
          if (members == 2) return {f, g};
        }
    return {};
  }
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f : c.incoming(c.source(g))) {
      if (!s.contains(c.composite(g, f))) continue;
      for (int h : c.outgoing(c.target(g))) {
        if (!s.contains(c.composite(h, g))) continue;
        if (!s.contains(f) || !s.contains(g) || !s.contains(h) ||
            !s.contains(c.composite(h, c.composite(g, f))))
          return {f, g, h};
      }
    }
  return {};
}

bool is_sieve(const CatFunctor& f) {
  std::vector<int> seen(f.target->object_count(), 0);
  for (int y : f.object_map) {
    if (seen[y]) throw Error("is_sieve: functor is not injective on objects");
    seen[y] = 1;
  }
  if (!is_fully_faithful(f)) throw Error("is_sieve: functor is not fully faithful");
  const FinCategory& t = *f.target;
  for (int y : f.object_map)
    for (int m : t.incoming(y))
      if (!seen[t.source(m)]) return false;
  return true;
}

CatFunctor full_subcategory(const CategoryPtr& cp, const std::vector<int>& objects) {
  const FinCategory& c = *cp;
  std::vector<int> local(c.object_count(), -1);
  FinCategory::Builder b;
  for (int x : objects) local[x] = b.add_object(c.object_name(x));
  std::vector<int> underlying;
  std::vector<int> local_m(c.morphism_count(), -1);
  for (int x : objects)
    for (int m : c.outgoing(x)) {
      if (local[c.target(m)] < 0) continue;
      local_m[m] = b.add_morphism(c.morphism_name(m), local[x], local[c.target(m)]);
      underlying.push_back(m);
    }
  for (int x : objects) b.set_identity(local[x], local_m[c.identity(x)]);
  CatFunctor inc;
  inc.source = share(b.build([&](int g, int f) {
    return local_m[c.composite(underlying[g], underlying[f])];
  }));
  inc.target = cp;
  inc.object_map = objects;
  inc.morphism_map = underlying;
  return inc;
}

}  // namespace coframes::fincat
