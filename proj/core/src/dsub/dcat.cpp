#include "coframes/dsub/dcat.hpp"

#include <bit>

#include "coframes/error.hpp"
#include "coframes/sset/nerve.hpp"

namespace coframes::dsub {

using fincat::CatFunctor;
using fincat::FinCategory;
using fincat::MorphismClass;

namespace {

std::vector<int> bits_of(unsigned mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if (mask >> b & 1u) out.push_back(b);
  return out;
}

std::string mask_name(unsigned mask) {
  std::string s;
  for (int b : bits_of(mask)) s += std::to_string(b);
  return s;
}

const FinCategory& base_category_of(const DCat& d) {
  if (!d.base_category) throw Error("DCat has no base category");
  return *d.base_category;
}

// X(m) for a simplex X of the nerve of the base category.
int last_object(const DCat& d, int dim, int x) {
  const sset::Key& key = d.base->key(dim, x);
  return dim == 0 ? key[0] : d.base_category->target(key.back());
}

}  // namespace

int DCat::object_of(int dim, int simplex) const {
  if (dim < 0 || dim > cap) return -1;
  return object_index[dim][simplex];
}

int DCat::morphism(int target_object, unsigned mask) const {
  return first_morphism[target_object] + static_cast<int>(mask) - 1;
}

std::vector<int> DCat::inclusion(int m) const { return bits_of(image[m]); }

int DCat::top(int m) const { return static_cast<int>(std::bit_width(image[m])) - 1; }

DCat d_subdivision(const sset::SSetPtr& k, int cap) {
  if (cap < 0 || cap > k->cap()) throw Error("d_subdivision: cap must lie in [0, cap of the base]");
  if (cap > 20) throw Error("d_subdivision: cap too large");
  DCat d;
  d.base = k;
  d.cap = cap;
  FinCategory::Builder b;
  std::vector<std::string> names;
  d.object_index.resize(cap + 1);
  for (int n = 0; n <= cap; ++n)
    for (int s = 0; s < k->count(n); ++s) {
      d.object_index[n].push_back(static_cast<int>(d.objects.size()));
      d.objects.push_back({n, s});
      d.degree.degree.push_back(n);
      names.push_back("(" + std::to_string(n) + "," + k->name(n, s) + ")");
      b.add_object(names.back());
    }
  std::vector<int> target_of;
  for (int t = 0; t < static_cast<int>(d.objects.size()); ++t) {
    const auto [n, tau] = d.objects[t];
    d.first_morphism.push_back(b.morphism_count());
    const unsigned full = (1u << (n + 1)) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
      const std::vector<int> values = bits_of(mask);
      const int m = static_cast<int>(values.size()) - 1;
      const int src = d.object_of(m, k->pullback(n, tau, values));
      const int id = b.add_morphism(names[t] + "@" + mask_name(mask), src, t);
      d.image.push_back(mask);
      target_of.push_back(t);
      if (mask == full) b.set_identity(t, id);
    }
  }
  d.category = fincat::share(b.build([&](int g, int f) {
    const std::vector<int> outer = d.inclusion(g);
    unsigned mask = 0;
    for (int v : d.inclusion(f)) mask |= 1u << outer[v];
    return d.morphism(target_of[g], mask);
  }));
  d.weq = d_weak_equivalences(d);
  return d;
}

DCat d_subdivision(const fincat::CategoryPtr& c, int cap) {
  DCat d = d_subdivision(sset::share(sset::nerve(*c, cap)), cap);
  d.base_category = c;
  return d;
}

CatFunctor d_of_map(const DCat& dk, const DCat& dl, const sset::SimplicialMap& f) {
  if (dk.cap != dl.cap) throw Error("d_of_map: truncations differ");
  if (f.source->cap() < dk.cap) throw Error("d_of_map: map is truncated below the subdivision");
  CatFunctor out;
  out.source = dk.category;
  out.target = dl.category;
  for (const auto& [n, s] : dk.objects) out.object_map.push_back(dl.object_of(n, f(n, s)));
  for (int m = 0; m < dk.category->morphism_count(); ++m)
    out.morphism_map.push_back(dl.morphism(out.object_map[dk.category->target(m)], dk.image[m]));
  return out;
}

CatFunctor d_of_functor(const DCat& di, const DCat& dj, const CatFunctor& f) {
  return d_of_map(di, dj, sset::nerve_of_functor(f, di.base, dj.base));
}

int p_simplicial(const DCat& d, const std::vector<int>& chain, int object) {
  const FinCategory& c = *d.category;
  const int n = static_cast<int>(chain.size());
  const int last = n == 0 ? object : c.target(chain.back());
  if (last < 0) throw Error("p_simplicial: empty chain needs an object");
  for (int j = 0; j + 1 < n; ++j)
    if (c.target(chain[j]) != c.source(chain[j + 1])) throw Error("p_simplicial: chain is not composable");
  const auto [kn, sigma] = d.objects[last];
  std::vector<int> f(n + 1);
  f[n] = kn;
  int composite = c.identity(last);
  for (int j = n - 1; j >= 0; --j) {
    composite = c.composite(composite, chain[j]);
    f[j] = d.top(composite);
  }
  return d.base->pullback(kn, sigma, f);
}

sset::SimplicialMap p_simplicial_map(const DCat& d, const sset::SSetPtr& nd) {
  auto target = sset::share(sset::truncate(*d.base, nd->cap()));
  return sset::make_map(nd, target, [&](int dim, int s) {
    const sset::Key& key = nd->key(dim, s);
    return dim == 0 ? p_simplicial(d, {}, key[0]) : p_simplicial(d, key);
  });
}

int p_edge(const DCat& d, int morphism) { return p_simplicial(d, {morphism}); }

CatFunctor p_categorical(const DCat& d) {
  const FinCategory& base = base_category_of(d);
  CatFunctor p;
  p.source = d.category;
  p.target = d.base_category;
  for (const auto& [m, x] : d.objects) p.object_map.push_back(last_object(d, m, x));
  for (int i = 0; i < d.category->morphism_count(); ++i) {
    const auto [n, y] = d.objects[d.category->target(i)];
    const int from = d.top(i);
    if (from == n) {
      p.morphism_map.push_back(base.identity(last_object(d, n, y)));
    } else {
      p.morphism_map.push_back(d.base->key(1, d.base->edge(n, y, from, n))[0]);
    }
  }
  return p;
}

MorphismClass p_degenerate(const DCat& d) {
  MorphismClass s(d.category->morphism_count());
  // An injection hitting the top vertex has p-edge s_0 of a vertex; deciding
  // that without building the edge keeps cap 0 usable.
  for (int m = 0; m < d.category->morphism_count(); ++m)
    if (d.top(m) == d.dim(d.category->target(m)) || d.base->is_degenerate(1, p_edge(d, m))) s.insert(m);
  return s;
}

MorphismClass d_weak_equivalences(const DCat& d) {
  return fincat::closure(*d.category, p_degenerate(d), fincat::ClosureMode::TwoOfSix);
}

MorphismClass p_iso_class(const DCat& d) {
  return weq_created_by_p(d, MorphismClass::isomorphisms(base_category_of(d)));
}

MorphismClass weq_created_by_p(const DCat& d, const MorphismClass& base_weq) {
  const CatFunctor p = p_categorical(d);
  MorphismClass s(d.category->morphism_count());
  for (int m = 0; m < d.category->morphism_count(); ++m)
    if (base_weq.contains(p.morphism_map[m])) s.insert(m);
  return s;
}

CatFunctor frame_embedding_i(const DCat& dn) {
  const FinCategory& ord = base_category_of(dn);
  const int n = ord.object_count() - 1;
  if (dn.cap < n) throw Error("frame_embedding_i: cap below n");
  CatFunctor i;
  i.source = dn.base_category;
  i.target = dn.category;
  // The simplex 0 -> 1 -> ... -> a of N[n].
  for (int a = 0; a <= n; ++a) {
    sset::Key key;
    if (a == 0) key = {0};
    for (int v = 0; v < a; ++v) key.push_back(ord.hom(v, v + 1).at(0));
    auto s = dn.base->find(a, key);
    if (!s) throw Error("frame_embedding_i: base is not the nerve of an ordinal");
    i.object_map.push_back(dn.object_of(a, *s));
  }
  for (int m = 0; m < ord.morphism_count(); ++m) {
    const int a = ord.source(m);
    i.morphism_map.push_back(dn.morphism(i.object_map[ord.target(m)], (1u << (a + 1)) - 1));
  }
  return i;
}

CatFunctor projection_comparison(const DCat& dkl, const DCat& dk, const DCat& dl,
                                 const fincat::CategoryPtr& product) {
  if (dkl.cap != dk.cap || dk.cap != dl.cap) throw Error("projection_comparison: truncations differ");
  const int nl = dl.category->object_count();
  const int ml = dl.category->morphism_count();
  CatFunctor out;
  out.source = dkl.category;
  out.target = product;
  for (const auto& [n, s] : dkl.objects) {
    const sset::Key& pair = dkl.base->key(n, s);
    out.object_map.push_back(dk.object_of(n, pair[0]) * nl + dl.object_of(n, pair[1]));
  }
  for (int m = 0; m < dkl.category->morphism_count(); ++m) {
    const int t = out.object_map[dkl.category->target(m)];
    out.morphism_map.push_back(dk.morphism(t / nl, dkl.image[m]) * ml + dl.morphism(t % nl, dkl.image[m]));
  }
  return out;
}

}  // namespace coframes::dsub
