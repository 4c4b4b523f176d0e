#include "coframes/chain/diagram.hpp"

#include "coframes/error.hpp"

namespace coframes::chain {

using fincat::FinCategory;

int ChainDiagram::prime() const {
  for (const auto& o : objects)
    if (o) return o->prime();
  return 2;
}

std::string diagram_violation(const ChainDiagram& x) {
  const FinCategory& c = *x.index;
  if (static_cast<int>(x.objects.size()) != c.object_count()) return "wrong number of objects";
  if (static_cast<int>(x.maps.size()) != c.morphism_count()) return "wrong number of maps";
  for (int m = 0; m < c.morphism_count(); ++m) {
    const ChainMap& f = x.maps[m];
    if (!(*f.source == *x.objects[c.source(m)]) || !(*f.target == *x.objects[c.target(m)]))
      return "map of '" + c.morphism_name(m) + "' has the wrong endpoints";
    if (auto v = chain_map_violation(f); !v.empty()) return "map of '" + c.morphism_name(m) + "': " + v;
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (!same_map(x.maps[c.identity(o)], ChainMap::identity(x.objects[o])))
      return "identity of '" + c.object_name(o) + "' is not sent to the identity";
  for (int o = 0; o < c.object_count(); ++o)
    for (int g : c.outgoing(o))
      for (int f : c.incoming(o)) {
        if (c.is_identity(f) || c.is_identity(g)) continue;
        if (!same_map(x.maps[c.composite(g, f)], ChainMap::compose(x.maps[g], x.maps[f])))
          return "composite " + c.morphism_name(g) + "∘" + c.morphism_name(f) + " not preserved";
      }
  return {};
}

ChainDiagram constant_diagram(const fincat::CategoryPtr& index, const ComplexPtr& x) {
  ChainDiagram d{index, std::vector<ComplexPtr>(index->object_count(), x), {}};
  d.maps.assign(index->morphism_count(), ChainMap::identity(x));
  return d;
}

ChainDiagram from_sequence(const fincat::CategoryPtr& ordinal, const std::vector<ComplexPtr>& xs,
                           const std::vector<ChainMap>& steps) {
  const FinCategory& c = *ordinal;
  if (static_cast<int>(xs.size()) != c.object_count() || steps.size() + 1 != xs.size())
    throw Error("from_sequence: sizes do not match the ordinal");
  ChainDiagram d{ordinal, xs, {}};
  for (int m = 0; m < c.morphism_count(); ++m) {
    ChainMap f = ChainMap::identity(xs[c.source(m)]);
    for (int k = c.source(m); k < c.target(m); ++k) f = ChainMap::compose(steps[k], f);
    f.source = xs[c.source(m)];
    f.target = xs[c.target(m)];
    d.maps.push_back(std::move(f));
  }
  return d;
}

ChainDiagram pullback(const ChainDiagram& x, const fincat::CatFunctor& f) {
  ChainDiagram d{f.source, {}, {}};
  for (int o : f.object_map) d.objects.push_back(x.objects[o]);
  for (int m : f.morphism_map) d.maps.push_back(x.maps[m]);
  return d;
}

bool same_diagram(const ChainDiagram& a, const ChainDiagram& b) {
  if (a.objects.size() != b.objects.size() || a.maps.size() != b.maps.size()) return false;
  for (std::size_t o = 0; o < a.objects.size(); ++o)
    if (!(*a.objects[o] == *b.objects[o])) return false;
  for (std::size_t m = 0; m < a.maps.size(); ++m)
    if (!same_map(a.maps[m], b.maps[m])) return false;
  return true;
}

std::string diagram_map_violation(const ChainDiagram& x, const ChainDiagram& y, const DiagramMap& f) {
  const FinCategory& c = *x.index;
  if (static_cast<int>(f.components.size()) != c.object_count()) return "wrong number of components";
  for (int o = 0; o < c.object_count(); ++o) {
    const ChainMap& g = f.components[o];
    if (!(*g.source == *x.objects[o]) || !(*g.target == *y.objects[o]))
      return "component at '" + c.object_name(o) + "' has the wrong endpoints";
    if (auto v = chain_map_violation(g); !v.empty()) return "component at '" + c.object_name(o) + "': " + v;
  }
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!same_map(ChainMap::compose(y.maps[m], f.components[c.source(m)]),
                  ChainMap::compose(f.components[c.target(m)], x.maps[m])))
      return "not natural at '" + c.morphism_name(m) + "'";
  return {};
}

DiagramMap identity_map(const ChainDiagram& x) {
  DiagramMap f;
  for (const auto& o : x.objects) f.components.push_back(ChainMap::identity(o));
  return f;
}

DiagramMap compose(const DiagramMap& second, const DiagramMap& first) {
  DiagramMap f;
  for (std::size_t o = 0; o < first.components.size(); ++o)
    f.components.push_back(ChainMap::compose(second.components[o], first.components[o]));
  return f;
}

DiagramMap pullback(const DiagramMap& f, const fincat::CatFunctor& functor, const ChainDiagram& xf,
                    const ChainDiagram& yf) {
  DiagramMap g;
  for (std::size_t o = 0; o < functor.object_map.size(); ++o) {
    ChainMap c = f.components[functor.object_map[o]];
    c.source = xf.objects[o];
    c.target = yf.objects[o];
    g.components.push_back(std::move(c));
  }
  return g;
}

bool is_levelwise_weq(const DiagramMap& f) {
  for (const auto& c : f.components)
    if (!is_quasi_iso(c)) return false;
  return true;
}

std::optional<int> homotopical_violation(const ChainDiagram& x, const fincat::MorphismClass& weq) {
  std::vector<Homology> h;
  for (const auto& o : x.objects) h.push_back(homology(*o));
  const FinCategory& c = *x.index;
  for (int m : weq.members()) {
    if (c.is_identity(m)) continue;
    if (!induced(x.maps[m], h[c.source(m)], h[c.target(m)]).is_iso()) return m;
  }
  return std::nullopt;
}

Colimit colimit_brute_force(const ChainDiagram& x) {
  const FinCategory& c = *x.index;
  const int p = x.prime();
  return quotient_of_sum(p, x.objects, [&](int n) {
    std::vector<int> offset{0};
    for (const auto& o : x.objects) offset.push_back(offset.back() + o->dim(n));
    Matrix rel(p, offset.back(), 0);
    for (int m = 0; m < c.morphism_count(); ++m) {
      if (c.is_identity(m)) continue;
      const int a = c.source(m), b = c.target(m);
      Matrix block(p, offset.back(), x.objects[a]->dim(n));
      block.paste(x.maps[m].at(n), offset[b], 0);
      Matrix minus = -Matrix::identity(p, x.objects[a]->dim(n));
      if (a == b) {
        block.paste(block.block(offset[a], 0, x.objects[a]->dim(n), x.objects[a]->dim(n)) + minus, offset[a], 0);
      } else {
        block.paste(minus, offset[a], 0);
      }
      rel = Matrix::hstack(rel, block);
    }
    return rel;
  });
}

}  // namespace coframes::chain
