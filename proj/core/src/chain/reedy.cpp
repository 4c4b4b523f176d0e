#include "coframes/chain/reedy.hpp"

#include <map>

#include "coframes/error.hpp"

namespace coframes::chain {

using fincat::CatFunctor;
using fincat::FinCategory;
using fincat::MorphismClass;

namespace {

std::vector<int> degree_order(const FinCategory& c) {
  auto d = fincat::is_direct(c);
  if (!d) throw Error("index category is not direct");
  return fincat::objects_by_degree(*d);
}

bool is_iso(const ChainMap& f) {
  const int lo = common_lo(*f.source, *f.target), hi = common_hi(*f.source, *f.target);
  for (int n = lo; n <= hi; ++n) {
    const Matrix m = f.at(n);
    if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
  }
  return true;
}

// The map L_i X -> L_i Y induced by f.
ChainMap latching_of_map(const Latching& lx, const Latching& ly, const DiagramMap& f) {
  std::vector<ChainMap> cocone;
  for (std::size_t u = 0; u < lx.category.arrow.size(); ++u)
    cocone.push_back(ChainMap::compose(ly.colimit.legs[u], f.components[lx.category.forget.object_map[u]]));
  return lx.colimit.induce(ly.colimit.object, cocone);
}

}  // namespace

Latching latching_object(const ChainDiagram& x, int object) {
  Latching l;
  l.category = fincat::latching_category(x.index, object);
  const ChainDiagram restricted = pullback(x, l.category.forget);
  if (restricted.objects.empty()) {
    auto zero = share(ChainComplex::zero(x.prime()));
    l.colimit = coproduct(x.prime(), {});
    l.colimit.object = zero;
  } else {
    l.colimit = colimit_brute_force(restricted);
  }
  if (x.objects[object]) {
    std::vector<ChainMap> cocone;
    for (int f : l.category.arrow) cocone.push_back(x.maps[f]);
    l.map = l.colimit.induce(x.objects[object], cocone);
  }
  return l;
}

ReedyStatus reedy_cofibrant(const ChainDiagram& x) {
  for (int i : degree_order(*x.index)) {
    const Latching l = latching_object(x, i);
    if (!is_cofibration(*l.map))
      return {false, i, "latching map at '" + x.index->object_name(i) + "' is not injective"};
  }
  return {};
}

ReedyStatus reedy_cofibration(const ChainDiagram& x, const ChainDiagram& y, const DiagramMap& f) {
  for (int i : degree_order(*x.index)) {
    const Latching lx = latching_object(x, i);
    const Latching ly = latching_object(y, i);
    const Colimit po = pushout(*lx.map, latching_of_map(lx, ly, f));
    const ChainMap rel = po.induce(y.objects[i], {f.components[i], *ly.map});
    if (!is_cofibration(rel))
      return {false, i, "relative latching map at '" + x.index->object_name(i) + "' is not injective"};
  }
  return {};
}

ReedyColimit reedy_colimit(const ChainDiagram& x) {
  const FinCategory& c = *x.index;
  const int p = x.prime();
  if (auto s = reedy_cofibrant(x); !s.ok) throw Error("reedy_colimit: " + s.detail);
  auto d = *fincat::is_direct(c);

  ComplexPtr object = share(ChainComplex::zero(p));
  std::vector<std::optional<ChainMap>> legs(c.object_count());
  const std::vector<int> order = fincat::objects_by_degree(d);
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start;
    while (end < order.size() && d.degree[order[end]] == d.degree[order[start]]) ++end;

    std::vector<ComplexPtr> latch_objects, values;
    std::vector<ChainMap> latch_maps, to_current;
    for (std::size_t k = start; k < end; ++k) {
      const int i = order[k];
      const Latching l = latching_object(x, i);
      std::vector<ChainMap> cocone;
      for (int f : l.category.arrow) cocone.push_back(*legs[c.source(f)]);
      to_current.push_back(l.colimit.induce(object, cocone));
      latch_objects.push_back(l.colimit.object);
      latch_maps.push_back(*l.map);
      values.push_back(x.objects[i]);
    }
    const Colimit a = coproduct(p, latch_objects);
    const Colimit b = coproduct(p, values);
    const ChainMap iota = coproduct_map(latch_maps, a, b);
    const Colimit glued = pushout_along_cofibration(iota, a.induce(object, to_current));
    for (auto& leg : legs)
      if (leg) leg = ChainMap::compose(glued.legs[1], *leg);
    for (std::size_t k = start; k < end; ++k)
      legs[order[k]] = ChainMap::compose(glued.legs[0], b.legs[k - start]);
    object = glued.object;
    start = end;
  }
  ReedyColimit out{object, {}};
  for (auto& leg : legs) out.legs.push_back(*leg);
  return out;
}

std::string colimit_mismatch(const ChainDiagram& x, const ReedyColimit& col) {
  const FinCategory& c = *x.index;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!same_map(ChainMap::compose(col.legs[c.target(m)], x.maps[m]), col.legs[c.source(m)]))
      return "legs do not form a cocone at '" + c.morphism_name(m) + "'";
  const Colimit brute = colimit_brute_force(x);
  const ChainMap phi = brute.induce(col.object, col.legs);
  if (!is_iso(phi)) return "canonical map from the brute-force colimit is not an isomorphism";
  for (int o = 0; o < c.object_count(); ++o)
    if (!same_map(ChainMap::compose(phi, brute.legs[o]), col.legs[o]))
      return "canonical map does not respect the leg at '" + c.object_name(o) + "'";
  return {};
}

MorphismClass restrict_class(const CatFunctor& sieve, const MorphismClass& weq) {
  MorphismClass out(sieve.source->morphism_count());
  for (int m = 0; m < sieve.source->morphism_count(); ++m)
    if (weq.contains(sieve.morphism_map[m])) out.insert(m);
  return out;
}

CatFunctor empty_sieve(const fincat::CategoryPtr& c) {
  return CatFunctor{fincat::share(fincat::empty_category()), c, {}, {}};
}

std::vector<std::string> replacement_violations(const ChainDiagram& x, const MorphismClass& weq,
                                                const CatFunctor& sieve, const ChainDiagram& h,
                                                const DiagramMap& f, const Replacement& r) {
  std::vector<std::string> out;
  if (auto v = diagram_violation(r.diagram); !v.empty()) out.push_back("replacement is not a diagram: " + v);
  if (auto v = diagram_map_violation(r.diagram, x, r.g); !v.empty()) out.push_back("g is not natural: " + v);
  if (!out.empty()) return out;
  if (!same_diagram(pullback(r.diagram, sieve), h)) out.push_back("restriction to the sieve differs from H");
  for (std::size_t k = 0; k < sieve.object_map.size(); ++k)
    if (!same_map(r.g.components[sieve.object_map[k]], f.components[k])) {
      out.push_back("g does not restrict to f at '" + sieve.source->object_name(static_cast<int>(k)) + "'");
      break;
    }
  if (!is_levelwise_weq(r.g)) out.push_back("g is not a levelwise weak equivalence");
  if (auto s = reedy_cofibrant(r.diagram); !s.ok) out.push_back("not Reedy cofibrant: " + s.detail);
  if (auto m = homotopical_violation(r.diagram, weq))
    out.push_back("not homotopical at '" + x.index->morphism_name(*m) + "'");
  return out;
}

Replacement reedy_replace_rel(const ChainDiagram& x, const MorphismClass& weq, const CatFunctor& sieve,
                              const ChainDiagram& h, const DiagramMap& f, FactorStrategy strategy) {
  const FinCategory& c = *x.index;
  const std::vector<int> order = degree_order(c);
  if (sieve.target->object_count() != c.object_count() || sieve.target->morphism_count() != c.morphism_count())
    throw Error("reedy_replace_rel: sieve does not land in the index category");
  if (!fincat::is_sieve(sieve)) throw Error("reedy_replace_rel: functor is not a sieve");
  const ChainDiagram xi = pullback(x, sieve);
  if (auto v = diagram_violation(h); !h.objects.empty() && !v.empty()) throw Error("reedy_replace_rel: H: " + v);
  if (auto v = diagram_map_violation(h, xi, f); !v.empty()) throw Error("reedy_replace_rel: f: " + v);
  if (!is_levelwise_weq(f)) throw Error("reedy_replace_rel: f is not a levelwise weak equivalence");
  if (!h.objects.empty()) {
    if (auto s = reedy_cofibrant(h); !s.ok) throw Error("reedy_replace_rel: H is not Reedy cofibrant");
    if (homotopical_violation(h, restrict_class(sieve, weq)))
      throw Error("reedy_replace_rel: H is not homotopical");
  }
  if (auto m = homotopical_violation(x, weq))
    throw Error("reedy_replace_rel: X is not homotopical at '" + c.morphism_name(*m) + "'");

  Replacement r;
  // Identity shortcut: nothing to replace when X is already Reedy cofibrant
  // and (H, f) is X|_I with identities.
  bool compatible = true;
  for (std::size_t k = 0; k < h.objects.size() && compatible; ++k)
    compatible = same_map(f.components[k], ChainMap::identity(xi.objects[k]));
  if (compatible && same_diagram(h, xi) && reedy_cofibrant(x).ok) {
    r.diagram = x;
    r.g = identity_map(x);
    r.shortcut = true;
    return r;
  }

  r.diagram.index = x.index;
  r.diagram.objects.assign(c.object_count(), nullptr);
  r.diagram.maps.assign(c.morphism_count(), ChainMap{});
  r.g.components.assign(c.object_count(), ChainMap{});
  std::vector<char> in_sieve(c.object_count(), 0);
  for (std::size_t k = 0; k < sieve.object_map.size(); ++k) {
    const int j = sieve.object_map[k];
    in_sieve[j] = 1;
    r.diagram.objects[j] = h.objects[k];
    r.g.components[j] = f.components[k];
    r.g.components[j].target = x.objects[j];
  }
  for (std::size_t m = 0; m < sieve.morphism_map.size(); ++m) r.diagram.maps[sieve.morphism_map[m]] = h.maps[m];

  for (int j : order) {
    if (in_sieve[j]) continue;
    const Latching l = latching_object(r.diagram, j);
    std::vector<ChainMap> cocone;
    for (int u : l.category.arrow)
      cocone.push_back(ChainMap::compose(x.maps[u], r.g.components[c.source(u)]));
    const ChainMap canonical = l.colimit.induce(x.objects[j], cocone);
    const Factorization fac = strategy == FactorStrategy::Minimal ? factorize_minimal(canonical) : factorize(canonical);
    const ComplexPtr value = fac.i.target;
    r.diagram.objects[j] = value;
    r.g.components[j] = fac.q;
    r.diagram.maps[c.identity(j)] = ChainMap::identity(value);
    for (std::size_t u = 0; u < l.category.arrow.size(); ++u)
      r.diagram.maps[l.category.arrow[u]] = ChainMap::compose(fac.i, l.colimit.legs[u]);
  }

  if (auto v = replacement_violations(x, weq, sieve, h, f, r); !v.empty())
    throw Error("reedy_replace_rel: postcondition failed: " + v.front());
  return r;
}

Replacement reedy_replace(const ChainDiagram& x, const MorphismClass& weq, FactorStrategy strategy) {
  const CatFunctor none = empty_sieve(x.index);
  ChainDiagram h{none.source, {}, {}};
  return reedy_replace_rel(x, weq, none, h, DiagramMap{}, strategy);
}

}  // namespace coframes::chain
