#include "properties.hpp"

#include <functional>
#include <optional>

#include "checks.hpp"
#include "coframes/chain/exact.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/error.hpp"
#include "coframes/frames/comparison.hpp"
#include "coframes/frames/frames.hpp"
#include "coframes/sset/nerve.hpp"

namespace coframes::cli {

using namespace chain;
using fincat::FinCategory;
using fincat::MorphismClass;

namespace {

using Failure = std::optional<std::string>;

std::string size_text(const Size& z) {
  return "degrees=" + std::to_string(z.degrees) + " dim=" + std::to_string(z.dim) +
         " objects=" + std::to_string(z.objects);
}

// --- independent oracles -------------------------------------------------

// Homology dimension of the mapping cone in every degree, by rank-nullity.
bool cone_acyclic(const ChainMap& f) {
  const ChainComplex& x = *f.source;
  const ChainComplex& y = *f.target;
  const int p = x.prime();
  const int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi()) + 1;
  // C_n = X_{n-1} ⊕ Y_n, d(x, y) = (-dx, f x + dy).
  auto d = [&](int n) {
    Matrix m(p, x.dim(n - 2) + y.dim(n - 1), x.dim(n - 1) + y.dim(n));
    m.paste(-x.d(n - 1), 0, 0);
    m.paste(f.at(n - 1), x.dim(n - 2), 0);
    m.paste(y.d(n), x.dim(n - 2), x.dim(n - 1));
    return m;
  };
  for (int n = lo - 1; n <= hi + 1; ++n) {
    const int dim = x.dim(n - 1) + y.dim(n);
    if (dim != d(n).rank() + d(n + 1).rank()) return false;
  }
  return true;
}

bool injective(const ChainMap& f) {
  for (int n = f.source->lo(); n <= f.source->hi(); ++n)
    if (f.at(n).rank() != f.source->dim(n)) return false;
  return true;
}

// Every composite defined with the right endpoints, identity and associativity laws.
bool laws_hold(const FinCategory& c) {
  if (!c.stray_composites().empty()) return false;
  for (int o = 0; o < c.object_count(); ++o)
    if (c.identity(o) < 0 || c.source(c.identity(o)) != o || c.target(c.identity(o)) != o) return false;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.outgoing(c.target(f))) {
      const auto gf = c.compose(g, f);
      if (!gf || c.source(*gf) != c.source(f) || c.target(*gf) != c.target(g)) return false;
    }
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.compose(f, c.identity(c.source(f))) != f || c.compose(c.identity(c.target(f)), f) != f) return false;
    for (int g : c.outgoing(c.target(f)))
      for (int h : c.outgoing(c.target(g)))
        if (c.compose(h, *c.compose(g, f)) != c.compose(*c.compose(h, g), f)) return false;
  }
  return true;
}

ComplexPtr complex_of(Rng& rng, int p, const Size& z) {
  return share(random_complex(rng, p, 0, z.degrees - 1, z.dim));
}

fincat::CategoryPtr category_of(Rng& rng, const Size& z) {
  return fincat::share(random_direct_category(rng, z.objects));
}

// A map that is a quasi-isomorphism, a cofibration, or arbitrary.
ChainMap mixed_map(Rng& rng, int p, const Size& z) {
  const auto x = complex_of(rng, p, z);
  switch (uniform(rng, 3)) {
    case 0: return random_quasi_iso(rng, x);
    case 1: return factorize(random_chain_map(rng, x, complex_of(rng, p, z))).i;
    default: return random_chain_map(rng, x, complex_of(rng, p, z));
  }
}

std::vector<Property> properties(const SuiteConfig& cfg, int& mutations_detected, int& premises) {
  const int p = cfg.prime;
  const int budget = cfg.budget;
  const auto strategy = cfg.strategy;
  std::vector<Property> ps;

  // fincat
  ps.push_back({"fincat", "validate_category accepts product and subdivision categories",
                [](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  if (auto r = fincat::validate_category(fincat::product_category(*c, *c)); !r.ok())
                    return "product: " + r.violations[0].law;
                  const dsub::DCat d = dsub::d_subdivision(c, 2);
                  if (auto r = fincat::validate_category(*d.category); !r.ok()) return "D(C): " + r.violations[0].law;
                  return {};
                }});
  ps.push_back({"fincat", "is_direct degrees strictly increase along non-identities",
                [](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  const auto d = fincat::is_direct(*c);
                  if (!d) return "a direct category was rejected";
                  for (int m : c->non_identities())
                    if (d->degree[c->source(m)] >= d->degree[c->target(m)]) return "degree does not rise along " + c->morphism_name(m);
                  if (!fincat::directness_obstruction(*c).empty()) return "obstruction reported for a direct category";
                  return {};
                }});
  ps.push_back({"fincat", "closure is extensive, idempotent and monotone; 2-out-of-3 output is closed",
                [](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  MorphismClass s(c->morphism_count()), t(c->morphism_count());
                  for (int m = 0; m < c->morphism_count(); ++m)
                    if (uniform(rng, 3) == 0) {
                      s.insert(m);
                      if (uniform(rng, 2) == 0) t.insert(m);
                    }
                  for (auto mode : {fincat::ClosureMode::TwoOfThree, fincat::ClosureMode::TwoOfSix}) {
                    const std::string tag = mode == fincat::ClosureMode::TwoOfSix ? "2-out-of-6: " : "2-out-of-3: ";
                    const MorphismClass cs = fincat::closure(*c, s, mode);
                    if (!s.subset_of(cs) || !MorphismClass::identities(*c).subset_of(cs)) return tag + "not extensive";
                    if (!(fincat::closure(*c, cs, mode) == cs)) return tag + "not idempotent";
                    if (!fincat::closure(*c, t, mode).subset_of(cs)) return tag + "not monotone";
                    if (!fincat::closure_violation(*c, cs, mode).empty()) return tag + "output not closed";
                  }
                  return {};
                }});
  ps.push_back({"fincat", "is_free agrees with unique factorization into indecomposables",
                [](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  bool unique = true;
                  for (int m : c->non_identities()) unique = unique && fincat::factorization_count(*c, m) == 1;
                  const auto q = fincat::is_free(*c);
                  if (q.has_value() != unique) return std::string("is_free says ") + (q ? "free" : "not free");
                  if (!q) return {};
                  std::vector<std::pair<int, int>> arrows;
                  for (int m : q->arrows) arrows.push_back({c->source(m), c->target(m)});
                  const FinCategory f = fincat::free_category(c->object_count(), arrows);
                  for (int a = 0; a < c->object_count(); ++a)
                    for (int b = 0; b < c->object_count(); ++b)
                      if (f.hom(a, b).size() != c->hom(a, b).size()) return "regenerated hom sizes differ";
                  return {};
                }});
  ps.push_back({"fincat", "latching category is empty iff no non-identity arrives",
                [](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  for (int o = 0; o < c->object_count(); ++o) {
                    bool incoming = false;
                    for (int m : c->incoming(o)) incoming = incoming || !c->is_identity(m);
                    const bool empty = fincat::latching_category(c, o).category->object_count() == 0;
                    if (empty == incoming) return "at " + c->object_name(o);
                  }
                  return {};
                }});
  ps.push_back({"fincat", "compose-table mutations are caught by validate_category",
                [&mutations_detected](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  std::vector<std::pair<int, int>> pairs;
                  for (int f = 0; f < c->morphism_count(); ++f)
                    for (int g : c->outgoing(c->target(f))) pairs.push_back({g, f});
                  const auto [g0, f0] = pairs[uniform(rng, static_cast<int>(pairs.size()))];
                  const int original = *c->compose(g0, f0);
                  if (c->morphism_count() < 2) return {};
                  int r = uniform(rng, c->morphism_count() - 1);
                  if (r >= original) ++r;
                  FinCategory::Builder b;
                  for (int o = 0; o < c->object_count(); ++o) b.add_object(c->object_name(o));
                  for (int m = 0; m < c->morphism_count(); ++m)
                    b.add_morphism(c->morphism_name(m), c->source(m), c->target(m));
                  for (int o = 0; o < c->object_count(); ++o) b.set_identity(o, c->identity(o));
                  const FinCategory mutated =
                      b.build([&](int g, int f) { return g == g0 && f == f0 ? r : *c->compose(g, f); });
                  const bool valid = fincat::validate_category(mutated).ok();
                  const bool oracle = laws_hold(mutated);
                  if (!valid) ++mutations_detected;
                  if (valid != oracle)
                    return c->morphism_name(g0) + "∘" + c->morphism_name(f0) + " := " + c->morphism_name(r) +
                           (valid ? " breaks a law but was accepted" : " keeps the laws but was rejected");
                  return {};
                }});

  // sset
  ps.push_back({"sset", "rank filtration of N(hK) for 1-skeletal K on a DAG",
                [budget](Rng& rng, const Size& z) -> Failure {
                  const int v = std::min(z.objects, 4);
                  std::vector<std::pair<int, int>> edges;
                  const int e = uniform(rng, std::min(z.dim, 4) + 1);
                  for (int k = 0; k < e && v > 1; ++k) {
                    const int a = uniform(rng, v - 1);
                    edges.push_back({a, a + 1 + uniform(rng, v - 1 - a)});
                  }
                  const auto k = sset::share(sset::one_skeletal(v, edges, 3));
                  const sset::UnitMap u = sset::unit_map(k, budget);
                  if (auto w = sset::simplicial_map_violation(u.map); !w.empty()) return "unit: " + w;
                  for (int n = 1; n <= 3; ++n)
                    if (auto pv = sset::verify_rank_pushout(u, n); !pv.ok) return "pushout n=" + std::to_string(n) + ": " + pv.witness;
                  for (int d = 0; d <= 3; ++d)
                    if (auto o = factorization_uniqueness(u, d); !o.pass) return o.witness;
                  for (const Outcome& o : {rank_restriction(u), filtration_exhausts(u)})
                    if (!o.pass) return o.name + ": " + o.witness;
                  return {};
                }});
  ps.push_back({"sset", "homotopy category of a nerve is the category",
                [budget](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  const sset::TruncatedSSet n = sset::nerve(*c, 2);
                  const sset::HomotopyCategory hk = sset::homotopy_category(n, budget);
                  if (!hk.stabilized()) return "saturation did not stabilize";
                  const FinCategory& h = hk.category();
                  fincat::CatFunctor back{fincat::share(h), c, {}, {}};
                  for (int o = 0; o < h.object_count(); ++o) back.object_map.push_back(n.key(0, o)[0]);
                  for (int m = 0; m < h.morphism_count(); ++m) {
                    const fincat::Word& w = hk.presented.representative[m];
                    int x = c->identity(back.object_map[w.start]);
                    for (int l : w.letters) x = c->composite(n.key(1, hk.letter_edge[l])[0], x);
                    back.morphism_map.push_back(x);
                  }
                  if (auto v = fincat::functor_violation(back); !v.empty()) return "hN(C) -> C: " + v;
                  if (h.object_count() != c->object_count() || h.morphism_count() != c->morphism_count())
                    return "sizes differ";
                  std::vector<char> hit(c->morphism_count(), 0);
                  for (int m : back.morphism_map) hit[m] = 1;
                  for (char x : hit)
                    if (!x) return "hN(C) -> C is not bijective on morphisms";
                  return {};
                }});

  // dsub
  ps.push_back({"dsub", "D(C) is direct with the dimension degree", [](Rng& rng, const Size& z) -> Failure {
                  const dsub::DCat d = dsub::d_subdivision(category_of(rng, z), 2);
                  if (!fincat::is_direct(*d.category)) return "not direct";
                  for (int m : d.category->non_identities())
                    if (d.dim(d.category->source(m)) >= d.dim(d.category->target(m)))
                      return "dimension does not rise along " + d.category->morphism_name(m);
                  return {};
                }});
  ps.push_back({"dsub", "weak equivalences of D(C) equal the p-iso class", [](Rng& rng, const Size& z) -> Failure {
                  const dsub::DCat d = dsub::d_subdivision(category_of(rng, z), 2);
                  if (!(dsub::d_weak_equivalences(d) == dsub::p_iso_class(d))) return "classes differ";
                  return {};
                }});
  ps.push_back({"dsub", "latching categories of D(C) sit in lower dimension", [](Rng& rng, const Size& z) -> Failure {
                  const dsub::DCat d = dsub::d_subdivision(category_of(rng, z), 2);
                  for (int o = 0; o < d.category->object_count(); ++o) {
                    const auto l = fincat::latching_category(d.category, o);
                    for (int u : l.arrow)
                      if (d.dim(d.category->source(u)) >= d.dim(o)) return "at " + d.category->object_name(o);
                  }
                  return {};
                }});
  ps.push_back({"dsub", "p is natural; D(f) homotopical, and a sieve for injective f",
                [](Rng& rng, const Size& z) -> Failure {
                  const int cap = 2;
                  const int m = uniform(rng, std::min(z.dim, 3)), n = uniform(rng, std::min(z.dim, 3));
                  std::vector<int> g(m + 1);
                  for (int& x : g) x = uniform(rng, n + 1);
                  std::sort(g.begin(), g.end());
                  const auto k = sset::share(sset::standard_simplex(m, cap));
                  const auto l = sset::share(sset::standard_simplex(n, cap));
                  auto along_g = [&](const sset::SSetPtr& from, const sset::SSetPtr& to) {
                    return sset::make_map(from, to, [&, from, to](int d, int s) {
                      sset::Key key = from->key(d, s);
                      for (int& x : key) x = g[x];
                      return *to->find(d, key);
                    });
                  };
                  const sset::SimplicialMap f = along_g(k, l);
                  const dsub::DCat dk = dsub::d_subdivision(k, cap), dl = dsub::d_subdivision(l, cap);
                  const fincat::CatFunctor df = dsub::d_of_map(dk, dl, f);
                  if (!fincat::is_homotopical(df, dk.weq, dl.weq)) return "D(f) is not homotopical";
                  const bool inj = std::adjacent_find(g.begin(), g.end()) == g.end();
                  if (inj && !fincat::is_sieve(df)) return "D(f) of an injective f is not a sieve";
                  const auto nk = sset::share(sset::nerve(*dk.category, cap));
                  const auto nl = sset::share(sset::nerve(*dl.category, cap));
                  const sset::SimplicialMap ndf = sset::nerve_of_functor(df, nk, nl);
                  const sset::SimplicialMap pk = dsub::p_simplicial_map(dk, nk), pl = dsub::p_simplicial_map(dl, nl);
                  const sset::SimplicialMap ft = along_g(pk.target, pl.target);
                  for (int d = 0; d <= cap; ++d)
                    for (int s = 0; s < nk->count(d); ++s)
                      if (pl(d, ndf(d, s)) != ft(d, pk(d, s))) return "p∘N(Df) != f∘p at " + nk->name(d, s);
                  return {};
                }});

  // chaincof
  ps.push_back({"chaincof", "d∘d = 0", [p](Rng& rng, const Size& z) -> Failure {
                  const auto x = complex_of(rng, p, z);
                  for (int n = x->lo(); n <= x->hi() + 1; ++n)
                    if (!(x->d(n - 1) * x->d(n)).is_zero()) return "at degree " + std::to_string(n);
                  return {};
                }});
  ps.push_back({"chaincof", "classify_map agrees with the cone and rank oracles", [p](Rng& rng, const Size& z) -> Failure {
                  const ChainMap f = mixed_map(rng, p, z);
                  const MapClass c = classify_map(f);
                  const bool weq = cone_acyclic(f), cof = injective(f);
                  if (c.is_weq != weq) return std::string("is_weq ") + (c.is_weq ? "true" : "false") + ", cone says otherwise";
                  if (c.is_cofibration != cof) return "is_cofibration disagrees with degreewise rank";
                  if (c.is_acyclic_cofibration != (weq && cof)) return "is_acyclic_cofibration inconsistent";
                  return {};
                }});
  ps.push_back({"chaincof", "factorizations are (cofibration, quasi-isomorphism) with q∘i = f",
                [p](Rng& rng, const Size& z) -> Failure {
                  const ChainMap f = random_chain_map(rng, complex_of(rng, p, z), complex_of(rng, p, z));
                  for (bool minimal : {false, true}) {
                    const Factorization fac = minimal ? factorize_minimal(f) : factorize(f);
                    const std::string how = minimal ? "minimal: " : "cylinder: ";
                    if (!same_map(ChainMap::compose(fac.q, fac.i), f)) return how + "q∘i != f";
                    if (!injective(fac.i)) return how + "i not injective";
                    if (!cone_acyclic(fac.q)) return how + "q not a quasi-isomorphism";
                  }
                  return {};
                }});
  ps.push_back({"chaincof", "pushouts of (acyclic) cofibrations are (acyclic) cofibrations",
                [p](Rng& rng, const Size& z) -> Failure {
                  const auto a = complex_of(rng, p, z);
                  const bool acyclic = uniform(rng, 2) == 0;
                  const ChainMap i = acyclic ? random_quasi_iso(rng, a)
                                             : factorize(random_chain_map(rng, a, complex_of(rng, p, z))).i;
                  const ChainMap g = random_chain_map(rng, a, complex_of(rng, p, z));
                  const Colimit po = pushout(i, g);
                  const ChainMap& j = po.legs[1];
                  if (!injective(j)) return "j is not a cofibration";
                  if (acyclic && !cone_acyclic(j)) return "j is not acyclic";
                  return {};
                }});
  ps.push_back({"chaincof", "inductive Reedy colimit equals the coequalizer colimit",
                [p](Rng& rng, const Size& z) -> Failure {
                  const auto c = category_of(rng, z);
                  const ChainDiagram x = random_reedy_cofibrant(rng, c, p, z.dim * z.degrees + 2);
                  if (auto m = colimit_mismatch(x, reedy_colimit(x)); !m.empty()) return m;
                  if (auto m = colimit_preservation_failure(ExactFunctor::tensor(2), x); !m.empty()) return "⊗F_p²: " + m;
                  return {};
                }});
  ps.push_back({"chaincof", "reedy_replace postconditions", [p, strategy](Rng& rng, const Size& z) -> Failure {
                  ChainDiagram x;
                  MorphismClass weq;
                  if (uniform(rng, 2) == 0) {
                    const auto c = category_of(rng, z);
                    x = constant_diagram(c, complex_of(rng, p, z));
                    weq = MorphismClass::all(*c);
                  } else {
                    const int n = 1 + uniform(rng, 2);
                    const dsub::DCat d = dsub::d_subdivision(fincat::share(fincat::ordinal(n)), 2);
                    x = pullback(random_sequence(rng, d.base_category, p, z.dim), dsub::p_categorical(d));
                    weq = d.weq;
                  }
                  const auto none = empty_sieve(x.index);
                  const Replacement r = reedy_replace(x, weq, strategy);
                  for (const Outcome& o : replacement_postconditions(x, weq, none, {none.source, {}, {}}, {}, r))
                    if (!o.pass) return o.name + ": " + o.witness;
                  return {};
                }});
  ps.push_back({"chaincof", "quasi-isomorphisms satisfy 2-out-of-6",
                [p, &premises](Rng& rng, const Size& z) -> Failure {
                  auto step = [&](const ComplexPtr& from) {
                    return uniform(rng, 3) == 0 ? random_chain_map(rng, from, complex_of(rng, p, z))
                                                : random_quasi_iso(rng, from);
                  };
                  const ChainMap f = step(complex_of(rng, p, z));
                  const ChainMap g = step(f.target);
                  const ChainMap h = step(g.target);
                  const ChainMap gf = ChainMap::compose(g, f), hg = ChainMap::compose(h, g);
                  if (!is_quasi_iso(gf) || !is_quasi_iso(hg)) return {};
                  ++premises;
                  for (const ChainMap* m : {&f, &g, &h})
                    if (!is_quasi_iso(*m)) return "hg and gf are weak equivalences but a factor is not";
                  if (!is_quasi_iso(ChainMap::compose(h, gf))) return "hgf is not a weak equivalence";
                  return {};
                }});

  // frames
  auto ctx = std::make_shared<frames::FrameContext>(cfg.cap_or(2), 2, strategy);
  ps.push_back({"frames", "frame_of_object: g induces an isomorphism on homology",
                [p, ctx](Rng& rng, const Size& z) -> Failure {
                  const auto v = frames::frame_of_object(*ctx, complex_of(rng, p, z));
                  if (!induced(v.to_model(*ctx)).is_iso()) return "H(g) is not invertible";
                  if (!frames::validate_frame(*ctx, v.frame).ok()) return "vertex frame invalid";
                  return {};
                }});
  ps.push_back({"frames", "θ of a degenerate edge is the identity", [p, ctx](Rng& rng, const Size& z) -> Failure {
                  const auto v = frames::frame_of_object(*ctx, complex_of(rng, p, z));
                  const auto th = frames::theta(*ctx, frames::degeneracy(*ctx, v.frame, 0));
                  if (!frames::same_ho(th, frames::HoMorphism::identity(homology(*v.value()))))
                    return "θ = " + th.matrix.to_string();
                  return {};
                }});
  ps.push_back({"frames", "θ(d₁T) = θ(d₀T)∘θ(d₂T) on triangle frames", [p, ctx](Rng& rng, const Size& z) -> Failure {
                  const auto x = complex_of(rng, p, z), y = complex_of(rng, p, z), w = complex_of(rng, p, z);
                  const auto t = frames::frame_of_triangle(*ctx, random_chain_map(rng, x, y), random_chain_map(rng, y, w));
                  if (!frames::validate_frame(*ctx, t.frame).ok()) return "triangle frame invalid";
                  if (auto r = frames::check_triangle_coherence(*ctx, t.frame); !r.ok) return r.detail;
                  return {};
                }});
  ps.push_back({"frames", "equivalence edges are exactly the edges with invertible θ",
                [p, ctx](Rng& rng, const Size& z) -> Failure {
                  const ChainMap f = mixed_map(rng, p, z);
                  const auto e = frames::frame_of_map(*ctx, f);
                  const bool eq = frames::is_equivalence_edge(*ctx, e.frame);
                  const bool inv = frames::theta(*ctx, e.frame).is_iso();
                  if (eq && !inv) return "equivalence edge with non-invertible θ";
                  if (inv && !eq) return "θ invertible but some weak equivalence is not sent to a quasi-isomorphism";
                  return {};
                }});
  auto small = std::make_shared<frames::FrameContext>(1, 1, strategy);
  auto di = std::make_shared<dsub::DCat>(dsub::d_subdivision(fincat::share(fincat::ordinal(1)), 1));
  auto mixes = std::make_shared<std::vector<frames::MixShape>>();
  for (int l = 0; l <= 1; ++l) mixes->push_back(frames::mix_shape(*small, l, *di));
  ps.push_back({"frames", "e∘pr^* = id", [p, small, di, mixes](Rng& rng, const Size& z) -> Failure {
                  const frames::MixShape& ms = (*mixes)[uniform(rng, 2)];
                  const ChainDiagram x = random_sequence(rng, di->base_category, p, z.dim);
                  const auto to_di = fincat::product_projection(ms.outer, small->shape(ms.level).category, di->category, 1);
                  const ChainDiagram y = pullback(x, fincat::CatFunctor::compose(dsub::p_categorical(*di), to_di));
                  if (!same_diagram(frames::e_mix(*small, ms, frames::pr_pullback(ms, y)), y))
                    return "not a left inverse at level " + std::to_string(ms.level);
                  return {};
                }});
  return ps;
}

// Greedy shrinking in the order degrees, dim, objects; at each step a few
// streams are tried so that a smaller failing input is found if one is near.
std::pair<Size, std::string> shrink(const Property& prop, std::uint64_t seed, int stream, int k, Size z,
                                    std::string witness) {
  auto attempt = [&](const Size& t) -> Failure {
    for (int extra = 0; extra < 8; ++extra) {
      Rng rng = case_rng(seed, 1000 + stream, k + extra * 100000);
      try {
        if (auto f = prop.check(rng, t)) return f;
      } catch (const Error& e) {
        return std::string("error: ") + e.what();
      }
    }
    return {};
  };
  for (int Size::*field : {&Size::degrees, &Size::dim, &Size::objects})
    while (z.*field > 1) {
      Size t = z;
      --(t.*field);
      const Failure f = attempt(t);
      if (!f) break;
      z = t;
      witness = *f;
    }
  return {z, witness};
}

}  // namespace

PropertyOutcome run_property(const Property& prop, std::uint64_t seed, int stream, int cases) {
  PropertyOutcome out;
  const Size z;
  for (int k = 0; k < cases; ++k) {
    ++out.runs;
    Rng rng = case_rng(seed, 1000 + stream, k);
    Failure f;
    try {
      f = prop.check(rng, z);
    } catch (const Error& e) {
      f = std::string("error: ") + e.what();
    }
    if (!f) continue;
    out.pass = false;
    out.failing_case = k;
    std::tie(out.minimized, out.witness) = shrink(prop, seed, stream, k, z, *f);
    break;
  }
  return out;
}

Report run_property_tests(const SuiteConfig& cfg) {
  const std::string S = "properties";
  Report rep;
  int mutations_detected = 0, premises = 0;
  const std::vector<Property> ps = properties(cfg, mutations_detected, premises);
  const int cases = cfg.cases_or(100);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Property& prop = ps[i];
    const int stream = static_cast<int>(i);
    const std::string id = prop.module + "/" + case_id(stream);
    const PropertyOutcome o = run_property(prop, cfg.seed, stream, cases);
    if (o.pass) {
      std::string w = std::to_string(o.runs) + " cases";
      if (prop.name.find("mutations") != std::string::npos)
        w += ", " + std::to_string(mutations_detected) + " mutations detected";
      if (prop.name.find("2-out-of-6") != std::string::npos && prop.module == "chaincof")
        w += ", premise held in " + std::to_string(premises);
      rep.add(S, id, prop.name, true, w, {{"cases", o.runs}});
      continue;
    }
    const Size& m = o.minimized;
    rep.add(S, id, prop.name, false,
            "case " + std::to_string(o.failing_case) + " failed; minimized to " + size_text(m) + ": " + o.witness,
            {{"case", o.failing_case}, {"degrees", m.degrees}, {"dim", m.dim}, {"objects", m.objects}});
  }
  return rep;
}

}  // namespace coframes::cli
