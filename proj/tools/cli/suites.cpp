#include "suites.hpp"

#include <functional>
#include <random>

#include "checks.hpp"
#include "coframes/chain/exact.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/error.hpp"
#include "coframes/fincat/localization.hpp"
#include "coframes/frames/comparison.hpp"
#include "coframes/frames/frames.hpp"
#include "properties.hpp"

namespace coframes::cli {

using namespace chain;
using frames::FrameContext;
using frames::HoMorphism;
using frames::ObjectFrame;

chain::Rng case_rng(std::uint64_t seed, std::uint64_t stream, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(k)};
  return chain::Rng(seq);
}

namespace {

// Runs one case; an exception becomes a failed check carrying its message.
void guard(Report& rep, const std::string& suite, const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    rep.add(suite, id, "completes without error", false, e.what());
  }
}

ComplexPtr small_complex(Rng& rng, int p) { return share(random_complex(rng, p, 0, 2, 2)); }

// Random complex with a sphere summand in degree 0, so homology is never zero.
ComplexPtr visible_complex(Rng& rng, int p) {
  return coproduct(p, {share(ChainComplex::sphere(p, 0, 1 + uniform(rng, 2))), small_complex(rng, p)}).object;
}

GradedMatrix random_graded(Rng& rng, const Homology& hx, const Homology& hy) {
  const int lo = std::min(hx.lo, hy.lo);
  const int hi = std::max(hx.lo + static_cast<int>(hx.dims.size()), hy.lo + static_cast<int>(hy.dims.size())) - 1;
  GradedMatrix m{hx.p, lo, {}};
  for (int n = lo; n <= hi; ++n) m.blocks.push_back(random_matrix(rng, hx.p, hy.dim(n), hx.dim(n)));
  return m;
}

Report not_strong(const SuiteConfig& cfg) {
  const std::string S = "not-strong";
  Report rep;
  auto c = fincat::share(fincat::zigzag());
  const int A = *c->find_object("A"), D = *c->find_object("D");
  fincat::MorphismClass w = fincat::MorphismClass::identities(*c);
  w.insert(*c->find_morphism("w"));

  const fincat::Localization loc = fincat::localize_bounded(*c, w, cfg.budget);
  rep.add(S, "ho", "localization at {w} stabilizes", loc.stabilized(), "word budget " + std::to_string(cfg.budget));
  if (!loc.stabilized()) return rep;
  const fincat::FinCategory& ho = *loc.presented.category;
  const std::vector<int> hom = ho.hom(loc.functor->object_map[A], loc.functor->object_map[D]);
  std::string names;
  for (int m : hom) names += (names.empty() ? "" : ", ") + ho.morphism_name(m);
  rep.add(S, "ho", "|Hom(A,D)| = 1", hom.size() == 1, "Hom(A,D) = {" + names + "}",
          {{"hom_size", hom.size()}, {"morphisms", names}});
  if (hom.size() != 1) return rep;

  const fincat::EssentialImageReport img = fincat::arrow_in_essential_image(*c, loc, hom[0]);
  std::string witness = std::to_string(img.arrows_examined) + " arrows of C, " +
                        std::to_string(img.conjugations_checked) + " conjugations checked";
  if (img.in_image)
    for (const auto& s : img.witness) witness += "; " + s;
  rep.add(S, "ho", ho.morphism_name(hom[0]) + " is not in the essential image of Ho(C^[1])", !img.in_image, witness,
          {{"arrows_examined", img.arrows_examined}, {"conjugations_checked", img.conjugations_checked}});

  guard(rep, S, "frames", [&] {
    const FrameContext ctx(cfg.cap_or(2), 1, cfg.strategy);
    Rng rng = case_rng(cfg.seed, 1, 0);
    const int p = cfg.prime;
    const ComplexPtr xa = visible_complex(rng, p), xb = visible_complex(rng, p), xd = visible_complex(rng, p);
    const ChainMap wq = random_quasi_iso(rng, xb);
    const ComplexPtr xc = wq.target;
    const ChainMap a = random_chain_map(rng, xa, xb);
    const ChainMap cmap = random_chain_map(rng, xc, xd);
    std::vector<ComplexPtr> values{xa, xb, xc, xd};
    std::vector<ObjectFrame> vf;
    for (const auto& x : values) vf.push_back(frames::frame_of_object(ctx, x));
    // wq runs B -> C; the arrow w: C -> B is its inverse in Ho.
    const GradedMatrix ha = in_frame_bases(a, vf[0], vf[1], ctx);
    const GradedMatrix hw = in_frame_bases(wq, vf[1], vf[2], ctx).inverse();
    const GradedMatrix hc = in_frame_bases(cmap, vf[2], vf[3], ctx);
    const auto quiver = fincat::is_free(*c);
    std::vector<GradedMatrix> arrows;
    for (int m : quiver->arrows) {
      const std::string& n = c->morphism_name(m);
      arrows.push_back(n == "a" ? ha : n == "w" ? hw : hc);
    }
    const frames::LiftResult lr = frames::lift_free_diagram(ctx, c, vf, arrows);
    rep.add(S, "frames", "zig-zag of Ho(C) lifts to frames", lr.ok, lr.detail);

    const GradedMatrix composite = GradedMatrix::compose(hc, GradedMatrix::compose(hw.inverse(), ha));
    auto one = fincat::share(fincat::ordinal(1));
    const frames::LiftResult edge = frames::lift_free_diagram(ctx, one, {vf[0], vf[3]}, {composite});
    rep.add(S, "frames", "c∘w⁻¹∘a is θ of an edge frame A -> D", edge.ok,
            edge.ok ? "θ = " + edge.thetas[0].matrix.to_string() : edge.detail);
  });
  return rep;
}

Report nh_unit(const SuiteConfig& cfg) {
  const std::string S = "nh-unit";
  Report rep;
  const int cap = cfg.cap_or(3);
  const std::vector<std::string> names = cfg.k.empty() ? sset_corpus_names() : std::vector<std::string>{cfg.k};
  for (const std::string& name : names) {
    const auto k = sset::share(sset_corpus(name, cap));
    guard(rep, S, name, [&] {
      const sset::UnitMap u = sset::unit_map(k, cfg.budget);
      const std::string v = sset::simplicial_map_violation(u.map);
      rep.add(S, name, "unit K -> N(hK) is a simplicial map", v.empty(), v);
      for (int n = 1; n <= cap; ++n) {
        const sset::PushoutVerification pv = sset::verify_rank_pushout(u, n);
        rep.add(S, name, "rank pushout is an isomorphism at n=" + std::to_string(n), pv.ok,
                pv.ok ? "|X_n| = " + std::to_string(pv.primitive_count) : pv.witness,
                {{"n", n}, {"primitives", pv.primitive_count}});
      }
      for (int d = 0; d <= cap; ++d) {
        const Outcome o = factorization_uniqueness(u, d);
        rep.add(S, name, o.name, o.pass, o.witness);
      }
      for (const Outcome& o : {rank_restriction(u), filtration_exhausts(u)}) rep.add(S, name, o.name, o.pass, o.witness);
    });
  }
  return rep;
}

Report dsub_weq(const SuiteConfig& cfg) {
  const std::string S = "dsub-weq";
  Report rep;
  const int cap = cfg.cap_or(3);
  const std::vector<std::pair<std::string, fincat::FinCategory>> shapes{
      {"[1]", fincat::ordinal(1)}, {"[2]", fincat::ordinal(2)}, {"zigzag", fincat::zigzag()}};
  for (const auto& [name, c] : shapes) {
    guard(rep, S, name, [&] {
      const dsub::DCat d = dsub::d_subdivision(fincat::share(c), cap);
      const fincat::MorphismClass closed =
          fincat::closure(*d.category, dsub::p_degenerate(d), fincat::ClosureMode::TwoOfSix);
      const fincat::MorphismClass iso = dsub::p_iso_class(d);
      std::string witness = std::to_string(closed.size()) + " of " + std::to_string(d.category->morphism_count()) +
                            " morphisms";
      for (int m = 0; m < d.category->morphism_count(); ++m)
        if (closed.contains(m) != iso.contains(m)) {
          witness = d.category->morphism_name(m) + (closed.contains(m) ? " is in the closure only" : " is p-iso only");
          break;
        }
      rep.add(S, name, "2-out-of-6 closure of p-degenerate maps equals the p-iso class", closed == iso, witness,
              {{"objects", d.category->object_count()}, {"morphisms", d.category->morphism_count()},
               {"weq", closed.size()}});
      const auto bad = fincat::closure_violation(*d.category, closed, fincat::ClosureMode::TwoOfSix);
      rep.add(S, name, "closure is closed under 2-out-of-6", bad.empty());
      rep.add(S, name, "D is direct", fincat::is_direct(*d.category).has_value());
    });
  }
  return rep;
}

Report retraction(const SuiteConfig& cfg) {
  const std::string S = "retraction";
  Report rep;
  const int cap = cfg.cap_or(3);
  std::vector<dsub::DCat> ds;
  for (int n = 0; n <= 3; ++n) {
    ds.push_back(dsub::d_subdivision(fincat::share(fincat::ordinal(n)), cap));
    const dsub::DCat& d = ds.back();
    const auto pi = fincat::CatFunctor::compose(dsub::p_categorical(d), dsub::frame_embedding_i(d));
    rep.add(S, "[" + std::to_string(n) + "]", "p∘i is the identity of [n]",
            fincat::same_maps(pi, fincat::CatFunctor::identity(d.base_category)));
  }
  for (int k = 0; k < cfg.cases_or(20); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 4, k);
      const dsub::DCat& d = ds[1 + k % 2];
      const ChainDiagram x = random_sequence(rng, d.base_category, cfg.prime, 2);
      const ChainDiagram back = pullback(pullback(x, dsub::p_categorical(d)), dsub::frame_embedding_i(d));
      rep.add(S, id, "i*p*X = X over [" + std::to_string(1 + k % 2) + "]", same_diagram(back, x));
    });
  }
  return rep;
}

Report reedy_colimit_suite(const SuiteConfig& cfg) {
  const std::string S = "reedy-colimit";
  Report rep;
  for (int k = 0; k < cfg.cases_or(30); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 5, k);
      auto idx = fincat::share(random_direct_category(rng, 5));
      const ChainDiagram x = random_reedy_cofibrant(rng, idx, cfg.prime, 12);
      const ReedyStatus rc = reedy_cofibrant(x);
      nlohmann::json data = {{"objects", idx->object_count()}, {"morphisms", idx->morphism_count()}};
      rep.add(S, id, "input is Reedy cofibrant", rc.ok, rc.detail, data);
      if (!rc.ok) return;
      const ReedyColimit col = reedy_colimit(x);
      const std::string m = colimit_mismatch(x, col);
      rep.add(S, id, "inductive colimit equals the coequalizer colimit", m.empty(), m,
              {{"colimit_dim", col.object->total_dim()}});
      for (const ExactFunctor& F : {ExactFunctor::tensor(2), ExactFunctor::shift(1)}) {
        const std::string f = colimit_preservation_failure(F, x);
        rep.add(S, id, F.name() + " preserves the colimit", f.empty(), f);
      }
    });
  }
  return rep;
}

Report factorization(const SuiteConfig& cfg) {
  const std::string S = "factorization";
  Report rep;
  for (int k = 0; k < cfg.cases_or(100); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 6, k);
      const int lo = uniform(rng, 3) - 1;
      const auto x = share(random_complex(rng, cfg.prime, lo, lo + 2, 3));
      const auto y = share(random_complex(rng, cfg.prime, lo, lo + 2, 3));
      const ChainMap f = random_chain_map(rng, x, y);
      for (bool minimal : {false, true}) {
        const Factorization fac = minimal ? factorize_minimal(f) : factorize(f);
        const std::string how = minimal ? "minimal" : "cylinder";
        rep.add(S, id, how + ": q∘i = f", same_map(ChainMap::compose(fac.q, fac.i), f));
        rep.add(S, id, how + ": i is a cofibration", is_cofibration(fac.i));
        rep.add(S, id, how + ": q is a quasi-isomorphism", is_quasi_iso(fac.q));
      }
    });
  }
  return rep;
}

void add_outcomes(Report& rep, const std::string& suite, const std::string& id, const std::string& prefix,
                  const std::vector<Outcome>& os) {
  for (const Outcome& o : os) rep.add(suite, id, prefix + o.name, o.pass, o.witness);
}

Report replacement(const SuiteConfig& cfg) {
  const std::string S = "replacement";
  Report rep;
  const FrameContext ctx(cfg.cap_or(3), 2, cfg.strategy);
  const int n = cfg.cases_or(4);
  for (int level = 0; level <= 2; ++level)
    for (int k = 0; k < n; ++k) {
      const std::string id = "D[" + std::to_string(level) + "]/" + case_id(k);
      guard(rep, S, id, [&] {
        Rng rng = case_rng(cfg.seed, 7, level * n + k);
        const fincat::MorphismClass& weq = ctx.shape(level).weq;
        const int p = cfg.prime;
        if (level == 0) {
          const ChainDiagram x = frames::p_star(ctx, 0, {small_complex(rng, p)}, {});
          const auto none = empty_sieve(x.index);
          const ChainDiagram h{none.source, {}, {}};
          const Replacement r = reedy_replace(x, weq, cfg.strategy);
          add_outcomes(rep, S, id, "", replacement_postconditions(x, weq, none, h, {}, r));
        } else if (level == 1) {
          const auto x = small_complex(rng, p), y = small_complex(rng, p);
          const frames::EdgeFrame e = frames::frame_of_map(ctx, random_chain_map(rng, x, y));
          const auto& pr = e.problem;
          add_outcomes(rep, S, id, "", replacement_postconditions(pr.x, weq, pr.sieve, pr.h, pr.f, {e.frame.diagram, e.g, false}));
        } else {
          const auto x = small_complex(rng, p), y = small_complex(rng, p), z = small_complex(rng, p);
          const frames::TriangleFrame t =
              frames::frame_of_triangle(ctx, random_chain_map(rng, x, y), random_chain_map(rng, y, z));
          const auto& pr = t.problem;
          add_outcomes(rep, S, id, "", replacement_postconditions(pr.x, weq, pr.sieve, pr.h, pr.f, {t.frame.diagram, t.g, false}));
        }
      });
    }
  return rep;
}

Report theta_suite(const SuiteConfig& cfg) {
  const std::string S = "theta";
  Report rep;
  const FrameContext ctx(cfg.cap_or(3), 2, cfg.strategy);
  for (int k = 0; k < cfg.cases_or(20); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 8, k);
      const int p = cfg.prime;
      const auto x = small_complex(rng, p), y = small_complex(rng, p), z = small_complex(rng, p);
      const ChainMap f = random_chain_map(rng, x, y), g = random_chain_map(rng, y, z);

      const ObjectFrame v = frames::frame_of_object(ctx, x);
      const frames::FrameSimplex deg = frames::degeneracy(ctx, v.frame, 0);
      rep.add(S, id, "θ(s₀ v) is the identity",
              frames::same_ho(frames::theta(ctx, deg), HoMorphism::identity(homology(*v.value()))));

      const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
      const HoMorphism th = frames::theta(ctx, e.frame);
      rep.add(S, id, "θ(frame of f) is H(f) in the frame bases", frames::same_ho(th, frames::theta_expected(ctx, e)),
              "θ = " + th.matrix.to_string());

      const frames::TriangleFrame t = frames::frame_of_triangle(ctx, f, g);
      const frames::TriangleReport tr = frames::check_triangle_coherence(ctx, t.frame);
      rep.add(S, id, "θ(d₁T) = θ(d₀T)∘θ(d₂T)", tr.ok, tr.detail);
    });
  }
  return rep;
}

Report equivalence_edges(const SuiteConfig& cfg) {
  const std::string S = "equivalence-edges";
  Report rep;
  const FrameContext ctx(cfg.cap_or(3), 1, cfg.strategy);
  for (int k = 0; k < cfg.cases_or(20); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 9, k);
      const int p = cfg.prime;
      const auto x = small_complex(rng, p), y = small_complex(rng, p);
      for (const auto& [what, f] : {std::pair<std::string, ChainMap>{"random map", random_chain_map(rng, x, y)},
                                    {"quasi-isomorphism", random_quasi_iso(rng, x)}}) {
        const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
        const bool detected = frames::is_equivalence_edge(ctx, e.frame);
        const bool qi = is_quasi_iso(f);
        const bool inv = frames::theta(ctx, e.frame).is_iso();
        const std::string w = std::string("detected ") + (detected ? "yes" : "no") + ", quasi-iso " +
                              (qi ? "yes" : "no") + ", θ invertible " + (inv ? "yes" : "no");
        rep.add(S, id, what + ": detection agrees with quasi-isomorphism", detected == qi, w);
        rep.add(S, id, what + ": detection agrees with θ invertible", detected == inv, w);
      }
    });
  }
  return rep;
}

Report e_left_inverse(const SuiteConfig& cfg) {
  const std::string S = "e-left-inverse";
  Report rep;
  const FrameContext ctx(cfg.cap_or(1), 1, cfg.strategy);
  const dsub::DCat di = dsub::d_subdivision(fincat::share(fincat::ordinal(1)), ctx.cap());
  std::vector<frames::MixShape> shapes;
  for (int l = 0; l <= 1; ++l) shapes.push_back(frames::mix_shape(ctx, l, di));
  for (int k = 0; k < cfg.cases_or(10); ++k) {
    const std::string id = case_id(k);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 10, k);
      const frames::MixShape& ms = shapes[k % 2];
      // A frame on D[l] × DI: p^* of a random map, pulled back to the product and replaced.
      const ChainDiagram x = random_sequence(rng, di.base_category, cfg.prime, 2);
      const auto to_di = fincat::product_projection(ms.outer, ctx.shape(ms.level).category, di.category, 1);
      const ChainDiagram px = pullback(x, fincat::CatFunctor::compose(dsub::p_categorical(di), to_di));
      const ChainDiagram y = reedy_replace(px, ms.outer_weq, cfg.strategy).diagram;
      const bool ok = same_diagram(frames::e_mix(ctx, ms, frames::pr_pullback(ms, y)), y);
      rep.add(S, id, "e∘pr^* = id at level " + std::to_string(ms.level), ok, {},
              {{"objects", ms.outer->object_count()}});
    });
  }
  return rep;
}

Report phi(const SuiteConfig& cfg) {
  const std::string S = "phi";
  Report rep;
  const FrameContext ctx(cfg.cap_or(1), 1, cfg.strategy);
  const auto k = sset::share(sset::standard_simplex(1, ctx.cap()));
  const frames::PhiShape ps = frames::phi_shape(ctx, k, 1);
  for (int c = 0; c < cfg.cases_or(5); ++c) {
    const std::string id = case_id(c);
    guard(rep, S, id, [&] {
      Rng rng = case_rng(cfg.seed, 11, c);
      const ChainDiagram x = random_reedy_cofibrant(rng, ps.product, cfg.prime, 8);
      const ReedyStatus rc = reedy_cofibrant(phi_restrict(ps, x));
      rep.add(S, id, "restriction along D(K×Δ¹) -> DK×D[1] keeps Reedy cofibrancy", rc.ok, rc.detail);
      const ChainDiagram y =
          reedy_replace(constant_diagram(ps.product, small_complex(rng, cfg.prime)), ps.product_weq, cfg.strategy)
              .diagram;
      const ChainDiagram r = phi_restrict(ps, y);
      std::string bad;
      for (int d = 0; d <= std::min(ctx.cap(), ctx.max_level()) && bad.empty(); ++d)
        for (int s = 0; s < ps.dkn.base->count(d) && bad.empty(); ++s) {
          const frames::FrameReport fr = frames::validate_frame(ctx, frames::phi_frame_at(ctx, ps, r, d, s));
          if (!fr.ok()) bad = ps.dkn.base->name(d, s) + ": " + fr.reedy_witness + fr.homotopical_witness;
        }
      rep.add(S, id, "Φ of a frame gives frames at every simplex of K×Δ¹", bad.empty(), bad);
    });
  }
  return rep;
}

Report lift(const SuiteConfig& cfg) {
  const std::string S = "lift";
  Report rep;
  const FrameContext ctx(cfg.cap_or(2), 1, cfg.strategy);
  const std::vector<std::pair<std::string, fincat::CategoryPtr>> shapes{
      {"[1]", fincat::share(fincat::ordinal(1))},
      {"spine2", fincat::share(fincat::free_category(3, {{0, 1}, {1, 2}}))},
      {"zigzag", fincat::share(fincat::zigzag())}};
  for (int c = 0; c < cfg.cases_or(4); ++c)
    for (const auto& [name, f] : shapes) {
      const std::string id = name + "/" + case_id(c);
      guard(rep, S, id, [&] {
        Rng rng = case_rng(cfg.seed, 12, c);
        std::vector<ObjectFrame> vf;
        for (int o = 0; o < f->object_count(); ++o)
          vf.push_back(frames::frame_of_object(ctx, visible_complex(rng, cfg.prime)));
        std::vector<GradedMatrix> arrows;
        const auto quiver = fincat::is_free(*f);
        for (int m : quiver->arrows)
          arrows.push_back(random_graded(rng, homology(*vf[f->source(m)].value()), homology(*vf[f->target(m)].value())));
        const frames::LiftResult lr = frames::lift_free_diagram(ctx, f, vf, arrows);
        rep.add(S, id, "every arrow is θ of an edge frame", lr.ok, lr.detail);
      });
    }
  return rep;
}

Report reedy_examples(const SuiteConfig& cfg) {
  const std::string S = "reedy-examples";
  Report rep;
  const int p = cfg.prime;
  const dsub::DCat d1 = dsub::d_subdivision(sset::share(sset::standard_simplex(1, 1)), 1);
  const ChainDiagram x = constant_diagram(d1.category, share(ChainComplex::sphere(p, 0)));
  // The nondegenerate edge of Δ¹ is the simplex with distinct vertices.
  int edge = -1;
  for (int s = 0; s < d1.base->count(1); ++s)
    if (!d1.base->is_degenerate(1, s)) edge = d1.object_of(1, s);
  const Latching l = latching_object(x, edge);
  rep.add(S, "constant", "latching object at the edge is F_p²", l.colimit.object->total_dim() == 2,
          "dim " + std::to_string(l.colimit.object->total_dim()));
  const ReedyStatus rc = reedy_cofibrant(x);
  rep.add(S, "constant", "constant F_p on D[1] is not Reedy cofibrant", !rc.ok,
          rc.ok ? "" : "witness " + d1.category->object_name(rc.witness));
  const Replacement r = reedy_replace(x, d1.weq, cfg.strategy);
  add_outcomes(rep, S, "replaced", "", replacement_postconditions(x, d1.weq, empty_sieve(x.index),
                                                                   ChainDiagram{empty_sieve(x.index).source, {}, {}},
                                                                   {}, r));
  return rep;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"not-strong", "zig-zag localization: Hom(A,D) and the essential image; frames-side lift", not_strong},
      {"nh-unit", "rank filtration of N(hK): pushouts, unique primitive factorizations (--k NAME)", nh_unit},
      {"dsub-weq", "2-out-of-6 closure of p-degenerate maps versus the p-iso class", dsub_weq},
      {"retraction", "p∘i = id on [n] and i*p* = id on chain diagrams", retraction},
      {"reedy-colimit", "inductive Reedy colimits versus the coequalizer, exact functors", reedy_colimit_suite},
      {"reedy-examples", "latching objects of the constant diagram on D[1]", reedy_examples},
      {"factorization", "cofibration / quasi-isomorphism factorizations", factorization},
      {"replacement", "relative replacement postconditions over D[0], D[1], D[2]", replacement},
      {"theta", "θ on degenerate edges, edge frames and triangles", theta_suite},
      {"equivalence-edges", "equivalence-edge detection versus quasi-isomorphism and θ", equivalence_edges},
      {"e-left-inverse", "e∘pr^* = id", e_left_inverse},
      {"phi", "Φ keeps Reedy cofibrancy and yields frames", phi},
      {"lift", "lifting diagrams of Ho(C) on free categories to frames", lift},
      {"properties", "seeded property tests of every module, with shrinking", run_property_tests},
  };
  return all;
}

Report run_suite(const SuiteConfig& config) {
  for (const SuiteInfo& s : suites())
    if (s.name == config.name) return s.run(config);
  throw Error("unknown suite '" + config.name + "'");
}

}  // namespace coframes::cli
