// Acceptance gate: one line per criterion, exit status 0 only when all pass.
// Each criterion runs the library and checks the result against the
// reference computations in tests/support.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coframes/chain/exact.hpp"
#include "coframes/chain/generators.hpp"
#include "coframes/chain/reedy.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/error.hpp"
#include "coframes/fincat/analysis.hpp"
#include "coframes/fincat/localization.hpp"
#include "coframes/frames/comparison.hpp"
#include "coframes/frames/frames.hpp"
#include "coframes/sset/rank.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::chain;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

Rng seeded(int criterion, int k) {
  std::seed_seq seq{20240u, static_cast<unsigned>(criterion), static_cast<unsigned>(k)};
  return Rng(seq);
}

ComplexPtr small_complex(Rng& rng, int p = 2) { return share(random_complex(rng, p, 0, 2, 2)); }

// ---------------------------------------------------------------------------
// 1. The zig-zag A -a-> B <-w- C -c-> D with w inverted.

// Words in the arrows of C and formal inverses of W. The zig-zag has no
// composable pair of non-identities, so its localization is free on these
// letters modulo cancelling a letter against its inverse.
struct Letter {
  int source, target, arrow;
  bool inverse;
};

std::vector<Letter> letters_of(const fincat::FinCategory& c, const fincat::MorphismClass& w) {
  std::vector<Letter> out;
  for (int m : c.non_identities()) {
    out.push_back({c.source(m), c.target(m), m, false});
    if (w.contains(m)) out.push_back({c.target(m), c.source(m), m, true});
  }
  return out;
}

using ReducedWord = std::vector<int>;  // letter indices, first applied first

std::map<std::pair<int, int>, std::set<ReducedWord>> reduced_words(const fincat::FinCategory& c,
                                                                   const std::vector<Letter>& ls, int max_len,
                                                                   bool& finite) {
  std::map<std::pair<int, int>, std::set<ReducedWord>> out;
  finite = true;
  std::function<void(int, int, ReducedWord&)> grow = [&](int start, int at, ReducedWord& w) {
    out[{start, at}].insert(w);
    if (static_cast<int>(w.size()) == max_len) {
      finite = false;
      return;
    }
    for (int l = 0; l < static_cast<int>(ls.size()); ++l) {
      if (ls[l].source != at) continue;
      if (!w.empty()) {
        const Letter& prev = ls[w.back()];
        if (prev.arrow == ls[l].arrow && prev.inverse != ls[l].inverse) continue;
      }
      w.push_back(l);
      grow(start, ls[l].target, w);
      w.pop_back();
    }
  };
  for (int o = 0; o < c.object_count(); ++o) {
    ReducedWord w;
    grow(o, o, w);
  }
  return out;
}

ReducedWord reduce(const std::vector<Letter>& ls, ReducedWord w) {
  ReducedWord out;
  for (int l : w) {
    if (!out.empty() && ls[out.back()].arrow == ls[l].arrow && ls[out.back()].inverse != ls[l].inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Verdict criterion_non_strong() {
  Verdict v;
  const fincat::FinCategory c = fincat::zigzag();
  fincat::MorphismClass w = fincat::MorphismClass::identities(c);
  w.insert(*c.find_morphism("w"));
  for (int g : c.non_identities())
    for (int f : c.non_identities())
      v.require(c.target(f) != c.source(g), "zig-zag has a composable pair of non-identities");

  const fincat::Localization loc = fincat::localize_bounded(c, w, 8);
  v.require(loc.stabilized(), "localization did not stabilize");
  if (!v.pass) return v;

  const std::vector<Letter> ls = letters_of(c, w);
  bool finite = false;
  const auto words = reduced_words(c, ls, 8, finite);
  v.require(finite, "reference word enumeration did not terminate");
  for (int a = 0; a < c.object_count(); ++a)
    for (int b = 0; b < c.object_count(); ++b) {
      auto it = words.find({a, b});
      const int expected = it == words.end() ? 0 : static_cast<int>(it->second.size());
      if (loc.hom_size(a, b) != expected)
        v.fail("|Hom(" + c.object_name(a) + "," + c.object_name(b) + ")| = " + std::to_string(loc.hom_size(a, b)) +
               ", reduced words give " + std::to_string(expected));
    }

  const int A = *c.find_object("A"), D = *c.find_object("D");
  v.require(loc.hom_size(A, D) == 1, "Hom(A,D) does not have exactly one element");
  if (!v.pass) return v;

  // Isomorphic objects: words both ways reducing to the empty word.
  auto isomorphic = [&](int s, int t) {
    auto st = words.find({s, t}), ts = words.find({t, s});
    if (st == words.end() || ts == words.end()) return false;
    for (const auto& u : st->second)
      for (const auto& x : ts->second) {
        ReducedWord xu = x, ux = u;
        xu.insert(xu.begin(), u.begin(), u.end());
        ux.insert(ux.begin(), x.begin(), x.end());
        if (reduce(ls, xu).empty() && reduce(ls, ux).empty()) return true;
      }
    return false;
  };
  // An arrow of C iso to A -> D in the arrow category must run between
  // objects isomorphic to A and to D.
  int candidates = 0;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (isomorphic(A, c.source(m)) && isomorphic(D, c.target(m))) ++candidates;

  const fincat::FinCategory& ho = *loc.presented.category;
  const std::vector<int> hom = ho.hom(loc.functor->object_map[A], loc.functor->object_map[D]);
  const fincat::EssentialImageReport img = fincat::arrow_in_essential_image(c, loc, hom[0]);
  v.require(candidates == 0, "reference search found a candidate arrow of C");
  v.require(!img.in_image, "library places " + ho.morphism_name(hom[0]) + " in the essential image");
  v.detail = "Hom(A,D) = {" + ho.morphism_name(hom[0]) + "}, " + std::to_string(img.arrows_examined) +
             " arrows of C examined, no candidate up to isomorphism";
  return v;
}

// ---------------------------------------------------------------------------
// 2. Rank filtration of N(hK).

Verdict criterion_inner_anodyne() {
  Verdict v;
  const int cap = 3;
  const std::vector<std::pair<std::string, sset::TruncatedSSet>> corpus{
      {"Δ¹", sset::standard_simplex(1, cap)},
      {"spine2", sset::spine(2, cap)},
      {"spine3", sset::spine(3, cap)},
      {"wedge", sset::one_skeletal(3, {{0, 1}, {2, 1}}, cap)}};
  int simplices = 0;
  for (const auto& [name, k] : corpus) {
    const sset::UnitMap u = sset::unit_map(sset::share(k));
    const sset::TruncatedSSet& n = *u.nerve;
    const auto& reps = u.hk.presented.representative;
    // Rank from the nerve key: hK is free, so word lengths add up.
    auto rank = [&](int dim, int s) {
      if (dim == 0) return 0;
      int r = 0;
      for (int m : n.key(dim, s)) r += static_cast<int>(reps[m].letters.size());
      return r;
    };
    auto primitive = [&](int dim, int s) {
      if (dim == 0) return true;
      for (int m : n.key(dim, s))
        if (reps[m].letters.size() != 1) return false;
      return true;
    };
    int top = 0;
    for (int d = 0; d <= cap; ++d)
      for (int s = 0; s < n.count(d); ++s) {
        ++simplices;
        top = std::max(top, rank(d, s));
        if (sset::rank_of_simplex(u, d, s) != rank(d, s)) v.fail(name + ": rank of " + n.name(d, s));
        if (sset::is_primitive(u, d, s) != primitive(d, s)) v.fail(name + ": primitivity of " + n.name(d, s));
        // Exhaustive search over (primitive τ, monotone f with f(0)=0, f(d)=dim τ).
        int matches = 0;
        int found_tau = -1, found_dim = -1;
        std::vector<int> found_f;
        for (int kd = 0; kd <= cap; ++kd) {
          std::vector<int> f(d + 1, 0);
          std::function<void(int)> each = [&](int i) {
            if (i == d + 1) {
              if (f[0] != 0 || f[d] != kd) return;
              for (int t = 0; t < n.count(kd); ++t)
                if (primitive(kd, t) && n.pullback(kd, t, f) == s) {
                  ++matches;
                  found_tau = t;
                  found_dim = kd;
                  found_f = f;
                }
              return;
            }
            for (int x = i == 0 ? 0 : f[i - 1]; x <= kd; ++x) {
              f[i] = x;
              each(i + 1);
            }
          };
          each(0);
        }
        if (matches != 1) {
          v.fail(name + ": " + std::to_string(matches) + " primitive factorizations of " + n.name(d, s));
          continue;
        }
        const sset::PrimitiveFactorization pf = sset::primitive_factorization(u, d, s);
        if (pf.dim != found_dim || pf.tau != found_tau || pf.f != found_f)
          v.fail(name + ": library factorization of " + n.name(d, s) + " differs from the unique one");
      }
    for (int r = 1; r <= std::min(top, cap); ++r) {
      const sset::PushoutVerification pv = sset::verify_rank_pushout(u, r);
      if (!pv.ok) v.fail(name + ": pushout at n=" + std::to_string(r) + " fails at " + pv.witness);
      // K^(r) has exactly the simplices of rank <= r.
      const sset::SimplicialMap filt = sset::rank_filtration(u, r);
      for (int d = 0; d <= cap; ++d) {
        int expected = 0;
        for (int s = 0; s < n.count(d); ++s) expected += rank(d, s) <= r;
        if (filt.source->count(d) != expected) v.fail(name + ": K^(" + std::to_string(r) + ") has the wrong size");
      }
    }
    if (!sset::is_bijective(sset::rank_filtration(u, top))) v.fail(name + ": filtration does not exhaust N(hK)");
  }
  if (v.pass) v.detail = std::to_string(simplices) + " simplices over 4 inputs, each with a unique factorization";
  return v;
}

// ---------------------------------------------------------------------------
// 3. p ∘ i = id and i^* p^* = id.

Verdict criterion_retraction() {
  Verdict v;
  std::vector<dsub::DCat> ds;
  for (int n = 0; n <= 3; ++n) {
    ds.push_back(dsub::d_subdivision(fincat::share(fincat::ordinal(n)), 3));
    const auto pi = fincat::CatFunctor::compose(dsub::p_categorical(ds.back()), dsub::frame_embedding_i(ds.back()));
    for (int o = 0; o < static_cast<int>(pi.object_map.size()); ++o)
      v.require(pi.object_map[o] == o, "p∘i moves an object of [" + std::to_string(n) + "]");
    for (int m = 0; m < static_cast<int>(pi.morphism_map.size()); ++m)
      v.require(pi.morphism_map[m] == m, "p∘i moves a morphism of [" + std::to_string(n) + "]");
  }
  for (int k = 0; k < 20; ++k) {
    Rng rng = seeded(3, k);
    const dsub::DCat& d = ds[1 + k % 2];
    const ChainDiagram x = random_sequence(rng, d.base_category, 2, 2);
    const ChainDiagram back = pullback(pullback(x, dsub::p_categorical(d)), dsub::frame_embedding_i(d));
    for (int o = 0; o < x.index->object_count(); ++o)
      v.require(*back.objects[o] == *x.objects[o], "i*p*X differs in an object, case " + std::to_string(k));
    for (int m = 0; m < x.index->morphism_count(); ++m)
      v.require(same_map(back.maps[m], x.maps[m]), "i*p*X differs in a map, case " + std::to_string(k));
  }
  if (v.pass) v.detail = "[0]..[3] and 20 diagrams over [1], [2]";
  return v;
}

// ---------------------------------------------------------------------------
// 4. Generated weak equivalences of D(NI) versus the p-iso class.

Verdict criterion_weq_agreement() {
  Verdict v;
  const std::vector<std::pair<std::string, fincat::FinCategory>> shapes{
      {"[1]", fincat::ordinal(1)}, {"[2]", fincat::ordinal(2)}, {"zigzag", fincat::zigzag()}};
  std::string sizes;
  for (const auto& [name, c] : shapes) {
    // Only identities are invertible in these shapes.
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b)
        v.require(a == b || c.hom(a, b).empty() || c.hom(b, a).empty(), name + " has a non-trivial isomorphism");
    const dsub::DCat d = dsub::d_subdivision(fincat::share(c), 3);
    const fincat::MorphismClass closed =
        fincat::closure(*d.category, dsub::p_degenerate(d), fincat::ClosureMode::TwoOfSix);
    v.require(closed == dsub::d_weak_equivalences(d), name + ": d_weak_equivalences differs from the closure");
    // p sends (m, σ) -> (n, τ) along i to τ(i(m)) -> τ(n); an isomorphism iff both ends agree.
    int members = 0;
    for (int m = 0; m < d.category->morphism_count(); ++m) {
      const dsub::DObject t = d.objects[d.category->target(m)];
      const std::vector<int> verts = d.base->vertices(t.dim, t.simplex);
      const bool iso = verts[d.top(m)] == verts[t.dim];
      members += iso;
      if (closed.contains(m) != iso) {
        v.fail(name + ": " + d.category->morphism_name(m) + (iso ? " is p-iso but not generated" : " is generated but not p-iso"));
        break;
      }
    }
    sizes += (sizes.empty() ? "" : ", ") + name + " " + std::to_string(members) + "/" +
             std::to_string(d.category->morphism_count());
  }
  if (v.pass) v.detail = "equal classes: " + sizes;
  return v;
}

// ---------------------------------------------------------------------------
// 5. Reedy colimits.

Verdict criterion_reedy_colimit() {
  Verdict v;
  int objects = 0;
  for (int k = 0; k < 30; ++k) {
    Rng rng = seeded(5, k);
    const auto idx = fincat::share(random_direct_category(rng, 5));
    const ChainDiagram x = random_reedy_cofibrant(rng, idx, 2, 12);
    const std::string id = "case " + std::to_string(k);
    objects += idx->object_count();
    v.require(idx->object_count() <= 5, id + ": more than 5 objects");
    int lo = 0, hi = 0;
    for (const auto& o : x.objects) {
      v.require(o->total_dim() <= 12, id + ": a value has total dimension above 12");
      lo = std::min(lo, o->lo());
      hi = std::max(hi, o->hi());
    }
    std::string where;
    v.require(oracle::latching_maps_injective(x, &where), id + ": input not Reedy cofibrant at " + where);
    if (!v.pass) return v;
    const ReedyColimit col = reedy_colimit(x);
    const std::string m = colimit_mismatch(x, col);
    v.require(m.empty(), id + ": " + m);
    for (int n = lo - 1; n <= hi + 1; ++n)
      v.require(col.object->dim(n) == oracle::colimit_dim(x, n), id + ": colimit dimension in degree " + std::to_string(n));
    const ExactFunctor t2 = ExactFunctor::tensor(2);
    const std::string f = colimit_preservation_failure(t2, x);
    v.require(f.empty(), id + ": " + f);
    const ChainDiagram fx = pushforward_exact(t2, x);
    const ReedyColimit fcol = reedy_colimit(fx);
    for (int n = lo - 1; n <= hi + 1; ++n)
      v.require(fcol.object->dim(n) == 2 * col.object->dim(n), id + ": ⊗F_p² changes the colimit dimension");
  }
  if (v.pass) v.detail = "30 diagrams, " + std::to_string(objects) + " objects in total";
  return v;
}

// ---------------------------------------------------------------------------
// 6. Factorization into a cofibration and a quasi-isomorphism.

Verdict criterion_factorization() {
  Verdict v;
  for (int k = 0; k < 100; ++k) {
    Rng rng = seeded(6, k);
    const int lo = uniform(rng, 3) - 1;
    const auto x = share(random_complex(rng, 2, lo, lo + 2, 3));
    const auto y = share(random_complex(rng, 2, lo, lo + 2, 3));
    const ChainMap f = random_chain_map(rng, x, y);
    const Factorization fac = factorize(f);
    const std::string id = "case " + std::to_string(k);
    v.require(chain_map_violation(fac.i).empty() && chain_map_violation(fac.q).empty(), id + ": not chain maps");
    v.require(same_map(ChainMap::compose(fac.q, fac.i), f), id + ": q∘i != f");
    v.require(oracle::injective(fac.i), id + ": i is not injective");
    v.require(oracle::quasi_iso(fac.q), id + ": q is not a quasi-isomorphism");
  }
  if (v.pass) v.detail = "100 maps";
  return v;
}

// ---------------------------------------------------------------------------
// 7. Relative Reedy cofibrant replacement on frame shapes.

void check_replacement(Verdict& v, const std::string& id, const ChainDiagram& x, const fincat::MorphismClass& weq,
                       const fincat::CatFunctor& sieve, const ChainDiagram& h, const DiagramMap& f,
                       const ChainDiagram& r, const DiagramMap& g) {
  v.require(diagram_violation(r).empty(), id + ": replacement is not a diagram");
  v.require(diagram_map_violation(r, x, g).empty(), id + ": g is not natural");
  if (!v.pass) return;
  const ChainDiagram restricted = pullback(r, sieve);
  for (int o = 0; o < sieve.source->object_count(); ++o) {
    v.require(*restricted.objects[o] == *h.objects[o], id + ": restriction differs from H at an object");
    v.require(same_map(g.components[sieve.object_map[o]], f.components[o]), id + ": g does not restrict to f");
  }
  for (int m = 0; m < sieve.source->morphism_count(); ++m)
    v.require(same_map(restricted.maps[m], h.maps[m]), id + ": restriction differs from H at a map");
  for (const ChainMap& c : g.components) v.require(oracle::quasi_iso(c), id + ": g is not a levelwise weq");
  std::string where;
  v.require(oracle::latching_maps_injective(r, &where), id + ": latching map at " + where + " not injective");
  for (int m : weq.members()) v.require(oracle::quasi_iso(r.maps[m]), id + ": not homotopical");
}

Verdict criterion_replacement() {
  Verdict v;
  const frames::FrameContext ctx(3, 2);
  for (int level = 0; level <= 2; ++level)
    for (int k = 0; k < 4; ++k) {
      Rng rng = seeded(7, level * 4 + k);
      const std::string id = "D[" + std::to_string(level) + "] case " + std::to_string(k);
      const fincat::MorphismClass& weq = ctx.shape(level).weq;
      if (level == 0) {
        const ChainDiagram x = frames::p_star(ctx, 0, {small_complex(rng)}, {});
        const auto none = empty_sieve(x.index);
        const Replacement r = reedy_replace(x, weq);
        check_replacement(v, id, x, weq, none, ChainDiagram{none.source, {}, {}}, {}, r.diagram, r.g);
      } else if (level == 1) {
        const auto x = small_complex(rng), y = small_complex(rng);
        const frames::EdgeFrame e = frames::frame_of_map(ctx, random_chain_map(rng, x, y));
        v.require(e.problem.sieve.source->object_count() > 0, id + ": empty endpoint sieve");
        check_replacement(v, id, e.problem.x, weq, e.problem.sieve, e.problem.h, e.problem.f, e.frame.diagram, e.g);
      } else {
        const auto x = small_complex(rng), y = small_complex(rng), z = small_complex(rng);
        const frames::TriangleFrame t =
            frames::frame_of_triangle(ctx, random_chain_map(rng, x, y), random_chain_map(rng, y, z));
        v.require(t.problem.sieve.source->object_count() > 0, id + ": empty boundary sieve");
        check_replacement(v, id, t.problem.x, weq, t.problem.sieve, t.problem.h, t.problem.f, t.frame.diagram, t.g);
      }
    }
  if (v.pass) v.detail = "4 cases each on D[0], D[1], D[2] at cap 3";
  return v;
}

// ---------------------------------------------------------------------------
// 8. θ.

Verdict criterion_theta() {
  Verdict v;
  const frames::FrameContext ctx(3, 2);
  for (int k = 0; k < 20; ++k) {
    Rng rng = seeded(8, k);
    const std::string id = "case " + std::to_string(k);
    const auto x = small_complex(rng), y = small_complex(rng), z = small_complex(rng);
    const ChainMap f = random_chain_map(rng, x, y), g = random_chain_map(rng, y, z);

    const frames::ObjectFrame vx = frames::frame_of_object(ctx, x);
    const frames::HoMorphism deg = frames::theta(ctx, frames::degeneracy(ctx, vx.frame, 0));
    v.require(oracle::is_identity(deg.matrix), id + ": θ of a degenerate edge is not the identity");

    // H(g_t)^{-1} H(f) H(g_s) between the homologies of the vertex values.
    const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
    const Homology hs = homology(*e.source.value()), ht = homology(*e.target.value());
    const Homology hx = homology(*x), hy = homology(*y);
    const GradedMatrix gs = induced(e.source.to_model(ctx), hs, hx);
    const GradedMatrix gt = induced(e.target.to_model(ctx), ht, hy);
    v.require(oracle::invertible(gs) && oracle::invertible(gt), id + ": frame equivalences are not quasi-isos");
    if (!v.pass) return v;
    const GradedMatrix expected = GradedMatrix::compose(gt.inverse(), GradedMatrix::compose(induced(f, hx, hy), gs));
    v.require(same_graded(frames::theta(ctx, e.frame).matrix, expected), id + ": θ(frame of f) != H(f) conjugated");

    const frames::TriangleFrame t = frames::frame_of_triangle(ctx, f, g);
    const GradedMatrix d0 = frames::theta(ctx, frames::face(ctx, t.frame, 0)).matrix;
    const GradedMatrix d1 = frames::theta(ctx, frames::face(ctx, t.frame, 1)).matrix;
    const GradedMatrix d2 = frames::theta(ctx, frames::face(ctx, t.frame, 2)).matrix;
    v.require(same_graded(d1, GradedMatrix::compose(d0, d2)), id + ": θ(d₁T) != θ(d₀T)∘θ(d₂T)");
  }
  if (v.pass) v.detail = "20 degenerate edges, 20 edges, 20 triangles";
  return v;
}

// ---------------------------------------------------------------------------
// 9. Equivalence edges.

Verdict criterion_equivalence_edges() {
  Verdict v;
  const frames::FrameContext ctx(3, 1);
  int qisos = 0, others = 0;
  for (int k = 0; k < 20; ++k) {
    Rng rng = seeded(9, k);
    const auto x = small_complex(rng), y = small_complex(rng);
    const std::vector<ChainMap> corpus{random_chain_map(rng, x, y), random_quasi_iso(rng, x), ChainMap::identity(y),
                                       ChainMap::zero(x, y)};
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const ChainMap& f = corpus[j];
      const std::string id = "case " + std::to_string(k) + "." + std::to_string(j);
      const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
      const bool qi = oracle::quasi_iso(f);
      (qi ? qisos : others)++;
      const bool detected = frames::is_equivalence_edge(ctx, e.frame);
      v.require(detected == qi, id + (qi ? ": quasi-isomorphism not detected" : ": non-quasi-isomorphism detected"));
      v.require(detected == oracle::invertible(frames::theta(ctx, e.frame).matrix),
                id + ": detection disagrees with θ invertible");
    }
  }
  if (v.pass) v.detail = std::to_string(qisos) + " quasi-isomorphisms, " + std::to_string(others) + " others";
  return v;
}

// ---------------------------------------------------------------------------
// 10. e ∘ pr^* = id.

Verdict criterion_e_left_inverse() {
  Verdict v;
  const frames::FrameContext ctx(1, 1);
  const dsub::DCat di = dsub::d_subdivision(fincat::share(fincat::ordinal(1)), ctx.cap());
  std::vector<frames::MixShape> shapes;
  for (int l = 0; l <= 1; ++l) shapes.push_back(frames::mix_shape(ctx, l, di));
  for (int k = 0; k < 10; ++k) {
    Rng rng = seeded(10, k);
    const frames::MixShape& ms = shapes[k % 2];
    const ChainDiagram x = random_sequence(rng, di.base_category, 2, 2);
    const auto to_di = fincat::product_projection(ms.outer, ctx.shape(ms.level).category, di.category, 1);
    const ChainDiagram px = pullback(x, fincat::CatFunctor::compose(dsub::p_categorical(di), to_di));
    const ChainDiagram y = reedy_replace(px, ms.outer_weq).diagram;
    const ChainDiagram back = frames::e_mix(ctx, ms, frames::pr_pullback(ms, y));
    const std::string id = "case " + std::to_string(k);
    v.require(back.index->object_count() == y.index->object_count(), id + ": shapes differ");
    if (!v.pass) return v;
    for (int o = 0; o < y.index->object_count(); ++o)
      v.require(*back.objects[o] == *y.objects[o], id + ": e∘pr^* changes an object");
    for (int m = 0; m < y.index->morphism_count(); ++m)
      v.require(same_map(back.maps[m], y.maps[m]), id + ": e∘pr^* changes a map");
  }
  if (v.pass) v.detail = "10 frames at levels 0 and 1";
  return v;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0 for no limit
  Verdict (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "zig-zag arrow outside the essential image", 1.0, criterion_non_strong},
      {2, "rank filtration by inner anodyne pushouts", 10.0, criterion_inner_anodyne},
      {3, "p∘i = id and i*p* = id", 0, criterion_retraction},
      {4, "generated weak equivalences equal the p-iso class", 0, criterion_weq_agreement},
      {5, "Reedy colimit equals the coequalizer colimit", 5.0, criterion_reedy_colimit},
      {6, "factorization into cofibration and quasi-iso", 0, criterion_factorization},
      {7, "relative replacement postconditions", 0, criterion_replacement},
      {8, "θ on degenerate edges, edges and triangles", 0, criterion_theta},
      {9, "equivalence edges are the quasi-isos", 0, criterion_equivalence_edges},
      {10, "e is left inverse to pr^*", 0, criterion_e_left_inverse},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const coframes::Error& e) {
      v.fail(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    failed += !v.pass;
    std::printf("%s %2d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.number, c.name, v.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
