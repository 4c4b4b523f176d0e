#include "coframes/frames/frames.hpp"

#include <algorithm>

#include "coframes/error.hpp"

namespace coframes::frames {

using chain::ChainComplex;
using fincat::CatFunctor;
using fincat::FinCategory;

namespace {

// The functor [m] -> [n] of a monotone map between ordinals.
CatFunctor monotone(const fincat::CategoryPtr& src, const fincat::CategoryPtr& tgt, const std::vector<int>& f) {
  CatFunctor out{src, tgt, f, {}};
  for (int m = 0; m < src->morphism_count(); ++m)
    out.morphism_map.push_back(tgt->hom(f[src->source(m)], f[src->target(m)]).front());
  return out;
}

// Inclusion of the full subcategory on `objects` with, for each of them, the
// (frame, object) it comes from under the given face functors.
struct Boundary {
  CatFunctor inclusion;
  std::vector<int> part, local;  // per subcategory object
};

Boundary boundary_sieve(const FrameContext& ctx, int level, const std::vector<int>& faces) {
  const dsub::DCat& d = ctx.shape(level);
  std::vector<int> part(d.category->object_count(), -1), local(d.category->object_count(), -1);
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const CatFunctor& f = ctx.face(level, faces[k]);
    for (std::size_t a = 0; a < f.object_map.size(); ++a)
      if (part[f.object_map[a]] < 0) {
        part[f.object_map[a]] = static_cast<int>(k);
        local[f.object_map[a]] = static_cast<int>(a);
      }
  }
  std::vector<int> objects;
  for (int j = 0; j < d.category->object_count(); ++j)
    if (part[j] >= 0) objects.push_back(j);
  Boundary b{fincat::full_subcategory(d.category, objects), {}, {}};
  for (int j : objects) {
    b.part.push_back(part[j]);
    b.local.push_back(local[j]);
  }
  return b;
}

// H over the boundary from frames on the faces, and f: H -> X|_boundary from
// their weak equivalences to the faces of X.
std::pair<ChainDiagram, DiagramMap> glue_boundary(const FrameContext& ctx, int level, const Boundary& b,
                                                  const std::vector<int>& faces,
                                                  const std::vector<const ChainDiagram*>& frames,
                                                  const std::vector<const DiagramMap*>& gs, const ChainDiagram& x) {
  const FinCategory& sub = *b.inclusion.source;
  ChainDiagram h{b.inclusion.source, {}, {}};
  DiagramMap f;
  for (int k = 0; k < sub.object_count(); ++k) {
    h.objects.push_back(frames[b.part[k]]->objects[b.local[k]]);
    ChainMap c = gs[b.part[k]]->components[b.local[k]];
    c.target = x.objects[b.inclusion.object_map[k]];
    f.components.push_back(std::move(c));
  }
  for (int m = 0; m < sub.morphism_count(); ++m) {
    const int t = sub.target(m);
    const CatFunctor& face = ctx.face(level, faces[b.part[t]]);
    const int underlying = b.inclusion.morphism_map[m];
    auto it = std::find(face.morphism_map.begin(), face.morphism_map.end(), underlying);
    if (it == face.morphism_map.end()) throw Error("glue_boundary: morphism not in the face");
    h.maps.push_back(frames[b.part[t]]->maps[it - face.morphism_map.begin()]);
  }
  return {std::move(h), std::move(f)};
}

}  // namespace

FrameContext::FrameContext(int cap, int max_level, FactorStrategy strategy) : cap_(cap), strategy_(strategy) {
  if (max_level < 0) throw Error("frames: negative level");
  if (cap < max_level) throw Error("frames: cap " + std::to_string(cap) + " is below the frame level " + std::to_string(max_level));
  std::vector<fincat::CategoryPtr> ords;
  for (int n = 0; n <= max_level; ++n) {
    ords.push_back(fincat::share(fincat::ordinal(n)));
    shapes_.push_back(dsub::d_subdivision(ords.back(), cap));
  }
  faces_.resize(max_level + 1);
  degeneracies_.resize(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i) {
      std::vector<int> delta;
      for (int a = 0; a < n; ++a) delta.push_back(a < i ? a : a + 1);
      faces_[n].push_back(dsub::d_of_functor(shapes_[n - 1], shapes_[n], monotone(ords[n - 1], ords[n], delta)));
    }
    for (int i = 0; n < max_level && i <= n; ++i) {
      std::vector<int> sigma;
      for (int a = 0; a <= n + 1; ++a) sigma.push_back(a <= i ? a : a - 1);
      degeneracies_[n].push_back(
          dsub::d_of_functor(shapes_[n + 1], shapes_[n], monotone(ords[n + 1], ords[n], sigma)));
    }
    const sset::TruncatedSSet& base = *shapes_[n].base;
    int top = -1;
    for (int s = 0; s < base.count(n); ++s) {
      const auto v = base.vertices(n, s);
      bool ok = true;
      for (int a = 0; a <= n; ++a) ok = ok && v[a] == a;
      if (ok) top = s;
    }
    top_.push_back(shapes_[n].object_of(n, top));
  }
}

const dsub::DCat& FrameContext::shape(int level) const {
  if (level < 0 || level > max_level()) throw Error("frames: level " + std::to_string(level) + " out of range");
  return shapes_[level];
}

const CatFunctor& FrameContext::face(int level, int i) const {
  if (level < 1 || level > max_level() || i < 0 || i > level) throw Error("frames: no such face");
  return faces_[level][i];
}

const CatFunctor& FrameContext::degeneracy(int level, int i) const {
  if (level < 0 || level >= max_level() || i < 0 || i > level) throw Error("frames: no such degeneracy");
  return degeneracies_[level][i];
}

int FrameContext::vertex_object(int level, int v) const { return shape(level).object_of(0, v); }

int FrameContext::top_object(int level) const {
  shape(level);
  return top_[level];
}

int FrameContext::vertex_leg(int level, int v) const { return shape(level).morphism(top_object(level), 1u << v); }

FrameReport validate_frame(const FrameContext& ctx, const FrameSimplex& s) {
  FrameReport r;
  const dsub::DCat& d = ctx.shape(s.level);
  if (s.diagram.index->object_count() != d.category->object_count() ||
      s.diagram.index->morphism_count() != d.category->morphism_count())
    throw Error("validate_frame: diagram is not indexed by D[" + std::to_string(s.level) + "]");
  if (auto v = chain::diagram_violation(s.diagram); !v.empty()) throw Error("validate_frame: " + v);
  if (auto st = chain::reedy_cofibrant(s.diagram); !st.ok) {
    r.reedy_cofibrant = false;
    r.reedy_witness = st.detail;
  }
  if (auto m = chain::homotopical_violation(s.diagram, d.weq)) {
    r.homotopical = false;
    r.homotopical_witness = d.category->morphism_name(*m);
  }
  return r;
}

FrameSimplex face(const FrameContext& ctx, const FrameSimplex& s, int i) {
  return {s.level - 1, chain::pullback(s.diagram, ctx.face(s.level, i))};
}

FrameSimplex degeneracy(const FrameContext& ctx, const FrameSimplex& s, int i) {
  return {s.level + 1, chain::pullback(s.diagram, ctx.degeneracy(s.level, i))};
}

ChainDiagram p_star(const FrameContext& ctx, int level, const std::vector<ComplexPtr>& xs,
                    const std::vector<ChainMap>& steps) {
  const dsub::DCat& d = ctx.shape(level);
  return chain::pullback(chain::from_sequence(d.base_category, xs, steps), dsub::p_categorical(d));
}

ComplexPtr ObjectFrame::value() const { return frame.diagram.objects[0]; }

const ChainMap& ObjectFrame::to_model(const FrameContext& ctx) const {
  return g.components[ctx.vertex_object(0, 0)];
}

ObjectFrame frame_of_object(const FrameContext& ctx, const ComplexPtr& x) {
  const ChainDiagram px = p_star(ctx, 0, {x}, {});
  const chain::Replacement r = chain::reedy_replace(px, ctx.shape(0).weq, ctx.strategy());
  ObjectFrame out{{0, r.diagram}, x, r.g};
  if (out.value().get() != r.diagram.objects[ctx.vertex_object(0, 0)].get())
    throw Error("frame_of_object: (0, id) is not the first object of D[0]");
  if (!chain::is_quasi_iso(out.to_model(ctx))) throw Error("frame_of_object: value at (0, id) is not equivalent to X");
  return out;
}

EdgeFrame frame_of_map(const FrameContext& ctx, const ChainMap& f, const ObjectFrame* source,
                       const ObjectFrame* target) {
  EdgeFrame e;
  e.f = f;
  e.source = source ? *source : frame_of_object(ctx, f.source);
  e.target = target ? *target : frame_of_object(ctx, f.target);
  if (!(*e.source.model == *f.source) || !(*e.target.model == *f.target))
    throw Error("frame_of_map: endpoint frames do not model the endpoints of f");
  const ChainDiagram x = p_star(ctx, 1, {f.source, f.target}, {f});
  // δ_1 misses vertex 1 so it includes vertex 0, and δ_0 includes vertex 1.
  const std::vector<int> faces{1, 0};
  const Boundary b = boundary_sieve(ctx, 1, faces);
  auto [h, fh] = glue_boundary(ctx, 1, b, faces, {&e.source.frame.diagram, &e.target.frame.diagram},
                               {&e.source.g, &e.target.g}, x);
  const chain::Replacement r = chain::reedy_replace_rel(x, ctx.shape(1).weq, b.inclusion, h, fh, ctx.strategy());
  e.frame = {1, r.diagram};
  e.g = r.g;
  e.problem = {x, b.inclusion, std::move(h), std::move(fh)};
  return e;
}

TriangleFrame frame_of_triangle(const FrameContext& ctx, const ChainMap& f, const ChainMap& g) {
  TriangleFrame t;
  const ObjectFrame v0 = frame_of_object(ctx, f.source);
  const ObjectFrame v1 = frame_of_object(ctx, f.target);
  const ObjectFrame v2 = frame_of_object(ctx, g.target);
  const ChainMap gf = ChainMap::compose(g, f);
  t.e01 = frame_of_map(ctx, f, &v0, &v1);
  t.e12 = frame_of_map(ctx, g, &v1, &v2);
  t.e02 = frame_of_map(ctx, gf, &v0, &v2);
  const ChainDiagram x = p_star(ctx, 2, {f.source, f.target, g.target}, {f, g});
  // d_2 is the edge 01, d_0 the edge 12, d_1 the edge 02.
  const std::vector<int> faces{2, 0, 1};
  const Boundary b = boundary_sieve(ctx, 2, faces);
  auto [h, fh] = glue_boundary(ctx, 2, b, faces,
                               {&t.e01.frame.diagram, &t.e12.frame.diagram, &t.e02.frame.diagram},
                               {&t.e01.g, &t.e12.g, &t.e02.g}, x);
  if (auto v = chain::diagram_violation(h); !v.empty()) throw Error("frame_of_triangle: edges do not glue: " + v);
  const chain::Replacement r = chain::reedy_replace_rel(x, ctx.shape(2).weq, b.inclusion, h, fh, ctx.strategy());
  t.frame = {2, r.diagram};
  t.g = r.g;
  t.problem = {x, b.inclusion, std::move(h), std::move(fh)};
  return t;
}

FrameSimplex frame_of_triangle_free(const FrameContext& ctx, const ChainMap& f, const ChainMap& g) {
  const ChainDiagram x = p_star(ctx, 2, {f.source, f.target, g.target}, {f, g});
  return {2, chain::reedy_replace(x, ctx.shape(2).weq, ctx.strategy()).diagram};
}

bool HoMorphism::is_iso() const { return matrix.is_iso(); }

HoMorphism HoMorphism::identity(const Homology& h) { return {h, h, chain::identity_graded(h)}; }

HoMorphism HoMorphism::compose(const HoMorphism& second, const HoMorphism& first) {
  return {first.source, second.target, GradedMatrix::compose(second.matrix, first.matrix)};
}

bool same_ho(const HoMorphism& a, const HoMorphism& b) { return chain::same_graded(a.matrix, b.matrix); }

HoMorphism theta(const FrameContext& ctx, const FrameSimplex& edge) {
  if (edge.level != 1) throw Error("theta: expected an edge");
  const ChainDiagram& x = edge.diagram;
  const ChainMap& left = x.maps[ctx.vertex_leg(1, 0)];
  const ChainMap& right = x.maps[ctx.vertex_leg(1, 1)];
  const Homology h0 = chain::homology(*left.source);
  const Homology h1 = chain::homology(*right.source);
  const Homology hid = chain::homology(*left.target);
  const GradedMatrix r = chain::induced(right, h1, hid);
  if (!r.is_iso()) throw Error("theta: the leg at vertex 1 is not a quasi-isomorphism");
  return {h0, h1, GradedMatrix::compose(r.inverse(), chain::induced(left, h0, hid))};
}

HoMorphism theta_expected(const FrameContext& ctx, const EdgeFrame& e) {
  const ChainMap& g0 = e.g.components[ctx.vertex_object(1, 0)];
  const ChainMap& g1 = e.g.components[ctx.vertex_object(1, 1)];
  const Homology h0 = chain::homology(*g0.source), h1 = chain::homology(*g1.source);
  const Homology hx = chain::homology(*e.f.source), hy = chain::homology(*e.f.target);
  const GradedMatrix m = GradedMatrix::compose(
      chain::induced(g1, h1, hy).inverse(),
      GradedMatrix::compose(chain::induced(e.f, hx, hy), chain::induced(g0, h0, hx)));
  return {h0, h1, m};
}

bool is_equivalence_edge(const FrameContext& ctx, const FrameSimplex& edge) {
  if (edge.level != 1) throw Error("is_equivalence_edge: expected an edge");
  return !chain::homotopical_violation(edge.diagram, fincat::MorphismClass::all(*ctx.shape(1).category));
}

TriangleReport check_triangle_coherence(const FrameContext& ctx, const FrameSimplex& t) {
  if (t.level != 2) throw Error("check_triangle_coherence: expected a level-2 frame");
  TriangleReport r;
  r.d0 = theta(ctx, face(ctx, t, 0));
  r.d1 = theta(ctx, face(ctx, t, 1));
  r.d2 = theta(ctx, face(ctx, t, 2));
  const HoMorphism composite = HoMorphism::compose(r.d0, r.d2);
  r.ok = same_ho(r.d1, composite);
  if (!r.ok)
    r.detail = "θ(d1) = " + r.d1.matrix.to_string() + " but θ(d0)∘θ(d2) = " + composite.matrix.to_string() +
               " with θ(d0) = " + r.d0.matrix.to_string() + ", θ(d2) = " + r.d2.matrix.to_string();
  return r;
}

}  // namespace coframes::frames
