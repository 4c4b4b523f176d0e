#include "coframes/frames/comparison.hpp"

#include "coframes/error.hpp"

namespace coframes::frames {

PhiShape phi_shape(const FrameContext& ctx, const sset::SSetPtr& k, int n) {
  PhiShape s;
  s.n = n;
  const dsub::DCat& dn = ctx.shape(n);
  const auto kc = sset::share(sset::truncate(*k, ctx.cap()));
  s.dk = dsub::d_subdivision(kc, ctx.cap());
  s.product = fincat::share(fincat::product_category(*s.dk.category, *dn.category));
  s.product_weq = fincat::product_class(*s.dk.category, s.dk.weq, *dn.category, dn.weq);
  s.dkn = dsub::d_subdivision(sset::share(sset::product_sset(*kc, *dn.base)), ctx.cap());
  s.comparison = dsub::projection_comparison(s.dkn, s.dk, dn, s.product);
  return s;
}

ChainDiagram phi_restrict(const PhiShape& shape, const ChainDiagram& s) {
  if (s.index->object_count() != shape.product->object_count())
    throw Error("phi_restrict: diagram is not indexed by DK × D[n]");
  return chain::pullback(s, shape.comparison);
}

FrameSimplex phi_frame_at(const FrameContext& ctx, const PhiShape& shape, const ChainDiagram& restricted, int dim,
                          int simplex) {
  const dsub::DCat& dm = ctx.shape(dim);
  const sset::TruncatedSSet& target = *shape.dkn.base;
  const sset::SimplicialMap sigma = sset::make_map(dm.base, shape.dkn.base, [&](int d, int s) {
    const auto v = dm.base->vertices(d, s);
    return target.pullback(dim, simplex, v);
  });
  return {dim, chain::pullback(restricted, dsub::d_of_map(dm, shape.dkn, sigma))};
}

MixShape mix_shape(const FrameContext& ctx, int level, const dsub::DCat& di) {
  MixShape s;
  s.level = level;
  s.di = di;
  const dsub::DCat& dl = ctx.shape(level);
  const dsub::DCat& d0 = ctx.shape(0);
  s.outer = fincat::share(fincat::product_category(*dl.category, *di.category));
  s.outer_weq = fincat::product_class(*dl.category, dl.weq, *di.category, di.weq);
  s.triple = fincat::share(fincat::product_category(*s.outer, *d0.category));
  s.triple_weq = fincat::product_class(*s.outer, s.outer_weq, *d0.category, d0.weq);
  s.pr = fincat::product_projection(s.triple, s.outer, d0.category, 0);
  return s;
}

ChainDiagram e_mix(const FrameContext& ctx, const MixShape& shape, const ChainDiagram& x) {
  const dsub::DCat& dl = ctx.shape(shape.level);
  const dsub::DCat& d0 = ctx.shape(0);
  if (x.index->object_count() != shape.triple->object_count())
    throw Error("e_mix: diagram is not indexed by D[l] × DI × D[0]");
  const int ni = shape.di.category->object_count(), mi = shape.di.category->morphism_count();
  const int n0 = d0.category->object_count(), m0 = d0.category->morphism_count();
  fincat::CatFunctor mix{shape.outer, shape.triple, {}, {}};
  for (int o = 0; o < shape.outer->object_count(); ++o) {
    const int a = o / ni;
    mix.object_map.push_back(o * n0 + d0.object_of(dl.dim(a), 0));
  }
  for (int m = 0; m < shape.outer->morphism_count(); ++m) {
    const int u = m / mi;
    const int target = d0.object_of(dl.dim(dl.category->target(u)), 0);
    mix.morphism_map.push_back(m * m0 + d0.morphism(target, dl.image[u]));
  }
  return chain::pullback(x, mix);
}

ChainDiagram pr_pullback(const MixShape& shape, const ChainDiagram& y) { return chain::pullback(y, shape.pr); }

}  // namespace coframes::frames
