#pragma once

#include "coframes/frames/frames.hpp"
#include "coframes/sset/sset.hpp"

namespace coframes::frames {

/// Shapes for Φ: the comparison D(K × Δⁿ) -> DK × D[n].
struct PhiShape {
  int n = 0;
  dsub::DCat dk;
  fincat::CategoryPtr product;        ///< DK × D[n]
  fincat::MorphismClass product_weq;  ///< pairs of weak equivalences
  dsub::DCat dkn;                     ///< D(K × Δⁿ)
  fincat::CatFunctor comparison;
};

/// K is truncated to the context's cap; n <= ctx.max_level().
PhiShape phi_shape(const FrameContext& ctx, const sset::SSetPtr& k, int n);

/// Φ on an n-simplex of N_f(C^{DK}), given as a diagram on DK × D[n]:
/// restriction along the comparison functor.
ChainDiagram phi_restrict(const PhiShape& shape, const ChainDiagram& s);

/// The frame Φ(s) assigns to an m-simplex σ of K × Δⁿ: restriction along
/// D[m] -> D(K × Δⁿ), (k, τ) |-> (k, τ^*σ).
FrameSimplex phi_frame_at(const FrameContext& ctx, const PhiShape& shape, const ChainDiagram& restricted, int dim,
                          int simplex);

/// Shapes for e at level l over DI: D[l] × DI and (D[l] × DI) × D[0].
struct MixShape {
  int level = 0;
  dsub::DCat di;
  fincat::CategoryPtr outer, triple;
  fincat::MorphismClass outer_weq, triple_weq;
  fincat::CatFunctor pr;  ///< triple -> outer, forgetting the D[0] factor
};

MixShape mix_shape(const FrameContext& ctx, int level, const dsub::DCat& di);

/// X̃(a, b) = X(a, b, [m] -> [0]) where a = ([m] -> [l]); morphisms reuse the
/// injection of the D[l] component in the D[0] factor.
ChainDiagram e_mix(const FrameContext& ctx, const MixShape& shape, const ChainDiagram& x);
ChainDiagram pr_pullback(const MixShape& shape, const ChainDiagram& y);

}  // namespace coframes::frames
