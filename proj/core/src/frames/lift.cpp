#include "coframes/error.hpp"
#include "coframes/fincat/analysis.hpp"
#include "coframes/frames/frames.hpp"

namespace coframes::frames {

ChainMap realize(const ComplexPtr& x, const ComplexPtr& y, const GradedMatrix& m) {
  const chain::Homology hx = chain::homology(*x), hy = chain::homology(*y);
  // coords kill boundaries, so x |-> reps_Y · m · coords_X(x) is a chain map.
  return ChainMap::build(x, y, [&](int n) {
    const chain::Matrix block = m.at(n);
    if (block.rows() != hy.dim(n) || block.cols() != hx.dim(n)) {
      if (hx.dim(n) == 0 || hy.dim(n) == 0) return chain::Matrix(x->prime(), y->dim(n), x->dim(n));
      throw Error("realize: graded matrix has the wrong shape in degree " + std::to_string(n));
    }
    return hy.rep(n, y->dim(n)) * block * hx.coord(n, x->dim(n));
  });
}

LiftResult lift_free_diagram(const FrameContext& ctx, const fincat::CategoryPtr& f,
                             const std::vector<ObjectFrame>& vertex_frames,
                             const std::vector<GradedMatrix>& arrows) {
  const auto quiver = fincat::is_free(*f);
  if (!quiver) throw Error("lift_free_diagram: category is not free");
  if (static_cast<int>(vertex_frames.size()) != f->object_count())
    throw Error("lift_free_diagram: need one vertex frame per object");
  if (arrows.size() != quiver->arrows.size()) throw Error("lift_free_diagram: need one graded matrix per arrow");
  LiftResult out;
  out.ok = true;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int m = quiver->arrows[a];
    const ObjectFrame& s = vertex_frames[f->source(m)];
    const ObjectFrame& t = vertex_frames[f->target(m)];
    // Transport the prescribed matrix along the frames' equivalences to the models.
    const ChainMap& gs = s.to_model(ctx);
    const ChainMap& gt = t.to_model(ctx);
    const chain::Homology hs = chain::homology(*s.value()), ht = chain::homology(*t.value());
    const chain::Homology hx = chain::homology(*s.model), hy = chain::homology(*t.model);
    const GradedMatrix on_models = GradedMatrix::compose(
        chain::induced(gt, ht, hy), GradedMatrix::compose(arrows[a], chain::induced(gs, hs, hx).inverse()));
    const ChainMap phi = realize(s.model, t.model, on_models);
    out.edges.push_back(frame_of_map(ctx, phi, &s, &t));
    out.thetas.push_back(theta(ctx, out.edges.back().frame));
    if (!chain::same_graded(out.thetas.back().matrix, arrows[a])) {
      out.ok = false;
      out.detail = "θ of the edge for '" + f->morphism_name(m) + "' is " + out.thetas.back().matrix.to_string() +
                   ", expected " + arrows[a].to_string();
    }
  }
  return out;
}

}  // namespace coframes::frames
