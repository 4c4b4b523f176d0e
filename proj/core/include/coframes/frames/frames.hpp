#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coframes/chain/reedy.hpp"
#include "coframes/dsub/dcat.hpp"

namespace coframes::frames {

using chain::ChainDiagram;
using chain::ChainMap;
using chain::ComplexPtr;
using chain::DiagramMap;
using chain::FactorStrategy;
using chain::GradedMatrix;
using chain::Homology;

/// The shapes D[0..max_level] truncated at `cap`, with the functors D(δ_i)
/// and D(σ_i) between them. Immutable once built; share it between frames.
class FrameContext {
 public:
  explicit FrameContext(int cap = 3, int max_level = 2, FactorStrategy strategy = FactorStrategy::Minimal);

  int cap() const { return cap_; }
  int max_level() const { return static_cast<int>(shapes_.size()) - 1; }
  FactorStrategy strategy() const { return strategy_; }
  const dsub::DCat& shape(int level) const;
  /// D(δ_i): D[level-1] -> D[level].
  const fincat::CatFunctor& face(int level, int i) const;
  /// D(σ_i): D[level+1] -> D[level].
  const fincat::CatFunctor& degeneracy(int level, int i) const;
  /// The object (0, v) of D[level].
  int vertex_object(int level, int v) const;
  /// The object (level, id) of D[level].
  int top_object(int level) const;
  /// The morphism (0, v) -> (level, id).
  int vertex_leg(int level, int v) const;

 private:
  int cap_;
  FactorStrategy strategy_;
  std::vector<dsub::DCat> shapes_;
  std::vector<std::vector<fincat::CatFunctor>> faces_, degeneracies_;
  std::vector<int> top_;
};

/// A level-n simplex of the truncated frames nerve: a diagram on D[n].
struct FrameSimplex {
  int level = 0;
  ChainDiagram diagram;
};

struct FrameReport {
  bool reedy_cofibrant = true;
  bool homotopical = true;
  std::string reedy_witness;
  std::string homotopical_witness;
  bool ok() const { return reedy_cofibrant && homotopical; }
};

FrameReport validate_frame(const FrameContext& ctx, const FrameSimplex& s);

FrameSimplex face(const FrameContext& ctx, const FrameSimplex& s, int i);
FrameSimplex degeneracy(const FrameContext& ctx, const FrameSimplex& s, int i);
/// p^* of a diagram over [n] (a sequence of chain maps).
ChainDiagram p_star(const FrameContext& ctx, int level, const std::vector<ComplexPtr>& xs,
                    const std::vector<ChainMap>& steps);

/// A vertex frame with its weak equivalence g to the constant diagram on X.
struct ObjectFrame {
  FrameSimplex frame;
  ComplexPtr model;
  DiagramMap g;
  ComplexPtr value() const;  ///< the value at (0, id)
  const ChainMap& to_model(const FrameContext& ctx) const;
};

ObjectFrame frame_of_object(const FrameContext& ctx, const ComplexPtr& x);

/// The data a relative replacement starts from: X, the sieve I ⊂ D[n], and
/// f: H -> X|_I glued from frames on the faces.
struct RelativeProblem {
  ChainDiagram x;
  fincat::CatFunctor sieve;
  ChainDiagram h;
  DiagramMap f;
};

struct EdgeFrame {
  FrameSimplex frame;
  ChainMap f;
  DiagramMap g;  ///< frame -> p^*(f)
  ObjectFrame source, target;
  RelativeProblem problem;
};

/// Replacement of p^*(f) relative to the endpoint sieve; endpoint frames are
/// built when not supplied and must have models equal to f's endpoints.
EdgeFrame frame_of_map(const FrameContext& ctx, const ChainMap& f, const ObjectFrame* source = nullptr,
                       const ObjectFrame* target = nullptr);

struct TriangleFrame {
  FrameSimplex frame;
  DiagramMap g;
  EdgeFrame e01, e12, e02;
  RelativeProblem problem;
};

/// Level-2 frame on g∘f, replaced relative to D(∂Δ²) filled by the three edge frames.
TriangleFrame frame_of_triangle(const FrameContext& ctx, const ChainMap& f, const ChainMap& g);
/// Level-2 frame on g∘f replaced with no sieve at all.
FrameSimplex frame_of_triangle_free(const FrameContext& ctx, const ChainMap& f, const ChainMap& g);

/// A morphism of the homotopy category in chosen homology bases.
struct HoMorphism {
  Homology source, target;
  GradedMatrix matrix;

  bool is_iso() const;
  static HoMorphism identity(const Homology& h);
  static HoMorphism compose(const HoMorphism& second, const HoMorphism& first);
};

bool same_ho(const HoMorphism& a, const HoMorphism& b);

/// θ(E) = H(1_*)^{-1} ∘ H(0_*) for the zig-zag E(0) -> E(id) <- E(1).
/// Throws coframes::Error when the right leg is not a quasi-isomorphism.
HoMorphism theta(const FrameContext& ctx, const FrameSimplex& edge);
/// H(g_1)^{-1} ∘ H(f) ∘ H(g_0) in the bases of the frame values at the vertices.
HoMorphism theta_expected(const FrameContext& ctx, const EdgeFrame& e);

/// Every morphism of D[1] (up to the cap) goes to a quasi-isomorphism.
bool is_equivalence_edge(const FrameContext& ctx, const FrameSimplex& edge);

struct TriangleReport {
  bool ok = false;
  HoMorphism d0, d1, d2;  ///< θ of the faces
  std::string detail;
};

/// θ(d₁T) = θ(d₀T) ∘ θ(d₂T).
TriangleReport check_triangle_coherence(const FrameContext& ctx, const FrameSimplex& t);

/// Result of lifting an incoherent diagram on a free category.
struct LiftResult {
  bool ok = false;
  std::vector<EdgeFrame> edges;     ///< one per generating arrow
  std::vector<HoMorphism> thetas;   ///< θ of each edge
  std::string detail;
};

/// For each generating arrow a: s -> t of the free category `f`, realizes
/// `arrows[a]` (from H of the value of vertex_frames[s] to that of
/// vertex_frames[t]) by an edge frame between the given vertex frames.
/// Over a field every graded matrix is realized, so the search never fails on
/// valid input. Throws coframes::Error when `f` is not free or shapes mismatch.
LiftResult lift_free_diagram(const FrameContext& ctx, const fincat::CategoryPtr& f,
                             const std::vector<ObjectFrame>& vertex_frames,
                             const std::vector<GradedMatrix>& arrows);

/// A chain map X -> Y inducing `m` in the bases of homology(X), homology(Y).
ChainMap realize(const ComplexPtr& x, const ComplexPtr& y, const GradedMatrix& m);

}  // namespace coframes::frames
