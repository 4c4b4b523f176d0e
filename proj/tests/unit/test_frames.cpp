#include <doctest.h>

#include "coframes/chain/generators.hpp"
#include "coframes/error.hpp"
#include "coframes/frames/comparison.hpp"
#include "coframes/frames/frames.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::chain;
using namespace coframes::frames;

namespace {

ComplexPtr small(Rng& rng) { return share(random_complex(rng, 2, 0, 2, 2)); }

}  // namespace

TEST_SUITE("frames") {

TEST_CASE("context shapes") {
  const FrameContext ctx(2, 2);
  CHECK(ctx.max_level() == 2);
  // D[0] at cap 2 is the three objects [0], [1] -> [0], [2] -> [0].
  CHECK(ctx.shape(0).category->object_count() == 3);
  const int top = ctx.top_object(1);
  CHECK(ctx.shape(1).dim(top) == 1);
  for (int v = 0; v <= 1; ++v) CHECK(ctx.shape(1).category->target(ctx.vertex_leg(1, v)) == top);
}

TEST_CASE("vertex frames are valid and carry H(X)") {
  const FrameContext ctx(2, 1);
  Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    const auto x = small(rng);
    const ObjectFrame v = frame_of_object(ctx, x);
    CHECK(validate_frame(ctx, v.frame).ok());
    CHECK(oracle::latching_maps_injective(v.frame.diagram));
    CHECK(oracle::quasi_iso(v.to_model(ctx)));
    for (int n = 0; n <= 2; ++n) CHECK(oracle::betti(*v.value(), n) == oracle::betti(*x, n));
  }
}

TEST_CASE("faces of degeneracies are identities") {
  const FrameContext ctx(2, 2);
  Rng rng(29);
  const EdgeFrame e = frame_of_map(ctx, random_chain_map(rng, small(rng), small(rng)));
  for (int i = 0; i <= 1; ++i) {
    const FrameSimplex s = degeneracy(ctx, e.frame, i);
    CHECK(s.level == 2);
    for (int j : {i, i + 1}) CHECK(same_diagram(face(ctx, s, j).diagram, e.frame.diagram));
  }
}

TEST_CASE("θ of an identity edge is the identity") {
  const FrameContext ctx(2, 1);
  Rng rng(31);
  const auto x = small(rng);
  const EdgeFrame e = frame_of_map(ctx, ChainMap::identity(x));
  CHECK(oracle::is_identity(theta(ctx, e.frame).matrix));
  CHECK(is_equivalence_edge(ctx, e.frame));
}

TEST_CASE("θ of a zero map between acyclic-free complexes is zero") {
  const FrameContext ctx(2, 1);
  const auto x = share(ChainComplex::sphere(2, 0));
  const auto y = share(ChainComplex::sphere(2, 0, 2));
  const EdgeFrame e = frame_of_map(ctx, ChainMap::zero(x, y));
  const GradedMatrix t = theta(ctx, e.frame).matrix;
  CHECK(t.at(0).rows() == 2);
  CHECK(t.at(0).cols() == 1);
  CHECK(t.at(0).is_zero());
  CHECK_FALSE(is_equivalence_edge(ctx, e.frame));
}

TEST_CASE("triangle frames restrict to their edges") {
  const FrameContext ctx(2, 2);
  Rng rng(37);
  const auto x = small(rng), y = small(rng), z = small(rng);
  const ChainMap f = random_chain_map(rng, x, y), g = random_chain_map(rng, y, z);
  const TriangleFrame t = frame_of_triangle(ctx, f, g);
  CHECK(validate_frame(ctx, t.frame).ok());
  CHECK(same_diagram(face(ctx, t.frame, 2).diagram, t.e01.frame.diagram));
  CHECK(same_diagram(face(ctx, t.frame, 0).diagram, t.e12.frame.diagram));
  CHECK(same_diagram(face(ctx, t.frame, 1).diagram, t.e02.frame.diagram));
  CHECK(check_triangle_coherence(ctx, t.frame).ok);
}

TEST_CASE("lifting a zig-zag of homology maps") {
  const FrameContext ctx(2, 1);
  Rng rng(41);
  auto c = fincat::share(fincat::zigzag());
  std::vector<ObjectFrame> vf;
  for (int o = 0; o < 4; ++o) vf.push_back(frame_of_object(ctx, small(rng)));
  const auto quiver = fincat::is_free(*c);
  REQUIRE(quiver.has_value());
  std::vector<GradedMatrix> arrows;
  for (int m : quiver->arrows) {
    const Homology hs = homology(*vf[c->source(m)].value()), ht = homology(*vf[c->target(m)].value());
    GradedMatrix g{2, 0, {}};
    for (int n = 0; n <= 2; ++n) g.blocks.push_back(random_matrix(rng, 2, ht.dim(n), hs.dim(n)));
    arrows.push_back(g);
  }
  const LiftResult r = lift_free_diagram(ctx, c, vf, arrows);
  CHECK(r.ok);
  REQUIRE(r.thetas.size() == 3);
  for (std::size_t a = 0; a < arrows.size(); ++a) CHECK(same_graded(r.thetas[a].matrix, arrows[a]));
  CHECK_THROWS_AS(lift_free_diagram(ctx, fincat::share(fincat::commutative_square()), vf, arrows), Error);
}

TEST_CASE("realize induces the prescribed map") {
  Rng rng(43);
  for (int k = 0; k < 10; ++k) {
    const auto x = small(rng), y = small(rng);
    const Homology hx = homology(*x), hy = homology(*y);
    GradedMatrix m{2, 0, {}};
    for (int n = 0; n <= 2; ++n) m.blocks.push_back(random_matrix(rng, 2, hy.dim(n), hx.dim(n)));
    const ChainMap f = realize(x, y, m);
    CHECK(chain_map_violation(f).empty());
    CHECK(same_graded(induced(f, hx, hy), m));
  }
}

TEST_CASE("e is left inverse to pr^*") {
  const FrameContext ctx(1, 1);
  const dsub::DCat di = dsub::d_subdivision(fincat::share(fincat::ordinal(1)), 1);
  const MixShape ms = mix_shape(ctx, 1, di);
  Rng rng(47);
  const ChainDiagram y = random_reedy_cofibrant(rng, ms.outer, 2, 8);
  CHECK(same_diagram(e_mix(ctx, ms, pr_pullback(ms, y)), y));
}

}
