#include <doctest.h>

#include "coframes/chain/exact.hpp"
#include "coframes/chain/generators.hpp"
#include "coframes/chain/io.hpp"
#include "coframes/chain/reedy.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/error.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::chain;

TEST_SUITE("chain") {

TEST_CASE("matrix rank agrees with the reference elimination") {
  Rng rng(3);
  for (int p : {2, 3, 5, 7}) {
    for (int k = 0; k < 30; ++k) {
      const Matrix a = random_matrix(rng, p, uniform(rng, 6), uniform(rng, 6));
      CHECK(a.rank() == oracle::rank(a));
    }
    const Matrix inv = random_invertible(rng, p, 4);
    CHECK(oracle::rank(inv) == 4);
  }
}

TEST_CASE("complexes reject d∘d != 0") {
  const Matrix d1 = Matrix::from_rows(2, 1, 1, {1});
  const Matrix d2 = Matrix::from_rows(2, 1, 1, {1});
  CHECK_THROWS_AS(ChainComplex(2, 0, {1, 1, 1}, {Matrix(2, 0, 1), d1, d2}), Error);
  CHECK_NOTHROW(ChainComplex(2, 0, {1, 1}, {Matrix(2, 0, 1), d1}));
}

TEST_CASE("homology dimensions follow rank-nullity") {
  Rng rng(5);
  for (int p : {2, 3}) {
    for (int k = 0; k < 40; ++k) {
      const ChainComplex x = random_complex(rng, p, -1, 2, 3);
      const Homology h = homology(x);
      for (int n = x.lo() - 1; n <= x.hi() + 1; ++n) CHECK(h.dim(n) == oracle::betti(x, n));
    }
  }
  CHECK(homology(ChainComplex::sphere(3, 2, 2)).dim(2) == 2);
  CHECK(homology(ChainComplex::disk(3, 1)).dim(0) == 0);
  CHECK(homology(ChainComplex::disk(3, 1)).dim(1) == 0);
}

TEST_CASE("quasi-isomorphisms and cofibrations agree with the cone and rank tests") {
  Rng rng(7);
  int qi = 0;
  for (int k = 0; k < 60; ++k) {
    const auto x = share(random_complex(rng, 2, 0, 2, 2));
    const auto y = share(random_complex(rng, 2, 0, 2, 2));
    const ChainMap f = k % 3 == 0 ? random_quasi_iso(rng, x) : random_chain_map(rng, x, y);
    CHECK(chain_map_violation(f).empty());
    CHECK(is_quasi_iso(f) == oracle::quasi_iso(f));
    CHECK(is_cofibration(f) == oracle::injective(f));
    CHECK(induced(f).is_iso() == oracle::quasi_iso(f));
    qi += oracle::quasi_iso(f);
  }
  CHECK(qi >= 20);
}

TEST_CASE("both factorizations split a map into a cofibration and a quasi-iso") {
  Rng rng(11);
  for (int k = 0; k < 30; ++k) {
    const auto x = share(random_complex(rng, 3, 0, 2, 2));
    const auto y = share(random_complex(rng, 3, 0, 2, 2));
    const ChainMap f = random_chain_map(rng, x, y);
    for (const Factorization& fac : {factorize(f), factorize_minimal(f)}) {
      CHECK(same_map(ChainMap::compose(fac.q, fac.i), f));
      CHECK(oracle::injective(fac.i));
      CHECK(oracle::quasi_iso(fac.q));
    }
  }
}

TEST_CASE("pushout dimensions") {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const auto a = share(random_complex(rng, 2, 0, 2, 2));
    const ChainMap i = factorize(ChainMap::zero(a, share(ChainComplex::zero(2)))).i;
    const auto c = share(random_complex(rng, 2, 0, 2, 2));
    const ChainMap g = random_chain_map(rng, a, c);
    const Colimit po = pushout(i, g);
    // (B ⊕ C) / {(i a, -g a)} and i is injective.
    for (int n = -1; n <= 4; ++n)
      CHECK(po.object->dim(n) == i.target->dim(n) + c->dim(n) - a->dim(n));
    CHECK(oracle::injective(po.legs[1]));
    CHECK(same_map(ChainMap::compose(po.legs[0], i), ChainMap::compose(po.legs[1], g)));
  }
}

TEST_CASE("constant F_p on D[1] at cap 1 is not Reedy cofibrant") {
  const dsub::DCat d = dsub::d_subdivision(fincat::share(fincat::ordinal(1)), 1);
  const ChainDiagram x = constant_diagram(d.category, share(ChainComplex::sphere(2, 0)));
  int edge = 0;
  while (d.base->is_degenerate(1, edge)) ++edge;
  const int top = d.object_of(1, edge);
  const Latching l = latching_object(x, top);
  // Two vertices below the edge, nothing identified: L = F_p², map (1 1).
  CHECK(l.colimit.object->dim(0) == 2);
  CHECK(l.map->at(0) == Matrix::from_rows(2, 1, 2, {1, 1}));
  CHECK_FALSE(reedy_cofibrant(x).ok);
  CHECK_FALSE(oracle::latching_maps_injective(x));
  const Replacement r = reedy_replace(x, d.weq);
  CHECK(oracle::latching_maps_injective(r.diagram));
  for (const ChainMap& c : r.g.components) CHECK(oracle::quasi_iso(c));
}

TEST_CASE("Reedy colimits on random direct categories") {
  Rng rng(17);
  for (int k = 0; k < 10; ++k) {
    const auto idx = fincat::share(random_direct_category(rng, 4));
    const ChainDiagram x = random_reedy_cofibrant(rng, idx, 3, 10);
    REQUIRE(oracle::latching_maps_injective(x));
    const ReedyColimit col = reedy_colimit(x);
    CHECK(colimit_mismatch(x, col).empty());
    for (int n = -1; n <= 4; ++n) CHECK(col.object->dim(n) == oracle::colimit_dim(x, n));
  }
}

TEST_CASE("exact functors") {
  const auto x = share(ChainComplex::disk(2, 1));
  const ChainComplex t = apply(ExactFunctor::tensor(3), *x);
  CHECK(t.dim(0) == 3);
  CHECK(t.dim(1) == 3);
  const ChainComplex s = apply(ExactFunctor::shift(2), *x);
  CHECK(s.dim(2) == 1);
  CHECK(s.dim(3) == 1);
  CHECK(s.dim(1) == 0);
  CHECK(parse_exact_functor("tensor:2").name() == ExactFunctor::tensor(2).name());
  CHECK_THROWS_AS(parse_exact_functor("cube:2"), Error);
}

TEST_CASE("complex and chain map files round-trip") {
  Rng rng(19);
  const auto x = share(random_complex(rng, 3, 0, 2, 2));
  const auto y = share(random_complex(rng, 3, 0, 2, 2));
  const ChainMap f = random_chain_map(rng, x, y);
  const std::string tx = write_complex(*x);
  CHECK(read_complex(tx) == *x);
  CHECK(write_complex(read_complex(tx)) == tx);
  const ChainMap back = read_chain_map(write_chain_map(f));
  CHECK(*back.source == *x);
  CHECK(*back.target == *y);
  for (int n = 0; n <= 2; ++n) CHECK(back.at(n) == f.at(n));
  CHECK_THROWS_AS(read_complex("{\"kind\": \"complex\", \"prime\": 4}"), ParseError);
}

}
