#include <doctest.h>

#include "coframes/error.hpp"
#include "coframes/fincat/category.hpp"
#include "coframes/sset/io.hpp"
#include "coframes/sset/nerve.hpp"
#include "coframes/sset/rank.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::sset;

TEST_SUITE("sset") {

TEST_CASE("standard simplex counts are monotone-map counts") {
  for (int n = 0; n <= 3; ++n) {
    const TruncatedSSet d = standard_simplex(n, 3);
    for (int m = 0; m <= 3; ++m) {
      // monotone [m] -> [n]: C(m + n + 1, n); injective ones: C(n + 1, m + 1).
      CHECK(d.count(m) == oracle::binomial(m + n + 1, n));
      CHECK(d.nondegenerate_count(m) == oracle::binomial(n + 1, m + 1));
    }
    CHECK(simplicial_identity_violation(d).empty());
  }
}

TEST_CASE("the nerve of [n] is Δⁿ") {
  for (int n = 0; n <= 3; ++n) {
    const TruncatedSSet nv = nerve(fincat::ordinal(n), 3);
    const TruncatedSSet d = standard_simplex(n, 3);
    for (int m = 0; m <= 3; ++m) {
      CHECK(nv.count(m) == d.count(m));
      CHECK(nv.nondegenerate_count(m) == d.nondegenerate_count(m));
    }
    CHECK(simplicial_identity_violation(nv).empty());
  }
}

TEST_CASE("spines and one-skeletal sets") {
  const TruncatedSSet s = spine(3, 3);
  CHECK(is_one_skeletal(s));
  CHECK(s.nondegenerate_count(0) == 4);
  CHECK(s.nondegenerate_count(1) == 3);
  CHECK(s.nondegenerate_count(2) == 0);
  CHECK_FALSE(is_one_skeletal(standard_simplex(2, 3)));
}

TEST_CASE("hK of a spine is the ordinal") {
  const HomotopyCategory hk = homotopy_category(spine(3, 3));
  REQUIRE(hk.stabilized());
  CHECK(hk.category().object_count() == 4);
  CHECK(hk.category().morphism_count() == oracle::binomial(5, 2));
}

TEST_CASE("hK of Δ² identifies the long edge with the composite") {
  const HomotopyCategory hk = homotopy_category(standard_simplex(2, 3));
  REQUIRE(hk.stabilized());
  CHECK(hk.category().morphism_count() == 6);
}

TEST_CASE("unit map and ranks on the spine of length 2") {
  const UnitMap u = unit_map(share(spine(2, 3)));
  CHECK(is_injective(u.map));
  CHECK(simplicial_map_violation(u.map).empty());
  CHECK(max_rank(u) == 2);
  // The unique nondegenerate 2-simplex of N(hK) = Δ² is primitive of rank 2.
  int found = 0;
  for (int s = 0; s < u.nerve->count(2); ++s)
    if (!u.nerve->is_degenerate(2, s)) {
      ++found;
      CHECK(is_primitive(u, 2, s));
      CHECK(rank_of_simplex(u, 2, s) == 2);
      const PrimitiveFactorization pf = primitive_factorization(u, 2, s);
      CHECK(pf.dim == 2);
      CHECK(pf.tau == s);
      CHECK(pf.f == std::vector<int>{0, 1, 2});
    }
  CHECK(found == 1);
  for (int n = 1; n <= 2; ++n) CHECK(verify_rank_pushout(u, n).ok);
}

TEST_CASE("unit map rejects a set that is not one-skeletal") {
  CHECK_THROWS_AS(unit_map(share(standard_simplex(2, 3))), Error);
}

TEST_CASE("generalized inner horn of Δ² misses the edge {0,2}") {
  const SimplicialMap h = generalized_inner_horn(2, 2);
  CHECK(h.source->nondegenerate_count(1) == 2);
  CHECK(h.source->nondegenerate_count(2) == 0);
  CHECK(is_injective(h));
}

TEST_CASE("pushout of two inclusions of a vertex glues them") {
  const auto pt = share(standard_simplex(0, 2));
  const auto edge = share(standard_simplex(1, 2));
  const int e01 = *edge->find(1, {0, 1});
  const SimplicialMap at0 = make_map(pt, edge, [&](int d, int) { return edge->pullback(1, e01, std::vector<int>(d + 1, 0)); });
  const SimplicialMap at1 = make_map(pt, edge, [&](int d, int) { return edge->pullback(1, e01, std::vector<int>(d + 1, 1)); });
  const Pushout po = pushout(at1, at0);
  // Two edges glued end to start: 3 vertices, 2 nondegenerate edges.
  CHECK(po.object->nondegenerate_count(0) == 3);
  CHECK(po.object->nondegenerate_count(1) == 2);
  CHECK(simplicial_identity_violation(*po.object).empty());
}

TEST_CASE("sset files round-trip") {
  const TruncatedSSet k = one_skeletal(3, {{0, 1}, {2, 1}}, 3, {"a", "b", "c"});
  const std::string text = write_sset(k);
  CHECK(write_sset(read_sset(text)) == text);
  CHECK_THROWS_AS(read_sset("{\"kind\": \"sset\""), ParseError);
}

}
