#include <doctest.h>

#include "coframes/dsub/dcat.hpp"
#include "coframes/fincat/analysis.hpp"
#include "coframes/sset/nerve.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::dsub;

namespace {

// Objects of D(Δⁿ) at cap k are the monotone maps [m] -> [n], m <= k; each
// object of dimension m receives 2^{m+1} - 1 injections.
std::pair<long long, long long> d_simplex_size(int n, int k) {
  long long objects = 0, morphisms = 0;
  for (int m = 0; m <= k; ++m) {
    const long long c = oracle::binomial(m + n + 1, n);
    objects += c;
    morphisms += c * ((1LL << (m + 1)) - 1);
  }
  return {objects, morphisms};
}

}  // namespace

TEST_SUITE("dsub") {

TEST_CASE("D[n] has the expected size") {
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; k <= 3; ++k) {
      const DCat d = d_subdivision(fincat::share(fincat::ordinal(n)), k);
      const auto [objects, morphisms] = d_simplex_size(n, k);
      CHECK(d.category->object_count() == objects);
      CHECK(d.category->morphism_count() == morphisms);
    }
}

TEST_CASE("D(K) is direct with the dimension as degree") {
  const DCat d = d_subdivision(fincat::share(fincat::zigzag()), 2);
  const auto deg = fincat::is_direct(*d.category);
  REQUIRE(deg.has_value());
  CHECK(fincat::validate_category(*d.category).ok());
  for (int o = 0; o < d.category->object_count(); ++o)
    for (int m : d.category->incoming(o))
      if (!d.category->is_identity(m)) CHECK(d.dim(d.category->source(m)) < d.dim(o));
}

TEST_CASE("weak equivalences of D[1] at cap 1") {
  const DCat d = d_subdivision(fincat::share(fincat::ordinal(1)), 1);
  // Objects 0, 1, s0(0), s0(1), (0<1). Non-identity maps are the two faces of
  // each edge; the p-iso ones are the faces of degenerate edges and d0 of (0<1).
  const fincat::MorphismClass w = d_weak_equivalences(d);
  CHECK(w == p_iso_class(d));
  CHECK(p_degenerate(d).subset_of(w));
  int non_identity = 0;
  for (int m : w.members()) non_identity += !d.category->is_identity(m);
  CHECK(non_identity == 5);
}

TEST_CASE("p∘i is the identity of [n]") {
  for (int n = 0; n <= 3; ++n) {
    const DCat d = d_subdivision(fincat::share(fincat::ordinal(n)), 3);
    const auto i = frame_embedding_i(d);
    CHECK(fincat::functor_violation(i).empty());
    CHECK(fincat::same_maps(fincat::CatFunctor::compose(p_categorical(d), i),
                            fincat::CatFunctor::identity(d.base_category)));
  }
}

TEST_CASE("D of an injective map is a sieve inclusion and homotopical") {
  const auto k = sset::share(sset::standard_simplex(1, 2));
  const auto l = sset::share(sset::standard_simplex(2, 2));
  const DCat dk = d_subdivision(k, 2), dl = d_subdivision(l, 2);
  // δ₂: Δ¹ -> Δ², the face on vertices {0, 1}.
  const sset::SimplicialMap f = sset::make_map(k, l, [&](int d, int s) {
    return *l->find(d, k->key(d, s));
  });
  REQUIRE(sset::simplicial_map_violation(f).empty());
  const fincat::CatFunctor df = d_of_map(dk, dl, f);
  CHECK(fincat::functor_violation(df).empty());
  CHECK(fincat::is_sieve(df));
  CHECK(fincat::is_homotopical(df, dk.weq, dl.weq));
}

TEST_CASE("p on the nerve of D(K) is a simplicial map") {
  const auto k = sset::share(sset::standard_simplex(1, 2));
  const DCat d = d_subdivision(k, 2);
  const auto nd = sset::share(sset::nerve(*d.category, 2));
  const sset::SimplicialMap p = p_simplicial_map(d, nd);
  CHECK(sset::simplicial_map_violation(p).empty());
}

}
