#include <doctest.h>

#include "coframes/error.hpp"
#include "coframes/fincat/analysis.hpp"
#include "coframes/fincat/io.hpp"
#include "coframes/fincat/localization.hpp"
#include "oracle.hpp"

using namespace coframes;
using namespace coframes::fincat;

TEST_SUITE("fincat") {

TEST_CASE("ordinal [n] has C(n+2, 2) morphisms and satisfies the laws") {
  for (int n = 0; n <= 5; ++n) {
    const FinCategory c = ordinal(n);
    CHECK(c.object_count() == n + 1);
    CHECK(c.morphism_count() == oracle::binomial(n + 2, 2));
    CHECK(validate_category(c).ok());
  }
}

TEST_CASE("zig-zag shape") {
  const FinCategory c = zigzag();
  CHECK(c.object_count() == 4);
  CHECK(c.non_identities().size() == 3);
  const int A = *c.find_object("A"), B = *c.find_object("B"), D = *c.find_object("D");
  CHECK(c.hom(A, B).size() == 1);
  CHECK(c.hom(A, D).empty());
  CHECK(validate_category(c).ok());
}

TEST_CASE("a missing composite is reported") {
  const FinCategory good = ordinal(2);
  FinCategory::Builder b;
  for (int o = 0; o < good.object_count(); ++o) b.add_object(good.object_name(o));
  for (int m = 0; m < good.morphism_count(); ++m) b.add_morphism(good.morphism_name(m), good.source(m), good.target(m));
  for (int o = 0; o < good.object_count(); ++o) b.set_identity(o, good.identity(o));
  // Every composite except the one through the middle object.
  const int f = good.hom(0, 1)[0];
  const int g = good.hom(1, 2)[0];
  for (int x = 0; x < good.morphism_count(); ++x)
    for (int y = 0; y < good.morphism_count(); ++y)
      if (auto r = good.compose(x, y); r && !(x == g && y == f)) b.set_composite(x, y, *r);
  CHECK_FALSE(validate_category(b.build()).ok());
}

TEST_CASE("direct categories and degrees") {
  const auto d = is_direct(ordinal(3));
  REQUIRE(d.has_value());
  for (int o = 0; o <= 3; ++o) CHECK(d->degree[o] == o);
  CHECK(is_direct(commutative_square()).has_value());
}

TEST_CASE("latching category of the top of [2] has two objects") {
  const auto c = share(ordinal(2));
  const LatchingCategory l = latching_category(c, 2);
  CHECK(l.category->object_count() == 2);
  CHECK(latching_category(c, 0).category->object_count() == 0);
}

TEST_CASE("free categories and their generating arrows") {
  const auto q = is_free(zigzag());
  REQUIRE(q.has_value());
  CHECK(q->arrows.size() == 3);
  CHECK_FALSE(is_free(commutative_square()).has_value());
  // Two composable arrows: three non-identities, two generators.
  const FinCategory f = free_category(3, {{0, 1}, {1, 2}});
  CHECK(f.non_identities().size() == 3);
  CHECK(is_free(f)->arrows.size() == 2);
}

TEST_CASE("closure under 2-out-of-3 on the square") {
  const FinCategory c = commutative_square();
  MorphismClass seed = MorphismClass::identities(c);
  // Both legs of one path and the first leg of the other force the last.
  const int a = c.hom(*c.find_object("(0,0)"), *c.find_object("(0,1)"))[0];
  const int b = c.hom(*c.find_object("(0,1)"), *c.find_object("(1,1)"))[0];
  const int x = c.hom(*c.find_object("(0,0)"), *c.find_object("(1,0)"))[0];
  const int y = c.hom(*c.find_object("(1,0)"), *c.find_object("(1,1)"))[0];
  seed.insert(a);
  seed.insert(b);
  seed.insert(x);
  const MorphismClass closed = closure(c, seed, ClosureMode::TwoOfThree);
  CHECK(closed.contains(y));
  CHECK(closed.contains(c.composite(b, a)));
  CHECK(closure_violation(c, closed, ClosureMode::TwoOfThree).empty());
  CHECK_FALSE(closure_violation(c, seed, ClosureMode::TwoOfThree).empty());
}

TEST_CASE("localizing [1] at its arrow gives the walking isomorphism") {
  const FinCategory c = ordinal(1);
  const Localization loc = localize_bounded(c, MorphismClass::all(c), 6);
  REQUIRE(loc.stabilized());
  CHECK(loc.hom_size(0, 1) == 1);
  CHECK(loc.hom_size(1, 0) == 1);
  CHECK(loc.hom_size(0, 0) == 1);
}

TEST_CASE("the zig-zag composite is not in the essential image") {
  const FinCategory c = zigzag();
  MorphismClass w = MorphismClass::identities(c);
  w.insert(*c.find_morphism("w"));
  const Localization loc = localize_bounded(c, w, 8);
  REQUIRE(loc.stabilized());
  const int A = *c.find_object("A"), D = *c.find_object("D");
  CHECK(loc.hom_size(A, D) == 1);
  const auto& ho = *loc.presented.category;
  const auto hom = ho.hom(loc.functor->object_map[A], loc.functor->object_map[D]);
  CHECK_FALSE(arrow_in_essential_image(c, loc, hom[0]).in_image);
  // The image of w itself is an arrow of C, so it is in the image.
  const int w_ho = loc.functor->morphism_map[*c.find_morphism("w")];
  CHECK(arrow_in_essential_image(c, loc, w_ho).in_image);
}

TEST_CASE("category files round-trip and reject bad input") {
  const FinCategory c = zigzag();
  MorphismClass w = MorphismClass::identities(c);
  w.insert(*c.find_morphism("w"));
  const std::string text = write_category(c, &w);
  const CategoryFile back = read_category(text);
  CHECK(write_category(back.category, back.weq ? &*back.weq : nullptr) == text);
  REQUIRE(back.weq.has_value());
  CHECK(back.weq->size() == 5);

  CHECK_THROWS_AS(read_category("{\"objects\": [\"A\""), ParseError);
  CHECK_THROWS_AS(read_category(R"({"objects": ["A", "A"], "morphisms": []})"), ParseError);
  CHECK_THROWS_AS(read_category(R"({"objects": ["A"], "morphisms": [{"id": "f", "src": "A", "tgt": "Z"}]})"),
                  ParseError);
}

}
