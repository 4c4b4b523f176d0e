#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coframes/fincat/category.hpp"

namespace coframes::fincat {

/// Degree assignment by longest path from the sources of the digraph of
/// non-identity morphisms, or nullopt when the category is not direct.
std::optional<DegreeAssignment> is_direct(const FinCategory& c);

/// Why a category fails to be direct: a non-identity endomorphism (one
/// morphism) or a directed cycle of non-identity morphisms. Empty when direct.
std::vector<int> directness_obstruction(const FinCategory& c);

/// Objects sorted by (degree, index).
std::vector<int> objects_by_degree(const DegreeAssignment& d);

/// The latching category at `object`: the slice over it minus the identity.
struct LatchingCategory {
  CategoryPtr category;
  /// For each object of the latching category, the morphism of C into `object`.
  std::vector<int> arrow;
  /// For each morphism of the latching category, the underlying morphism of C.
  std::vector<int> underlying;
  /// Source-recording functor into C.
  CatFunctor forget;
};

/// Throws coframes::Error when `c` is not direct.
LatchingCategory latching_category(const CategoryPtr& c, int object);

struct Quiver {
  int vertices = 0;
  /// Morphism ids of C forming the generating arrows.
  std::vector<int> arrows;
};

/// Non-identity morphisms that admit no factorization into two non-identities.
std::vector<int> indecomposables(const FinCategory& c);

/// The generating quiver when `c` is free on it, else nullopt.
std::optional<Quiver> is_free(const FinCategory& c);

/// Number of factorizations of `m` into sequences of indecomposables, capped
/// at `cap`. Requires a direct category.
int factorization_count(const FinCategory& c, int m, int cap = 2);

enum class ClosureMode { TwoOfThree, TwoOfSix };

/// Least class containing `seed` and all identities and closed under the
/// chosen property.
MorphismClass closure(const FinCategory& c, const MorphismClass& seed, ClosureMode mode);

/// A composable pair (two-of-three) or triple (two-of-six) witnessing that
/// `s` is not closed; empty when closed.
std::vector<int> closure_violation(const FinCategory& c, const MorphismClass& s, ClosureMode mode);

/// Throws coframes::Error when `f` is not fully faithful.
bool is_sieve(const CatFunctor& f);

/// Full subcategory on the given objects, with its inclusion functor.
CatFunctor full_subcategory(const CategoryPtr& c, const std::vector<int>& objects);

}  // namespace coframes::fincat
