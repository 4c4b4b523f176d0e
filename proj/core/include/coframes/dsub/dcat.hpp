#pragma once

#include <optional>
#include <vector>

#include "coframes/fincat/analysis.hpp"
#include "coframes/fincat/category.hpp"
#include "coframes/sset/sset.hpp"

namespace coframes::dsub {

struct DObject {
  int dim;
  int simplex;  ///< simplex of the base in dimension `dim`
};

/// The thick subdivision D(K) truncated at `cap`: objects are all simplices
/// (degenerate ones included) of dimension <= cap, morphisms (m, σ) -> (n, τ)
/// are injective monotone i: [m] -> [n] with i*τ = σ. A morphism is stored as
/// its target object together with the image of i as a bitmask.
struct DCat {
  sset::SSetPtr base;
  fincat::CategoryPtr base_category;  ///< set when base is the nerve of a category
  int cap = 0;
  fincat::CategoryPtr category;
  std::vector<DObject> objects;
  std::vector<unsigned> image;  ///< per morphism
  fincat::MorphismClass weq;
  fincat::DegreeAssignment degree;

  int object_of(int dim, int simplex) const;
  int morphism(int target_object, unsigned mask) const;
  int dim(int object) const { return objects[object].dim; }
  /// The values i(0) < ... < i(m) of the injection behind a morphism.
  std::vector<int> inclusion(int morphism) const;
  /// Largest element of the image, i.e. i(m).
  int top(int morphism) const;

  std::vector<int> first_morphism;  ///< per object: id of the morphism with mask 1
  std::vector<std::vector<int>> object_index;  ///< [dim][simplex]
};

/// Objects in order of (dim, simplex); morphisms in order of (target, mask).
/// `weq` is the 2-out-of-6 closure of the p-degenerate morphisms.
DCat d_subdivision(const sset::SSetPtr& k, int cap);
/// D(N(c)) with the nerve truncated at `cap`.
DCat d_subdivision(const fincat::CategoryPtr& c, int cap);

/// D(f) for f: K -> L; `dk` and `dl` must be built over f's source and target.
fincat::CatFunctor d_of_map(const DCat& dk, const DCat& dl, const sset::SimplicialMap& f);
/// D(N(F)) for F: I -> J.
fincat::CatFunctor d_of_functor(const DCat& di, const DCat& dj, const fincat::CatFunctor& f);

/// p applied to a composable chain of morphisms of D(K) (first applied
/// first); an empty chain at `object` is that object. Returns a simplex of K
/// of dimension chain.size().
int p_simplicial(const DCat& d, const std::vector<int>& chain, int object = -1);
/// p: N(D(K)) -> K, for a nerve of d.category with cap at most that of K.
/// The target is K truncated to the cap of `nd`.
sset::SimplicialMap p_simplicial_map(const DCat& d, const sset::SSetPtr& nd);
/// The edge p(m) of K.
int p_edge(const DCat& d, int morphism);

/// p: D(I) -> I for a category base: X |-> X(m), i |-> Y(i(m) -> n).
fincat::CatFunctor p_categorical(const DCat& d);

/// Morphisms whose p-edge is degenerate.
fincat::MorphismClass p_degenerate(const DCat& d);
/// 2-out-of-6 closure of p_degenerate.
fincat::MorphismClass d_weak_equivalences(const DCat& d);
/// Category base only: morphisms whose p-image is an isomorphism.
fincat::MorphismClass p_iso_class(const DCat& d);
/// Category base only: morphisms whose p-image lies in `base_weq`.
fincat::MorphismClass weq_created_by_p(const DCat& d, const fincat::MorphismClass& base_weq);

/// [n] -> D[n], a |-> ([a] -> [n]); `dn` must be d_subdivision(ordinal(n), cap).
fincat::CatFunctor frame_embedding_i(const DCat& dn);

/// D(K x L) -> DK x DL, (n, (σ, τ)) |-> ((n, σ), (n, τ)). `dkl` must be built
/// over product_sset(K, L); `product` is product_category(dk, dl).
fincat::CatFunctor projection_comparison(const DCat& dkl, const DCat& dk, const DCat& dl,
                                         const fincat::CategoryPtr& product);

}  // namespace coframes::dsub
