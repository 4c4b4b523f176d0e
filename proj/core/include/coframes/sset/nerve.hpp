#pragma once

#include <vector>

#include "coframes/fincat/category.hpp"
#include "coframes/fincat/localization.hpp"
#include "coframes/sset/sset.hpp"

namespace coframes::sset {

/// Nerve truncated at `cap`. A 0-simplex has key {object}; an m-simplex with
/// m >= 1 has key {f_1, ..., f_m}, the composable chain with f_1 applied first.
TruncatedSSet nerve(const fincat::FinCategory& c, int cap);

/// N(F): N(C) -> N(D) for nerves built by `nerve`.
SimplicialMap nerve_of_functor(const fincat::CatFunctor& f, const SSetPtr& nc, const SSetPtr& nd);

/// The homotopy category: free on nondegenerate edges modulo one relation per
/// 2-simplex. `letter_edge[l]` is the edge of K behind generating letter l.
struct HomotopyCategory {
  fincat::PresentedCategory presented;
  std::vector<int> letter_edge;
  std::vector<int> edge_letter;  ///< -1 for degenerate edges

  bool stabilized() const { return presented.status == fincat::SaturationStatus::Stabilized; }
  /// The category; throws coframes::Inconclusive when saturation did not stabilize.
  const fincat::FinCategory& category() const;
  /// Morphism of hK represented by an edge of K.
  int edge_morphism(const TruncatedSSet& k, int edge) const;
};

/// Requires cap >= 2.
HomotopyCategory homotopy_category(const TruncatedSSet& k, int budget = 8);

struct UnitMap {
  HomotopyCategory hk;
  SSetPtr nerve;    ///< N(hK) truncated at the cap of K
  SimplicialMap map;  ///< K -> N(hK)
};

/// The unit K -> N(hK) for a 1-skeletal K. Throws coframes::Error when K is
/// not 1-skeletal or the map fails to be injective.
UnitMap unit_map(const SSetPtr& k, int budget = 8);

}  // namespace coframes::sset
