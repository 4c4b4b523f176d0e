#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coframes/chain/diagram.hpp"
#include "coframes/fincat/analysis.hpp"

namespace coframes::chain {

struct Latching {
  fincat::LatchingCategory category;
  /// Colimit of X over the latching category; parts follow its objects.
  Colimit colimit;
  /// L_i X -> X_i. Left empty when X_i has not been assigned yet.
  std::optional<ChainMap> map;
};

/// Only the values of X below `object` are read, so X may be partially built.
Latching latching_object(const ChainDiagram& x, int object);

struct ReedyStatus {
  bool ok = true;
  int witness = -1;  ///< first failing object in degree order
  std::string detail;
};

ReedyStatus reedy_cofibrant(const ChainDiagram& x);
/// Relative latching maps X_i ⊔_{L_i X} L_i Y -> Y_i are cofibrations.
ReedyStatus reedy_cofibration(const ChainDiagram& x, const ChainDiagram& y, const DiagramMap& f);

/// Colimit built by degree: each layer is glued in by a pushout along the
/// coproduct of its latching maps. legs[i]: X_i -> object.
struct ReedyColimit {
  ComplexPtr object;
  std::vector<ChainMap> legs;
};

/// Throws coframes::Error when X is not Reedy cofibrant.
ReedyColimit reedy_colimit(const ChainDiagram& x);

/// Empty when `c` is a cocone under X and the canonical map from the
/// brute-force colimit to it is an isomorphism; otherwise the reason.
std::string colimit_mismatch(const ChainDiagram& x, const ReedyColimit& c);

enum class FactorStrategy { Minimal, Cylinder };

struct Replacement {
  ChainDiagram diagram;
  DiagramMap g;  ///< diagram -> X
  bool shortcut = false;
};

/// Relative Reedy cofibrant replacement. `sieve` embeds I into J = x.index,
/// h is a diagram over I and f: h -> X∘sieve a levelwise weak equivalence.
/// Throws coframes::Error on a failed precondition or postcondition.
Replacement reedy_replace_rel(const ChainDiagram& x, const fincat::MorphismClass& weq,
                              const fincat::CatFunctor& sieve, const ChainDiagram& h, const DiagramMap& f,
                              FactorStrategy strategy = FactorStrategy::Minimal);

/// Same with an empty sieve.
Replacement reedy_replace(const ChainDiagram& x, const fincat::MorphismClass& weq,
                          FactorStrategy strategy = FactorStrategy::Minimal);

/// Postconditions of a relative replacement, each failure as one line.
std::vector<std::string> replacement_violations(const ChainDiagram& x, const fincat::MorphismClass& weq,
                                                const fincat::CatFunctor& sieve, const ChainDiagram& h,
                                                const DiagramMap& f, const Replacement& r);

/// The class of morphisms of `sieve.source` sent into `weq`.
fincat::MorphismClass restrict_class(const fincat::CatFunctor& sieve, const fincat::MorphismClass& weq);

/// The inclusion of the empty category into `c`.
fincat::CatFunctor empty_sieve(const fincat::CategoryPtr& c);

}  // namespace coframes::chain
