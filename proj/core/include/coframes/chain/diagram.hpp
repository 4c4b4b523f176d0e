#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coframes/chain/colimits.hpp"
#include "coframes/fincat/category.hpp"

namespace coframes::chain {

/// A functor from a finite category into chain complexes. `maps[m]` goes from
/// `objects[source(m)]` to `objects[target(m)]` (the same pointers).
struct ChainDiagram {
  fincat::CategoryPtr index;
  std::vector<ComplexPtr> objects;
  std::vector<ChainMap> maps;

  int prime() const;
};

/// First violated condition (shapes, chain-map law, identities, composition).
std::string diagram_violation(const ChainDiagram& x);

ChainDiagram constant_diagram(const fincat::CategoryPtr& index, const ComplexPtr& x);
/// Diagram over [n] (ordinal(n)) from complexes X_0..X_n and maps X_k -> X_{k+1}.
ChainDiagram from_sequence(const fincat::CategoryPtr& ordinal, const std::vector<ComplexPtr>& xs,
                           const std::vector<ChainMap>& steps);
/// X ∘ F, a diagram over F's source.
ChainDiagram pullback(const ChainDiagram& x, const fincat::CatFunctor& f);
/// Exact equality of all values and structure maps.
bool same_diagram(const ChainDiagram& a, const ChainDiagram& b);

/// A natural transformation; components[i]: source.objects[i] -> target.objects[i].
struct DiagramMap {
  std::vector<ChainMap> components;
};

std::string diagram_map_violation(const ChainDiagram& x, const ChainDiagram& y, const DiagramMap& f);
DiagramMap identity_map(const ChainDiagram& x);
DiagramMap compose(const DiagramMap& second, const DiagramMap& first);
/// Components reindexed along F (the map between X ∘ F and Y ∘ F).
DiagramMap pullback(const DiagramMap& f, const fincat::CatFunctor& functor, const ChainDiagram& xf,
                    const ChainDiagram& yf);
bool is_levelwise_weq(const DiagramMap& f);

/// First morphism in `weq` not sent to a quasi-isomorphism, if any.
std::optional<int> homotopical_violation(const ChainDiagram& x, const fincat::MorphismClass& weq);

/// Colimit as one quotient of ⊕_objects X by the relations ι_b(X(u) x) - ι_a(x)
/// for every non-identity u: a -> b. Legs are indexed by object.
Colimit colimit_brute_force(const ChainDiagram& x);

}  // namespace coframes::chain
