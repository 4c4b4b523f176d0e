#pragma once

#include <functional>
#include <vector>

#include "coframes/chain/complex.hpp"

namespace coframes::chain {

/// A colimit presented as a quotient of a direct sum of parts. `section[n]`
/// is a right inverse of the quotient map in degree n, used to induce maps.
struct Colimit {
  ComplexPtr object;
  std::vector<ComplexPtr> parts;
  std::vector<ChainMap> legs;  ///< parts[k] -> object
  int lo = 0;
  std::vector<Matrix> section;

  Matrix section_at(int n) const;
  /// The map out of the colimit determined by a cocone (one map per part).
  /// The cocone must kill the relations; checked by the caller when needed.
  ChainMap induce(const ComplexPtr& target, const std::vector<ChainMap>& cocone) const;
};

/// (⊕ parts) / R, where `relations(n)` has one column per relation in degree n
/// and the relations span a subcomplex.
Colimit quotient_of_sum(int p, const std::vector<ComplexPtr>& parts,
                        const std::function<Matrix(int)>& relations);

/// Degreewise direct sum; the empty coproduct is the zero complex.
Colimit coproduct(int p, const std::vector<ComplexPtr>& parts);
/// ⊕ f_k between the coproducts of the sources and of the targets.
ChainMap coproduct_map(const std::vector<ChainMap>& maps, const Colimit& sources, const Colimit& targets);

/// Pushout of B <-i- A -g-> C as (B ⊕ C) / {(i a, -g a)}; legs[0]: B -> D, legs[1]: C -> D.
Colimit pushout(const ChainMap& i, const ChainMap& g);

/// As `pushout`, requiring i to be a cofibration. Throws coframes::Error otherwise.
Colimit pushout_along_cofibration(const ChainMap& i, const ChainMap& g);

/// Colimit of a finite chain X_0 -> X_1 -> ... of cofibrations, i.e. its last
/// term with the composite legs. Throws coframes::Error on a non-cofibration.
Colimit sequential_colimit(const ComplexPtr& first, const std::vector<ChainMap>& maps);

struct Factorization {
  ChainMap i;  ///< cofibration
  ChainMap q;  ///< weak equivalence
};

/// Mapping cylinder: Cyl_n = X_n ⊕ X_{n-1} ⊕ Y_n with
/// d(x, x', y) = (dx - x', -dx', dy + f(x')), i = (x, 0, 0), q = f(x) + y.
Factorization factorize(const ChainMap& f);

/// A smaller factorization: X_n ⊕ A_n ⊕ B_n, where generators in A kill the
/// homology classes in ker H(f) and cycles in B hit a complement of im H(f).
/// i is the split inclusion of X; q restricts to f on X.
Factorization factorize_minimal(const ChainMap& f);

}  // namespace coframes::chain
