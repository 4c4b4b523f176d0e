#pragma once

#include <cstdint>
#include <random>

#include "coframes/chain/diagram.hpp"
#include "coframes/fincat/category.hpp"

namespace coframes::chain {

/// All generators draw from this engine through `uniform` only, so a seed
/// gives the same output on every standard library.
using Rng = std::mt19937_64;

/// Uniform in [0, n).
int uniform(Rng& rng, int n);

Matrix random_matrix(Rng& rng, int p, int rows, int cols);
/// Unitriangular factors multiplied, hence always invertible.
Matrix random_invertible(Rng& rng, int p, int n);

/// Complex on degrees [lo, hi] with dimensions in [0, max_dim].
ChainComplex random_complex(Rng& rng, int p, int lo, int hi, int max_dim);
/// A random element of the space of chain maps X -> Y (solved exactly).
ChainMap random_chain_map(Rng& rng, const ComplexPtr& x, const ComplexPtr& y);
/// A quasi-isomorphism X -> X ⊕ (sum of disks), followed by a change of basis.
ChainMap random_quasi_iso(Rng& rng, const ComplexPtr& x);

/// A random poset or free category on a DAG with 1..max_objects objects.
fincat::FinCategory random_direct_category(Rng& rng, int max_objects);

/// Reedy cofibrant diagram with X_i = L_i X ⊕ R_i twisted, then a change of basis.
/// Every value has total dimension <= max_total. Throws coframes::Error when
/// the latching objects alone exceed the budget after repeated attempts.
ChainDiagram random_reedy_cofibrant(Rng& rng, const fincat::CategoryPtr& index, int p, int max_total);

/// Arbitrary diagram over [n] from random complexes and random chain maps.
ChainDiagram random_sequence(Rng& rng, const fincat::CategoryPtr& ordinal, int p, int max_dim);

}  // namespace coframes::chain
