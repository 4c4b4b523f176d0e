#pragma once

// Reference computations for the tests. Nothing here calls the library's own
// elimination, homology or classification code; matrices are read entrywise.

#include <string>
#include <vector>

#include "coframes/chain/complex.hpp"
#include "coframes/chain/diagram.hpp"
#include "coframes/fincat/category.hpp"

namespace oracle {

using Rows = std::vector<std::vector<long long>>;

int rank_mod(Rows a, int p);
Rows rows_of(const coframes::chain::Matrix& m);
int rank(const coframes::chain::Matrix& m);

/// dim H_n by rank-nullity: dim X_n - rank d_n - rank d_{n+1}.
int betti(const coframes::chain::ChainComplex& x, int n);

/// Degreewise injective.
bool injective(const coframes::chain::ChainMap& f);
/// The mapping cone is acyclic.
bool quasi_iso(const coframes::chain::ChainMap& f);

/// Every block square and of full rank.
bool invertible(const coframes::chain::GradedMatrix& m);
bool is_identity(const coframes::chain::GradedMatrix& m);

/// dim of the coequalizer colimit in degree n: the direct sum modulo
/// x - X(m)x for every non-identity morphism m.
int colimit_dim(const coframes::chain::ChainDiagram& x, int n);

/// Every latching map is degreewise injective (ranks computed here).
bool latching_maps_injective(const coframes::chain::ChainDiagram& x, std::string* witness = nullptr);

/// C(n, k) for small arguments.
long long binomial(int n, int k);

}  // namespace oracle
