#pragma once

#include <string>
#include <vector>

#include "coframes/sset/nerve.hpp"

namespace coframes::sset {

// Simplices below live in N(hK) for a 1-skeletal K, as produced by unit_map.

/// Length of the long edge as a word in nondegenerate edges of K.
int rank_of_simplex(const UnitMap& u, int dim, int s);
/// Every edge σ|{i, i+1} has rank 1. Vertices count as primitive.
bool is_primitive(const UnitMap& u, int dim, int s);
int max_rank(const UnitMap& u);

struct PrimitiveFactorization {
  int dim = 0;             ///< the rank n
  int tau = 0;             ///< primitive n-simplex
  std::vector<int> f;      ///< monotone [dim σ] -> [n] with σ = f*τ
};

/// Throws coframes::Error when the rank exceeds the truncation.
PrimitiveFactorization primitive_factorization(const UnitMap& u, int dim, int s);

/// K^(n) as a sub-simplicial set of N(hK), with its inclusion.
SimplicialMap rank_filtration(const UnitMap& u, int n);

/// Λ^{1..n-1}[n] ⊂ Δ^n: simplices whose vertex set misses 0 or n.
SimplicialMap generalized_inner_horn(int n, int cap);

struct PushoutVerification {
  int n = 0;
  int primitive_count = 0;  ///< |X_n|
  bool ok = false;
  std::string witness;      ///< offending simplex when !ok
};

/// Builds X_n × Λ^{1..n-1}[n] -> X_n × Δ^n, X_n × Λ^{1..n-1}[n] -> K^(n-1),
/// computes the pushout explicitly and checks the comparison map to K^(n) is
/// an isomorphism. Requires 1 <= n <= cap.
PushoutVerification verify_rank_pushout(const UnitMap& u, int n);

}  // namespace coframes::sset
