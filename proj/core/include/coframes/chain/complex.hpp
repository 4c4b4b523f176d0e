#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coframes/chain/fp_matrix.hpp"

namespace coframes::chain {

/// Bounded chain complex over F_p, nonzero at most in degrees lo..hi.
/// Outside that range every group is zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `diffs[k]` is d for degree lo + k, a dim(lo+k-1) x dim(lo+k) matrix (the
  /// one for degree lo has zero rows). Throws coframes::Error on bad shapes,
  /// a non-prime p, or d∘d != 0.
  ChainComplex(int p, int lo, std::vector<int> dims, std::vector<Matrix> diffs);

  static ChainComplex zero(int p);
  /// F_p^k concentrated in one degree.
  static ChainComplex sphere(int p, int degree, int k = 1);
  /// F_p --id--> F_p in degrees degree, degree - 1.
  static ChainComplex disk(int p, int degree);

  int prime() const { return p_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int n) const;
  int total_dim() const;
  /// d_n: degree n -> n - 1; a zero matrix of the right shape outside the range.
  Matrix d(int n) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  int p_ = 2;
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<Matrix> d_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

inline ComplexPtr share(ChainComplex x) { return std::make_shared<const ChainComplex>(std::move(x)); }

/// Same degree range after dropping zero groups at both ends; lo = 0 when empty.
ChainComplex trimmed(const ChainComplex& x);

/// A degreewise linear map. Components outside [lo, hi] are zero.
struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  int lo = 0;
  std::vector<Matrix> f;

  /// dim target(n) x dim source(n).
  Matrix at(int n) const;
  int hi() const { return lo + static_cast<int>(f.size()) - 1; }

  static ChainMap identity(const ComplexPtr& x);
  static ChainMap zero(const ComplexPtr& x, const ComplexPtr& y);
  /// Builds from a callback over the union of the degree ranges.
  template <class F>
  static ChainMap build(const ComplexPtr& x, const ComplexPtr& y, F&& component);
  /// second ∘ first
  static ChainMap compose(const ChainMap& second, const ChainMap& first);
  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
};

/// Degrees on which some map between x and y can be nonzero.
int common_lo(const ChainComplex& x, const ChainComplex& y);
int common_hi(const ChainComplex& x, const ChainComplex& y);

template <class F>
ChainMap ChainMap::build(const ComplexPtr& x, const ComplexPtr& y, F&& component) {
  ChainMap m{x, y, common_lo(*x, *y), {}};
  for (int n = m.lo; n <= common_hi(*x, *y); ++n) m.f.push_back(component(n));
  return m;
}

/// Empty when f is a chain map of the right shapes; else the failing degree.
std::string chain_map_violation(const ChainMap& f);
/// Exact equality of all components.
bool same_map(const ChainMap& a, const ChainMap& b);

/// A graded linear map between homology groups (a morphism of Ho(C)).
struct GradedMatrix {
  int p = 2;
  int lo = 0;
  std::vector<Matrix> blocks;

  Matrix at(int n) const;
  int hi() const { return lo + static_cast<int>(blocks.size()) - 1; }
  bool is_iso() const;
  GradedMatrix inverse() const;  ///< throws coframes::Error when not invertible
  static GradedMatrix compose(const GradedMatrix& second, const GradedMatrix& first);
  std::string to_string() const;
};

bool same_graded(const GradedMatrix& a, const GradedMatrix& b);

/// Homology with chosen bases. In degree n, `reps[n]` are cycles whose classes
/// form a basis of H_n, and `coords[n]` is a linear map X_n -> H_n that sends a
/// cycle to the coordinates of its class and kills boundaries.
struct Homology {
  int p = 2;
  int lo = 0;
  std::vector<int> dims;
  std::vector<Matrix> reps;
  std::vector<Matrix> coords;

  int dim(int n) const;
  Matrix rep(int n, int source_dim) const;
  Matrix coord(int n, int source_dim) const;
};

Homology homology(const ChainComplex& x);
/// coords_Y ∘ f ∘ reps_X in every degree.
GradedMatrix induced(const ChainMap& f, const Homology& hx, const Homology& hy);
GradedMatrix induced(const ChainMap& f);
GradedMatrix identity_graded(const Homology& h);

struct MapClass {
  bool is_weq = false;
  bool is_cofibration = false;
  bool is_acyclic_cofibration = false;
};

/// Weak equivalence = quasi-isomorphism; cofibration = degreewise injective.
MapClass classify_map(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);
bool is_cofibration(const ChainMap& f);

}  // namespace coframes::chain
