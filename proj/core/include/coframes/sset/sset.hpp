#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coframes::sset {

/// Canonical key of a simplex in a generated model, e.g. a monotone map for
/// a standard simplex or a chain of morphisms for a nerve.
using Key = std::vector<int>;

/// A simplicial set stored in dimensions 0..cap with explicit face and
/// degeneracy tables. Simplices are (dimension, index) pairs.
class TruncatedSSet {
 public:
  class Builder;

  TruncatedSSet() = default;

  /// Builds a model whose simplices are identified by keys. `face(dim, key, i)`
  /// and `degeneracy(dim, key, i)` return the key of d_i / s_i of the simplex.
  static TruncatedSSet from_keys(
      int cap, std::vector<std::vector<Key>> keys,
      const std::function<Key(int, const Key&, int)>& face,
      const std::function<Key(int, const Key&, int)>& degeneracy,
      const std::function<std::string(int, const Key&)>& name = {});

  int cap() const { return cap_; }
  int count(int dim) const { return dim <= cap_ ? static_cast<int>(names_[dim].size()) : 0; }
  int face(int dim, int s, int i) const { return faces_[dim][s * (dim + 1) + i]; }
  int degeneracy(int dim, int s, int i) const { return degens_[dim][s * (dim + 1) + i]; }
  const std::string& name(int dim, int s) const { return names_[dim][s]; }
  bool is_degenerate(int dim, int s) const { return degenerate_[dim][s] != 0; }
  int nondegenerate_count(int dim) const;

  /// f*σ for a monotone f: [m] -> [dim] given by its values; requires m <= cap.
  int pullback(int dim, int s, std::span<const int> f) const;
  /// Vertex ids of σ in order.
  std::vector<int> vertices(int dim, int s) const;
  /// The edge σ|{a, b}.
  int edge(int dim, int s, int a, int b) const;

  bool has_keys() const { return !keys_.empty(); }
  const Key& key(int dim, int s) const { return keys_[dim][s]; }
  std::optional<int> find(int dim, const Key& key) const;
  std::optional<int> find_name(int dim, const std::string& name) const;

 private:
  void finish();

  int cap_ = -1;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> degens_;
  std::vector<std::vector<char>> degenerate_;
  std::vector<std::vector<Key>> keys_;
  std::vector<std::map<Key, int>> index_;
};

class TruncatedSSet::Builder {
 public:
  explicit Builder(int cap);
  int add_simplex(int dim, std::string name);
  void set_face(int dim, int s, int i, int face);
  void set_degeneracy(int dim, int s, int i, int degeneracy);
  /// Throws coframes::Error when a face or degeneracy entry is missing.
  TruncatedSSet build() const;

 private:
  int cap_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::map<std::pair<int, int>, int>> faces_;
  std::vector<std::map<std::pair<int, int>, int>> degens_;
};

using SSetPtr = std::shared_ptr<const TruncatedSSet>;

inline SSetPtr share(TruncatedSSet k) { return std::make_shared<const TruncatedSSet>(std::move(k)); }

/// First violated simplicial identity, or empty when all hold up to the cap.
std::string simplicial_identity_violation(const TruncatedSSet& k);

/// A dimensionwise map of truncated simplicial sets with equal caps.
struct SimplicialMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<int>> map;  // map[dim][simplex]

  int operator()(int dim, int s) const { return map[dim][s]; }
  static SimplicialMap identity(const SSetPtr& k);
  static SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);
};

/// First face or degeneracy the map fails to commute with; empty when valid.
std::string simplicial_map_violation(const SimplicialMap& f);
bool is_injective(const SimplicialMap& f);
bool is_bijective(const SimplicialMap& f);

// Standard simplicial sets, truncated at `cap`.
TruncatedSSet standard_simplex(int n, int cap);
/// Simplicial set generated by vertices and edges only.
TruncatedSSet one_skeletal(int vertices, const std::vector<std::pair<int, int>>& edges, int cap,
                           const std::vector<std::string>& vertex_names = {},
                           const std::vector<std::string>& edge_names = {});
TruncatedSSet spine(int n, int cap);
TruncatedSSet empty_sset(int cap);

/// The same simplices in dimensions <= cap, with indices and keys unchanged.
TruncatedSSet truncate(const TruncatedSSet& k, int cap);

/// Whether all simplices above dimension 1 are degenerate.
bool is_one_skeletal(const TruncatedSSet& k);

/// Sub-simplicial set on the simplices satisfying `keep`, with its inclusion.
/// Throws coframes::Error when the selection is not closed under the operators.
SimplicialMap sub_sset(const SSetPtr& k, const std::function<bool(int, int)>& keep);

/// Categorical product computed dimensionwise; simplex (a, b) has key {a, b}.
TruncatedSSet product_sset(const TruncatedSSet& k, const TruncatedSSet& l);
SimplicialMap product_projection(const SSetPtr& product, const SSetPtr& k, const SSetPtr& l, int which);

/// Disjoint union; the simplex (copy c, s) has key {c, s}.
TruncatedSSet coproduct(const std::vector<SSetPtr>& parts);
/// Coprojection of part `which` into `coproduct(parts)`.
SimplicialMap coprojection(const SSetPtr& sum, const std::vector<SSetPtr>& parts, int which);

struct Pushout {
  SSetPtr object;
  SimplicialMap from_left;   ///< B -> P
  SimplicialMap from_right;  ///< C -> P
};

/// Pushout of B <- A -> C computed by identifying images dimensionwise.
Pushout pushout(const SimplicialMap& to_left, const SimplicialMap& to_right);

/// The simplicial map σ |-> f(σ) given dimensionwise by a callback.
SimplicialMap make_map(const SSetPtr& source, const SSetPtr& target,
                       const std::function<int(int, int)>& image);

}  // namespace coframes::sset
