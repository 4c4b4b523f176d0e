#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coframes::fincat {

/// A finite category stored as an explicit composition table.
///
/// Objects and morphisms are dense indices `0..n-1`. Every morphism carries a
/// display name; names are what the file format uses. Composition is stored
/// only for composable pairs, grouped by the middle object, so memory is
/// proportional to the number of composable pairs rather than to the square
/// of the morphism count.
///
/// A category produced by `Builder::build()` may be malformed (missing
/// identities, missing or misplaced composites); `validate_category` reports
/// such problems. Everything else in this library assumes a valid category.
class FinCategory {
 public:
  class Builder;

  /// A composite recorded for a pair that is not composable.
  struct StrayComposite {
    int g;
    int f;
    int result;
  };

  FinCategory() = default;

  int object_count() const { return static_cast<int>(object_names_.size()); }
  int morphism_count() const { return static_cast<int>(src_.size()); }

  int source(int m) const { return src_[m]; }
  int target(int m) const { return tgt_[m]; }

  /// Identity morphism of `obj`, or -1 if none was declared.
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int m) const { return identity_[src_[m]] == m; }

  /// `g ∘ f`, or nullopt when the pair is not composable or the entry is missing.
  std::optional<int> compose(int g, int f) const;
  /// `g ∘ f`; throws coframes::Error when undefined.
  int composite(int g, int f) const;

  std::span<const int> incoming(int obj) const { return in_[obj]; }
  std::span<const int> outgoing(int obj) const { return out_[obj]; }
  std::vector<int> hom(int a, int b) const;

  const std::string& object_name(int obj) const { return object_names_[obj]; }
  const std::string& morphism_name(int m) const { return morphism_names_[m]; }
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;

  std::span<const StrayComposite> stray_composites() const { return stray_; }

  /// Non-identity morphisms in index order.
  std::vector<int> non_identities() const;

 private:
  int slot(int g, int f) const;

  std::vector<std::string> object_names_;
  std::vector<std::string> morphism_names_;
  std::vector<int> src_;
  std::vector<int> tgt_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_in_;
  std::vector<int> pos_out_;
  // table_[x][pos_out(g) * |in(x)| + pos_in(f)] = g∘f for f: ? -> x, g: x -> ?
  std::vector<std::vector<int>> table_;
  std::vector<StrayComposite> stray_;
};

class FinCategory::Builder {
 public:
  int add_object(std::string name);
  int add_morphism(std::string name, int src, int tgt);
  /// Adds an endomorphism of `obj` and declares it the identity.
  int add_identity(int obj, std::string name = {});
  void set_identity(int obj, int m);
  void set_composite(int g, int f, int result);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(src_.size()); }

  /// Builds from the composites recorded with set_composite.
  FinCategory build() const;
  /// Builds with `compose(g, f)` evaluated on every composable pair.
  FinCategory build(const std::function<int(int, int)>& compose) const;

 private:
  FinCategory allocate() const;

  std::vector<std::string> objects_;
  std::vector<std::string> names_;
  std::vector<int> src_;
  std::vector<int> tgt_;
  std::vector<int> identity_;
  struct Triple {
    int g, f, h;
  };
  std::vector<Triple> composites_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

/// A set of morphisms of some category, stored as a membership mask.
class MorphismClass {
 public:
  MorphismClass() = default;
  explicit MorphismClass(int universe) : member_(universe, 0) {}
  MorphismClass(int universe, std::span<const int> members);

  static MorphismClass identities(const FinCategory& c);
  static MorphismClass all(const FinCategory& c);
  static MorphismClass isomorphisms(const FinCategory& c);

  int universe() const { return static_cast<int>(member_.size()); }
  bool contains(int m) const { return member_[m] != 0; }
  /// Returns true if `m` was not already a member.
  bool insert(int m);
  std::vector<int> members() const;
  int size() const;
  bool subset_of(const MorphismClass& other) const;

  friend bool operator==(const MorphismClass&, const MorphismClass&) = default;

 private:
  std::vector<char> member_;
};

/// A functor between finite categories given by its object and morphism maps.
struct CatFunctor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  static CatFunctor identity(CategoryPtr c);
  /// `second ∘ first`.
  static CatFunctor compose(const CatFunctor& second, const CatFunctor& first);
};

/// Witness for a failed functor law; empty string when the functor is valid.
std::string functor_violation(const CatFunctor& f);
bool is_fully_faithful(const CatFunctor& f);
/// True iff `f` maps every member of `source_weq` into `target_weq`.
bool is_homotopical(const CatFunctor& f, const MorphismClass& source_weq,
                    const MorphismClass& target_weq);
/// True iff the two functors agree on objects and morphisms.
bool same_maps(const CatFunctor& a, const CatFunctor& b);

struct DegreeAssignment {
  std::vector<int> degree;
};

struct Violation {
  std::string law;
  std::vector<std::string> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_category(const FinCategory& c);

/// Objects and morphisms are pairs; pair (a, b) has index a * |D| + b.
FinCategory product_category(const FinCategory& c, const FinCategory& d);
/// Projections out of `product_category(c, d)`.
CatFunctor product_projection(const CategoryPtr& product, const CategoryPtr& c,
                              const CategoryPtr& d, int which);
/// Componentwise membership, as a class on `product_category(c, d)`.
MorphismClass product_class(const FinCategory& c, const MorphismClass& wc,
                            const FinCategory& d, const MorphismClass& wd);

// Standard small categories.
FinCategory ordinal(int n);        ///< the poset [n] = {0 < 1 < ... < n}
FinCategory discrete(int n);       ///< n objects, identities only
FinCategory empty_category();
FinCategory commutative_square();  ///< the poset [1] x [1], objects (0,0), (0,1), (1,0), (1,1)
FinCategory zigzag();              ///< A -> B <- C -> D, arrows a, w, c
/// Free category on a finite acyclic quiver. Throws on a directed cycle.
FinCategory free_category(int vertices, const std::vector<std::pair<int, int>>& arrows,
                          const std::vector<std::string>& vertex_names = {},
                          const std::vector<std::string>& arrow_names = {});
/// Poset on `n` elements generated by the given strict relations (a < b).
FinCategory poset(int n, const std::vector<std::pair<int, int>>& relations);

}  // namespace coframes::fincat
