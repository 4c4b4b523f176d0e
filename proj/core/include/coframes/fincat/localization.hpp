#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coframes/fincat/category.hpp"

namespace coframes::fincat {

/// A path in a presentation: a start vertex plus letters in traversal order
/// (the first letter is applied first). The empty word is an identity.
struct Word {
  int start = 0;
  std::vector<int> letters;
};

/// A category presented by generating arrows and relations between paths.
struct Presentation {
  struct Letter {
    int source;
    int target;
    std::string name;
  };

  std::vector<std::string> vertices;
  std::vector<Letter> letters;
  std::vector<std::pair<Word, Word>> relations;
};

enum class SaturationStatus { Stabilized, Inconclusive };

struct PresentedCategory {
  SaturationStatus status = SaturationStatus::Inconclusive;
  int budget = 0;
  /// Number of classes of paths of length <= budget, keyed by (source, target).
  std::map<std::pair<int, int>, int> hom_sizes;
  /// Only when stabilized: the quotient category and a shortest word per morphism.
  std::optional<FinCategory> category;
  std::vector<Word> representative;
  /// Reduces an arbitrary path to its morphism in `category`.
  int classify(const Word& w) const;

  // Internal reduction data for `classify`.
  std::map<std::pair<int, std::vector<int>>, int> class_of_short;  // length <= budget + 1
};

/// Computes the quotient of the path category by the congruence generated by
/// the relations, restricted to paths of length <= budget. The result is
/// reported as stabilized when every path of length budget + 1 is equivalent to
/// a shorter one and raising the budget by one leaves the partition of the
/// shorter paths unchanged.
PresentedCategory saturate(const Presentation& p, int budget);

struct Localization {
  PresentedCategory presented;
  /// The localization functor, present only when stabilized.
  std::optional<CatFunctor> functor;

  bool stabilized() const { return presented.status == SaturationStatus::Stabilized; }
  /// Hom-set size between images of objects a and b; throws when inconclusive.
  int hom_size(int a, int b) const;
};

/// Bounded presentation of C[W^-1]: arrows of C and formal inverses of W,
/// modulo the composition table and the inverse laws.
Localization localize_bounded(const FinCategory& c, const MorphismClass& w, int budget);

struct EssentialImageReport {
  bool in_image = false;
  int arrows_examined = 0;
  int conjugations_checked = 0;
  /// When found: the arrow of C and the two conjugating isomorphisms.
  std::vector<std::string> witness;
};

/// Decides whether the arrow `target` of the localization is isomorphic, in
/// the arrow category of the localization, to the image of some arrow of C.
/// Exhaustive over arrows of C and pairs of isomorphisms.
EssentialImageReport arrow_in_essential_image(const FinCategory& c, const Localization& loc,
                                              int target);

}  // namespace coframes::fincat
