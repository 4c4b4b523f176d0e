#include "coframes/fincat/localization.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coframes/error.hpp"

namespace coframes::fincat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as root so that roots are deterministic.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

int word_end(const Presentation& p, const Word& w) {
  return w.letters.empty() ? w.start : p.letters[w.letters.back()].target;
}

void check_word(const Presentation& p, const Word& w) {
  int at = w.start;
  for (int l : w.letters) {
    if (l < 0 || l >= static_cast<int>(p.letters.size())) throw Error("relation uses an unknown letter");
    if (p.letters[l].source != at) throw Error("relation side is not a path");
    at = p.letters[l].target;
  }
}

struct Enumeration {
  std::vector<Word> words;  // sorted by (start, length, discovery order)
  std::map<std::pair<int, std::vector<int>>, int> index;
};

Enumeration enumerate_paths(const Presentation& p, int limit) {
  const int nv = static_cast<int>(p.vertices.size());
  std::vector<std::vector<int>> out(nv);
  for (std::size_t l = 0; l < p.letters.size(); ++l) out[p.letters[l].source].push_back(static_cast<int>(l));
  Enumeration e;
  for (int v = 0; v < nv; ++v) {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= limit; ++len) {
      std::vector<std::vector<int>> next;
      for (auto& letters : layer) {
        const int end = letters.empty() ? v : p.letters[letters.back()].target;
        e.index[{v, letters}] = static_cast<int>(e.words.size());
        e.words.push_back({v, letters});
        if (len == limit) continue;
        for (int l : out[end]) {
          auto q = letters;
          q.push_back(l);
          next.push_back(std::move(q));
        }
      }
      layer = std::move(next);
    }
  }
  return e;
}

// Unites words related by one rewrite, keeping every intermediate path of
// length <= limit.
UnionFind saturate_at(const Presentation& p, const Enumeration& e, int limit) {
  std::map<std::vector<int>, std::vector<const Word*>> rewrites;
  std::set<std::size_t> lengths;
  for (const auto& [lhs, rhs] : p.relations) {
    if (!lhs.letters.empty()) {
      rewrites[lhs.letters].push_back(&rhs);
      lengths.insert(lhs.letters.size());
    }
    if (!rhs.letters.empty()) {
      rewrites[rhs.letters].push_back(&lhs);
      lengths.insert(rhs.letters.size());
    }
  }
  UnionFind uf(e.words.size());
  for (std::size_t id = 0; id < e.words.size(); ++id) {
    const Word& w = e.words[id];
    const int n = static_cast<int>(w.letters.size());
    if (n > limit) continue;
    for (int i = 0; i < n; ++i)
      for (std::size_t len : lengths) {
        if (i + static_cast<int>(len) > n) continue;
        std::vector<int> sub(w.letters.begin() + i, w.letters.begin() + i + len);
        auto it = rewrites.find(sub);
        if (it == rewrites.end()) continue;
        for (const Word* other : it->second) {
          const int new_len = n - static_cast<int>(len) + static_cast<int>(other->letters.size());
          if (new_len > limit) continue;
          std::vector<int> replaced(w.letters.begin(), w.letters.begin() + i);
          replaced.insert(replaced.end(), other->letters.begin(), other->letters.end());
          replaced.insert(replaced.end(), w.letters.begin() + i + len, w.letters.end());
          uf.unite(static_cast<int>(id), e.index.at({w.start, replaced}));
        }
      }
  }
  return uf;
}

}  // namespace

int PresentedCategory::classify(const Word& w) const {
  if (status != SaturationStatus::Stabilized) throw Inconclusive("classify: presentation did not stabilize");
  std::vector<int> letters = w.letters;
  while (static_cast<int>(letters.size()) > budget) {
    std::vector<int> prefix(letters.begin(), letters.begin() + budget + 1);
    const int m = class_of_short.at({w.start, prefix});
    std::vector<int> reduced = representative[m].letters;
    reduced.insert(reduced.end(), letters.begin() + budget + 1, letters.end());
    letters = std::move(reduced);
  }
  return class_of_short.at({w.start, letters});
}

PresentedCategory saturate(const Presentation& p, int budget) {
  if (budget < 1) throw Error("saturate: budget must be at least 1");
  for (const auto& [lhs, rhs] : p.relations) {
    check_word(p, lhs);
    check_word(p, rhs);
    if (lhs.start != rhs.start || word_end(p, lhs) != word_end(p, rhs))
      throw Error("relation sides have different endpoints");
  }
  const Enumeration e = enumerate_paths(p, budget + 1);
  UnionFind coarse = saturate_at(p, e, budget + 1);
  UnionFind fine = saturate_at(p, e, budget);

  PresentedCategory out;
  out.budget = budget;
  const int nw = static_cast<int>(e.words.size());

  // Classes among short words, in enumeration order.
  std::map<int, int> class_index;  // fine root -> class
  std::vector<int> class_of(nw, -1);
  for (int id = 0; id < nw; ++id) {
    if (static_cast<int>(e.words[id].letters.size()) > budget) continue;
    auto [it, fresh] = class_index.emplace(fine.find(id), static_cast<int>(class_index.size()));
    class_of[id] = it->second;
    if (fresh) ++out.hom_sizes[{e.words[id].start, word_end(p, e.words[id])}];
  }

  bool stable = true;
  // Same partition of short words under both limits.
  std::map<int, int> coarse_to_class;
  for (int id = 0; id < nw && stable; ++id) {
    if (class_of[id] < 0) continue;
    auto [it, fresh] = coarse_to_class.emplace(coarse.find(id), class_of[id]);
    if (!fresh && it->second != class_of[id]) stable = false;
  }
  // Every long word collapses onto a short one.
  for (int id = 0; id < nw && stable; ++id) {
    if (class_of[id] >= 0) continue;
    if (!coarse_to_class.count(coarse.find(id))) stable = false;
  }
  if (!stable) return out;

  out.status = SaturationStatus::Stabilized;
  const int nclass = static_cast<int>(class_index.size());
  out.representative.assign(nclass, Word{});
  std::vector<char> have(nclass, 0);
  for (int id = 0; id < nw; ++id) {
    if (class_of[id] < 0 || have[class_of[id]]) continue;
    have[class_of[id]] = 1;
    out.representative[class_of[id]] = e.words[id];
  }
  for (int id = 0; id < nw; ++id) {
    const int cls = class_of[id] >= 0 ? class_of[id] : coarse_to_class.at(coarse.find(id));
    out.class_of_short[{e.words[id].start, e.words[id].letters}] = cls;
  }

  FinCategory::Builder b;
  for (const auto& v : p.vertices) b.add_object(v);
  for (int k = 0; k < nclass; ++k) {
    const Word& w = out.representative[k];
    std::string name;
    if (w.letters.empty()) {
      name = "id_" + p.vertices[w.start];
    } else {
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (!name.empty()) name += ".";
        name += p.letters[*it].name;
      }
    }
    const int m = b.add_morphism(std::move(name), w.start, word_end(p, w));
    if (w.letters.empty()) b.set_identity(w.start, m);
  }
  out.category = b.build([&](int g, int f) {
    Word w = out.representative[f];
    const auto& tail = out.representative[g].letters;
    w.letters.insert(w.letters.end(), tail.begin(), tail.end());
    return out.classify(w);
  });
  return out;
}

int Localization::hom_size(int a, int b) const {
  if (!stabilized()) throw Inconclusive("localization did not stabilize within budget");
  const auto& fa = functor->object_map;
  auto it = presented.hom_sizes.find({fa[a], fa[b]});
  return it == presented.hom_sizes.end() ? 0 : it->second;
}

Localization localize_bounded(const FinCategory& c, const MorphismClass& w, int budget) {
  Presentation p;
  for (int x = 0; x < c.object_count(); ++x) p.vertices.push_back(c.object_name(x));
  std::vector<int> letter_of(c.morphism_count(), -1);
  for (int m : c.non_identities()) {
    letter_of[m] = static_cast<int>(p.letters.size());
    p.letters.push_back({c.source(m), c.target(m), c.morphism_name(m)});
  }
  for (int x = 0; x < c.object_count(); ++x)
    for (int g : c.outgoing(x))
      for (int f : c.incoming(x)) {
        if (c.is_identity(g) || c.is_identity(f)) continue;
        const int h = c.composite(g, f);
        Word rhs{c.source(f), {}};
        if (!c.is_identity(h)) rhs.letters.push_back(letter_of[h]);
        p.relations.push_back({Word{c.source(f), {letter_of[f], letter_of[g]}}, rhs});
      }
  for (int m : w.members()) {
    if (c.is_identity(m)) continue;
    const int inv = static_cast<int>(p.letters.size());
    p.letters.push_back({c.target(m), c.source(m), c.morphism_name(m) + "^-1"});
    p.relations.push_back({Word{c.source(m), {letter_of[m], inv}}, Word{c.source(m), {}}});
    p.relations.push_back({Word{c.target(m), {inv, letter_of[m]}}, Word{c.target(m), {}}});
  }

  Localization loc;
  loc.presented = saturate(p, budget);
  if (loc.stabilized()) {
    CatFunctor gamma;
    gamma.source = std::make_shared<const FinCategory>(c);
    gamma.target = std::make_shared<const FinCategory>(*loc.presented.category);
    for (int x = 0; x < c.object_count(); ++x) gamma.object_map.push_back(x);
    for (int m = 0; m < c.morphism_count(); ++m) {
      Word word{c.source(m), {}};
      if (!c.is_identity(m)) word.letters.push_back(letter_of[m]);
      gamma.morphism_map.push_back(loc.presented.classify(word));
    }
    loc.functor = std::move(gamma);
  }
  return loc;
}

EssentialImageReport arrow_in_essential_image(const FinCategory& c, const Localization& loc,
                                              int target) {
  if (!loc.stabilized()) throw Inconclusive("localization did not stabilize within budget");
  const FinCategory& l = *loc.presented.category;
  const CatFunctor& gamma = *loc.functor;
  const MorphismClass iso = MorphismClass::isomorphisms(l);
  EssentialImageReport r;
  for (int u = 0; u < c.morphism_count(); ++u) {
    const int gu = gamma.morphism_map[u];
    ++r.arrows_examined;
    for (int alpha : l.hom(l.source(gu), l.source(target))) {
      if (!iso.contains(alpha)) continue;
      for (int beta : l.hom(l.target(gu), l.target(target))) {
        if (!iso.contains(beta)) continue;
        ++r.conjugations_checked;
        if (l.composite(beta, gu) == l.composite(target, alpha)) {
          r.in_image = true;
          r.witness = {c.morphism_name(u), l.morphism_name(alpha), l.morphism_name(beta)};
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace coframes::fincat
