#include "coframes/sset/nerve.hpp"

#include "coframes/error.hpp"

namespace coframes::sset {

using fincat::FinCategory;

TruncatedSSet nerve(const FinCategory& c, int cap) {
  std::vector<std::vector<Key>> keys(cap + 1);
  for (int x = 0; x < c.object_count(); ++x) keys[0].push_back({x});
  if (cap >= 1)
    for (int m = 0; m < c.morphism_count(); ++m) keys[1].push_back({m});
  for (int d = 2; d <= cap; ++d)
    for (const Key& chain : keys[d - 1])
      for (int g : c.outgoing(c.target(chain.back()))) {
        Key next = chain;
        next.push_back(g);
        keys[d].push_back(std::move(next));
      }
  return TruncatedSSet::from_keys(
      cap, std::move(keys),
      [&](int d, const Key& chain, int i) -> Key {
        if (d == 1) return {i == 0 ? c.target(chain[0]) : c.source(chain[0])};
        Key out;
        for (int t = 0; t < d; ++t) {
          // vertex i sits between f_i and f_{i+1} (1-based)
          if (i == 0 && t == 0) continue;
          if (i == d && t == d - 1) continue;
          if (i > 0 && i < d && t == i - 1) {
            out.push_back(c.composite(chain[i], chain[i - 1]));
            ++t;
            continue;
          }
          out.push_back(chain[t]);
        }
        return out;
      },
      [&](int d, const Key& chain, int i) -> Key {
        if (d == 0) return {c.identity(chain[0])};
        const int v = i == 0 ? c.source(chain[0]) : c.target(chain[i - 1]);
        Key out = chain;
        out.insert(out.begin() + i, c.identity(v));
        return out;
      },
      [&](int d, const Key& chain) {
        if (d == 0) return c.object_name(chain[0]);
        std::string s;
        for (int f : chain) s += (s.empty() ? "" : "|") + c.morphism_name(f);
        return s;
      });
}

SimplicialMap nerve_of_functor(const fincat::CatFunctor& f, const SSetPtr& nc, const SSetPtr& nd) {
  return make_map(nc, nd, [&](int d, int s) {
    Key key = nc->key(d, s);
    for (int& v : key) v = d == 0 ? f.object_map[v] : f.morphism_map[v];
    auto hit = nd->find(d, key);
    if (!hit) throw Error("nerve_of_functor: image chain missing from the target nerve");
    return *hit;
  });
}

const FinCategory& HomotopyCategory::category() const {
  if (!presented.category) throw Inconclusive("homotopy category did not stabilize within budget");
  return *presented.category;
}

int HomotopyCategory::edge_morphism(const TruncatedSSet& k, int edge) const {
  fincat::Word w{k.face(1, edge, 1), {}};
  if (edge_letter[edge] >= 0) w.letters.push_back(edge_letter[edge]);
  return presented.classify(w);
}

HomotopyCategory homotopy_category(const TruncatedSSet& k, int budget) {
  if (k.cap() < 2) throw Error("homotopy_category: cap must be at least 2");
  fincat::Presentation p;
  HomotopyCategory h;
  for (int v = 0; v < k.count(0); ++v) p.vertices.push_back(k.name(0, v));
  h.edge_letter.assign(k.count(1), -1);
  for (int e = 0; e < k.count(1); ++e) {
    if (k.is_degenerate(1, e)) continue;
    h.edge_letter[e] = static_cast<int>(p.letters.size());
    h.letter_edge.push_back(e);
    p.letters.push_back({k.face(1, e, 1), k.face(1, e, 0), k.name(1, e)});
  }
  auto word = [&](int e) {
    fincat::Word w{k.face(1, e, 1), {}};
    if (h.edge_letter[e] >= 0) w.letters.push_back(h.edge_letter[e]);
    return w;
  };
  for (int s = 0; s < k.count(2); ++s) {
    fincat::Word lhs = word(k.face(2, s, 2));
    const fincat::Word tail = word(k.face(2, s, 0));
    lhs.letters.insert(lhs.letters.end(), tail.letters.begin(), tail.letters.end());
    fincat::Word rhs = word(k.face(2, s, 1));
    if (lhs.letters != rhs.letters) p.relations.emplace_back(std::move(lhs), std::move(rhs));
  }
  h.presented = fincat::saturate(p, budget);
  return h;
}

UnitMap unit_map(const SSetPtr& k, int budget) {
  if (!is_one_skeletal(*k)) throw Error("unit_map: simplicial set is not 1-skeletal");
  if (k->cap() < 2) throw Error("unit_map: cap must be at least 2");
  UnitMap u;
  u.hk = homotopy_category(*k, budget);
  const FinCategory& c = u.hk.category();
  u.nerve = share(nerve(c, k->cap()));
  u.map = make_map(k, u.nerve, [&](int d, int s) {
    Key key;
    if (d == 0) {
      key = {s};
    } else {
      for (int i = 0; i < d; ++i) key.push_back(u.hk.edge_morphism(*k, k->edge(d, s, i, i + 1)));
    }
    return *u.nerve->find(d, key);
  });
  if (!is_injective(u.map)) throw Error("unit_map: map is not injective");
  return u;
}

}  // namespace coframes::sset
