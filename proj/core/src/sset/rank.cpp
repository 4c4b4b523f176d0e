#include "coframes/sset/rank.hpp"

#include <algorithm>

#include "coframes/error.hpp"

namespace coframes::sset {

namespace {

int morphism_rank(const UnitMap& u, int m) {
  return static_cast<int>(u.hk.presented.representative[m].letters.size());
}

// Index of each simplex of N(hK) inside a sub-simplicial set, or -1.
std::vector<std::vector<int>> inverse_of(const SimplicialMap& inclusion) {
  std::vector<std::vector<int>> inv(inclusion.target->cap() + 1);
  for (int d = 0; d <= inclusion.target->cap(); ++d) {
    inv[d].assign(inclusion.target->count(d), -1);
    for (int s = 0; s < inclusion.source->count(d); ++s) inv[d][inclusion(d, s)] = s;
  }
  return inv;
}

}  // namespace

int rank_of_simplex(const UnitMap& u, int dim, int s) {
  if (dim == 0) return 0;
  const int e = u.nerve->edge(dim, s, 0, dim);
  return morphism_rank(u, u.nerve->key(1, e)[0]);
}

bool is_primitive(const UnitMap& u, int dim, int s) {
  for (int m : u.nerve->key(dim, s))
    if (dim > 0 && morphism_rank(u, m) != 1) return false;
  return true;
}

int max_rank(const UnitMap& u) {
  int r = 0;
  for (int m = 0; m < u.nerve->count(1); ++m) r = std::max(r, morphism_rank(u, m));
  return r;
}

PrimitiveFactorization primitive_factorization(const UnitMap& u, int dim, int s) {
  const TruncatedSSet& n = *u.nerve;
  PrimitiveFactorization out;
  out.dim = rank_of_simplex(u, dim, s);
  if (out.dim > n.cap()) throw Error("primitive_factorization: rank exceeds the truncation");
  for (int i = 0; i <= dim; ++i) out.f.push_back(i == 0 ? 0 : rank_of_simplex(u, 1, n.edge(dim, s, 0, i)));
  if (out.dim == 0) {
    out.tau = n.vertices(dim, s)[0];
    return out;
  }
  const int long_edge = n.key(1, n.edge(dim, s, 0, dim))[0];
  const auto& word = u.hk.presented.representative[long_edge];
  Key chain;
  int at = word.start;
  for (int l : word.letters) {
    chain.push_back(u.hk.presented.classify(fincat::Word{at, {l}}));
    at = u.hk.category().target(chain.back());
  }
  out.tau = *n.find(out.dim, chain);
  return out;
}

SimplicialMap rank_filtration(const UnitMap& u, int n) {
  return sub_sset(u.nerve, [&](int d, int s) { return rank_of_simplex(u, d, s) <= n; });
}

SimplicialMap generalized_inner_horn(int n, int cap) {
  auto delta = share(standard_simplex(n, cap));
  return sub_sset(delta, [&](int d, int s) {
    const Key& f = delta->key(d, s);
    return !(f.front() == 0 && f.back() == n);
  });
}

PushoutVerification verify_rank_pushout(const UnitMap& u, int n) {
  const TruncatedSSet& nh = *u.nerve;
  const int cap = nh.cap();
  if (n < 1 || n > cap) throw Error("verify_rank_pushout: n must lie in [1, cap]");
  PushoutVerification r;
  r.n = n;
  const SimplicialMap kn = rank_filtration(u, n);
  const SimplicialMap kn1 = rank_filtration(u, n - 1);
  const auto inv_n = inverse_of(kn);
  const auto inv_n1 = inverse_of(kn1);

  std::vector<int> primitives;
  for (int s = 0; s < nh.count(n); ++s)
    if (rank_of_simplex(u, n, s) == n && is_primitive(u, n, s)) primitives.push_back(s);
  r.primitive_count = static_cast<int>(primitives.size());

  if (primitives.empty()) {
    for (int d = 0; d <= cap; ++d)
      if (kn.source->count(d) != kn1.source->count(d)) {
        r.witness = "no primitive " + std::to_string(n) + "-simplices but K^(n-1) != K^(n) in dim " +
                    std::to_string(d);
        return r;
      }
    r.ok = true;
    return r;
  }

  const SimplicialMap horn = generalized_inner_horn(n, cap);
  const SSetPtr delta = horn.target;
  const std::vector<SSetPtr> horns(primitives.size(), horn.source);
  const std::vector<SSetPtr> simplices(primitives.size(), delta);
  const SSetPtr a = share(coproduct(horns));
  const SSetPtr b = share(coproduct(simplices));

  // (c, x) |-> x*τ_c, for x a simplex of Δ^n.
  auto characteristic = [&](int d, int c, int x) { return nh.pullback(n, primitives[c], delta->key(d, x)); };

  const SimplicialMap a_to_b = make_map(a, b, [&](int d, int s) {
    const Key& k = a->key(d, s);
    return *b->find(d, {k[0], horn(d, k[1])});
  });
  std::string failure;
  const SimplicialMap a_to_c = make_map(a, kn1.source, [&](int d, int s) {
    const Key& k = a->key(d, s);
    const int image = inv_n1[d][characteristic(d, k[0], horn(d, k[1]))];
    if (image < 0 && failure.empty())
      failure = "horn simplex " + a->name(d, s) + " has rank " + std::to_string(n) + " boundary image";
    return std::max(image, 0);
  });
  if (!failure.empty()) {
    r.witness = failure;
    return r;
  }

  const Pushout p = pushout(a_to_b, a_to_c);
  const TruncatedSSet& po = *p.object;
  std::vector<std::vector<int>> alpha(cap + 1);
  for (int d = 0; d <= cap && failure.empty(); ++d) {
    alpha[d].assign(po.count(d), -1);
    auto assign = [&](int cls, int value, const std::string& from) {
      if (value < 0) {
        failure = from + " lands outside K^(" + std::to_string(n) + ")";
      } else if (alpha[d][cls] >= 0 && alpha[d][cls] != value) {
        failure = "comparison map not well defined at " + from;
      } else {
        alpha[d][cls] = value;
      }
    };
    for (int s = 0; s < b->count(d) && failure.empty(); ++s) {
      const Key& k = b->key(d, s);
      assign(p.from_left(d, s), inv_n[d][characteristic(d, k[0], k[1])], b->name(d, s));
    }
    for (int s = 0; s < kn1.source->count(d) && failure.empty(); ++s)
      assign(p.from_right(d, s), inv_n[d][kn1(d, s)], kn1.source->name(d, s));
  }
  if (!failure.empty()) {
    r.witness = failure;
    return r;
  }
  const SimplicialMap comparison{p.object, kn.source, alpha};
  if (auto v = simplicial_map_violation(comparison); !v.empty()) {
    r.witness = v;
    return r;
  }
  for (int d = 0; d <= cap; ++d) {
    std::vector<int> hits(kn.source->count(d), 0);
    for (int v : alpha[d]) ++hits[v];
    for (int s = 0; s < kn.source->count(d); ++s)
      if (hits[s] != 1) {
        r.witness = "simplex " + kn.source->name(d, s) + " of K^(" + std::to_string(n) + ") has " +
                    std::to_string(hits[s]) + " preimages in the pushout";
        return r;
      }
  }
  r.ok = true;
  return r;
}

}  // namespace coframes::sset
