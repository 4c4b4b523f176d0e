#include "coframes/sset/sset.hpp"

#include <algorithm>
#include <numeric>

#include "coframes/error.hpp"

namespace coframes::sset {

namespace {

std::string join_key(const Key& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s;
}

std::string simplex_label(const TruncatedSSet& k, int dim, int s) {
  return "dim " + std::to_string(dim) + " simplex '" + k.name(dim, s) + "'";
}

}  // namespace

TruncatedSSet TruncatedSSet::from_keys(
    int cap, std::vector<std::vector<Key>> keys,
    const std::function<Key(int, const Key&, int)>& face,
    const std::function<Key(int, const Key&, int)>& degeneracy,
    const std::function<std::string(int, const Key&)>& name) {
  if (cap < 0) throw Error("simplicial set cap must be non-negative");
  keys.resize(cap + 1);
  TruncatedSSet k;
  k.cap_ = cap;
  k.keys_ = std::move(keys);
  k.index_.resize(cap + 1);
  k.names_.resize(cap + 1);
  for (int d = 0; d <= cap; ++d)
    for (std::size_t s = 0; s < k.keys_[d].size(); ++s) {
      if (!k.index_[d].emplace(k.keys_[d][s], static_cast<int>(s)).second)
        throw Error("duplicate simplex key " + join_key(k.keys_[d][s]));
      k.names_[d].push_back(name ? name(d, k.keys_[d][s]) : join_key(k.keys_[d][s]));
    }
  auto lookup = [&](int d, const Key& key) {
    auto it = k.index_[d].find(key);
    if (it == k.index_[d].end()) throw Error("operator leaves the model: key " + join_key(key));
    return it->second;
  };
  k.faces_.resize(cap + 1);
  k.degens_.resize(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    const int n = k.count(d);
    if (d > 0) {
      k.faces_[d].resize(static_cast<std::size_t>(n) * (d + 1));
      for (int s = 0; s < n; ++s)
        for (int i = 0; i <= d; ++i) k.faces_[d][s * (d + 1) + i] = lookup(d - 1, face(d, k.keys_[d][s], i));
    }
    if (d < cap) {
      k.degens_[d].resize(static_cast<std::size_t>(n) * (d + 1));
      for (int s = 0; s < n; ++s)
        for (int i = 0; i <= d; ++i)
          k.degens_[d][s * (d + 1) + i] = lookup(d + 1, degeneracy(d, k.keys_[d][s], i));
    }
  }
  k.finish();
  return k;
}

void TruncatedSSet::finish() {
  degenerate_.assign(cap_ + 1, {});
  for (int d = 0; d <= cap_; ++d) {
    degenerate_[d].assign(count(d), 0);
    if (d == 0) continue;
    for (int s = 0; s < count(d); ++s)
      for (int i = 0; i < d; ++i)
        if (degeneracy(d - 1, face(d, s, i), i) == s) degenerate_[d][s] = 1;
  }
}

int TruncatedSSet::nondegenerate_count(int dim) const {
  if (dim > cap_) return 0;
  return static_cast<int>(std::count(degenerate_[dim].begin(), degenerate_[dim].end(), 0));
}

int TruncatedSSet::pullback(int dim, int s, std::span<const int> f) const {
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 0 || m > cap_) throw Error("pullback: target dimension outside the truncation");
  for (int t = 0; t <= m; ++t) {
    if (f[t] < 0 || f[t] > dim) throw Error("pullback: map does not land in [dim]");
    if (t && f[t] < f[t - 1]) throw Error("pullback: map is not monotone");
  }
  // A repeated value splits off a codegeneracy: f = f' s^j.
  for (int j = 0; j < m; ++j)
    if (f[j] == f[j + 1]) {
      std::vector<int> g;
      for (int t = 0; t <= m; ++t)
        if (t != j + 1) g.push_back(f[t]);
      return degeneracy(m - 1, pullback(dim, s, g), j);
    }
  // Injective: a missed value k splits off a coface: f = δ^k f'.
  if (m == dim) return s;
  int k = 0;
  while (k <= m && f[k] == k) ++k;
  std::vector<int> g(f.begin(), f.end());
  for (int& v : g)
    if (v > k) --v;
  return pullback(dim - 1, face(dim, s, k), g);
}

std::vector<int> TruncatedSSet::vertices(int dim, int s) const {
  std::vector<int> out;
  for (int v = 0; v <= dim; ++v) {
    const int f[1] = {v};
    out.push_back(pullback(dim, s, f));
  }
  return out;
}

int TruncatedSSet::edge(int dim, int s, int a, int b) const {
  const int f[2] = {a, b};
  return pullback(dim, s, f);
}

std::optional<int> TruncatedSSet::find(int dim, const Key& key) const {
  if (dim > cap_ || keys_.empty()) return std::nullopt;
  auto it = index_[dim].find(key);
  if (it == index_[dim].end()) return std::nullopt;
  return it->second;
}

std::optional<int> TruncatedSSet::find_name(int dim, const std::string& name) const {
  if (dim > cap_) return std::nullopt;
  auto it = std::find(names_[dim].begin(), names_[dim].end(), name);
  if (it == names_[dim].end()) return std::nullopt;
  return static_cast<int>(it - names_[dim].begin());
}

TruncatedSSet::Builder::Builder(int cap) : cap_(cap), names_(cap + 1), faces_(cap + 1), degens_(cap + 1) {
  if (cap < 0) throw Error("simplicial set cap must be non-negative");
}

int TruncatedSSet::Builder::add_simplex(int dim, std::string name) {
  if (dim < 0 || dim > cap_) throw Error("add_simplex: dimension outside the truncation");
  names_[dim].push_back(std::move(name));
  return static_cast<int>(names_[dim].size()) - 1;
}

void TruncatedSSet::Builder::set_face(int dim, int s, int i, int face) { faces_[dim][{s, i}] = face; }

void TruncatedSSet::Builder::set_degeneracy(int dim, int s, int i, int degeneracy) {
  degens_[dim][{s, i}] = degeneracy;
}

TruncatedSSet TruncatedSSet::Builder::build() const {
  TruncatedSSet k;
  k.cap_ = cap_;
  k.names_ = names_;
  k.faces_.resize(cap_ + 1);
  k.degens_.resize(cap_ + 1);
  auto fetch = [&](const std::map<std::pair<int, int>, int>& table, int d, int s, int i, int range,
                   const char* what) {
    auto it = table.find({s, i});
    if (it == table.end())
      throw Error(std::string("missing ") + what + " " + std::to_string(i) + " of dim " + std::to_string(d) +
                  " simplex '" + names_[d][s] + "'");
    if (it->second < 0 || it->second >= range)
      throw Error(std::string(what) + " index out of range for '" + names_[d][s] + "'");
    return it->second;
  };
  for (int d = 0; d <= cap_; ++d) {
    const int n = static_cast<int>(names_[d].size());
    if (d > 0) {
      k.faces_[d].resize(static_cast<std::size_t>(n) * (d + 1));
      for (int s = 0; s < n; ++s)
        for (int i = 0; i <= d; ++i)
          k.faces_[d][s * (d + 1) + i] =
              fetch(faces_[d], d, s, i, static_cast<int>(names_[d - 1].size()), "face");
    }
    if (d < cap_) {
      k.degens_[d].resize(static_cast<std::size_t>(n) * (d + 1));
      for (int s = 0; s < n; ++s)
        for (int i = 0; i <= d; ++i)
          k.degens_[d][s * (d + 1) + i] =
              fetch(degens_[d], d, s, i, static_cast<int>(names_[d + 1].size()), "degeneracy");
    }
  }
  k.finish();
  return k;
}

std::string simplicial_identity_violation(const TruncatedSSet& k) {
  const int cap = k.cap();
  for (int n = 0; n <= cap; ++n)
    for (int s = 0; s < k.count(n); ++s) {
      auto where = [&](const std::string& law) { return law + " fails at " + simplex_label(k, n, s); };
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (k.face(n - 1, k.face(n, s, j), i) != k.face(n - 1, k.face(n, s, i), j - 1))
              return where("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) +
                           "d" + std::to_string(i));
      if (n < cap) {
        for (int j = 0; j <= n; ++j) {
          const int t = k.degeneracy(n, s, j);
          for (int i = 0; i <= n + 1; ++i) {
            const int lhs = k.face(n + 1, t, i);
            int rhs;
            if (i == j || i == j + 1)
              rhs = s;
            else if (i < j)
              rhs = k.degeneracy(n - 1, k.face(n, s, i), j - 1);
            else
              rhs = k.degeneracy(n - 1, k.face(n, s, i - 1), j);
            if (lhs != rhs) return where("d" + std::to_string(i) + "s" + std::to_string(j));
          }
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        if (n + 1 < cap)
          for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
              if (k.degeneracy(n + 1, k.degeneracy(n, s, j), i) != k.degeneracy(n + 1, k.degeneracy(n, s, i), j + 1))
                return where("s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j + 1) +
                             "s" + std::to_string(i));
      }
    }
  return {};
}

SimplicialMap SimplicialMap::identity(const SSetPtr& k) {
  SimplicialMap f{k, k, {}};
  for (int d = 0; d <= k->cap(); ++d) {
    f.map.emplace_back(k->count(d));
    std::iota(f.map.back().begin(), f.map.back().end(), 0);
  }
  return f;
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& second, const SimplicialMap& first) {
  if (first.target.get() != second.source.get() && first.target->cap() != second.source->cap())
    throw Error("compose: simplicial maps are not composable");
  SimplicialMap f{first.source, second.target, first.map};
  for (std::size_t d = 0; d < f.map.size(); ++d)
    for (int& v : f.map[d]) v = second.map[d][v];
  return f;
}

std::string simplicial_map_violation(const SimplicialMap& f) {
  const TruncatedSSet& a = *f.source;
  const TruncatedSSet& b = *f.target;
  if (a.cap() != b.cap()) return "caps differ";
  if (static_cast<int>(f.map.size()) != a.cap() + 1) return "map has the wrong number of dimensions";
  for (int n = 0; n <= a.cap(); ++n) {
    if (static_cast<int>(f.map[n].size()) != a.count(n)) return "map has the wrong size in dim " + std::to_string(n);
    for (int v : f.map[n])
      if (v < 0 || v >= b.count(n)) return "map leaves the target in dim " + std::to_string(n);
  }
  for (int n = 0; n <= a.cap(); ++n)
    for (int s = 0; s < a.count(n); ++s) {
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          if (f(n - 1, a.face(n, s, i)) != b.face(n, f(n, s), i))
            return "face d" + std::to_string(i) + " not preserved at " + simplex_label(a, n, s);
      if (n < a.cap())
        for (int i = 0; i <= n; ++i)
          if (f(n + 1, a.degeneracy(n, s, i)) != b.degeneracy(n, f(n, s), i))
            return "degeneracy s" + std::to_string(i) + " not preserved at " + simplex_label(a, n, s);
    }
  return {};
}

bool is_injective(const SimplicialMap& f) {
  for (std::size_t d = 0; d < f.map.size(); ++d) {
    std::vector<char> hit(f.target->count(static_cast<int>(d)), 0);
    for (int v : f.map[d]) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

bool is_bijective(const SimplicialMap& f) {
  for (std::size_t d = 0; d < f.map.size(); ++d)
    if (static_cast<int>(f.map[d].size()) != f.target->count(static_cast<int>(d))) return false;
  return is_injective(f);
}

TruncatedSSet standard_simplex(int n, int cap) {
  if (n < 0) throw Error("standard_simplex: negative dimension");
  std::vector<std::vector<Key>> keys(cap + 1);
  // Monotone maps [m] -> [n] in lexicographic order.
  for (int m = 0; m <= cap; ++m) {
    Key f(m + 1, 0);
    while (true) {
      keys[m].push_back(f);
      int t = m;
      while (t >= 0 && f[t] == n) --t;
      if (t < 0) break;
      ++f[t];
      for (int u = t + 1; u <= m; ++u) f[u] = f[t];
    }
  }
  return TruncatedSSet::from_keys(
      cap, std::move(keys),
      [](int, const Key& f, int i) {
        Key g = f;
        g.erase(g.begin() + i);
        return g;
      },
      [](int, const Key& f, int i) {
        Key g = f;
        g.insert(g.begin() + i, f[i]);
        return g;
      },
      [](int, const Key& f) {
        std::string s;
        for (int v : f) s += std::to_string(v);
        return s;
      });
}

TruncatedSSet one_skeletal(int vertices, const std::vector<std::pair<int, int>>& edges, int cap,
                           const std::vector<std::string>& vertex_names,
                           const std::vector<std::string>& edge_names) {
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) throw Error("one_skeletal: edge endpoint out of range");
  auto vname = [&](int v) { return v < static_cast<int>(vertex_names.size()) ? vertex_names[v] : std::to_string(v); };
  auto ename = [&](int e) {
    if (e < static_cast<int>(edge_names.size())) return edge_names[e];
    return vname(edges[e].first) + vname(edges[e].second);
  };
  // {0, v}: the vertex v; {1, e, k}: edge e with vertices 0..k-1 at its source.
  std::vector<std::vector<Key>> keys(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    for (int v = 0; v < vertices; ++v) keys[m].push_back({0, v});
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      for (int k = 1; k <= m; ++k) keys[m].push_back({1, e, k});
  }
  return TruncatedSSet::from_keys(
      cap, std::move(keys),
      [&](int m, const Key& key, int i) -> Key {
        if (key[0] == 0) return key;
        const int k = i < key[2] ? key[2] - 1 : key[2];
        if (k == 0) return {0, edges[key[1]].second};
        if (k == m) return {0, edges[key[1]].first};
        return {1, key[1], k};
      },
      [](int, const Key& key, int i) -> Key {
        if (key[0] == 0) return key;
        return {1, key[1], i < key[2] ? key[2] + 1 : key[2]};
      },
      [&](int m, const Key& key) {
        if (key[0] == 0) return m == 0 ? vname(key[1]) : vname(key[1]) + "[" + std::string(m + 1, '0') + "]";
        if (m == 1) return ename(key[1]);
        return ename(key[1]) + "[" + std::string(key[2], '0') + std::string(m + 1 - key[2], '1') + "]";
      });
}

TruncatedSSet spine(int n, int cap) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  return one_skeletal(n + 1, edges, cap);
}

TruncatedSSet empty_sset(int cap) {
  return TruncatedSSet::from_keys(
      cap, {}, [](int, const Key& k, int) { return k; }, [](int, const Key& k, int) { return k; });
}

TruncatedSSet truncate(const TruncatedSSet& k, int cap) {
  if (cap > k.cap()) throw Error("truncate: cap above the stored dimensions");
  std::vector<std::vector<Key>> keys(cap + 1);
  for (int d = 0; d <= cap; ++d)
    for (int s = 0; s < k.count(d); ++s) keys[d].push_back(k.has_keys() ? k.key(d, s) : Key{s});
  auto id_of = [&](int d, const Key& key) { return k.has_keys() ? *k.find(d, key) : key[0]; };
  auto key_of = [&](int d, int s) { return k.has_keys() ? k.key(d, s) : Key{s}; };
  return TruncatedSSet::from_keys(
      cap, std::move(keys), [&](int d, const Key& key, int i) { return key_of(d - 1, k.face(d, id_of(d, key), i)); },
      [&](int d, const Key& key, int i) { return key_of(d + 1, k.degeneracy(d, id_of(d, key), i)); },
      [&](int d, const Key& key) { return k.name(d, id_of(d, key)); });
}

bool is_one_skeletal(const TruncatedSSet& k) {
  for (int d = 2; d <= k.cap(); ++d)
    if (k.nondegenerate_count(d) > 0) return false;
  return true;
}

SimplicialMap sub_sset(const SSetPtr& k, const std::function<bool(int, int)>& keep) {
  std::vector<std::vector<Key>> keys(k->cap() + 1);
  for (int d = 0; d <= k->cap(); ++d)
    for (int s = 0; s < k->count(d); ++s)
      if (keep(d, s)) keys[d].push_back(k->has_keys() ? k->key(d, s) : Key{s});
  auto id_of = [&](int d, const Key& key) { return k->has_keys() ? *k->find(d, key) : key[0]; };
  auto key_of = [&](int d, int s) {
    if (!keep(d, s)) throw Error("sub_sset: selection not closed, missing " + simplex_label(*k, d, s));
    return k->has_keys() ? k->key(d, s) : Key{s};
  };
  auto sub = share(TruncatedSSet::from_keys(
      k->cap(), std::move(keys),
      [&](int d, const Key& key, int i) { return key_of(d - 1, k->face(d, id_of(d, key), i)); },
      [&](int d, const Key& key, int i) { return key_of(d + 1, k->degeneracy(d, id_of(d, key), i)); },
      [&](int d, const Key& key) { return k->name(d, id_of(d, key)); }));
  return make_map(sub, k, [&](int d, int s) { return id_of(d, sub->key(d, s)); });
}

TruncatedSSet product_sset(const TruncatedSSet& k, const TruncatedSSet& l) {
  if (k.cap() != l.cap()) throw Error("product_sset: caps differ");
  std::vector<std::vector<Key>> keys(k.cap() + 1);
  for (int d = 0; d <= k.cap(); ++d)
    for (int a = 0; a < k.count(d); ++a)
      for (int b = 0; b < l.count(d); ++b) keys[d].push_back({a, b});
  return TruncatedSSet::from_keys(
      k.cap(), std::move(keys),
      [&](int d, const Key& p, int i) { return Key{k.face(d, p[0], i), l.face(d, p[1], i)}; },
      [&](int d, const Key& p, int i) { return Key{k.degeneracy(d, p[0], i), l.degeneracy(d, p[1], i)}; },
      [&](int d, const Key& p) { return "(" + k.name(d, p[0]) + "," + l.name(d, p[1]) + ")"; });
}

SimplicialMap product_projection(const SSetPtr& product, const SSetPtr& k, const SSetPtr& l, int which) {
  return make_map(product, which == 0 ? k : l, [&](int d, int s) { return product->key(d, s)[which]; });
}

TruncatedSSet coproduct(const std::vector<SSetPtr>& parts) {
  if (parts.empty()) throw Error("coproduct: need at least one part to fix the cap");
  const int cap = parts[0]->cap();
  for (const auto& p : parts)
    if (p->cap() != cap) throw Error("coproduct: caps differ");
  std::vector<std::vector<Key>> keys(cap + 1);
  for (int d = 0; d <= cap; ++d)
    for (int c = 0; c < static_cast<int>(parts.size()); ++c)
      for (int s = 0; s < parts[c]->count(d); ++s) keys[d].push_back({c, s});
  return TruncatedSSet::from_keys(
      cap, std::move(keys), [&](int d, const Key& p, int i) { return Key{p[0], parts[p[0]]->face(d, p[1], i)}; },
      [&](int d, const Key& p, int i) { return Key{p[0], parts[p[0]]->degeneracy(d, p[1], i)}; },
      [&](int d, const Key& p) { return std::to_string(p[0]) + ":" + parts[p[0]]->name(d, p[1]); });
}

SimplicialMap coprojection(const SSetPtr& sum, const std::vector<SSetPtr>& parts, int which) {
  return make_map(parts[which], sum, [&](int d, int s) { return *sum->find(d, {which, s}); });
}

Pushout pushout(const SimplicialMap& to_left, const SimplicialMap& to_right) {
  const TruncatedSSet& a = *to_left.source;
  const TruncatedSSet& b = *to_left.target;
  const TruncatedSSet& c = *to_right.target;
  if (to_right.source.get() != to_left.source.get()) throw Error("pushout: maps have different sources");
  const int cap = a.cap();
  // Per dimension: B-simplices first, then C-simplices; keep the least index as root.
  std::vector<std::vector<int>> cls(cap + 1);
  std::vector<std::vector<int>> rep(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    const int nb = b.count(d);
    std::vector<int> parent(nb + c.count(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int s = 0; s < a.count(d); ++s) {
      int x = find(to_left(d, s));
      int y = find(nb + to_right(d, s));
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent[y] = x;
    }
    cls[d].assign(parent.size(), -1);
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) {
      const int r = find(x);
      if (cls[d][r] < 0) {
        cls[d][r] = static_cast<int>(rep[d].size());
        rep[d].push_back(r);
      }
      cls[d][x] = cls[d][r];
    }
  }
  TruncatedSSet::Builder builder(cap);
  for (int d = 0; d <= cap; ++d) {
    const int nb = b.count(d);
    for (int r : rep[d]) builder.add_simplex(d, r < nb ? b.name(d, r) : c.name(d, r - nb));
  }
  for (int d = 0; d <= cap; ++d) {
    const int nb = b.count(d);
    for (int p = 0; p < static_cast<int>(rep[d].size()); ++p) {
      const int r = rep[d][p];
      for (int i = 0; i <= d; ++i) {
        if (d > 0) {
          const int f = r < nb ? b.face(d, r, i) : b.count(d - 1) + c.face(d, r - nb, i);
          builder.set_face(d, p, i, cls[d - 1][f]);
        }
        if (d < cap) {
          const int g = r < nb ? b.degeneracy(d, r, i) : b.count(d + 1) + c.degeneracy(d, r - nb, i);
          builder.set_degeneracy(d, p, i, cls[d + 1][g]);
        }
      }
    }
  }
  Pushout out;
  out.object = share(builder.build());
  out.from_left = make_map(to_left.target, out.object, [&](int d, int s) { return cls[d][s]; });
  out.from_right = make_map(to_right.target, out.object, [&](int d, int s) { return cls[d][b.count(d) + s]; });
  return out;
}

SimplicialMap make_map(const SSetPtr& source, const SSetPtr& target, const std::function<int(int, int)>& image) {
  SimplicialMap f{source, target, {}};
  for (int d = 0; d <= source->cap(); ++d) {
    f.map.emplace_back();
    for (int s = 0; s < source->count(d); ++s) f.map.back().push_back(image(d, s));
  }
  return f;
}

}  // namespace coframes::sset
