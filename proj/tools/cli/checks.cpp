#include "checks.hpp"

#include "coframes/error.hpp"

namespace coframes::cli {

using chain::ChainMap;

std::vector<Outcome> replacement_postconditions(const chain::ChainDiagram& x, const fincat::MorphismClass& weq,
                                                const fincat::CatFunctor& sieve, const chain::ChainDiagram& h,
                                                const chain::DiagramMap& f, const chain::Replacement& r) {
  std::vector<Outcome> out;
  const auto& c = *x.index;

  Outcome restriction{"restriction equals H", true, {}};
  if (auto v = chain::diagram_violation(r.diagram); !v.empty()) {
    restriction = {restriction.name, false, "replacement is not a diagram: " + v};
  } else if (!chain::same_diagram(chain::pullback(r.diagram, sieve), h)) {
    restriction = {restriction.name, false, "values or maps on the sieve differ from H"};
  } else {
    for (std::size_t k = 0; k < sieve.object_map.size(); ++k)
      if (!chain::same_map(r.g.components[sieve.object_map[k]], f.components[k])) {
        restriction = {restriction.name, false,
                       "g differs from f at '" + sieve.source->object_name(static_cast<int>(k)) + "'"};
        break;
      }
  }
  out.push_back(restriction);

  Outcome levelwise{"g is a levelwise weak equivalence", true, {}};
  if (auto v = chain::diagram_map_violation(r.diagram, x, r.g); !v.empty()) {
    levelwise = {levelwise.name, false, "g is not natural: " + v};
  } else {
    for (int o = 0; o < c.object_count(); ++o)
      if (!chain::is_quasi_iso(r.g.components[o])) {
        levelwise = {levelwise.name, false, "not a quasi-isomorphism at '" + c.object_name(o) + "'"};
        break;
      }
  }
  out.push_back(levelwise);

  const chain::ReedyStatus rc = chain::reedy_cofibrant(r.diagram);
  out.push_back({"Reedy cofibrant", rc.ok, rc.detail});

  Outcome homotopical{"homotopical", true, {}};
  for (int m : weq.members())
    if (!chain::is_quasi_iso(r.diagram.maps[m])) {
      homotopical = {homotopical.name, false, "weak equivalence '" + c.morphism_name(m) + "' is not sent to a quasi-isomorphism"};
      break;
    }
  out.push_back(homotopical);
  return out;
}

chain::GradedMatrix in_frame_bases(const ChainMap& f, const frames::ObjectFrame& s, const frames::ObjectFrame& t,
                                   const frames::FrameContext& ctx) {
  const chain::GradedMatrix into_s = chain::induced(s.to_model(ctx));
  const chain::GradedMatrix into_t = chain::induced(t.to_model(ctx));
  return chain::GradedMatrix::compose(into_t.inverse(), chain::GradedMatrix::compose(chain::induced(f), into_s));
}

std::vector<std::vector<int>> monotone_maps(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(m + 1, 0);
  while (true) {
    out.push_back(f);
    int k = m;
    while (k >= 0 && f[k] == n) --k;
    if (k < 0) break;
    ++f[k];
    for (int j = k + 1; j <= m; ++j) f[j] = f[k];
  }
  return out;
}

namespace {

std::vector<std::vector<int>> primitives(const sset::UnitMap& u) {
  const auto& n = *u.nerve;
  std::vector<std::vector<int>> out(n.cap() + 1);
  for (int d = 0; d <= n.cap(); ++d)
    for (int s = 0; s < n.count(d); ++s)
      if (sset::is_primitive(u, d, s)) out[d].push_back(s);
  return out;
}

}  // namespace

Outcome factorization_uniqueness(const sset::UnitMap& u, int dim) {
  const auto& n = *u.nerve;
  const auto prim = primitives(u);
  Outcome out{"primitive factorization unique in dimension " + std::to_string(dim), true, {}};
  std::vector<int> found(n.count(dim), 0);
  std::vector<std::pair<int, std::vector<int>>> pair(n.count(dim));
  for (int k = 0; k <= n.cap(); ++k)
    for (const auto& f : monotone_maps(dim, k)) {
      if (f.front() != 0 || f.back() != k) continue;
      for (int tau : prim[k]) {
        const int s = n.pullback(k, tau, f);
        if (found[s]++ == 0) pair[s] = {tau, f};
      }
    }
  for (int s = 0; s < n.count(dim); ++s) {
    if (found[s] != 1) {
      out.pass = false;
      out.witness = n.name(dim, s) + " has " + std::to_string(found[s]) + " factorizations";
      return out;
    }
    const sset::PrimitiveFactorization pf = sset::primitive_factorization(u, dim, s);
    if (pf.tau != pair[s].first || pf.f != pair[s].second) {
      out.pass = false;
      out.witness = n.name(dim, s) + ": primitive_factorization disagrees with the search";
      return out;
    }
  }
  out.witness = std::to_string(n.count(dim)) + " simplices";
  return out;
}

Outcome rank_restriction(const sset::UnitMap& u) {
  const auto& n = *u.nerve;
  const auto prim = primitives(u);
  Outcome out{"rank of (g*τ)|{i,j} is g(j) - g(i)", true, {}};
  int cases = 0;
  for (int k = 0; k <= n.cap(); ++k)
    for (int tau : prim[k])
      for (int m = 1; m <= n.cap(); ++m)
        for (const auto& g : monotone_maps(m, k)) {
          const int s = n.pullback(k, tau, g);
          for (int i = 0; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
              ++cases;
              const int r = sset::rank_of_simplex(u, 1, n.edge(m, s, i, j));
              if (r != g[j] - g[i]) {
                out.pass = false;
                out.witness = "τ = " + n.name(k, tau) + ", edge {" + std::to_string(i) + "," + std::to_string(j) +
                              "} has rank " + std::to_string(r);
                return out;
              }
            }
        }
  out.witness = std::to_string(cases) + " edges";
  return out;
}

Outcome filtration_exhausts(const sset::UnitMap& u) {
  const auto& n = *u.nerve;
  const int top = sset::max_rank(u);
  Outcome out{"K^(n-1) ⊆ K^(n) and the union is N(hK)", true, {}};
  std::vector<std::vector<char>> prev;
  for (int r = 0; r <= top; ++r) {
    const sset::SimplicialMap inc = sset::rank_filtration(u, r);
    std::vector<std::vector<char>> image(n.cap() + 1);
    for (int d = 0; d <= n.cap(); ++d) {
      image[d].assign(n.count(d), 0);
      for (int s : inc.map[d]) image[d][s] = 1;
      if (!prev.empty())
        for (int s = 0; s < n.count(d); ++s)
          if (prev[d][s] && !image[d][s]) {
            out.pass = false;
            out.witness = n.name(d, s) + " lies in K^(" + std::to_string(r - 1) + ") but not in K^(" +
                          std::to_string(r) + ")";
            return out;
          }
    }
    prev = std::move(image);
  }
  for (int d = 0; d <= n.cap(); ++d)
    for (int s = 0; s < n.count(d); ++s)
      if (!prev[d][s]) {
        out.pass = false;
        out.witness = n.name(d, s) + " is in no K^(n)";
        return out;
      }
  out.witness = "max rank " + std::to_string(top);
  return out;
}

std::vector<std::string> sset_corpus_names() { return {"delta1", "spine2", "spine3", "wedge"}; }

sset::TruncatedSSet sset_corpus(const std::string& name, int cap) {
  if (name == "delta1") return sset::standard_simplex(1, cap);
  if (name == "spine2") return sset::spine(2, cap);
  if (name == "spine3") return sset::spine(3, cap);
  if (name == "wedge") return sset::one_skeletal(3, {{0, 1}, {2, 1}}, cap, {"a", "b", "c"});
  throw Error("unknown simplicial set '" + name + "' (expected delta1, spine2, spine3 or wedge)");
}

}  // namespace coframes::cli
