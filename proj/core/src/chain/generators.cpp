#include "coframes/chain/generators.hpp"

#include "coframes/chain/exact.hpp"
#include "coframes/chain/reedy.hpp"
#include "coframes/error.hpp"
#include "coframes/fincat/analysis.hpp"

namespace coframes::chain {

int uniform(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

Matrix random_matrix(Rng& rng, int p, int rows, int cols) {
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, uniform(rng, p));
  return m;
}

Matrix random_invertible(Rng& rng, int p, int n) {
  Matrix lower = Matrix::identity(p, n), upper = Matrix::identity(p, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r > c) lower.set(r, c, uniform(rng, p));
      if (r < c) upper.set(r, c, uniform(rng, p));
    }
  return lower * upper;
}

ChainComplex random_complex(Rng& rng, int p, int lo, int hi, int max_dim) {
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const int dim = uniform(rng, max_dim + 1);
    if (n == lo) {
      diffs.emplace_back(p, 0, dim);
    } else {
      // Columns drawn from ker d_{n-1}.
      const Matrix k = n == lo + 1 ? Matrix::identity(p, dims.back()) : diffs.back().kernel();
      diffs.push_back(k * random_matrix(rng, p, k.cols(), dim));
    }
    dims.push_back(dim);
  }
  return ChainComplex(p, lo, std::move(dims), std::move(diffs));
}

ChainMap random_chain_map(Rng& rng, const ComplexPtr& x, const ComplexPtr& y) {
  const int p = x->prime();
  const int lo = common_lo(*x, *y), hi = common_hi(*x, *y);
  // Unknowns: entries of f_n, row-major, degree by degree.
  std::vector<int> offset{0};
  for (int n = lo; n <= hi; ++n) offset.push_back(offset.back() + y->dim(n) * x->dim(n));
  auto var = [&](int n, int r, int c) { return offset[n - lo] + r * x->dim(n) + c; };
  std::vector<std::vector<std::pair<int, int>>> rows;  // sparse equations
  for (int n = lo; n <= hi + 1; ++n) {
    const Matrix dy = y->d(n), dx = x->d(n);
    for (int r = 0; r < y->dim(n - 1); ++r)
      for (int c = 0; c < x->dim(n); ++c) {
        std::vector<std::pair<int, int>> eq;
        if (n <= hi)
          for (int k = 0; k < y->dim(n); ++k)
            if (dy.at(r, k)) eq.emplace_back(var(n, k, c), dy.at(r, k));
        if (n - 1 >= lo)
          for (int k = 0; k < x->dim(n - 1); ++k)
            if (dx.at(k, c)) eq.emplace_back(var(n - 1, r, k), p - dx.at(k, c));
        if (!eq.empty()) rows.push_back(std::move(eq));
      }
  }
  Matrix system(p, static_cast<int>(rows.size()), offset.back());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [v, a] : rows[r]) system.set(static_cast<int>(r), v, system.at(static_cast<int>(r), v) + a);
  const Matrix basis = system.kernel();
  const Matrix v = basis * random_matrix(rng, p, basis.cols(), 1);
  return ChainMap::build(x, y, [&](int n) {
    Matrix m(p, y->dim(n), x->dim(n));
    if (n < lo || n > hi) return m;
    for (int r = 0; r < y->dim(n); ++r)
      for (int c = 0; c < x->dim(n); ++c) m.set(r, c, v.at(var(n, r, c), 0));
    return m;
  });
}

namespace {

// X ⊕ (disks) with the split inclusion.
struct Padded {
  ComplexPtr object;
  ChainMap include;
};

Padded pad_with_disks(Rng& rng, const ComplexPtr& x) {
  const int p = x->prime();
  const int lo = x->hi() >= x->lo() ? x->lo() : 0;
  const int hi = x->hi() >= x->lo() ? x->hi() : 0;
  // disks[n]: copies of the disk on degrees n-1, n
  std::vector<int> disks(hi - lo + 2, 0);
  for (int n = lo; n <= hi + 1; ++n) disks[n - lo] = uniform(rng, 2);
  auto extra = [&](int n) {
    int e = 0;
    if (n >= lo && n <= hi + 1) e += disks[n - lo];
    if (n + 1 >= lo && n + 1 <= hi + 1) e += disks[n + 1 - lo];
    return e;
  };
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  const int top = hi + 1, bottom = lo - 1;
  for (int n = bottom; n <= top; ++n) {
    dims.push_back(x->dim(n) + extra(n));
    Matrix d(p, n == bottom ? 0 : x->dim(n - 1) + extra(n - 1), x->dim(n) + extra(n));
    if (n > bottom) {
      d.paste(x->d(n), 0, 0);
      // Degree-n part of the extras: first the tops of disks born at n, then
      // the bottoms of disks born at n + 1; d sends tops at n to bottoms at n - 1.
      const int tops = n >= lo && n <= hi + 1 ? disks[n - lo] : 0;
      const int bottoms_below = tops;
      const int col = x->dim(n);
      const int row = x->dim(n - 1) + (extra(n - 1) - bottoms_below);
      d.paste(Matrix::identity(p, tops), row, col);
    }
    diffs.push_back(d);
  }
  Padded out;
  out.object = share(ChainComplex(p, bottom, std::move(dims), std::move(diffs)));
  out.include = ChainMap::build(x, out.object, [&](int n) {
    Matrix m(p, out.object->dim(n), x->dim(n));
    m.paste(Matrix::identity(p, x->dim(n)), 0, 0);
    return m;
  });
  return out;
}

// Conjugates a complex by random invertible matrices; returns the isomorphism.
ChainMap random_basis_change(Rng& rng, const ComplexPtr& x) {
  const int p = x->prime();
  std::vector<Matrix> change, inverse;
  for (int n = x->lo(); n <= x->hi(); ++n) {
    change.push_back(random_invertible(rng, p, x->dim(n)));
    inverse.push_back(*change.back().inverse());
  }
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = x->lo(); n <= x->hi(); ++n) {
    dims.push_back(x->dim(n));
    diffs.push_back(n == x->lo() ? x->d(n) : change[n - 1 - x->lo()] * x->d(n) * inverse[n - x->lo()]);
  }
  auto y = share(ChainComplex(p, x->lo(), std::move(dims), std::move(diffs)));
  return ChainMap::build(x, y, [&](int n) {
    return n < x->lo() || n > x->hi() ? Matrix(p, 0, 0) : change[n - x->lo()];
  });
}

}  // namespace

ChainMap random_quasi_iso(Rng& rng, const ComplexPtr& x) {
  const Padded padded = pad_with_disks(rng, x);
  return ChainMap::compose(random_basis_change(rng, padded.object), padded.include);
}

fincat::FinCategory random_direct_category(Rng& rng, int max_objects) {
  const int n = 1 + uniform(rng, max_objects);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uniform(rng, 5) < 2) edges.emplace_back(a, b);
  if (uniform(rng, 2) == 0) return fincat::poset(n, edges);
  // Free category; an occasional parallel arrow gives non-poset shapes.
  if (!edges.empty() && uniform(rng, 2) == 0) edges.push_back(edges[uniform(rng, static_cast<int>(edges.size()))]);
  return fincat::free_category(n, edges);
}

ChainDiagram random_reedy_cofibrant(Rng& rng, const fincat::CategoryPtr& index, int p, int max_total) {
  const fincat::FinCategory& c = *index;
  auto degrees = fincat::is_direct(c);
  if (!degrees) throw Error("random_reedy_cofibrant: index category is not direct");
  const std::vector<int> order = fincat::objects_by_degree(*degrees);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int max_dim = attempt < 16 ? 2 : 1;
    ChainDiagram x{index, std::vector<ComplexPtr>(c.object_count()), std::vector<ChainMap>(c.morphism_count())};
    bool fits = true;
    for (int i : order) {
      Latching l = latching_object(x, i);
      if (l.colimit.object->prime() != p) l.colimit.object = share(ChainComplex::zero(p));  // empty latching category
      if (l.colimit.object->total_dim() > max_total) {
        fits = false;
        break;
      }
      const int budget = max_total - l.colimit.object->total_dim();
      const int lo = uniform(rng, 2), hi = lo + uniform(rng, 3);
      ComplexPtr r = share(random_complex(rng, p, lo, hi, std::min(max_dim, budget)));
      if (r->total_dim() > budget) r = share(ChainComplex::zero(p));
      // Twist: M_n: R_n -> L_{n-1} is a chain map from R shifted down by one.
      const ComplexPtr shifted = share(apply(ExactFunctor::shift(-1), *r));
      const ChainMap twist = random_chain_map(rng, shifted, l.colimit.object);
      const int a = common_lo(*l.colimit.object, *r), b = common_hi(*l.colimit.object, *r);
      const ComplexPtr& lx = l.colimit.object;
      std::vector<int> dims;
      std::vector<Matrix> diffs;
      for (int n = a; n <= b; ++n) {
        dims.push_back(lx->dim(n) + r->dim(n));
        Matrix d(p, n == a ? 0 : lx->dim(n - 1) + r->dim(n - 1), lx->dim(n) + r->dim(n));
        if (n > a) {
          d.paste(lx->d(n), 0, 0);
          d.paste(twist.at(n - 1), 0, lx->dim(n));
          d.paste(r->d(n), lx->dim(n - 1), lx->dim(n));
        }
        diffs.push_back(d);
      }
      auto raw = share(ChainComplex(p, a, std::move(dims), std::move(diffs)));
      const ChainMap iso = random_basis_change(rng, raw);
      const ChainMap incl = ChainMap::build(lx, raw, [&](int n) {
        Matrix m(p, raw->dim(n), lx->dim(n));
        m.paste(Matrix::identity(p, lx->dim(n)), 0, 0);
        return m;
      });
      const ChainMap latch = ChainMap::compose(iso, incl);
      x.objects[i] = iso.target;
      x.maps[c.identity(i)] = ChainMap::identity(iso.target);
      for (std::size_t u = 0; u < l.category.arrow.size(); ++u)
        x.maps[l.category.arrow[u]] = ChainMap::compose(latch, l.colimit.legs[u]);
    }
    if (fits) return x;
  }
  throw Error("random_reedy_cofibrant: latching objects exceed the dimension budget");
}

ChainDiagram random_sequence(Rng& rng, const fincat::CategoryPtr& ordinal, int p, int max_dim) {
  const int n = ordinal->object_count();
  std::vector<ComplexPtr> xs;
  for (int k = 0; k < n; ++k) xs.push_back(share(random_complex(rng, p, 0, 2, max_dim)));
  std::vector<ChainMap> steps;
  for (int k = 0; k + 1 < n; ++k) steps.push_back(random_chain_map(rng, xs[k], xs[k + 1]));
  return from_sequence(ordinal, xs, steps);
}

}  // namespace coframes::chain
