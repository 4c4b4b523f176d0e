#include "coframes/chain/colimits.hpp"

#include <algorithm>
#include <climits>

#include "coframes/error.hpp"

namespace coframes::chain {

namespace {

// Union of the degree ranges of nonempty complexes; empty range is [0, -1].
std::pair<int, int> range_of(const std::vector<ComplexPtr>& xs) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& x : xs)
    if (x->hi() >= x->lo()) {
      lo = std::min(lo, x->lo());
      hi = std::max(hi, x->hi());
    }
  if (lo > hi) return {0, -1};
  return {lo, hi};
}

}  // namespace

Matrix Colimit::section_at(int n) const {
  int total = 0;
  for (const auto& x : parts) total += x->dim(n);
  if (n < lo || n >= lo + static_cast<int>(section.size())) return Matrix(object->prime(), total, 0);
  return section[n - lo];
}

ChainMap Colimit::induce(const ComplexPtr& target, const std::vector<ChainMap>& cocone) const {
  if (cocone.size() != parts.size()) throw Error("induce: need one cocone map per part");
  return ChainMap::build(object, target, [&](int n) {
    Matrix row(target->prime(), target->dim(n), 0);
    for (const ChainMap& c : cocone) row = Matrix::hstack(row, c.at(n));
    return row * section_at(n);
  });
}

Colimit quotient_of_sum(int p, const std::vector<ComplexPtr>& parts, const std::function<Matrix(int)>& relations) {
  for (const auto& x : parts)
    if (x->prime() != p) throw Error("colimit: primes differ");
  const auto [lo, hi] = range_of(parts);
  auto sum_dim = [&](int n) {
    int t = 0;
    for (const auto& x : parts) t += x->dim(n);
    return t;
  };
  // Differential of the direct sum, block diagonal.
  auto sum_d = [&](int n) {
    Matrix m(p, sum_dim(n - 1), sum_dim(n));
    int r = 0, c = 0;
    for (const auto& x : parts) {
      m.paste(x->d(n), r, c);
      r += x->dim(n - 1);
      c += x->dim(n);
    }
    return m;
  };
  Colimit out;
  out.parts = parts;
  out.lo = lo;
  std::vector<Matrix> quotient;
  for (int n = lo; n <= hi; ++n) {
    const Splitting s = split(relations(n), sum_dim(n), p);
    quotient.push_back(s.quotient());
    out.section.push_back(s.section());
  }
  auto q_at = [&](int n) { return n < lo || n > hi ? Matrix(p, 0, sum_dim(n)) : quotient[n - lo]; };
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(out.section[n - lo].cols());
    diffs.push_back(q_at(n - 1) * sum_d(n) * out.section[n - lo]);
  }
  out.object = share(ChainComplex(p, lo, std::move(dims), std::move(diffs)));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    out.legs.push_back(ChainMap::build(parts[k], out.object, [&](int n) {
      Matrix e(p, sum_dim(n), parts[k]->dim(n));
      int offset = 0;
      for (std::size_t j = 0; j < k; ++j) offset += parts[j]->dim(n);
      e.paste(Matrix::identity(p, parts[k]->dim(n)), offset, 0);
      return q_at(n) * e;
    }));
  }
  return out;
}

Colimit coproduct(int p, const std::vector<ComplexPtr>& parts) {
  return quotient_of_sum(p, parts, [&](int n) {
    int t = 0;
    for (const auto& x : parts) t += x->dim(n);
    return Matrix(p, t, 0);
  });
}

ChainMap coproduct_map(const std::vector<ChainMap>& maps, const Colimit& sources, const Colimit& targets) {
  std::vector<ChainMap> cocone;
  for (std::size_t k = 0; k < maps.size(); ++k) cocone.push_back(ChainMap::compose(targets.legs[k], maps[k]));
  return sources.induce(targets.object, cocone);
}

Colimit pushout(const ChainMap& i, const ChainMap& g) {
  if (i.source.get() != g.source.get() && !(*i.source == *g.source))
    throw Error("pushout: maps have different sources");
  const int p = i.source->prime();
  return quotient_of_sum(p, {i.target, g.target}, [&](int n) { return Matrix::vstack(i.at(n), -g.at(n)); });
}

Colimit pushout_along_cofibration(const ChainMap& i, const ChainMap& g) {
  if (!is_cofibration(i)) throw Error("pushout_along_cofibration: first map is not a cofibration");
  return pushout(i, g);
}

Colimit sequential_colimit(const ComplexPtr& first, const std::vector<ChainMap>& maps) {
  ComplexPtr at = first;
  std::vector<ChainMap> to_last{ChainMap::identity(first)};
  for (const ChainMap& m : maps) {
    if (!(*m.source == *at)) throw Error("sequential_colimit: maps do not form a chain");
    if (!is_cofibration(m)) throw Error("sequential_colimit: map is not a cofibration");
    for (ChainMap& leg : to_last) leg = ChainMap::compose(m, leg);
    to_last.push_back(ChainMap::identity(m.target));
    at = m.target;
  }
  Colimit out;
  out.object = at;
  out.legs = to_last;
  out.parts.push_back(first);
  for (const ChainMap& m : maps) out.parts.push_back(m.target);
  // A cocone is determined by its last component.
  out.lo = at->lo();
  for (int n = at->lo(); n <= at->hi(); ++n) {
    int offset = 0;
    for (std::size_t k = 0; k + 1 < out.parts.size(); ++k) offset += out.parts[k]->dim(n);
    Matrix s(at->prime(), offset + at->dim(n), at->dim(n));
    s.paste(Matrix::identity(at->prime(), at->dim(n)), offset, 0);
    out.section.push_back(s);
  }
  return out;
}

Factorization factorize(const ChainMap& f) {
  const ChainComplex& x = *f.source;
  const ChainComplex& y = *f.target;
  const int p = x.prime();
  const int lo = common_lo(x, y);
  const int hi = std::max(x.hi() >= x.lo() ? x.hi() + 1 : INT_MIN, y.hi() >= y.lo() ? y.hi() : INT_MIN);
  if (hi == INT_MIN) {
    Factorization out{ChainMap::identity(f.source), f};
    return out;
  }
  auto cyl_dim = [&](int n) { return x.dim(n) + x.dim(n - 1) + y.dim(n); };
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(cyl_dim(n));
    Matrix d(p, n == lo ? 0 : cyl_dim(n - 1), cyl_dim(n));
    if (n > lo) {
      const int r0 = 0, r1 = x.dim(n - 1), r2 = r1 + x.dim(n - 2);
      const int c0 = 0, c1 = x.dim(n), c2 = c1 + x.dim(n - 1);
      d.paste(x.d(n), r0, c0);
      d.paste(-Matrix::identity(p, x.dim(n - 1)), r0, c1);
      d.paste(-x.d(n - 1), r1, c1);
      d.paste(f.at(n - 1), r2, c1);
      d.paste(y.d(n), r2, c2);
    }
    diffs.push_back(d);
  }
  auto cyl = share(ChainComplex(p, lo, std::move(dims), std::move(diffs)));
  Factorization out;
  out.i = ChainMap::build(f.source, cyl, [&](int n) {
    Matrix m(p, cyl_dim(n), x.dim(n));
    m.paste(Matrix::identity(p, x.dim(n)), 0, 0);
    return m;
  });
  out.q = ChainMap::build(cyl, f.target, [&](int n) {
    Matrix m(p, y.dim(n), cyl_dim(n));
    m.paste(f.at(n), 0, 0);
    m.paste(Matrix::identity(p, y.dim(n)), 0, x.dim(n) + x.dim(n - 1));
    return m;
  });
  return out;
}

Factorization factorize_minimal(const ChainMap& f) {
  const ChainComplex& x = *f.source;
  const ChainComplex& y = *f.target;
  const int p = x.prime();
  const int lo = common_lo(x, y);
  const int hi0 = common_hi(x, y);
  if (hi0 < lo) return {ChainMap::identity(f.source), f};
  const Homology hx = homology(x);
  const Homology hy = homology(y);
  const GradedMatrix hf = induced(f, hx, hy);

  // Per degree n: cycles of X to kill (with chosen preimages in Y_{n+1}) and
  // cycles of Y to add.
  std::vector<Matrix> kill, preimage, add;
  for (int n = lo; n <= hi0; ++n) {
    const Matrix h = hf.at(n);
    const Matrix c = hx.rep(n, x.dim(n)) * h.kernel();
    kill.push_back(c);
    auto yy = y.d(n + 1).solve(f.at(n) * c);
    if (!yy) throw Error("factorize_minimal: killed class is not a boundary in the target");
    preimage.push_back(*yy);
    const std::vector<int> extra = extend_basis(h.columns(h.pivot_columns()), Matrix::identity(p, hy.dim(n)));
    add.push_back(hy.rep(n, y.dim(n)) * Matrix::identity(p, hy.dim(n)).columns(extra));
  }
  const int hi = hi0 + 1;
  auto at = [&](const std::vector<Matrix>& v, int n, int rows) {
    return n < lo || n > hi0 ? Matrix(p, rows, 0) : v[n - lo];
  };
  auto a_dim = [&](int n) { return at(kill, n - 1, x.dim(n - 1)).cols(); };
  auto b_dim = [&](int n) { return at(add, n, y.dim(n)).cols(); };
  auto total = [&](int n) { return x.dim(n) + a_dim(n) + b_dim(n); };
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(total(n));
    Matrix d(p, n == lo ? 0 : total(n - 1), total(n));
    if (n > lo) {
      d.paste(x.d(n), 0, 0);
      d.paste(at(kill, n - 1, x.dim(n - 1)), 0, x.dim(n));
    }
    diffs.push_back(d);
  }
  auto mid = share(ChainComplex(p, lo, std::move(dims), std::move(diffs)));
  Factorization out;
  out.i = ChainMap::build(f.source, mid, [&](int n) {
    Matrix m(p, total(n), x.dim(n));
    m.paste(Matrix::identity(p, x.dim(n)), 0, 0);
    return m;
  });
  out.q = ChainMap::build(mid, f.target, [&](int n) {
    Matrix m(p, y.dim(n), total(n));
    m.paste(f.at(n), 0, 0);
    m.paste(at(preimage, n - 1, y.dim(n)), 0, x.dim(n));
    m.paste(at(add, n, y.dim(n)), 0, x.dim(n) + a_dim(n));
    return m;
  });
  return out;
}

}  // namespace coframes::chain
