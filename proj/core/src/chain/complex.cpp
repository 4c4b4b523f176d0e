#include "coframes/chain/complex.hpp"

#include <algorithm>

#include "coframes/error.hpp"

namespace coframes::chain {

ChainComplex::ChainComplex(int p, int lo, std::vector<int> dims, std::vector<Matrix> diffs)
    : p_(p), lo_(lo), dims_(std::move(dims)), d_(std::move(diffs)) {
  if (!is_prime(p)) throw Error("chain complex: " + std::to_string(p) + " is not prime");
  if (d_.size() != dims_.size()) throw Error("chain complex: need one differential per degree");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const int n = lo_ + static_cast<int>(k);
    if (dims_[k] < 0) throw Error("chain complex: negative dimension in degree " + std::to_string(n));
    if (d_[k].prime() != p || d_[k].rows() != dim(n - 1) || d_[k].cols() != dims_[k])
      throw Error("chain complex: differential in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = lo_ + 1; n <= hi(); ++n)
    if (!(d(n - 1) * d(n)).is_zero()) throw Error("chain complex: d∘d != 0 at degree " + std::to_string(n));
}

ChainComplex ChainComplex::zero(int p) { return ChainComplex(p, 0, {}, {}); }

ChainComplex ChainComplex::sphere(int p, int degree, int k) { return ChainComplex(p, degree, {k}, {Matrix(p, 0, k)}); }

ChainComplex ChainComplex::disk(int p, int degree) {
  return ChainComplex(p, degree - 1, {1, 1}, {Matrix(p, 0, 1), Matrix::identity(p, 1)});
}

int ChainComplex::dim(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[n - lo_];
}

int ChainComplex::total_dim() const {
  int t = 0;
  for (int v : dims_) t += v;
  return t;
}

Matrix ChainComplex::d(int n) const {
  if (n < lo_ || n > hi()) return Matrix(p_, dim(n - 1), dim(n));
  return d_[n - lo_];
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.p_ != b.p_) return false;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (a.dim(n) != b.dim(n)) return false;
  for (int n = lo; n <= hi; ++n)
    if (!(a.d(n) == b.d(n))) return false;
  return true;
}

ChainComplex trimmed(const ChainComplex& x) {
  int lo = x.lo(), hi = x.hi();
  while (lo <= hi && x.dim(lo) == 0) ++lo;
  while (hi >= lo && x.dim(hi) == 0) --hi;
  if (lo > hi) return ChainComplex::zero(x.prime());
  std::vector<int> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(x.dim(n));
    diffs.push_back(n == lo ? Matrix(x.prime(), 0, x.dim(n)) : x.d(n));
  }
  return ChainComplex(x.prime(), lo, std::move(dims), std::move(diffs));
}

int common_lo(const ChainComplex& x, const ChainComplex& y) {
  const bool ex = x.hi() < x.lo(), ey = y.hi() < y.lo();
  if (ex && ey) return 0;
  if (ex) return y.lo();
  if (ey) return x.lo();
  return std::min(x.lo(), y.lo());
}

int common_hi(const ChainComplex& x, const ChainComplex& y) {
  const bool ex = x.hi() < x.lo(), ey = y.hi() < y.lo();
  if (ex && ey) return -1;
  if (ex) return y.hi();
  if (ey) return x.hi();
  return std::max(x.hi(), y.hi());
}

Matrix ChainMap::at(int n) const {
  if (n < lo || n > hi()) return Matrix(target->prime(), target->dim(n), source->dim(n));
  return f[n - lo];
}

ChainMap ChainMap::identity(const ComplexPtr& x) {
  return build(x, x, [&](int n) { return Matrix::identity(x->prime(), x->dim(n)); });
}

ChainMap ChainMap::zero(const ComplexPtr& x, const ComplexPtr& y) {
  return build(x, y, [&](int n) { return Matrix(x->prime(), y->dim(n), x->dim(n)); });
}

ChainMap ChainMap::compose(const ChainMap& second, const ChainMap& first) {
  if (first.target->prime() != second.source->prime()) throw Error("compose: primes differ");
  for (int n = common_lo(*first.target, *second.source); n <= common_hi(*first.target, *second.source); ++n)
    if (first.target->dim(n) != second.source->dim(n)) throw Error("compose: chain maps are not composable");
  return build(first.source, second.target, [&](int n) { return second.at(n) * first.at(n); });
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  return build(source, target, [&](int n) { return at(n) + o.at(n); });
}

ChainMap ChainMap::operator-(const ChainMap& o) const {
  return build(source, target, [&](int n) { return at(n) - o.at(n); });
}

std::string chain_map_violation(const ChainMap& f) {
  const ChainComplex& x = *f.source;
  const ChainComplex& y = *f.target;
  for (int k = 0; k < static_cast<int>(f.f.size()); ++k) {
    const int n = f.lo + k;
    if (f.f[k].rows() != y.dim(n) || f.f[k].cols() != x.dim(n))
      return "component in degree " + std::to_string(n) + " has the wrong shape";
  }
  const int lo = std::min(f.lo, common_lo(x, y));
  const int hi = std::max(f.hi(), common_hi(x, y)) + 1;
  for (int n = lo; n <= hi; ++n)
    if (!(y.d(n) * f.at(n) == f.at(n - 1) * x.d(n)))
      return "d f != f d in degree " + std::to_string(n);
  return {};
}

bool same_map(const ChainMap& a, const ChainMap& b) {
  const int lo = std::min({a.lo, b.lo, common_lo(*a.source, *a.target)});
  const int hi = std::max({a.hi(), b.hi(), common_hi(*a.source, *a.target)});
  for (int n = lo; n <= hi; ++n) {
    const Matrix ma = a.at(n), mb = b.at(n);
    if (!(ma == mb)) return false;
  }
  return true;
}

Matrix GradedMatrix::at(int n) const {
  if (n < lo || n > hi()) return Matrix(p, 0, 0);
  return blocks[n - lo];
}

bool GradedMatrix::is_iso() const {
  for (const Matrix& b : blocks)
    if (b.rows() != b.cols() || b.rank() != b.rows()) return false;
  return true;
}

GradedMatrix GradedMatrix::inverse() const {
  GradedMatrix out{p, lo, {}};
  for (const Matrix& b : blocks) {
    auto inv = b.inverse();
    if (!inv) throw Error("graded matrix is not invertible");
    out.blocks.push_back(*inv);
  }
  return out;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& second, const GradedMatrix& first) {
  const bool e1 = first.blocks.empty(), e2 = second.blocks.empty();
  const int lo = e1 ? second.lo : e2 ? first.lo : std::min(first.lo, second.lo);
  const int hi = e1 ? second.hi() : e2 ? first.hi() : std::max(first.hi(), second.hi());
  GradedMatrix out{first.p, lo, {}};
  for (int n = lo; n <= hi; ++n) {
    Matrix a = second.at(n), b = first.at(n);
    if (a.cols() != b.rows()) {
      // A block outside a range is a map between zero groups.
      if (a.cols() * a.rows() == 0 && b.cols() * b.rows() == 0) {
        out.blocks.emplace_back(first.p, a.rows(), b.cols());
        continue;
      }
      throw Error("graded matrices are not composable in degree " + std::to_string(n));
    }
    out.blocks.push_back(a * b);
  }
  return out;
}

std::string GradedMatrix::to_string() const {
  std::string s = "{";
  for (int n = lo; n <= hi(); ++n) {
    if (n != lo) s += ", ";
    s += "H" + std::to_string(n) + ": " + at(n).to_string();
  }
  return s + "}";
}

bool same_graded(const GradedMatrix& a, const GradedMatrix& b) {
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n) {
    const Matrix x = a.at(n), y = b.at(n);
    const bool ex = x.rows() * x.cols() == 0, ey = y.rows() * y.cols() == 0;
    if (ex && ey) continue;
    if (!(x == y)) return false;
  }
  return true;
}

int Homology::dim(int n) const {
  if (n < lo || n >= lo + static_cast<int>(dims.size())) return 0;
  return dims[n - lo];
}

Matrix Homology::rep(int n, int source_dim) const {
  if (n < lo || n >= lo + static_cast<int>(dims.size())) return Matrix(p, source_dim, 0);
  return reps[n - lo];
}

Matrix Homology::coord(int n, int source_dim) const {
  if (n < lo || n >= lo + static_cast<int>(dims.size())) return Matrix(p, 0, source_dim);
  return coords[n - lo];
}

Homology homology(const ChainComplex& x) {
  Homology h;
  h.p = x.prime();
  h.lo = x.lo();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const int dn = x.dim(n);
    const Matrix z = x.d(n).kernel();
    const Matrix bd = x.d(n + 1);
    const Matrix b = bd.cols() ? bd.columns(bd.pivot_columns()) : Matrix(h.p, dn, 0);
    const Matrix reps = z.columns(extend_basis(b, z));
    const Matrix known = Matrix::hstack(b, reps);
    const Matrix full = Matrix::hstack(known, Matrix::identity(h.p, dn).columns(extend_basis(known, Matrix::identity(h.p, dn))));
    const Matrix inv = *full.inverse();
    h.dims.push_back(reps.cols());
    h.reps.push_back(reps);
    h.coords.push_back(inv.block(b.cols(), 0, reps.cols(), dn));
  }
  return h;
}

GradedMatrix induced(const ChainMap& f, const Homology& hx, const Homology& hy) {
  GradedMatrix g{f.source->prime(), common_lo(*f.source, *f.target), {}};
  for (int n = g.lo; n <= common_hi(*f.source, *f.target); ++n)
    g.blocks.push_back(hy.coord(n, f.target->dim(n)) * f.at(n) * hx.rep(n, f.source->dim(n)));
  return g;
}

GradedMatrix induced(const ChainMap& f) { return induced(f, homology(*f.source), homology(*f.target)); }

GradedMatrix identity_graded(const Homology& h) {
  GradedMatrix g{h.p, h.lo, {}};
  for (int d : h.dims) g.blocks.push_back(Matrix::identity(h.p, d));
  return g;
}

bool is_cofibration(const ChainMap& f) {
  for (int n = common_lo(*f.source, *f.target); n <= common_hi(*f.source, *f.target); ++n)
    if (f.at(n).rank() != f.source->dim(n)) return false;
  return true;
}

bool is_quasi_iso(const ChainMap& f) { return induced(f).is_iso(); }

MapClass classify_map(const ChainMap& f) {
  MapClass c;
  c.is_weq = is_quasi_iso(f);
  c.is_cofibration = is_cofibration(f);
  c.is_acyclic_cofibration = c.is_weq && c.is_cofibration;
  return c;
}

}  // namespace coframes::chain
