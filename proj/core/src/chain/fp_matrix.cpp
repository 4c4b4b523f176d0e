#include "coframes/chain/fp_matrix.hpp"

#include <sstream>

#include "coframes/error.hpp"

namespace coframes::chain {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  long long result = 1, base = a % p, e = p - 2;
  if (base == 0) throw Error("mod_inverse: zero has no inverse");
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

namespace {

struct Echelon {
  Matrix r;
  std::vector<int> pivots;
};

// Reduced row echelon form by ordered Gauss-Jordan elimination.
Echelon rref(Matrix m) {
  const int p = m.prime();
  Echelon e;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = 0; k < m.cols(); ++k) {
        const int t = m.at(row, k);
        m.set(row, k, m.at(piv, k));
        m.set(piv, k, t);
      }
    const long long inv = mod_inverse(m.at(row, c), p);
    for (int k = c; k < m.cols(); ++k) m.set(row, k, m.at(row, k) * inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || !m.at(r, c)) continue;
      const long long f = m.at(r, c);
      for (int k = c; k < m.cols(); ++k) m.set(r, k, m.at(r, k) - f * m.at(row, k));
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.r = std::move(m);
  return e;
}

}  // namespace

Matrix::Matrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw Error("Matrix: negative shape");
}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(int p, int rows, int cols, const std::vector<long long>& entries) {
  if (static_cast<long long>(entries.size()) != static_cast<long long>(rows) * cols)
    throw Error("Matrix: entry count does not match the shape");
  Matrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, entries[static_cast<std::size_t>(r) * cols + c]);
  return m;
}

void Matrix::set(int r, int c, long long v) {
  v %= p_;
  if (v < 0) v += p_;
  a_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint32_t>(v);
}

bool Matrix::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error("Matrix: shape mismatch in product");
  Matrix out(p_, rows_, b.cols_);
  std::vector<unsigned long long> acc(b.cols_);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      const unsigned long long x = at(r, k);
      if (!x) continue;
      const std::uint32_t* brow = &b.a_[static_cast<std::size_t>(k) * b.cols_];
      for (int c = 0; c < b.cols_; ++c) acc[c] += x * brow[c];
      if ((k & 1023) == 1023)
        for (auto& v : acc) v %= static_cast<unsigned long long>(p_);
    }
    for (int c = 0; c < b.cols_; ++c) out.a_[static_cast<std::size_t>(r) * b.cols_ + c] = acc[c] % p_;
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("Matrix: shape mismatch in sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + b.a_[i]) % p_;
  return out;
}

Matrix Matrix::operator-(const Matrix& b) const { return *this + (-b); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.a_) v = v ? p_ - v : 0;
  return out;
}

Matrix Matrix::scaled(int k) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.set(static_cast<int>(i / cols_), static_cast<int>(i % cols_), 1LL * a_[i] * k);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.a_[static_cast<std::size_t>(c) * rows_ + r] = at(r, c);
  return out;
}

Matrix Matrix::columns(const std::vector<int>& which) const {
  Matrix out(p_, rows_, static_cast<int>(which.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < which.size(); ++k) out.a_[r * which.size() + k] = at(r, which[k]);
  return out;
}

Matrix Matrix::rows_of(const std::vector<int>& which) const {
  Matrix out(p_, static_cast<int>(which.size()), cols_);
  for (std::size_t k = 0; k < which.size(); ++k)
    for (int c = 0; c < cols_; ++c) out.a_[k * cols_ + c] = at(which[k], c);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error("Matrix: hstack row mismatch");
  Matrix out(a.p_, a.rows_, a.cols_ + b.cols_);
  out.paste(a, 0, 0);
  out.paste(b, 0, a.cols_);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error("Matrix: vstack column mismatch");
  Matrix out(a.p_, a.rows_ + b.rows_, a.cols_);
  out.paste(a, 0, 0);
  out.paste(b, a.rows_, 0);
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.paste(a, 0, 0);
  out.paste(b, a.rows_, a.cols_);
  return out;
}

void Matrix::paste(const Matrix& b, int r, int c) {
  if (r + b.rows_ > rows_ || c + b.cols_ > cols_) throw Error("Matrix: paste out of bounds");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) a_[static_cast<std::size_t>(r + i) * cols_ + c + j] = b.at(i, j);
}

Matrix Matrix::block(int r, int c, int rows, int cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw Error("Matrix: block out of bounds");
  Matrix out(p_, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.a_[static_cast<std::size_t>(i) * cols + j] = at(r + i, c + j);
  return out;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) out.set(i * b.rows_ + k, j * b.cols_ + l, 1LL * a.at(i, j) * b.at(k, l));
  return out;
}

int Matrix::rank() const { return static_cast<int>(rref(*this).pivots.size()); }

std::vector<int> Matrix::pivot_columns() const { return rref(*this).pivots; }

Matrix Matrix::kernel() const {
  const Echelon e = rref(*this);
  std::vector<char> is_pivot(cols_, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(p_, cols_, static_cast<int>(free.size()));
  for (std::size_t j = 0; j < free.size(); ++j) {
    k.set(free[j], static_cast<int>(j), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k.set(e.pivots[r], static_cast<int>(j), -static_cast<long long>(e.r.at(static_cast<int>(r), free[j])));
  }
  return k;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const Echelon e = rref(hstack(*this, identity(p_, rows_)));
  if (static_cast<int>(e.pivots.size()) < rows_ || (rows_ > 0 && e.pivots[rows_ - 1] >= cols_)) return std::nullopt;
  return e.r.block(0, cols_, rows_, rows_);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw Error("Matrix: solve shape mismatch");
  const Echelon e = rref(hstack(*this, b));
  Matrix x(p_, cols_, b.cols_);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const int c = e.pivots[r];
    if (c >= cols_) return std::nullopt;  // pivot in the augmented part
    for (int j = 0; j < b.cols_; ++j) x.set(c, j, e.r.at(static_cast<int>(r), cols_ + j));
  }
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
  }
  os << "]";
  return os.str();
}

Matrix Splitting::quotient() const { return coords.block(sub_rank, 0, n - sub_rank, n); }

Matrix Splitting::section() const { return basis.block(0, sub_rank, n, n - sub_rank); }

Splitting split(const Matrix& sub, int n, int p) {
  Splitting s;
  s.n = n;
  const Matrix sub_basis = sub.cols() ? sub.columns(sub.pivot_columns()) : Matrix(p, n, 0);
  s.sub_rank = sub_basis.cols();
  const std::vector<int> extra = extend_basis(sub_basis, Matrix::identity(p, n));
  s.basis = Matrix::hstack(sub_basis, Matrix::identity(p, n).columns(extra));
  s.coords = *s.basis.inverse();
  return s;
}

std::vector<int> extend_basis(const Matrix& sub, const Matrix& extra) {
  const Matrix all = Matrix::hstack(sub, extra);
  std::vector<int> out;
  for (int c : all.pivot_columns())
    if (c >= sub.cols()) out.push_back(c - sub.cols());
  return out;
}

}  // namespace coframes::chain
