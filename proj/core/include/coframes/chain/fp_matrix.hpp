#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coframes::chain {

bool is_prime(int p);

/// Dense matrix over F_p. Entries are kept reduced into [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, int rows, int cols);

  static Matrix identity(int p, int n);
  /// Row-major entries, reduced mod p (negative values allowed).
  static Matrix from_rows(int p, int rows, int cols, const std::vector<long long>& entries);

  int prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v);
  std::vector<int> entries() const { return std::vector<int>(a_.begin(), a_.end()); }

  bool is_zero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator-() const;
  Matrix scaled(int k) const;
  Matrix transpose() const;

  Matrix columns(const std::vector<int>& which) const;
  Matrix rows_of(const std::vector<int>& which) const;
  /// [A | B]
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// [A ; B]
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  /// Copies `b` into this matrix with its top-left corner at (r, c).
  void paste(const Matrix& b, int r, int c);
  Matrix block(int r, int c, int rows, int cols) const;
  /// Kronecker product A ⊗ B.
  static Matrix kronecker(const Matrix& a, const Matrix& b);

  int rank() const;
  /// Indices of pivot columns of the reduced row echelon form.
  std::vector<int> pivot_columns() const;
  /// Columns form a basis of the null space.
  Matrix kernel() const;
  /// Inverse of a square invertible matrix, else nullopt.
  std::optional<Matrix> inverse() const;
  /// Some X with A X = B, or nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::string to_string() const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> a_;
};

int mod_inverse(int a, int p);

/// Splits F_p^n as span(sub) ⊕ complement. `basis` columns are an independent
/// basis of span(sub) followed by standard vectors; `coords` is its inverse.
struct Splitting {
  int n = 0;
  int sub_rank = 0;
  Matrix basis;
  Matrix coords;

  /// Projection onto the complement coordinates, killing span(sub).
  Matrix quotient() const;
  /// Complement basis vectors, a section of `quotient()`.
  Matrix section() const;
};

/// `sub` has n rows; its columns need not be independent.
Splitting split(const Matrix& sub, int n, int p);

/// Columns of `sub` extended by columns of `extra` (in order) to a basis of
/// span(sub, extra); returns the indices of the chosen `extra` columns.
std::vector<int> extend_basis(const Matrix& sub, const Matrix& extra);

}  // namespace coframes::chain
