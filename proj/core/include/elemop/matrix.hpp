#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "elemop/rational.hpp"

namespace elemop {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);

struct RrefResult;

/// Dense rational matrix, possibly rectangular. Row-major storage.
/// All operations are exact and leave their inputs untouched.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// n x 1 column from a Vec.
  static Matrix column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Vec apply(const Vec& x) const;  // M x
  Matrix pow(std::size_t k) const;

  /// Column-stacking vectorization: entry (r, c) lands at position r + c*rows.
  Vec vec() const;
  static Matrix unvec(const Vec& v, std::size_t rows, std::size_t cols);

  /// Reduced row echelon form with transform certificate: R = T * M,
  /// T invertible, pivot columns strictly increasing.
  RrefResult rref() const;

  std::size_t rank() const;
  /// Basis of { x : M x = 0 }; empty when the kernel is trivial.
  std::vector<Vec> kernel_basis() const;
  /// Basis of { y : y M = 0 }, as row vectors.
  std::vector<Vec> left_kernel_basis() const;
  /// Some x with M x = b (free variables set to zero), or absent.
  std::optional<Vec> solve(const Vec& b) const;

  Rational det() const;                   // square only
  std::optional<Matrix> inverse() const;  // square only; absent iff det == 0

  Rational trace() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix R;
  std::vector<std::size_t> pivots;
  Matrix T;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Matrix whose columns are the given vectors.
Matrix columns(const std::vector<Vec>& cols, std::size_t rows);
Matrix kron(const Matrix& a, const Matrix& b);

/// First subset of `vs` forming a basis of span(vs), reported by index.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vs);
std::size_t span_dimension(const std::vector<Vec>& vs);

}  // namespace elemop
