#pragma once

#include <map>
#include <utility>
#include <vector>

#include "elemop/matrix.hpp"
#include "elemop/polynomial.hpp"
#include "elemop/rational.hpp"

namespace elemop {

/// Sparse polynomial in two variables (a, b) over the rationals. Only what
/// fraction-free elimination needs: ring arithmetic plus exact division.
class Bivariate {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (deg_a, deg_b)

  Bivariate() = default;
  explicit Bivariate(const Rational& c);
  static Bivariate var_a();
  static Bivariate var_b();
  /// c * a^i * b^j
  static Bivariate monomial(const Rational& c, unsigned i, unsigned j);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  bool is_homogeneous() const;

  Rational operator()(const Rational& a, const Rational& b) const;
  /// Substitution a = 1, i.e. p(x) with x standing for b.
  Polynomial at_a_one() const;

  friend Bivariate operator+(const Bivariate& x, const Bivariate& y);
  friend Bivariate operator-(const Bivariate& x, const Bivariate& y);
  friend Bivariate operator*(const Bivariate& x, const Bivariate& y);
  Bivariate operator-() const;
  friend bool operator==(const Bivariate& x, const Bivariate& y) { return x.t_ == y.t_; }
  friend bool operator!=(const Bivariate& x, const Bivariate& y) { return !(x == y); }

  /// Exact quotient; throws std::domain_error when the division is not exact.
  static Bivariate exact_div(const Bivariate& num, const Bivariate& den);

 private:
  void prune();
  // Descending lex order on (deg_a, deg_b); begin() is the leading term.
  std::map<Monomial, Rational, std::greater<Monomial>> t_;
};

/// Matrix with Bivariate entries; just enough structure for Bareiss
/// elimination over the polynomial ring.
class BivariateMatrix {
 public:
  BivariateMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  /// The one-parameter family x*M1 + y*M2 as a symbolic matrix.
  static BivariateMatrix pencil(const Matrix& m1, const Matrix& m2);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Bivariate& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Bivariate& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  /// Rank over the fraction field, via fraction-free (Bareiss) elimination.
  std::size_t rank() const;
  /// Determinant (square input) as a polynomial.
  Bivariate det() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Bivariate> e_;
};

}  // namespace elemop
