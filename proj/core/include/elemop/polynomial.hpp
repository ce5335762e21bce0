#pragma once

#include <utility>
#include <vector>

#include "elemop/matrix.hpp"
#include "elemop/rational.hpp"

namespace elemop {

/// Univariate rational polynomial, coefficients lowest degree first with the
/// leading coefficient nonzero. The zero polynomial has an empty coefficient
/// list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { prune(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  Polynomial monic() const;

  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& a) const;  // square a

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder with deg(rem) < deg(divisor). Divisor nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
  bool divides(const Polynomial& other) const;  // *this | other

 private:
  void prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm; inputs not both zero.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Monic polynomial of least degree with m(A) = 0, found as the first linear
/// dependence among vec(I), vec(A), vec(A^2), ...
Polynomial minimal_polynomial(const Matrix& a);

/// Monic characteristic polynomial det(zI - A) via the Faddeev-LeVerrier
/// recursion (exact over the rationals).
Polynomial char_polynomial(const Matrix& a);

/// All rational roots with multiplicity, in ascending order. Candidates come
/// from divisors of the normalized integer constant and leading coefficients.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace elemop
