#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace elemop {

/// Exact rational scalar, the ground field for the whole library.
///
/// Values are always stored reduced with a positive denominator, so equality
/// is plain representation equality and (a + b) - b == a holds for all inputs.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) : v_(make(num, den)) {}

  /// Parses "p/q" or "p" with optional leading minus. Rejects anything else.
  static Rational parse(const std::string& text);

  static Rational from_mpq(mpq_class v) {
    Rational r;
    r.v_ = std::move(r.canonical(v));
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return from_mpq(::abs(v_)); }
  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    return from_mpq(1 / v_);
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Serializes as "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return wrap(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return wrap(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return wrap(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return wrap(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return wrap(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);  // results of mpq arithmetic are already canonical
    return r;
  }
  static mpq_class canonical(mpq_class& v) {
    if (sgn(v.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return v;
  }
  static mpq_class make(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return v;
  }

  mpq_class v_;
};

}  // namespace elemop
