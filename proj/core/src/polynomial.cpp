#include "elemop/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace elemop {

Rational Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial::leading: zero polynomial");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("Polynomial::monic: zero polynomial");
  return leading().reciprocal() * *this;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("Polynomial(Matrix): non-square input");
  Matrix acc = Matrix::zero(a.rows(), a.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.c_[i];
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
  std::vector<Rational> rem = num.c_;
  const long dd = den.degree();
  if (num.degree() < dd) return {Polynomial(), num};
  std::vector<Rational> quot(num.degree() - dd + 1);
  const Rational lead_inv = den.leading().reciprocal();
  for (long k = num.degree() - dd; k >= 0; --k) {
    const Rational q = rem[k + dd] * lead_inv;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (long j = 0; j <= dd; ++j) rem[k + j] -= q * den.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& other) const {
  if (is_zero()) return other.is_zero();
  return divmod(other, *this).second.is_zero();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: both inputs are zero");
  while (!b.is_zero()) {
    Polynomial r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Polynomial() : r.monic();  // keeps coefficients small
  }
  return a.monic();
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal_polynomial: non-square input");
  const std::size_t n = a.rows();
  std::vector<Vec> krylov{Matrix::identity(n).vec()};
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    const Matrix lhs = columns(krylov, n * n);
    if (auto x = lhs.solve(power.vec())) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
    krylov.push_back(power.vec());
  }
  throw std::logic_error("minimal_polynomial: no dependence up to degree n");
}

Polynomial char_polynomial(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_polynomial: non-square input");
  const std::size_t n = a.rows();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational c = -(m.trace() / Rational(static_cast<long>(k)));
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
      m = a * m;
    }
  }
  return Polynomial(std::move(coeffs));
}

namespace {

// Factorization support for the rational root theorem. Trial division
// followed by Brent's cycle-finding rho for what remains.

mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& m) {
  return mpz_class((a * b) % m);
}

bool probably_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class pollard_brent(const mpz_class& n, unsigned long seed) {
  // n odd composite, not a prime power of interest; returns a proper factor.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 2) + 1;
    mpz_class x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long step = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        const unsigned long lim = std::min(step, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, abs(x - y), n);
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    ++seed;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  unsigned long d = 17;
  while (n > 1 && mpz_class(d) * d <= n && d < 100000) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[mpz_class(d)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
    d += 2;
  }
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  const mpz_class f = pollard_brent(n, 1);
  factor_into(f, out);
  factor_into(n / f, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> factors;
  factor_into(n, factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  Polynomial q = p;
  // Roots at zero first.
  while (!q.is_zero() && q.coeff(0).is_zero() && q.degree() >= 1) {
    roots.emplace_back(0);
    std::vector<Rational> shifted(q.coefficients().begin() + 1, q.coefficients().end());
    q = Polynomial(std::move(shifted));
  }
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Normalize to integer coefficients.
  mpz_class den_lcm = 1;
  for (const auto& c : q.coefficients())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  const mpz_class lead = q.leading().numerator() * (den_lcm / q.leading().denominator());
  const mpz_class constant = q.coeff(0).numerator() * (den_lcm / q.coeff(0).denominator());
  const auto num_divs = divisors(constant);
  const auto den_divs = divisors(lead);
  std::vector<Rational> candidates;
  for (const auto& a : num_divs)
    for (const auto& b : den_divs) {
      mpq_class c(a, b);
      c.canonicalize();
      candidates.push_back(Rational::from_mpq(c));
      candidates.push_back(Rational::from_mpq(-c));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    while (q.degree() >= 1 && q(r).is_zero()) {
      roots.push_back(r);
      const Polynomial lin({-r, Rational(1)});
      q = Polynomial::divmod(q, lin).first;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace elemop
