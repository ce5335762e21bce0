#include "elemop/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace elemop {

Bivariate::Bivariate(const Rational& c) {
  if (!c.is_zero()) t_[{0, 0}] = c;
}

Bivariate Bivariate::var_a() { return monomial(Rational(1), 1, 0); }
Bivariate Bivariate::var_b() { return monomial(Rational(1), 0, 1); }

Bivariate Bivariate::monomial(const Rational& c, unsigned i, unsigned j) {
  Bivariate p;
  if (!c.is_zero()) p.t_[{i, j}] = c;
  return p;
}

void Bivariate::prune() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->second.is_zero())
      it = t_.erase(it);
    else
      ++it;
  }
}

bool Bivariate::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0});
}

unsigned Bivariate::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
  return d;
}

bool Bivariate::is_homogeneous() const {
  if (t_.empty()) return true;
  const unsigned d = t_.begin()->first.first + t_.begin()->first.second;
  for (const auto& [m, c] : t_)
    if (m.first + m.second != d) return false;
  return true;
}

Rational Bivariate::operator()(const Rational& a, const Rational& b) const {
  Rational acc;
  for (const auto& [m, c] : t_) {
    Rational term = c;
    for (unsigned i = 0; i < m.first; ++i) term *= a;
    for (unsigned j = 0; j < m.second; ++j) term *= b;
    acc += term;
  }
  return acc;
}

Polynomial Bivariate::at_a_one() const {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : t_) {
    if (coeffs.size() <= m.second) coeffs.resize(m.second + 1);
    coeffs[m.second] += c;
  }
  return Polynomial(std::move(coeffs));
}

Bivariate operator+(const Bivariate& x, const Bivariate& y) {
  Bivariate r = x;
  for (const auto& [m, c] : y.t_) r.t_[m] += c;
  r.prune();
  return r;
}

Bivariate operator-(const Bivariate& x, const Bivariate& y) {
  Bivariate r = x;
  for (const auto& [m, c] : y.t_) r.t_[m] -= c;
  r.prune();
  return r;
}

Bivariate operator*(const Bivariate& x, const Bivariate& y) {
  Bivariate r;
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_)
      r.t_[{mx.first + my.first, mx.second + my.second}] += cx * cy;
  r.prune();
  return r;
}

Bivariate Bivariate::operator-() const {
  Bivariate r;
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Bivariate Bivariate::exact_div(const Bivariate& num, const Bivariate& den) {
  if (den.is_zero()) throw std::domain_error("Bivariate::exact_div: division by zero");
  Bivariate rem = num, quot;
  const auto& dlead = *den.t_.begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.t_.begin();
    if (rlead.first.first < dlead.first.first || rlead.first.second < dlead.first.second)
      throw std::domain_error("Bivariate::exact_div: not divisible");
    const Monomial m{rlead.first.first - dlead.first.first,
                     rlead.first.second - dlead.first.second};
    const Rational c = rlead.second / dlead.second;
    const Bivariate piece = monomial(c, m.first, m.second);
    quot = quot + piece;
    rem = rem - piece * den;
  }
  return quot;
}

BivariateMatrix BivariateMatrix::pencil(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
    throw std::invalid_argument("BivariateMatrix::pencil: dimension mismatch");
  BivariateMatrix p(m1.rows(), m1.cols());
  for (std::size_t i = 0; i < m1.rows(); ++i)
    for (std::size_t j = 0; j < m1.cols(); ++j)
      p(i, j) = Bivariate::monomial(m1(i, j), 1, 0) + Bivariate::monomial(m2(i, j), 0, 1);
  return p;
}

namespace {

// One Bareiss sweep. Returns the pivot count; when `det_out` is nonnull the
// matrix must be square and the signed final pivot is stored there.
std::size_t bareiss(BivariateMatrix m, Bivariate* det_out) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Bivariate prev(Rational(1));
  int sign = 1;
  std::size_t r = 0;
  std::vector<std::size_t> colperm(cols);
  for (std::size_t j = 0; j < cols; ++j) colperm[j] = j;
  for (std::size_t step = 0; r < rows && step < cols; ++step) {
    // Find any nonzero entry in the remaining block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t j = step; j < cols && pi == rows; ++j)
      for (std::size_t i = r; i < rows; ++i)
        if (!m(i, colperm[j]).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    if (pi != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(r, j));
      sign = -sign;
    }
    if (pj != step) {
      std::swap(colperm[pj], colperm[step]);
      sign = -sign;
    }
    const std::size_t pc = colperm[step];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = step + 1; j < cols; ++j) {
        const std::size_t cj = colperm[j];
        const Bivariate num = m(r, pc) * m(i, cj) - m(i, pc) * m(r, cj);
        m(i, cj) = Bivariate::exact_div(num, prev);
      }
      m(i, pc) = Bivariate();
    }
    prev = m(r, pc);
    ++r;
  }
  if (det_out) {
    if (rows != cols) throw std::invalid_argument("BivariateMatrix::det: non-square input");
    if (r < rows)
      *det_out = Bivariate();
    else
      *det_out = sign == 1 ? prev : -prev;
  }
  return r;
}

}  // namespace

std::size_t BivariateMatrix::rank() const { return bareiss(*this, nullptr); }

Bivariate BivariateMatrix::det() const {
  Bivariate d;
  bareiss(*this, &d);
  return d;
}

}  // namespace elemop
