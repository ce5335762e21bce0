#include "elemop/matrix.hpp"

#include <stdexcept>

namespace elemop {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::set_col: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_)
    throw std::invalid_argument("Matrix::submatrix: out of range");
  Matrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: dimension mismatch in +");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: dimension mismatch in -");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in *");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
  return r;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !x[j].is_zero()) r[i] += (*this)(i, j) * x[j];
  return r;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("Matrix::pow: non-square input");
  Matrix r = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

Vec Matrix::vec() const {
  Vec v(rows_ * cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v[r + c * rows_] = (*this)(r, c);
  return v;
}

Matrix Matrix::unvec(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("Matrix::unvec: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[r + c * rows];
  return m;
}

RrefResult Matrix::rref() const {
  RrefResult out{*this, {}, identity(rows_)};
  Matrix& R = out.R;
  Matrix& T = out.T;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && R(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(R(p, j), R(r, j));
      for (std::size_t j = 0; j < rows_; ++j) std::swap(T(p, j), T(r, j));
    }
    const Rational inv = R(r, c).reciprocal();
    for (std::size_t j = c; j < cols_; ++j) R(r, j) = inv * R(r, j);
    for (std::size_t j = 0; j < rows_; ++j) T(r, j) = inv * T(r, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || R(i, c).is_zero()) continue;
      const Rational f = R(i, c);
      for (std::size_t j = c; j < cols_; ++j) R(i, j) -= f * R(r, j);
      for (std::size_t j = 0; j < rows_; ++j) T(i, j) -= f * T(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

std::vector<Vec> Matrix::kernel_basis() const {
  const RrefResult f = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : f.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_);
    v[c] = 1;
    for (std::size_t i = 0; i < f.pivots.size(); ++i) v[f.pivots[i]] = -f.R(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> Matrix::left_kernel_basis() const { return transpose().kernel_basis(); }

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("Matrix::solve: dimension mismatch");
  const RrefResult f = rref();
  const Vec c = f.T.apply(b);
  for (std::size_t i = f.pivots.size(); i < rows_; ++i)
    if (!c[i].is_zero()) return std::nullopt;
  Vec x(cols_);
  // Free variables stay zero, so x restricted to pivot columns solves R x = c.
  for (std::size_t i = 0; i < f.pivots.size(); ++i) x[f.pivots[i]] = c[i];
  return x;
}

Rational Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("Matrix::det: non-square input");
  Matrix a = *this;
  Rational d(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && a(p, c).is_zero()) ++p;
    if (p == rows_) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    const Rational inv = a(c, c).reciprocal();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("Matrix::inverse: non-square input");
  const RrefResult f = rref();
  if (f.pivots.size() != cols_) return std::nullopt;
  return f.T;  // R = T*M = I
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("Matrix::trace: non-square input");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

Matrix columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("columns: size mismatch");
    m.set_col(j, cols[j]);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vs) {
  std::vector<std::size_t> chosen;
  if (vs.empty()) return chosen;
  const std::size_t dim = vs[0].size();
  std::vector<Vec> echelon;  // reduced rows with leading-one positions
  std::vector<std::size_t> leads;
  for (std::size_t idx = 0; idx < vs.size(); ++idx) {
    Vec v = vs[idx];
    if (v.size() != dim) throw std::invalid_argument("independent_subset: size mismatch");
    for (std::size_t k = 0; k < echelon.size(); ++k)
      if (!v[leads[k]].is_zero()) v = v - v[leads[k]] * echelon[k];
    std::size_t lead = 0;
    while (lead < dim && v[lead].is_zero()) ++lead;
    if (lead == dim) continue;
    v = v[lead].reciprocal() * v;
    echelon.push_back(std::move(v));
    leads.push_back(lead);
    chosen.push_back(idx);
  }
  return chosen;
}

std::size_t span_dimension(const std::vector<Vec>& vs) { return independent_subset(vs).size(); }

}  // namespace elemop
