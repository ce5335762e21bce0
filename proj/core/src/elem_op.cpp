#include "elemop/elem_op.hpp"

#include <stdexcept>

namespace elemop {

ElemOp::ElemOp(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.A.rows() != n_ || t.A.cols() != n_ || t.B.rows() != n_ || t.B.cols() != n_)
      throw std::invalid_argument("ElemOp: coefficient is not n x n");
}

ElemOp ElemOp::identity(std::size_t n) {
  return mult(Matrix::identity(n), Matrix::identity(n));
}

ElemOp ElemOp::mult(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    throw std::invalid_argument("ElemOp::mult: coefficients must be square of equal size");
  return ElemOp(a.rows(), {Term{a, b}});
}

ElemOp ElemOp::left(const Matrix& a) { return mult(a, Matrix::identity(a.rows())); }
ElemOp ElemOp::right(const Matrix& b) { return mult(Matrix::identity(b.rows()), b); }

ElemOp ElemOp::generalized_derivation(const Matrix& a, const Matrix& b) {
  return left(a) - right(b);
}

ElemOp ElemOp::upsilon(const Matrix& a, const Matrix& b) {
  return identity(a.rows()) + mult(a, b);
}

Matrix ElemOp::apply(const Matrix& t) const {
  if (t.rows() != n_ || t.cols() != n_)
    throw std::invalid_argument("ElemOp::apply: dimension mismatch");
  Matrix acc = Matrix::zero(n_, n_);
  for (const auto& term : terms_) acc = acc + term.A * t * term.B;
  return acc;
}

Realignment ElemOp::realign() const {
  Matrix r(n_ * n_, n_ * n_);
  for (const auto& term : terms_) {
    const Vec va = term.A.vec();
    const Vec vb = term.B.vec();
    for (std::size_t i = 0; i < va.size(); ++i) {
      if (va[i].is_zero()) continue;
      for (std::size_t j = 0; j < vb.size(); ++j)
        if (!vb[j].is_zero()) r(i, j) += va[i] * vb[j];
    }
  }
  return r;
}

ElemOp ElemOp::minimized() const { return elem_op_from_realign(realign(), n_); }

Matrix ElemOp::as_operator_matrix() const {
  Matrix acc(n_ * n_, n_ * n_);
  for (const auto& term : terms_) acc = acc + kron(term.B.transpose(), term.A);
  return acc;
}

std::vector<Matrix> ElemOp::left_span() const {
  std::vector<Vec> vecs;
  vecs.reserve(terms_.size());
  for (const auto& t : terms_) vecs.push_back(t.A.vec());
  std::vector<Matrix> basis;
  for (std::size_t i : independent_subset(vecs)) basis.push_back(terms_[i].A);
  return basis;
}

std::vector<Matrix> ElemOp::right_span() const {
  std::vector<Vec> vecs;
  vecs.reserve(terms_.size());
  for (const auto& t : terms_) vecs.push_back(t.B.vec());
  std::vector<Matrix> basis;
  for (std::size_t i : independent_subset(vecs)) basis.push_back(terms_[i].B);
  return basis;
}

ElemOp operator+(const ElemOp& x, const ElemOp& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("ElemOp: dimension mismatch in +");
  std::vector<Term> terms = x.terms_;
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return ElemOp(x.n_, std::move(terms));
}

ElemOp operator-(const ElemOp& x, const ElemOp& y) { return x + -y; }

ElemOp ElemOp::operator-() const { return Rational(-1) * *this; }

ElemOp operator*(const Rational& c, const ElemOp& x) {
  std::vector<Term> terms = x.terms_;
  for (auto& t : terms) t.A = c * t.A;
  return ElemOp(x.n_, std::move(terms));
}

bool ElemOp::same_operator_as(const ElemOp& other) const {
  return n_ == other.n_ && realign() == other.realign();
}

ElemOp compose(const ElemOp& phi, const ElemOp& psi) {
  if (phi.n() != psi.n()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<Term> terms;
  terms.reserve(phi.term_count() * psi.term_count());
  for (const auto& p : phi.terms())
    for (const auto& q : psi.terms()) terms.push_back(Term{p.A * q.A, q.B * p.B});
  return ElemOp(phi.n(), std::move(terms));
}

std::vector<Matrix> rerepresent(const ElemOp& phi, const std::vector<Matrix>& c_set) {
  const std::size_t n = phi.n();
  const std::size_t m = c_set.size();
  std::vector<Vec> c_vecs;
  c_vecs.reserve(m);
  for (const auto& c : c_set) {
    if (c.rows() != n || c.cols() != n)
      throw std::invalid_argument("rerepresent: spanning matrix is not n x n");
    c_vecs.push_back(c.vec());
  }
  const Matrix lhs = columns(c_vecs, n * n);
  // A_j = sum_i alpha_ij C_i, then D_i = sum_j alpha_ij B_j.
  std::vector<Matrix> d(m, Matrix::zero(n, n));
  for (const auto& term : phi.terms()) {
    const auto alpha = lhs.solve(term.A.vec());
    if (!alpha)
      throw std::invalid_argument("rerepresent: given matrices do not span the left span");
    for (std::size_t i = 0; i < m; ++i)
      if (!(*alpha)[i].is_zero()) d[i] = d[i] + (*alpha)[i] * term.B;
  }
  return d;
}

bool dim_bound_check(const std::vector<Term>& terms) {
  if (terms.empty()) return true;
  const std::size_t n = terms[0].A.rows();
  if (!ElemOp(n, terms).realign().is_zero()) return true;
  std::vector<Vec> as, bs;
  for (const auto& t : terms) {
    as.push_back(t.A.vec());
    bs.push_back(t.B.vec());
  }
  return span_dimension(as) + span_dimension(bs) <= terms.size();
}

Matrix op_matrix_to_realign(const Matrix& op, std::size_t n) {
  if (op.rows() != n * n || op.cols() != n * n)
    throw std::invalid_argument("op_matrix_to_realign: size mismatch");
  Matrix r(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          r(k + l * n, j + i * n) = op(i * n + k, j * n + l);
  return r;
}

Matrix realign_to_op_matrix(const Matrix& realign, std::size_t n) {
  if (realign.rows() != n * n || realign.cols() != n * n)
    throw std::invalid_argument("realign_to_op_matrix: size mismatch");
  Matrix op(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          op(i * n + k, j * n + l) = realign(k + l * n, j + i * n);
  return op;
}

ElemOp elem_op_from_realign(const Matrix& realign, std::size_t n) {
  if (realign.rows() != n * n || realign.cols() != n * n)
    throw std::invalid_argument("elem_op_from_realign: size mismatch");
  const RrefResult f = realign.rref();
  std::vector<Term> terms;
  terms.reserve(f.pivots.size());
  for (std::size_t t = 0; t < f.pivots.size(); ++t) {
    const Vec a = realign.col(f.pivots[t]);
    const Vec b = f.R.row(t);
    terms.push_back(Term{Matrix::unvec(a, n, n), Matrix::unvec(b, n, n)});
  }
  return ElemOp(n, std::move(terms));
}

}  // namespace elemop
