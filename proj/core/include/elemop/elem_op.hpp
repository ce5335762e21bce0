#pragma once

#include <cstddef>
#include <vector>

#include "elemop/matrix.hpp"

namespace elemop {

/// One two-sided multiplication term: T |-> A T B.
struct Term {
  Matrix A, B;
};

/// The n^2 x n^2 realignment matrix sum vec(A_i) vec(B_i)^T. Its rank equals
/// the length of the operator and it determines the operator faithfully.
using Realignment = Matrix;

/// An elementary operator on the space of n x n rational matrices,
/// represented as an ordered list of coefficient pairs: T |-> sum A_i T B_i.
/// The stored term list is one representation among many; semantic equality
/// is equality of realignments.
class ElemOp {
 public:
  ElemOp(std::size_t n, std::vector<Term> terms);

  static ElemOp zero(std::size_t n) { return ElemOp(n, {}); }
  static ElemOp identity(std::size_t n);
  static ElemOp mult(const Matrix& a, const Matrix& b);        // M_{A,B}
  static ElemOp left(const Matrix& a);                         // L_A
  static ElemOp right(const Matrix& b);                        // R_B
  static ElemOp generalized_derivation(const Matrix& a, const Matrix& b);  // L_A - R_B
  static ElemOp upsilon(const Matrix& a, const Matrix& b);     // I + M_{A,B}

  std::size_t n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Matrix apply(const Matrix& t) const;

  Realignment realign() const;
  std::size_t length() const { return realign().rank(); }
  bool is_zero_operator() const { return realign().is_zero(); }

  /// Representation with exactly length() terms, obtained from the rank
  /// factorization of the realignment (pivot columns x reduced rows).
  ElemOp minimized() const;

  /// Matrix of the operator acting on vec(T); multiplicative under compose.
  Matrix as_operator_matrix() const;

  /// Basis of span{A_i} (first independent subset, in term order).
  std::vector<Matrix> left_span() const;
  /// Basis of span{B_i}.
  std::vector<Matrix> right_span() const;

  friend ElemOp operator+(const ElemOp& x, const ElemOp& y);
  friend ElemOp operator-(const ElemOp& x, const ElemOp& y);
  ElemOp operator-() const;
  friend ElemOp operator*(const Rational& c, const ElemOp& x);

  /// Representation-independent equality (equal realignments).
  bool same_operator_as(const ElemOp& other) const;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// compose(phi, psi) applies psi first: T |-> phi(psi(T)). Term count
/// multiplies; callers minimize explicitly when they need short lists.
ElemOp compose(const ElemOp& phi, const ElemOp& psi);

/// Coefficients D_1..D_m with sum M_{C_j, D_j} equal to phi, for any C set
/// spanning at least the left span of phi. Throws when the C's do not span.
std::vector<Matrix> rerepresent(const ElemOp& phi, const std::vector<Matrix>& c_set);

/// Property test helper: true iff "sum A_i (x) B_i = 0 implies
/// dim span{A_i} + dim span{B_i} <= term count" holds for these terms
/// (vacuously true when the tensor is nonzero).
bool dim_bound_check(const std::vector<Term>& terms);

/// Index shuffles between the operator matrix (sum B^T (x) A) and the
/// realignment (sum vec(A) vec(B)^T); mutually inverse linear bijections.
Matrix op_matrix_to_realign(const Matrix& op, std::size_t n);
Matrix realign_to_op_matrix(const Matrix& realign, std::size_t n);

/// ElemOp with a prescribed realignment, via rank factorization.
ElemOp elem_op_from_realign(const Matrix& realign, std::size_t n);

}  // namespace elemop
