#include "elemop/pencil.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "elemop/bivariate.hpp"

namespace elemop {

PencilSpace::PencilSpace(Matrix b1, Matrix b2) : B1(std::move(b1)), B2(std::move(b2)) {
  if (B1.rows() != B2.rows() || B1.cols() != B2.cols())
    throw std::invalid_argument("PencilSpace: dimension mismatch");
  if (span_dimension({B1.vec(), B2.vec()}) != 2)
    throw std::invalid_argument("PencilSpace: B1, B2 are linearly dependent");
}

std::size_t max_rank(const PencilSpace& s) {
  return BivariateMatrix::pencil(s.B1, s.B2).rank();
}

Matrix chain_relation_system(const Matrix& b1, const Matrix& b2, std::size_t t) {
  const std::size_t m = b1.rows(), n = b1.cols();
  Matrix sys((t + 1) * m, t * n);
  auto put = [&](std::size_t rb, std::size_t cb, const Matrix& blk, bool negate) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        sys(rb * m + i, cb * n + j) = negate ? -blk(i, j) : blk(i, j);
  };
  put(0, 0, b1, false);
  for (std::size_t j = 1; j < t; ++j) {
    put(j, j - 1, b2, false);
    put(j, j, b1, true);
  }
  put(t, t - 1, b2, false);
  return sys;
}

namespace {

std::vector<Vec> split_tuple(const Vec& tuple, std::size_t t, std::size_t n) {
  std::vector<Vec> zs(t, Vec(n));
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < n; ++i) zs[j][i] = tuple[j * n + i];
  return zs;
}

}  // namespace

std::vector<Vec> kernel_chain(const PencilSpace& s, const Vec& y1) {
  const std::size_t m = s.B1.rows(), n = s.B1.cols();
  if (y1.size() != n) throw std::invalid_argument("kernel_chain: y1 has wrong size");
  if (is_zero(y1)) throw std::invalid_argument("kernel_chain: y1 is zero");
  if (!is_zero(s.B1.apply(y1))) throw std::invalid_argument("kernel_chain: B1 y1 != 0");
  if (vstack(s.B1, s.B2).rank() != n)
    throw std::domain_error("kernel_chain: the space has a common kernel vector");

  std::vector<Vec> ys{y1};
  std::vector<Vec> images{s.B2.apply(y1)};
  for (std::size_t t = 1; t <= n; ++t) {
    // Closure test: B2 y_t in span{B2 y_1, .., B2 y_{t-1}}?
    std::vector<Vec> prev(images.begin(), images.end() - 1);
    const Matrix lhs = columns(prev, m);
    if (auto alpha = lhs.solve(images.back())) {
      std::vector<Vec> zs(t);
      zs[0] = ys[0];
      for (std::size_t k = 2; k <= t; ++k) {
        Vec z = ys[k - 1];
        for (std::size_t i = t - k + 1; i <= t - 1; ++i)
          z = z - (*alpha)[i - 1] * ys[i - t + k - 1];
        zs[k - 1] = std::move(z);
      }
      // The defining relations hold by construction; check them anyway.
      if (!is_zero(s.B1.apply(zs[0])) || !is_zero(s.B2.apply(zs[t - 1])))
        throw std::logic_error("kernel_chain: boundary relation failed");
      for (std::size_t k = 0; k + 1 < t; ++k)
        if (s.B2.apply(zs[k]) != s.B1.apply(zs[k + 1]))
          throw std::logic_error("kernel_chain: link relation failed");
      return zs;
    }
    const auto next = s.B1.solve(images.back());
    if (!next)
      throw std::domain_error(
          "kernel_chain: chain cannot be continued (B2 y_t outside the image of B1); "
          "the bounded-rank hypotheses do not hold");
    ys.push_back(*next);
    images.push_back(s.B2.apply(*next));
  }
  throw std::domain_error("kernel_chain: chain failed to close within n steps");
}

Matrix banded_block(std::size_t k, const Rational& x, const Rational& y) {
  Matrix blk(k - 1, k);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    blk(i, i) = y;
    blk(i, i + 1) = x;
  }
  return blk;
}

Matrix canonical_member(const CanonicalForm& form, const Rational& x, const Rational& y) {
  std::size_t rows = form.residual_rows, cols = form.residual_cols;
  for (std::size_t k : form.block_sizes) {
    rows += k - 1;
    cols += k;
  }
  Matrix member(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t k : form.block_sizes) {
    const Matrix blk = banded_block(k, x, y);
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (std::size_t j = 0; j < k; ++j) member(r0 + i, c0 + j) = blk(i, j);
    r0 += k - 1;
    c0 += k;
  }
  for (std::size_t i = 0; i < form.residual_rows; ++i)
    for (std::size_t j = 0; j < form.residual_cols; ++j)
      member(r0 + i, c0 + j) = x * form.residual1(i, j) + y * form.residual2(i, j);
  return member;
}

namespace {

struct Chain {
  std::vector<Vec> z;  // length t
  std::vector<Vec> w;  // length t-1, w_k = B2 z_k = B1 z_{k+1}
};

// Extracts all chains by degree filtration: kernels of the chain relation
// system for growing t, keeping only elements independent of the shift
// paddings of chains already taken.
std::vector<Chain> extract_chains(const PencilSpace& s, std::size_t want) {
  const std::size_t m = s.B1.rows(), n = s.B1.cols();
  std::vector<Chain> chains;
  for (std::size_t t = 1; t <= n && chains.size() < want; ++t) {
    const Matrix sys = chain_relation_system(s.B1, s.B2, t);
    const auto kernel = sys.kernel_basis();
    if (kernel.empty()) continue;
    // Shift paddings of the chains found so far, as tn-tuples.
    std::vector<Vec> taken;
    for (const Chain& c : chains) {
      const std::size_t len = c.z.size();
      for (std::size_t shift = 0; shift + len <= t; ++shift) {
        Vec padded(t * n);
        for (std::size_t j = 0; j < len; ++j)
          for (std::size_t i = 0; i < n; ++i) padded[(shift + j) * n + i] = c.z[j][i];
        taken.push_back(std::move(padded));
      }
    }
    for (const Vec& cand : kernel) {
      if (chains.size() == want) break;
      taken.push_back(cand);
      if (independent_subset(taken).size() != taken.size()) {
        taken.pop_back();
        continue;
      }
      Chain c;
      c.z = split_tuple(cand, t, n);
      if (is_zero(c.z.back()))
        throw std::logic_error("extract_chains: padded element escaped the filtration");
      for (std::size_t k = 0; k + 1 < t; ++k) c.w.push_back(s.B2.apply(c.z[k]));
      chains.push_back(std::move(c));
    }
  }
  return chains;
}

Matrix complete_columns(const Matrix& partial, std::size_t dim) {
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < partial.cols(); ++j) vs.push_back(partial.col(j));
  std::vector<Vec> extra;
  for (std::size_t j = 0; j < dim; ++j) {
    Vec e(dim);
    e[j] = 1;
    vs.push_back(e);
    if (independent_subset(vs).size() == vs.size())
      extra.push_back(std::move(vs.back()));
    else
      vs.pop_back();
  }
  return columns(extra, dim);
}

}  // namespace

CanonicalForm canonical_form(const PencilSpace& s, std::uint64_t seed) {
  const std::size_t m = s.B1.rows(), n = s.B1.cols();
  if (vstack(s.B1, s.B2).rank() != n)
    throw std::domain_error("canonical_form: hypothesis failed: the space has a common "
                            "kernel vector (stacked [B1;B2] is column rank deficient)");
  if (hstack(s.B1, s.B2).rank() != m)
    throw std::domain_error("canonical_form: hypothesis failed: member images do not span "
                            "the codomain ([B1 B2] is row rank deficient)");
  const std::size_t rho = max_rank(s);
  if (rho >= n)
    throw std::domain_error("canonical_form: hypothesis failed: maximal rank must be "
                            "strictly below the column count");
  const std::size_t r = n - rho;

  std::vector<Chain> chains = extract_chains(s, r);
  if (chains.size() != r)
    throw std::domain_error("canonical_form: chain extraction found " +
                            std::to_string(chains.size()) + " chains, expected " +
                            std::to_string(r));
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Chain& a, const Chain& b) { return a.z.size() > b.z.size(); });

  CanonicalForm form;
  std::size_t zeta = 0, omega = 0;
  for (const Chain& c : chains) {
    form.block_sizes.push_back(c.z.size());
    zeta += c.z.size();
    omega += c.z.size() - 1;
  }
  form.residual_rows = m - omega;
  form.residual_cols = n - zeta;

  std::vector<Vec> zcols, wcols;
  for (const Chain& c : chains) {
    for (const Vec& z : c.z) zcols.push_back(z);
    for (const Vec& w : c.w) wcols.push_back(w);
  }
  const Matrix Z = columns(zcols, n);
  const Matrix W = columns(wcols, m);
  if (static_cast<std::size_t>(Z.rank()) != zeta)
    throw std::logic_error("canonical_form: chain vectors are not jointly independent");

  const Matrix R0 = complete_columns(Z, n);
  std::mt19937_64 rng(seed ^ 0x70656e63696cULL);
  std::uniform_int_distribution<int> small(-2, 2);

  for (int attempt = 0; attempt <= 64; ++attempt) {
    Matrix R = R0;
    if (attempt > 0 && zeta > 0 && form.residual_cols > 0) {
      Matrix X(zeta, form.residual_cols);
      for (std::size_t i = 0; i < zeta; ++i)
        for (std::size_t j = 0; j < form.residual_cols; ++j) X(i, j) = small(rng);
      R = R0 + Z * X;
    }
    // Decoupling: the images of R must meet the chain image span trivially.
    Matrix images(m, 0);
    if (form.residual_cols > 0) images = hstack(s.B1 * R, s.B2 * R);
    if (images.rank() != form.residual_rows) continue;
    if (hstack(W, images).rank() != omega + form.residual_rows) continue;

    Matrix C(m, 0);
    if (form.residual_rows > 0) {
      std::vector<Vec> img_cols;
      for (std::size_t j = 0; j < images.cols(); ++j) img_cols.push_back(images.col(j));
      std::vector<Vec> chosen;
      for (std::size_t idx : independent_subset(img_cols)) chosen.push_back(img_cols[idx]);
      C = columns(chosen, m);
    }
    const Matrix P = hstack(Z, R);
    const Matrix Q = hstack(W, C);
    if (P.rank() != n || Q.rank() != m) continue;
    const auto qinv = Q.inverse();
    if (!qinv) continue;

    const Matrix D1 = *qinv * s.B1 * P;
    const Matrix D2 = *qinv * s.B2 * P;
    form.residual1 = D1.submatrix(omega, zeta, form.residual_rows, form.residual_cols);
    form.residual2 = D2.submatrix(omega, zeta, form.residual_rows, form.residual_cols);
    form.P = P;
    form.Q = Q;
    if (D1 != canonical_member(form, 1, 0) || D2 != canonical_member(form, 0, 1)) continue;

    if (form.residual_rows > 0 && form.residual_cols > 0)
      form.residual_generic_rank =
          BivariateMatrix::pencil(form.residual1, form.residual2).rank();
    else
      form.residual_generic_rank = 0;
    std::size_t chain_rank = 0;
    for (std::size_t k : form.block_sizes) chain_rank += k - 1;
    if (chain_rank + form.residual_generic_rank != rho)
      throw std::logic_error("canonical_form: rank law violated");
    return form;
  }
  throw std::domain_error("canonical_form: could not certify a decoupled residual "
                          "complement; hypotheses are likely violated");
}

bool check_certificate(const PencilSpace& s, const CanonicalForm& form,
                       const std::vector<std::pair<Rational, Rational>>& samples) {
  const auto qinv = form.Q.inverse();
  const auto pr = form.P.rank();
  if (!qinv || pr != form.P.cols()) return false;
  for (const auto& [x, y] : samples) {
    const Matrix member = *qinv * (x * s.B1 + y * s.B2) * form.P;
    if (member != canonical_member(form, x, y)) return false;
  }
  return true;
}

bool check_certificate(const PencilSpace& s, const CanonicalForm& form, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x63657274ULL);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  const Rational rx(num(rng), den(rng));
  const Rational ry(num(rng), den(rng));
  return check_certificate(
      s, form,
      {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
       {rx, ry}});
}

}  // namespace elemop
