#include "wgc/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace wgc {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

void divexact_checked(mpz_class& v, const mpz_class& d) {
#ifndef NDEBUG
  assert(mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()));
#endif
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

// Clears denominators: returns d with d*a integer, written to out.
mpz_class scale_to_integers(const MatrixQ& a, ZMatrix& out) {
  const auto n = a.rows();
  mpz_class d = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).denominator().get_mpz_t());
  out.assign(n, std::vector<mpz_class>(a.cols()));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out[i][j] = a(i, j).numerator() * (d / a(i, j).denominator());
  return d;
}

struct Elimination {
  std::vector<int> pivots;  // pivot columns, ascending
  int swap_sign = 1;
};

// Fraction-free (Bareiss) forward elimination over the first n columns of m;
// the remaining columns ride along. Rank-revealing: dependent columns are
// skipped. Divisions are exact by the Bareiss minor identity.
Elimination bareiss_forward(ZMatrix& m, int n) {
  const int cols = static_cast<int>(m.empty() ? 0 : m[0].size());
  Elimination e;
  mpz_class prev = 1;
  int step = 0;
  for (int col = 0; col < n && step < n; ++col) {
    int p = -1;
    for (int i = step; i < n; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;  // dependent column
    if (p != step) {
      std::swap(m[step], m[p]);
      e.swap_sign = -e.swap_sign;
    }
    const mpz_class pivot = m[step][col];
    for (int i = step + 1; i < n; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (j == col) continue;
        mpz_class v = pivot * m[i][j] - m[i][col] * m[step][j];
        divexact_checked(v, prev);
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    prev = pivot;
    e.pivots.push_back(col);
    ++step;
  }
  return e;
}

int first_missing(const std::vector<int>& pivots, int n) {
  for (int c = 0; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) return c;
  return -1;
}

// Inverse of a full-rank integer matrix already forward-eliminated with the
// identity riding in columns n..2n-1. The inverse of the original A is
// adj/det: y = det * x is an integer vector for each unit column, so the
// back-substitution stays in integers with one exact division per entry.
MatrixQ integer_back_substitution(const ZMatrix& m, int n, const mpz_class& det) {
  MatrixQ inv(n, n);
  std::vector<mpz_class> y(n);
  for (int rhs = 0; rhs < n; ++rhs) {
    for (int i = n - 1; i >= 0; --i) {
      mpz_class acc = det * m[i][n + rhs];
      for (int j = i + 1; j < n; ++j) acc -= m[i][j] * y[j];
      divexact_checked(acc, m[i][i]);
      y[i] = std::move(acc);
    }
    for (int i = 0; i < n; ++i) inv(i, rhs) = Rational(mpq_class(y[i], det));
  }
  return inv;
}

}  // namespace

MatrixQ invert(const MatrixQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix not square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return MatrixQ(0, 0);
  ZMatrix m;
  mpz_class d = scale_to_integers(a, m);
  for (int i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  Elimination e = bareiss_forward(m, n);
  if (static_cast<int>(e.pivots.size()) != n)
    throw SingularGramError("matrix is singular", first_missing(e.pivots, n), e.pivots);
  mpz_class det = e.swap_sign * m[n - 1][n - 1];
  MatrixQ inv = integer_back_substitution(m, n, det);
  Rational scale{d};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) *= scale;
  return inv;
}

ExactInverse invert_psd(const MatrixQ& a, InverseMode mode) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert_psd: matrix not square");
  const int n = static_cast<int>(a.rows());
  ExactInverse result;
  if (n == 0) {
    result.inverse = MatrixQ(0, 0);
    return result;
  }
  ZMatrix m;
  mpz_class d = scale_to_integers(a, m);
  for (int i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  Elimination e = bareiss_forward(m, n);
  const int rank = static_cast<int>(e.pivots.size());
  if (rank == n) {
    mpz_class det = e.swap_sign * m[n - 1][n - 1];
    result.inverse = integer_back_substitution(m, n, det);
    Rational scale{d};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) result.inverse(i, j) *= scale;
    result.basis.resize(n);
    for (int i = 0; i < n; ++i) result.basis[i] = i;
    result.full_rank = true;
    return result;
  }
  if (mode == InverseMode::Strict)
    throw SingularGramError("Gram matrix is singular", first_missing(e.pivots, n), e.pivots);
  // For a symmetric PSD matrix the pivot columns index a maximal independent
  // family and the matching principal submatrix is invertible; zero-padding
  // its inverse gives a W with A W A = A and W A W = W.
  MatrixQ sub(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) sub(i, j) = a(e.pivots[i], e.pivots[j]);
  MatrixQ sub_inv = invert(sub);
  result.inverse = MatrixQ::Constant(n, n, Rational(0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) result.inverse(e.pivots[i], e.pivots[j]) = sub_inv(i, j);
  result.basis = std::move(e.pivots);
  result.full_rank = false;
  return result;
}

}  // namespace wgc
