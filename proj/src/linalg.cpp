#include "crn/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace crn {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult out{m, {}, 0};
  RationalMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }
std::size_t rank(const IntegerMatrix& m) { return rref(to_rational(m)).rank; }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> left_kernel_basis(const RationalMatrix& m) {
  return kernel_basis(m.transpose());
}

std::vector<RationalVector> canonical_span_basis(const std::vector<RationalVector>& rows,
                                                 std::size_t dim) {
  const RrefResult r = rref(RationalMatrix::from_rows(rows, dim));
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.reduced.row(i));
  return out;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim) {
  return canonical_span_basis(a, dim) == canonical_span_basis(b, dim);
}

Integer determinant(const IntegerMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  // Clear each row's denominators, take the integer determinant, divide back.
  const std::size_t n = m.rows();
  IntegerMatrix a(n, n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer l = lcm_of_denominators(m.row(i));
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return make_rational(determinant(a), scale);
}

}  // namespace crn
