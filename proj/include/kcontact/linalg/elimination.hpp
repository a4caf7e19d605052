#pragma once

// Exact elimination kernels. Each kernel has a plain serial implementation
// (the reference used by the tests) and an OpenMP variant that parallelizes
// the independent row updates of every elimination step. Both must return
// identical results; tests/unit/test_linalg.cpp checks that on random input.

#include "kcontact/linalg/matrix.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace kc {

// Below this many matrix entries the dispatching entry points stay serial.
inline constexpr std::size_t kParallelThreshold = 256;

namespace detail {

// Full-pivoting choice: smallest elimination_weight, ties by row-major order.
template <class F>
bool find_pivot(const Matrix<F>& m, std::size_t r, std::size_t& pi, std::size_t& pj) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool found = false;
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) {
      const F& x = m(i, j);
      if (is_zero(x)) continue;
      std::size_t w = elimination_weight(x);
      if (!found || w < best) {
        best = w;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

// Fraction-free (Bareiss) rank with full pivoting, serial reference.
template <class F>
std::size_t rank_serial(Matrix<F> m) {
  F prev(1);
  std::size_t r = 0;
  const std::size_t limit = std::min(m.rows(), m.cols());
  while (r < limit) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_pivot(m, r, pi, pj)) break;
    m.swap_rows(r, pi);
    m.swap_cols(r, pj);
    const F pivot = m(r, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const F lead = m(i, r);
      for (std::size_t j = r + 1; j < m.cols(); ++j) m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      m(i, r) = F(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Same elimination; rows below the pivot are updated in parallel.
template <class F>
std::size_t rank_parallel(Matrix<F> m) {
  F prev(1);
  std::size_t r = 0;
  const std::size_t limit = std::min(m.rows(), m.cols());
  while (r < limit) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_pivot(m, r, pi, pj)) break;
    m.swap_rows(r, pi);
    m.swap_cols(r, pj);
    const F pivot = m(r, r);
    const long rows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic)
    for (long ii = static_cast<long>(r) + 1; ii < rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const F lead = m(i, r);
      if (is_zero(lead)) {
        for (std::size_t j = r + 1; j < m.cols(); ++j) m(i, j) = (pivot * m(i, j)) / prev;
      } else {
        for (std::size_t j = r + 1; j < m.cols(); ++j) m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, r) = F(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return rank_parallel(m);
  return rank_serial(m);
}

// Reduced row echelon form with pivots chosen left to right (first nonzero
// row), so the result depends only on the column order.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k
};

template <class F>
Echelon<F> rref_serial(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pi = r;
    while (pi < m.rows() && is_zero(m(pi, c))) ++pi;
    if (pi == m.rows()) continue;
    m.swap_rows(r, pi);
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
Echelon<F> rref_parallel(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pi = r;
    while (pi < m.rows() && is_zero(m(pi, c))) ++pi;
    if (pi == m.rows()) continue;
    m.swap_rows(r, pi);
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    const long rows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic)
    for (long ii = 0; ii < rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
Echelon<F> rref(const Matrix<F>& m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return rref_parallel(m);
  return rref_serial(m);
}

// Kernel basis read off the reduced echelon form: one vector per free column,
// in column order, with a 1 in its own free column and 0 in the others.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  std::vector<Vec<F>> out;
  if (m.cols() == 0) return out;
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

// One solution of m x = b, or nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw Error("dimension-mismatch", "solve: right-hand side length");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<F> e = rref(aug);
  Vec<F> x(m.cols(), F(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

// Indices of a maximal independent prefix-greedy subset of the columns.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
  return rref(m).pivots;
}

// Basis (as vectors) of the span of the given vectors, from the nonzero rows
// of the reduced echelon form.
template <class F>
std::vector<Vec<F>> span_basis(const std::vector<Vec<F>>& vectors, std::size_t length) {
  std::vector<Vec<F>> out;
  if (vectors.empty()) return out;
  Echelon<F> e = rref(Matrix<F>::from_rows(vectors, length));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.push_back(e.reduced.row(k));
  return out;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error("dimension-mismatch", "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  F prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pi = k;
    while (pi < n && is_zero(m(pi, k))) ++pi;
    if (pi == n) return F(0);
    if (pi != k) {
      m.swap_rows(pi, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = F(0);
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("dimension-mismatch", "inverse of non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  Echelon<F> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// Characteristic polynomial det(tI - m) by Faddeev-LeVerrier; coefficients low
// degree first, monic of degree n. Needs characteristic zero.
template <class F>
std::vector<F> charpoly(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<F> next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix<F> am = a * mk;
    F tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / F(static_cast<int>(k));
  }
  return c;
}

}  // namespace kc
