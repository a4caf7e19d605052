#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, exterior algebra or differential code: structure
// constants go in as plain rationals and everything is recomputed densely.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Q = mpq_class;

// c[(i * n + j) * n + k] = coefficient of X_k in [X_i, X_j].
struct Constants {
  int n = 0;
  std::vector<Q> c;
  Q& at(int i, int j, int k) { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
  const Q& at(int i, int j, int k) const { return c[static_cast<std::size_t>((i * n + j) * n + k)]; }
};

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sign of the permutation sorting `v` (0 if it has a repeat), by bubble sort.
inline int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b + 1 < v.size() - a; ++b) {
      if (v[b] == v[b + 1]) return 0;
      if (v[b] > v[b + 1]) {
        std::swap(v[b], v[b + 1]);
        sign = -sign;
      }
    }
  for (std::size_t a = 0; a + 1 < v.size(); ++a)
    if (v[a] == v[a + 1]) return 0;
  return sign;
}

// (e^I)(X_L) for basis covectors I (sorted) and basis vectors L: the
// determinant of the 0/1 pairing matrix.
inline int evaluate_blade(const std::vector<int>& I, const std::vector<int>& L) {
  std::vector<int> s = L;
  std::sort(s.begin(), s.end());
  if (s != I) return 0;
  return sort_sign(L);
}

// Koszul formula: (d w)(X_0..X_k) = sum_{a<b} (-1)^{a+b} w([X_a, X_b], X_0, .^a.^b., X_k).
// Row J (k+1 subset), column I (k subset), both in lexicographic order.
inline std::vector<std::vector<Q>> ce_matrix(const Constants& C, int k) {
  const auto rows = subsets(C.n, k + 1), cols = subsets(C.n, k);
  std::vector<std::vector<Q>> m(rows.size(), std::vector<Q>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& J = rows[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& I = cols[c];
      Q sum = 0;
      for (int a = 0; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
          std::vector<int> rest;
          for (int t = 0; t <= k; ++t)
            if (t != a && t != b) rest.push_back(J[static_cast<std::size_t>(t)]);
          const int sgn = ((a + b) % 2 == 0) ? 1 : -1;
          for (int m2 = 0; m2 < C.n; ++m2) {
            const Q& coef = C.at(J[static_cast<std::size_t>(a)], J[static_cast<std::size_t>(b)], m2);
            if (coef == 0) continue;
            std::vector<int> L{m2};
            L.insert(L.end(), rest.begin(), rest.end());
            const int e = evaluate_blade(I, L);
            if (e != 0) sum += sgn * e * coef;
          }
        }
      m[r][c] = sum;
    }
  }
  return m;
}

// Textbook Gauss-Jordan rank over Q.
inline std::size_t rank(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline long binom(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

inline std::vector<std::size_t> betti(const Constants& C) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(C.n) + 2, 0);
  for (int k = 0; k < C.n; ++k) ranks[static_cast<std::size_t>(k) + 1] = rank(ce_matrix(C, k));
  std::vector<std::size_t> b;
  for (int k = 0; k <= C.n; ++k) {
    const long dimk = binom(C.n, k);
    b.push_back(static_cast<std::size_t>(dimk - static_cast<long>(ranks[static_cast<std::size_t>(k) + 1]) -
                                         static_cast<long>(ranks[static_cast<std::size_t>(k)])));
  }
  return b;
}

// Upper unitriangular 3x3 matrices in doubles.
struct H3 {
  double x, y, z;
};
inline H3 mul(const H3& a, const H3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y}; }
inline H3 inv(const H3& a) { return {-a.x, -a.y, -a.z + a.x * a.y}; }
inline H3 pow(const H3& a, int m) {
  H3 r{0, 0, 0};
  const H3 base = m < 0 ? inv(a) : a;
  for (int i = 0; i < std::abs(m); ++i) r = mul(r, base);
  return r;
}
inline bool close(const H3& a, const H3& b, double tol = 1e-9) {
  return std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol && std::abs(a.z - b.z) < tol;
}

}  // namespace oracle
