#include "kcontact/cohomology/complex.hpp"

#include "kcontact/error.hpp"
#include "kcontact/linalg/elimination.hpp"

namespace kc {

Matrix<Scalar> CochainComplex::differential(int k) const {
  const int t = top();
  const std::size_t src = (k >= 0 && k <= t) ? dims[static_cast<std::size_t>(k)] : 0;
  const std::size_t dst = (k + 1 >= 0 && k + 1 <= t) ? dims[static_cast<std::size_t>(k + 1)] : 0;
  if (k >= 0 && k < t) return d[static_cast<std::size_t>(k)];
  return Matrix<Scalar>(dst, src);
}

Vector CochainComplex::apply(int k, const Vector& v) const {
  if (k < 0 || k > top()) throw Error("invalid-degree", "degree out of range");
  if (k == top()) return {};
  return d[static_cast<std::size_t>(k)] * v;
}

void CochainComplex::check_square_zero() const {
  for (int k = 0; k + 2 <= top(); ++k) {
    Matrix<Scalar> dd = d[static_cast<std::size_t>(k + 1)] * d[static_cast<std::size_t>(k)];
    if (!dd.is_zero()) throw Error("d-squared-nonzero", "d_" + std::to_string(k + 1) + " d_" + std::to_string(k) + " != 0");
  }
}

std::vector<std::size_t> betti(const CochainComplex& c) {
  const int t = c.top();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(t + 1), 0);
  for (int k = 0; k < t; ++k) ranks[static_cast<std::size_t>(k)] = rank(c.d[static_cast<std::size_t>(k)]);
  std::vector<std::size_t> b(static_cast<std::size_t>(t + 1));
  for (int k = 0; k <= t; ++k) {
    const std::size_t out = ranks[static_cast<std::size_t>(k)];
    const std::size_t in = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    b[static_cast<std::size_t>(k)] = c.dims[static_cast<std::size_t>(k)] - out - in;
  }
  return b;
}

CohomologySpace cohomology_space(const CochainComplex& c, int k) {
  if (k < 0 || k > c.top()) throw Error("invalid-degree", "cohomology degree out of range");
  const std::size_t n = c.dims[static_cast<std::size_t>(k)];
  CohomologySpace h;
  h.degree = k;

  std::vector<Vector> cycles;
  if (k == c.top()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, Scalar(0));
      e[i] = Scalar(1);
      cycles.push_back(std::move(e));
    }
  } else {
    cycles = kernel_basis(c.d[static_cast<std::size_t>(k)]);
  }

  if (k > 0) {
    const Matrix<Scalar>& prev = c.d[static_cast<std::size_t>(k - 1)];
    for (std::size_t col : independent_columns(prev)) h.boundary_basis.push_back(prev.column(col));
  }

  std::vector<Vector> frame = h.boundary_basis;
  std::size_t current = frame.size();
  for (auto& z : cycles) {
    frame.push_back(z);
    const std::size_t r = rank(Matrix<Scalar>::from_columns(frame, n));
    if (r > current) {
      current = r;
      h.representatives.push_back(std::move(z));
    } else {
      frame.pop_back();
    }
  }
  h.betti = h.representatives.size();
  return h;
}

std::vector<CohomologySpace> cohomology_spaces(const CochainComplex& c) {
  const int t = c.top();
  std::vector<CohomologySpace> out(static_cast<std::size_t>(t + 1));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= t; ++k) out[static_cast<std::size_t>(k)] = cohomology_space(c, k);
  return out;
}

ClassResult class_of(const CochainComplex& c, const CohomologySpace& h, const Vector& v) {
  const int k = h.degree;
  const std::size_t n = c.dims[static_cast<std::size_t>(k)];
  if (v.size() != n) throw Error("dimension-mismatch", "class_of: vector length");
  ClassResult res;
  if (k < c.top()) {
    Vector dv = c.apply(k, v);
    if (!is_zero_vec(dv)) {
      res.witness = std::move(dv);
      return res;
    }
  }
  res.closed = true;
  std::vector<Vector> frame = h.representatives;
  frame.insert(frame.end(), h.boundary_basis.begin(), h.boundary_basis.end());
  if (frame.empty()) {
    res.coords = {};
    return res;
  }
  auto x = solve(Matrix<Scalar>::from_columns(frame, n), v);
  if (!x) throw Error("internal", "closed vector outside cycles + boundaries");
  res.coords.assign(x->begin(), x->begin() + static_cast<long>(h.betti));
  return res;
}

Vector representative_of(const CohomologySpace& h, const Vector& coords, std::size_t length) {
  Vector v(length, Scalar(0));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < length; ++j) v[j] += coords[i] * h.representatives[i][j];
  }
  return v;
}

}  // namespace kc
