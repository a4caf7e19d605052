#pragma once

#include "kcontact/exterior/form.hpp"
#include "kcontact/linalg/matrix.hpp"

#include <cstddef>
#include <vector>

namespace kc {

// Finite cochain complex in coordinates: C^0 -> C^1 -> ... -> C^top.
struct CochainComplex {
  std::vector<std::size_t> dims;   // dims[k] = dim C^k
  std::vector<Matrix<Scalar>> d;   // d[k] : C^k -> C^{k+1}, dims[k+1] x dims[k]

  int top() const { return static_cast<int>(dims.size()) - 1; }
  // d_k as a matrix, including the zero maps at both ends.
  Matrix<Scalar> differential(int k) const;
  Vector apply(int k, const Vector& v) const;
  // Throws kc::Error("d-squared-nonzero") naming the first failing degree.
  void check_square_zero() const;
};

// H^k with explicit closed representatives and the coboundary basis used to
// reduce arbitrary cocycles to coordinates.
struct CohomologySpace {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Vector> representatives;
  std::vector<Vector> boundary_basis;
};

// b_k = dim C^k - rank d_k - rank d_{k-1}, ranks by fraction-free elimination.
std::vector<std::size_t> betti(const CochainComplex& c);

// Representatives: greedily chosen from the echelon kernel basis of d_k,
// keeping a vector when it is independent of the coboundaries and the
// vectors kept so far. Deterministic for a fixed basis order.
CohomologySpace cohomology_space(const CochainComplex& c, int k);

// All degrees; degrees are independent and computed in parallel.
std::vector<CohomologySpace> cohomology_spaces(const CochainComplex& c);

struct ClassResult {
  bool closed = false;
  Vector coords;   // coordinates in the representative basis when closed
  Vector witness;  // d v when not closed
};

ClassResult class_of(const CochainComplex& c, const CohomologySpace& h, const Vector& v);

// Sum of coordinates times representatives.
Vector representative_of(const CohomologySpace& h, const Vector& coords, std::size_t length);

}  // namespace kc
