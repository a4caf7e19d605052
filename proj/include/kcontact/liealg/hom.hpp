#pragma once

#include "kcontact/liealg/lie_algebra.hpp"

#include <string>
#include <vector>

namespace kc {

// Linear map between Lie algebras preserving brackets. matrix is
// dim(target) x dim(source); column i is the image of the i-th source basis vector.
class AlgebraHom {
 public:
  // Throws not-a-homomorphism naming the first basis pair that fails.
  AlgebraHom(LieAlgebra source, LieAlgebra target, Matrix<Scalar> matrix);

  // Sends each source basis element to the target element of the same name,
  // or to 0 if the target has no such name.
  static AlgebraHom by_names(LieAlgebra source, LieAlgebra target);

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const Matrix<Scalar>& matrix() const { return matrix_; }
  Vector apply(const Vector& v) const { return matrix_ * v; }

 private:
  LieAlgebra source_;
  LieAlgebra target_;
  Matrix<Scalar> matrix_;
};

// (h*a)(v_1, ..., v_k) = a(h v_1, ..., h v_k).
Form pullback(const AlgebraHom& h, const Form& a);

}  // namespace kc
