#pragma once

#include "kcontact/scalars/quad.hpp"

#include <string>

namespace kc {

// The upper triangular matrix [[1, x, z], [0, 1, y], [0, 0, 1]].
struct HeisenbergElement {
  QuadElement x, y, z;

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
  std::string to_string() const;
};

HeisenbergElement heisenberg_identity();
// Matrix product.
HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& a);
// (m x, m y, m z + m(m-1)/2 x y) for m >= 0; negative m goes through the inverse.
HeisenbergElement heisenberg_pow(const HeisenbergElement& a, const Integer& m);

}  // namespace kc
