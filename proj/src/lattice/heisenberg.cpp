#include "kcontact/lattice/heisenberg.hpp"

#include <array>

namespace kc {

namespace {

using Mat3 = std::array<std::array<QuadElement, 3>, 3>;

Mat3 to_matrix(const HeisenbergElement& h) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = QuadElement(1);
  m[0][1] = h.x;
  m[1][2] = h.y;
  m[0][2] = h.z;
  return m;
}

}  // namespace

std::string HeisenbergElement::to_string() const {
  return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")";
}

HeisenbergElement heisenberg_identity() { return {QuadElement(0), QuadElement(0), QuadElement(0)}; }

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  const Mat3 p = to_matrix(a), q = to_matrix(b);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuadElement s(0);
      for (int k = 0; k < 3; ++k) s += p[i][k] * q[k][j];
      r[i][j] = s;
    }
  return {r[0][1], r[1][2], r[0][2]};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& a) { return {-a.x, -a.y, a.x * a.y - a.z}; }

HeisenbergElement heisenberg_pow(const HeisenbergElement& a, const Integer& m) {
  if (sgn(m) < 0) return heisenberg_pow(heisenberg_inverse(a), Integer(-m));
  const QuadElement mq{Rational(m)};
  const QuadElement pairs{Rational(Integer(m * (m - 1) / 2))};
  return {mq * a.x, mq * a.y, mq * a.z + pairs * a.x * a.y};
}

}  // namespace kc
