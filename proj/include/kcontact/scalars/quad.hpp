#pragma once

#include "kcontact/scalars/rational.hpp"

#include <string>

namespace kc {

// a + b*sqrt(D) in Q(sqrt D), D squarefree > 1. D = 0 marks a plain rational
// (b = 0) that has not been tied to a field yet; it combines with any D.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadElement(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadElement(const Rational& a, const Rational& b, const Integer& d);

  static QuadElement sqrt(const Integer& d) { return {0, 1, d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& field() const { return d_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Rational norm() const;  // a^2 - b^2 D
  QuadElement conjugate() const;
  QuadElement inverse() const;  // throws division-by-zero
  double approx() const;  // diagnostics only

  QuadElement operator-() const;
  QuadElement& operator+=(const QuadElement& o);
  QuadElement& operator-=(const QuadElement& o);
  QuadElement& operator*=(const QuadElement& o);
  QuadElement& operator/=(const QuadElement& o);

  friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
  friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
  friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
  friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
  friend bool operator==(const QuadElement& x, const QuadElement& y);

  // "(3+sqrt5)/2", "-sqrt5", "2+2*sqrt3", "7/3".
  std::string to_string() const;

 private:
  void adopt_field(const QuadElement& o);
  Rational a_;
  Rational b_;
  Integer d_ = 0;
};

// Exact sign of a + b*sqrt(D): -1, 0 or +1.
int quad_sign(const QuadElement& x);

// n = f^2 * D with D squarefree; n > 0.
struct SquarefreeSplit {
  Integer square_root_part;
  Integer squarefree_part;
};
SquarefreeSplit squarefree_split(const Integer& n);

std::size_t elimination_weight(const QuadElement& x);
inline bool is_zero(const QuadElement& x) { return x.is_zero(); }

}  // namespace kc
