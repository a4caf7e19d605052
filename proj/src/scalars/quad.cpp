#include "kcontact/scalars/quad.hpp"

#include "kcontact/error.hpp"

#include <cmath>

namespace kc {

QuadElement::QuadElement(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(d_) < 0 || d_ == 1) throw Error("invalid-field", "quadratic field needs squarefree D > 1");
  if (sgn(d_) == 0 && sgn(b_) != 0) throw Error("invalid-field", "irrational part without a field");
}

void QuadElement::adopt_field(const QuadElement& o) {
  if (sgn(o.d_) == 0) return;
  if (sgn(d_) == 0) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) {
    throw Error("mixed-field", "operands in Q(sqrt" + d_.get_str() + ") and Q(sqrt" + o.d_.get_str() + ")");
  }
}

Rational QuadElement::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadElement QuadElement::conjugate() const {
  QuadElement r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadElement QuadElement::inverse() const {
  if (is_zero()) throw Error("division-by-zero", "quadratic element is zero");
  Rational n = norm();
  QuadElement r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

double QuadElement::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

QuadElement QuadElement::operator-() const {
  QuadElement r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadElement& QuadElement::operator+=(const QuadElement& o) {
  adopt_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& o) {
  adopt_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& o) {
  adopt_field(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElement& QuadElement::operator/=(const QuadElement& o) {
  adopt_field(o);
  return *this *= o.inverse();
}

bool operator==(const QuadElement& x, const QuadElement& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (sgn(x.b_) == 0) return true;
  return x.d_ == y.d_;
}

std::string QuadElement::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  // Common denominator: (A + B*sqrtD)/den with integers A, B.
  Integer den = lcm(Integer(a_.get_den()), Integer(b_.get_den()));
  Integer A = a_.get_num() * (den / a_.get_den());
  Integer B = b_.get_num() * (den / b_.get_den());
  std::string root = "sqrt" + d_.get_str();
  std::string irr;
  Integer absB = abs(B);
  irr = (absB == 1) ? root : absB.get_str() + "*" + root;
  std::string body;
  if (sgn(A) == 0) {
    body = (sgn(B) < 0 ? "-" : "") + irr;
  } else {
    body = A.get_str() + (sgn(B) < 0 ? "-" : "+") + irr;
  }
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

int quad_sign(const QuadElement& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with b^2 D.
  Rational diff = x.a() * x.a() - x.b() * x.b() * Rational(x.field());
  int s = sgn(diff);
  return sa > 0 ? s : -s;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) <= 0) throw Error("invalid-field", "squarefree_split needs n > 0");
  Integer rest = n;
  Integer root = 1;
  Integer d = 1;
  for (Integer q = 2; q * q <= rest; ++q) {
    while (rest % (q * q) == 0) {
      rest /= q * q;
      root *= q;
    }
    if (rest % q == 0) {
      rest /= q;
      d *= q;
    }
  }
  d *= rest;
  return {root, d};
}

std::size_t elimination_weight(const QuadElement& x) {
  return elimination_weight(x.a()) + elimination_weight(x.b());
}

}  // namespace kc
