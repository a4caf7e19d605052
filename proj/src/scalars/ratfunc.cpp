#include "kcontact/scalars/ratfunc.hpp"

#include "kcontact/error.hpp"

namespace kc {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error("division-by-zero", "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("not-constant", "rational function depends on the parameter");
  return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  num_ *= o.num_;
  if (den_.degree() == 0 && o.den_.degree() == 0) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error("division-by-zero", "rational function divisor is zero");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::to_string(std::string_view var) const {
  std::string n = num_.to_string(var);
  if (den_.degree() == 0) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(var);
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

Rational specialize(const RatFunc& f, const Rational& r) {
  Rational d = f.den().eval(r);
  if (sgn(d) == 0) {
    throw Error("pole-at-specialization",
                "denominator " + f.den().to_string() + " vanishes at p = " + r.get_str());
  }
  return f.num().eval(r) / d;
}

std::size_t elimination_weight(const RatFunc& x) {
  if (x.is_zero()) return 0;
  std::size_t w = 64 * static_cast<std::size_t>(x.num().degree() + x.den().degree());
  w += 16 * (x.num().term_count() + x.den().term_count());
  for (const auto& c : x.num().coeffs()) w += elimination_weight(c);
  return w;
}

}  // namespace kc
