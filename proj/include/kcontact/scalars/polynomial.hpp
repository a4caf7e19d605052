#pragma once

#include "kcontact/scalars/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kc {

// Dense univariate polynomial over Q in the formal parameter. Coefficients are
// stored low degree first with no trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(int c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable();
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t term_count() const;

  Rational eval(const Rational& x) const;
  Poly monic() const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var = "p") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Exact division; throws kc::Error("inexact-division") if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);

// Monic gcd (zero only if both inputs are zero). Runs a primitive-part
// pseudo-remainder sequence over Z so intermediate coefficients stay small.
Poly gcd(const Poly& a, const Poly& b);

Poly lcm(const Poly& a, const Poly& b);

}  // namespace kc
