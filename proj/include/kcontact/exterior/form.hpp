#pragma once

#include "kcontact/linalg/matrix.hpp"
#include "kcontact/scalars/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kc {

// Scalars of the Lie-algebra side: Q(p). Plain rationals are constants.
using Scalar = RatFunc;
using Vector = Vec<Scalar>;

// Bit i set <=> dual basis index i present. Algebras are capped at 16
// dimensions so every blade fits and blade tables stay small.
using Blade = std::uint32_t;
inline constexpr int kMaxDimension = 16;

int blade_degree(Blade b);
std::vector<int> blade_indices(Blade b);
Blade blade_from_indices(std::span<const int> indices);  // any order; throws on repeats

// Orders blades by degree, then lexicographically on their increasing index
// lists (so e0^e1 < e0^e2 < e1^e2).
struct BladeLess {
  bool operator()(Blade a, Blade b) const;
};

// Sign of e^A ^ e^B relative to e^(A|B); 0 if A and B overlap.
int wedge_sign(Blade a, Blade b);

// Blades of one degree in BladeLess order, plus reverse lookup.
class BladeBasis {
 public:
  explicit BladeBasis(int dim);
  int dim() const { return dim_; }
  const std::vector<Blade>& of_degree(int k) const { return by_degree_.at(static_cast<std::size_t>(k)); }
  std::size_t index(Blade b) const { return index_[b]; }
  std::size_t count(int k) const { return of_degree(k).size(); }

 private:
  int dim_;
  std::vector<std::vector<Blade>> by_degree_;
  std::vector<std::size_t> index_;
};

// Homogeneous element of the exterior algebra over the dual basis of a
// dim-dimensional space. Zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<Blade, Scalar, BladeLess>;

  Form(int dim, int degree);

  static Form covector(int dim, int index, const Scalar& c = Scalar(1));
  static Form constant(int dim, const Scalar& c);
  static Form blade(int dim, Blade b, const Scalar& c = Scalar(1));

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Blade b) const;

  void add_term(Blade b, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Coordinates against BladeBasis::of_degree(degree()).
  Vector coordinates(const BladeBasis& basis) const;
  static Form from_coordinates(const BladeBasis& basis, int degree, const Vector& coords);

 private:
  int dim_;
  int degree_;
  Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form power(const Form& a, int k);  // a^k with a^0 = 1

// Contraction in the first slot: (i_v a)(w...) = a(v, w...).
Form interior(const Vector& v, const Form& a);

// Determinant convention, no 1/k! factor: (e^i ^ e^j)(X, Y) = e^i(X)e^j(Y) - e^i(Y)e^j(X).
Scalar evaluate(const Form& a, std::span<const Vector> vs);

// "p A*^U* - B*^U*" using the given names for the dual basis.
std::string to_string(const Form& a, const std::vector<std::string>& dual_names, const std::string& var = "p");
std::string scalar_to_string(const Scalar& s, const std::string& var = "p");

}  // namespace kc
