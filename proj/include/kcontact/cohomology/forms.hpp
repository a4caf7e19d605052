#pragma once

#include "kcontact/cohomology/complex.hpp"
#include "kcontact/liealg/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace kc {

// A subcomplex of the exterior algebra: in each degree a list of linearly
// independent forms, with the differential written in those coordinates.
struct FormComplex {
  int dim = 0;                            // dimension of the ambient algebra
  std::vector<std::vector<Form>> basis;   // basis[k] spans the degree-k cochains
  std::vector<Matrix<Scalar>> embedding;  // embedding[k]: blade coords x basis coords
  CochainComplex complex;

  // Coordinates of f against basis[f.degree()]; nullopt if f is outside.
  std::optional<Vector> coordinates(const Form& f, const BladeBasis& blades) const;
  Form form(int k, const Vector& coords) const;
};

// The full CE complex with the blade basis.
FormComplex ce_form_complex(const LieAlgebra& L);

struct CohClass {
  int degree = 0;
  Vector coords;
};

struct FormClassResult {
  bool closed = false;
  CohClass cls;
  Form witness{0, 0};  // d a when not closed
};

class FormCohomology {
 public:
  FormCohomology(const LieAlgebra& L, FormComplex fc);

  const LieAlgebra& algebra() const { return algebra_; }
  const FormComplex& complex() const { return fc_; }
  int top() const { return fc_.complex.top(); }
  std::vector<std::size_t> betti() const;
  const CohomologySpace& space(int k) const { return spaces_.at(static_cast<std::size_t>(k)); }
  std::vector<Form> representatives(int k) const;
  Form representative(const CohClass& c) const;

  // Throws not-in-subcomplex if a is not a cochain of this complex.
  FormClassResult class_of(const Form& a) const;
  // Wedge of representatives, reduced; throws if the product leaves the complex.
  CohClass cup(const CohClass& x, const CohClass& y) const;
  CohClass unit() const;
  bool is_zero(const CohClass& c) const { return is_zero_vec(c.coords); }

 private:
  LieAlgebra algebra_;
  FormComplex fc_;
  std::vector<CohomologySpace> spaces_;
};

struct DualityReport {
  std::vector<std::size_t> betti;
  long euler = 0;
  bool unimodular = false;
  bool poincare = false;  // b_k = b_{n-k} for all k
};

DualityReport duality_report(const LieAlgebra& L);

}  // namespace kc
