#pragma once

#include "kcontact/cohomology/complex.hpp"
#include "kcontact/cohomology/forms.hpp"
#include "kcontact/liealg/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc {

// Sparse product of two basis elements: (basis index, coefficient) pairs.
using Terms = std::vector<std::pair<std::size_t, Scalar>>;

// Finite-dimensional commutative differential graded algebra with an
// explicit basis. Elements are coordinate vectors over the whole basis.
class CDGA {
 public:
  CDGA() = default;
  // product[i * n + j] = e_i e_j; d column j = d e_j.
  CDGA(std::vector<std::string> names, std::vector<int> degrees, std::vector<Terms> product, Matrix<Scalar> d,
       std::size_t unit);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  int top_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  const std::vector<std::size_t>& of_degree(int k) const { return by_degree_.at(static_cast<std::size_t>(k)); }
  std::size_t unit_index() const { return unit_; }
  const Matrix<Scalar>& differential() const { return d_; }
  const Terms& product(std::size_t i, std::size_t j) const { return product_[i * size() + j]; }

  Vector zero() const { return Vector(size(), Scalar(0)); }
  Vector basis(std::size_t i) const;
  Vector unit() const { return basis(unit_); }
  Vector mul(const Vector& a, const Vector& b) const;
  Vector d(const Vector& a) const { return d_ * a; }
  // Degree of a nonzero homogeneous element; nullopt if zero or mixed.
  std::optional<int> degree_of(const Vector& a) const;

  // Word structure: basis element i equals the product of the generators
  // listed in words[i] (in order). Present for free and monomial algebras.
  std::vector<std::size_t> generators;
  std::vector<std::vector<std::size_t>> words;

  // Degree-k coordinates <-> full vectors.
  Vector restrict(const Vector& a, int k) const;
  Vector extend(const Vector& a, int k) const;
  CochainComplex complex() const;

  std::string format(const Vector& a) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Terms> product_;
  Matrix<Scalar> d_;
  std::size_t unit_ = 0;
  std::vector<std::vector<std::size_t>> by_degree_;
  std::vector<std::size_t> position_;  // index within its degree
};

struct CdgaViolation {
  std::string law;  // "d-squared", "leibniz", "graded-commutativity", "associativity", "unit", "degree"
  std::string witness;
};

// Checks every law on all basis pairs/triples; nullopt if all hold.
std::optional<CdgaViolation> validate(const CDGA& A);

struct CdgaCohomology {
  std::vector<std::size_t> betti;
  std::vector<CohomologySpace> spaces;
};

CdgaCohomology cdga_cohomology(const CDGA& A);

// Exterior algebra of the dual space with the CE differential; basis = blades.
CDGA ce_cdga(const LieAlgebra& L);

struct GeneratorSpec {
  std::string name;
  int degree = 1;
  int nilpotency = 0;  // even generators: x^nilpotency = 0 (0 means 2)
};

// Free graded-commutative algebra on odd generators tensored with truncated
// polynomial algebras on even ones; zero differential. Basis: monomials,
// ordered by degree, then by exponent vector.
CDGA monomial_algebra(const std::vector<GeneratorSpec>& gens);

// A tensor Lambda(y), deg y = 1, d y = b. Throws hirsch-class-not-closed if
// d b != 0 or wrong-degree if b is not of degree 2.
CDGA hirsch_extension(const CDGA& A, const Vector& b, const std::string& y = "y");

// The cohomology algebra of a form complex as a CDGA with zero differential.
// Basis element names are "h<degree>_<index>" for the representative classes.
CDGA cohomology_cdga(const FormCohomology& H);

// Graded ring built from named closed forms in H: the monomial algebra on
// the generators, mapped into H by cup products.
struct IdentifiedRing {
  CDGA ring;
  std::vector<Form> generator_forms;
  bool isomorphism = false;                // the map ring -> H is bijective in every degree
  std::vector<Matrix<Scalar>> map;          // per degree: H coords x ring coords
  std::optional<std::string> failure;      // why the map is not an isomorphism

  // Coordinates in `ring` of a class of H (requires isomorphism).
  Vector pull(const CohClass& c) const;
};

IdentifiedRing identify_ring(const FormCohomology& H, const std::vector<std::pair<std::string, Form>>& gens);

}  // namespace kc
