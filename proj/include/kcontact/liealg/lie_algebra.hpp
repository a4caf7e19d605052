#pragma once

#include "kcontact/cohomology/complex.hpp"
#include "kcontact/error.hpp"
#include "kcontact/exterior/form.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kc {

// Which field the structure constants live in.
struct FieldInfo {
  std::optional<std::string> parameter;     // formal parameter name, e.g. "p"
  std::optional<Rational> specialized_at;   // set after specialize()

  bool generic() const { return parameter.has_value() && !specialized_at.has_value(); }
  std::string describe() const;
};

// [X_i, X_j] = value, i != j. Entries with i > j are stored antisymmetrically.
struct BracketSpec {
  int i = 0;
  int j = 0;
  Vector value;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<int, 3> triple, Vector residual, const std::string& message)
      : Error("jacobi-violation", message), triple_(triple), residual_(std::move(residual)) {}
  const std::array<int, 3>& triple() const { return triple_; }
  const Vector& residual() const { return residual_; }

 private:
  std::array<int, 3> triple_;
  Vector residual_;
};

struct JacobiResidual {
  std::array<int, 3> triple;
  Vector residual;
};

// Finite-dimensional Lie algebra given by structure constants over Q(p).
// Immutable; copies share the underlying tables.
class LieAlgebra {
 public:
  // Validates antisymmetry of the input and the Jacobi identity on every
  // basis triple; throws JacobiViolation with the first offending triple.
  static LieAlgebra build(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                          FieldInfo field = {});
  // Skips the Jacobi check. Only for experiments comparing Jacobi with d^2 = 0.
  static LieAlgebra build_unchecked(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                                    FieldInfo field = {});

  int dim() const;
  const std::vector<std::string>& names() const;
  std::vector<std::string> dual_names() const;  // "A" -> "A*"
  const FieldInfo& field() const;
  int index_of(const std::string& name) const;  // -1 if absent

  const Vector& bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_vector(int i) const;
  // Column j holds [x, X_j].
  Matrix<Scalar> ad(const Vector& x) const;
  Matrix<Scalar> ad(int i) const;

  std::optional<JacobiResidual> jacobi_residual() const;

  const BladeBasis& blades() const;
  // d of the i-th dual covector: -sum_{j<k} c_{jk}^i e^j ^ e^k.
  const Form& d_generator(int i) const;
  Form d(const Form& f) const;
  // The Chevalley-Eilenberg complex in blade coordinates (cached).
  const CochainComplex& ce_complex() const;

  // Substitutes a rational value for the parameter. Throws
  // pole-at-specialization if some structure constant has a pole there.
  LieAlgebra specialize(const Rational& value) const;

 private:
  struct Data;
  explicit LieAlgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static LieAlgebra assemble(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                             FieldInfo field, bool check_jacobi);
  std::shared_ptr<const Data> data_;
};

// d(blade) for every blade, degree by degree. The serial version is the
// reference; the parallel one distributes the blades of each degree.
CochainComplex ce_differential_serial(const LieAlgebra& L);
CochainComplex ce_differential_parallel(const LieAlgebra& L);

inline const CochainComplex& ce_differential(const LieAlgebra& L) { return L.ce_complex(); }

}  // namespace kc
