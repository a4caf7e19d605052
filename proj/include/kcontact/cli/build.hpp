#pragma once

#include "kcontact/cli/dsl.hpp"
#include "kcontact/contact/contact.hpp"
#include "kcontact/liealg/lie_algebra.hpp"
#include "kcontact/tievsky/morphism.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace kc::dsl {

// Where an expression is evaluated: a finite basis with a scalar unit, a way
// to name basis elements and a product.
struct Space {
  std::size_t size = 0;
  std::size_t unit = 0;
  std::optional<std::string> parameter;
  std::function<std::optional<Vector>(const std::string& name, bool dual)> atom;
  std::function<Vector(const Vector&, const Vector&)> mul;
};

Vector evaluate(const Expr& e, const Space& space);

// Generic structure constants over Q(p) (or Q without a parameter).
LieAlgebra build_algebra(const AlgebraDecl& a);

// Homogeneous form from an expression in dual names.
Form build_form(const AlgebraDecl& a, const Expr& e);
// Element of the algebra from an expression in basis names.
Vector build_vector(const AlgebraDecl& a, const Expr& e);
// phi (unlisted basis elements go to 0) and g.
MetricData build_metric(const AlgebraDecl& a);

Form specialize(const Form& f, const Rational& r);
Vector specialize(const Vector& v, const Rational& r);
Matrix<Scalar> specialize(const Matrix<Scalar>& m, const Rational& r);

// Reads a file and parses it; io-error on failure.
std::string read_file(const std::filesystem::path& p);
Document load(const std::filesystem::path& p);
// The single algebra of a .lie file.
AlgebraDecl load_algebra(const std::filesystem::path& p);

struct BuiltMorphism {
  CDGAMorphism morphism;
  std::optional<IdentifiedRing> ring;  // tievsky targets
  std::optional<Vector> deta;          // [d eta]_B in ring coordinates
};

// Target paths are resolved relative to `base`.
BuiltMorphism build_morphism(const MorphismDecl& m, const std::filesystem::path& base,
                             const std::optional<Rational>& specialize_at);

}  // namespace kc::dsl
