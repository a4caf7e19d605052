#pragma once

#include "kcontact/liealg/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kc {

enum class Verdict { no, yes, unknown };
std::string to_string(Verdict v);

struct StructureReport {
  bool nilpotent = false;
  bool solvable = false;
  Verdict completely_solvable = Verdict::unknown;
  bool unimodular = false;
  // Present when classify was asked to re-check at a concrete parameter.
  std::optional<bool> unimodular_at_specialization;
  std::vector<std::size_t> lower_central_dims;  // dim g, dim [g,g], dim [g,[g,g]], ...
  std::vector<std::size_t> derived_dims;        // dim g, dim g', dim g'', ...
  // Nested ideals I_1 < I_2 < ... < I_n = g with dim I_k = k; I_k is spanned
  // by the first k vectors. Present iff completely_solvable is yes.
  std::optional<std::vector<Vector>> flag;
};

// Basis (reduced echelon rows) of span{[x, y] : x in a, y in b}.
std::vector<Vector> bracket_span(const LieAlgebra& L, const std::vector<Vector>& a, const std::vector<Vector>& b);

// Common eigenvector of ad_g acting on g / I, where I is given by any basis.
// Returns nullopt when none exists with eigenvalues in the scalar field; sets
// `limited` when some characteristic polynomial failed to split (so the
// negative answer is not conclusive).
std::optional<Vector> common_eigenvector_mod(const LieAlgebra& L, const std::vector<Vector>& ideal, bool& limited);

StructureReport classify(const LieAlgebra& L, std::optional<Rational> sample = std::nullopt);

// tr(ad_X_i) for every basis element.
std::vector<Scalar> ad_traces(const LieAlgebra& L);

}  // namespace kc
