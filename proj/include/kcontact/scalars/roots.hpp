#pragma once

#include "kcontact/scalars/ratfunc.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kc {

// Roots lying in Q(p) of a univariate polynomial with Q(p) coefficients.
struct RootSearch {
  std::vector<std::pair<RatFunc, int>> roots;  // distinct roots, multiplicity
  bool splits = false;      // multiplicities add up to the degree
  bool exhaustive = true;   // false if a factoring or enumeration limit was hit
};

// coeffs low degree first, leading coefficient nonzero. Roots are found by
// rescaling to a monic polynomial over Q[p], bounding the root degree,
// interpolating candidate roots from rational roots at sample points and
// verifying every candidate exactly.
RootSearch roots_in_field(const std::vector<RatFunc>& coeffs);

// Distinct rational roots (ascending) of a polynomial over Q via the rational
// root theorem. nullopt if integer factoring gave up.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace kc
