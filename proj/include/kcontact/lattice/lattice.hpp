#pragma once

#include "kcontact/lattice/heisenberg.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc {

struct HyperbolicMatrix {
  Integer n00, n01, n10, n11;

  Integer trace() const { return n00 + n11; }
  Integer det() const { return n00 * n11 - n01 * n10; }
  std::string to_string() const;
};

struct HyperbolicData {
  Integer D;
  QuadElement lambda;  // the eigenvalue > 1
  std::array<QuadElement, 2> eig_plus;   // (x0, x1), eigenvalue lambda
  std::array<QuadElement, 2> eig_minus;  // (y0, y1), eigenvalue 1/lambda
};

// Throws not-unimodular (det != 1), not-hyperbolic (|trace| <= 2) or
// negative-eigenvalues (trace < -2: no eigenvalue of the form e^p).
HyperbolicData hyperbolic_data(const HyperbolicMatrix& n);

struct LatticeData {
  HyperbolicMatrix N;
  HyperbolicData eigen;
  QuadElement z0, z1, z2;
  Integer r, s;
  HeisenbergElement h0, h1, h2;
};

// ψ(t)(x, y, z) = (λ^t x, λ^-t y, z) at t = 1.
HeisenbergElement psi_one(const QuadElement& lambda, const HeisenbergElement& h);

// Throws no-solution-in-window with the (I - N) z = c system in the message.
LatticeData build_lattice(const HyperbolicMatrix& n, int window = 8);

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;  // both sides; filled in on failure
};

struct LatticeReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
};

// Checks, in order: the eigenvector equations, h2 (h0 h1) = h1 h0, h2 central,
// h1^m1 h0^m0 = h2^(m0 m1) h0^m0 h1^m1 for |m0|, |m1| <= 2, ψ(1)(h0) and
// ψ(1)(h1) as words with the stored exponents, and z2 != 0.
LatticeReport verify_lattice(const LatticeData& ld);

}  // namespace kc
