#include "kcontact/error.hpp"
#include "kcontact/lattice/heisenberg.hpp"
#include "kcontact/lattice/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace kc;

namespace {

oracle::H3 approx(const HeisenbergElement& h) { return {h.x.approx(), h.y.approx(), h.z.approx()}; }

std::string error_kind(const HyperbolicMatrix& n) {
  try {
    build_lattice(n);
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

const RelationCheck* first_failure(const LatticeReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("Heisenberg group arithmetic") {
  const HeisenbergElement a{1, 0, 0}, b{0, 1, 0};
  CHECK(heisenberg_mul(a, b) == HeisenbergElement{1, 1, 1});
  CHECK(heisenberg_pow(a, 0) == heisenberg_identity());
  CHECK(heisenberg_pow(HeisenbergElement{1, 1, 0}, 2) == HeisenbergElement{2, 2, 1});
  const HeisenbergElement c{QuadElement(1, 2, 5), QuadElement(Rational(1, 3)), QuadElement(0, 1, 5)};
  CHECK(heisenberg_mul(c, heisenberg_inverse(c)) == heisenberg_identity());
  for (int m = -3; m <= 3; ++m) CHECK(oracle::close(approx(heisenberg_pow(c, m)), oracle::pow(approx(c), m)));
}

TEST_CASE("eigen data of [[2,1],[1,1]]") {
  const HyperbolicData e = hyperbolic_data({2, 1, 1, 1});
  CHECK(e.D == 5);
  CHECK(e.lambda == QuadElement(Rational(3, 2), Rational(1, 2), 5));
  CHECK(e.eig_plus[0] == QuadElement(1));
  CHECK(e.eig_plus[1] == QuadElement(Rational(-1, 2), Rational(1, 2), 5));
  CHECK(e.eig_minus[0] == QuadElement(1));
  CHECK(e.eig_minus[1] == QuadElement(Rational(-1, 2), Rational(-1, 2), 5));
  CHECK(std::abs(e.lambda.approx() - (3 + std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("lattice data for three hyperbolic matrices") {
  struct Case {
    HyperbolicMatrix n;
    int D;
    QuadElement lambda, z2;
  };
  const Case cases[] = {
      {{2, 1, 1, 1}, 5, QuadElement(Rational(3, 2), Rational(1, 2), 5), QuadElement(0, 1, 5)},
      {{3, 1, 2, 1}, 3, QuadElement(2, 1, 3), QuadElement(0, 2, 3)},
      {{5, 2, 2, 1}, 2, QuadElement(3, 2, 2), QuadElement(0, 2, 2)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n.to_string());
    const LatticeData ld = build_lattice(c.n);
    CHECK(ld.eigen.D == c.D);
    CHECK(ld.eigen.lambda == c.lambda);
    CHECK(ld.z2 == c.z2);
    CHECK(ld.z2 == ld.eigen.eig_plus[1] * ld.eigen.eig_minus[0] - ld.eigen.eig_plus[0] * ld.eigen.eig_minus[1]);
    CHECK(ld.r == 0);
    CHECK(ld.s == 0);
    const LatticeReport rep = verify_lattice(ld);
    CHECK(rep.ok());
    CHECK(rep.checks.size() == 35);

    // floating-point replay of every group relation
    const oracle::H3 h0 = approx(ld.h0), h1 = approx(ld.h1), h2 = approx(ld.h2);
    CHECK(oracle::close(oracle::mul(h2, oracle::mul(h0, h1)), oracle::mul(h1, h0)));
    for (int m0 = -2; m0 <= 2; ++m0)
      for (int m1 = -2; m1 <= 2; ++m1)
        CHECK(oracle::close(oracle::mul(oracle::pow(h1, m1), oracle::pow(h0, m0)),
                            oracle::mul(oracle::pow(h2, m0 * m1), oracle::mul(oracle::pow(h0, m0), oracle::pow(h1, m1)))));
    const double lam = ld.eigen.lambda.approx();
    auto psi = [&](const oracle::H3& h) { return oracle::H3{lam * h.x, h.y / lam, h.z}; };
    const int n00 = static_cast<int>(c.n.n00.get_si()), n01 = static_cast<int>(c.n.n01.get_si());
    const int n10 = static_cast<int>(c.n.n10.get_si()), n11 = static_cast<int>(c.n.n11.get_si());
    CHECK(oracle::close(psi(h0), oracle::mul(oracle::mul(oracle::pow(h0, n00), oracle::pow(h1, n01)), oracle::pow(h2, static_cast<int>(ld.r.get_si()))), 1e-7));
    CHECK(oracle::close(psi(h1), oracle::mul(oracle::mul(oracle::pow(h0, n10), oracle::pow(h1, n11)), oracle::pow(h2, static_cast<int>(ld.s.get_si()))), 1e-7));
  }
}

TEST_CASE("non-hyperbolic input is rejected") {
  CHECK(error_kind({1, 1, 0, 1}) == "not-hyperbolic");
  CHECK(error_kind({2, 1, 1, 2}) == "not-unimodular");
  CHECK(error_kind({-2, 1, 1, -1}) == "negative-eigenvalues");
}

TEST_CASE("corrupted lattice data fails the relations") {
  LatticeData ld = build_lattice({2, 1, 1, 1});
  LatticeData bad = ld;
  bad.z2 += QuadElement(1);
  bad.h2.z = bad.z2;
  const LatticeReport rep = verify_lattice(bad);
  const RelationCheck* f = first_failure(rep);
  REQUIRE(f);
  CHECK(f->name == "h2 (h0 h1) = h1 h0");
  CHECK_FALSE(f->lhs.empty());

  LatticeData swapped = ld;
  swapped.eigen.lambda = ld.eigen.lambda.inverse();
  const LatticeReport r = verify_lattice(swapped);
  bool psi_failed = false;
  for (const auto& c : r.checks)
    if (!c.pass && c.name.rfind("psi(1)", 0) == 0) psi_failed = true;
  CHECK(psi_failed);
}
