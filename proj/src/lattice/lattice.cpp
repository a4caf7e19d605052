#include "kcontact/lattice/lattice.hpp"

#include "kcontact/error.hpp"
#include "kcontact/linalg/elimination.hpp"

namespace kc {

std::string HyperbolicMatrix::to_string() const {
  return "[[" + n00.get_str() + "," + n01.get_str() + "],[" + n10.get_str() + "," + n11.get_str() + "]]";
}

HyperbolicData hyperbolic_data(const HyperbolicMatrix& n) {
  if (n.det() != 1) throw Error("not-unimodular", "determinant of " + n.to_string() + " is " + n.det().get_str());
  const Integer t = n.trace();
  if (abs(t) <= 2) throw Error("not-hyperbolic", "trace of " + n.to_string() + " is " + t.get_str());
  if (t < -2) throw Error("negative-eigenvalues", "trace of " + n.to_string() + " is negative; eigenvalues are not e^p and e^-p");
  const SquarefreeSplit sq = squarefree_split(Integer(t * t - 4));
  HyperbolicData h;
  h.D = sq.squarefree_part;
  h.lambda = QuadElement(Rational(t, 2), Rational(sq.square_root_part, 2), h.D);
  if (quad_sign(h.lambda - QuadElement(1)) != 1) throw Error("internal", "eigenvalue not above 1");
  // n01 != 0 for any hyperbolic unimodular matrix, so the first coordinate can be 1.
  const QuadElement n00{Rational(n.n00)}, n01{Rational(n.n01)};
  h.eig_plus = {QuadElement(1), (h.lambda - n00) / n01};
  h.eig_minus = {QuadElement(1), (h.lambda.inverse() - n00) / n01};
  return h;
}

HeisenbergElement psi_one(const QuadElement& lambda, const HeisenbergElement& h) {
  return {lambda * h.x, lambda.inverse() * h.y, h.z};
}

namespace {

HeisenbergElement word(const LatticeData& ld, const Integer& a, const Integer& b, const Integer& c) {
  return heisenberg_mul(heisenberg_mul(heisenberg_pow(ld.h0, a), heisenberg_pow(ld.h1, b)), heisenberg_pow(ld.h2, c));
}

QuadElement q(const Integer& i) { return QuadElement(Rational(i)); }

}  // namespace

LatticeData build_lattice(const HyperbolicMatrix& n, int window) {
  LatticeData ld;
  ld.N = n;
  ld.eigen = hyperbolic_data(n);
  const auto& [x0, x1] = ld.eigen.eig_plus;
  const auto& [y0, y1] = ld.eigen.eig_minus;
  ld.z2 = x1 * y0 - x0 * y1;
  if (ld.z2.is_zero()) throw Error("internal", "eigenvectors are dependent");

  // z-coordinate of h0^a h1^b without the z0, z1 terms.
  auto offset = [&](const Integer& a, const Integer& b) {
    return q(Integer(a * (a - 1) / 2)) * x0 * y0 + q(Integer(b * (b - 1) / 2)) * x1 * y1 + q(Integer(a * b)) * x0 * y1;
  };
  Matrix<QuadElement> m(2, 2);
  m(0, 0) = QuadElement(1) - q(n.n00);
  m(0, 1) = -q(n.n01);
  m(1, 0) = -q(n.n10);
  m(1, 1) = QuadElement(1) - q(n.n11);
  const QuadElement c0 = offset(n.n00, n.n01), c1 = offset(n.n10, n.n11);

  auto attempt = [&](int r, int s) -> bool {
    const Vec<QuadElement> rhs{c0 + q(Integer(r)) * ld.z2, c1 + q(Integer(s)) * ld.z2};
    auto z = solve(m, rhs);
    if (!z) return false;
    ld.z0 = (*z)[0];
    ld.z1 = (*z)[1];
    ld.r = r;
    ld.s = s;
    return true;
  };
  bool found = attempt(0, 0);
  for (int r = -window; r <= window && !found; ++r)
    for (int s = -window; s <= window && !found; ++s) found = attempt(r, s);
  if (!found)
    throw Error("no-solution-in-window", "(I - N) z = c + (r, s) z2 has no solution for |r|, |s| <= " +
                                             std::to_string(window) + "; c = (" + c0.to_string() + ", " +
                                             c1.to_string() + "), z2 = " + ld.z2.to_string());
  ld.h0 = {x0, y0, ld.z0};
  ld.h1 = {x1, y1, ld.z1};
  ld.h2 = {QuadElement(0), QuadElement(0), ld.z2};
  return ld;
}

bool LatticeReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

LatticeReport verify_lattice(const LatticeData& ld) {
  LatticeReport rep;
  auto check = [&](std::string name, const HeisenbergElement& lhs, const HeisenbergElement& rhs) {
    RelationCheck c{std::move(name), lhs == rhs, {}, {}};
    if (!c.pass) {
      c.lhs = lhs.to_string();
      c.rhs = rhs.to_string();
    }
    rep.checks.push_back(std::move(c));
  };
  auto check_scalar = [&](std::string name, const QuadElement& lhs, const QuadElement& rhs) {
    RelationCheck c{std::move(name), lhs == rhs, {}, {}};
    if (!c.pass) {
      c.lhs = lhs.to_string();
      c.rhs = rhs.to_string();
    }
    rep.checks.push_back(std::move(c));
  };

  const auto& N = ld.N;
  const auto& e = ld.eigen;
  const QuadElement lam = e.lambda, inv = e.lambda.inverse();
  check_scalar("N x+ = lambda x+ (row 0)", q(N.n00) * e.eig_plus[0] + q(N.n01) * e.eig_plus[1], lam * e.eig_plus[0]);
  check_scalar("N x+ = lambda x+ (row 1)", q(N.n10) * e.eig_plus[0] + q(N.n11) * e.eig_plus[1], lam * e.eig_plus[1]);
  check_scalar("N x- = x- / lambda (row 0)", q(N.n00) * e.eig_minus[0] + q(N.n01) * e.eig_minus[1], inv * e.eig_minus[0]);
  check_scalar("N x- = x- / lambda (row 1)", q(N.n10) * e.eig_minus[0] + q(N.n11) * e.eig_minus[1], inv * e.eig_minus[1]);

  const auto& h0 = ld.h0;
  const auto& h1 = ld.h1;
  const auto& h2 = ld.h2;
  check("h2 (h0 h1) = h1 h0", heisenberg_mul(h2, heisenberg_mul(h0, h1)), heisenberg_mul(h1, h0));
  check("h2 h0 = h0 h2", heisenberg_mul(h2, h0), heisenberg_mul(h0, h2));
  check("h1 h2 = h2 h1", heisenberg_mul(h1, h2), heisenberg_mul(h2, h1));
  for (int m0 = -2; m0 <= 2; ++m0)
    for (int m1 = -2; m1 <= 2; ++m1)
      check("h1^" + std::to_string(m1) + " h0^" + std::to_string(m0) + " = h2^" + std::to_string(m0 * m1) + " h0^" +
                std::to_string(m0) + " h1^" + std::to_string(m1),
            heisenberg_mul(heisenberg_pow(h1, m1), heisenberg_pow(h0, m0)),
            heisenberg_mul(heisenberg_pow(h2, m0 * m1), heisenberg_mul(heisenberg_pow(h0, m0), heisenberg_pow(h1, m1))));
  check("psi(1)(h0) = h0^n00 h1^n01 h2^r", psi_one(lam, h0), word(ld, N.n00, N.n01, ld.r));
  check("psi(1)(h1) = h0^n10 h1^n11 h2^s", psi_one(lam, h1), word(ld, N.n10, N.n11, ld.s));
  rep.checks.push_back({"z2 != 0", !ld.z2.is_zero(), ld.z2.is_zero() ? "0" : "", ""});
  return rep;
}

}  // namespace kc
