#include "kcontact/contact/contact.hpp"
#include "kcontact/liealg/hom.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kc;

namespace {

struct Gp {
  LieAlgebra L = support::algebra("gp.lie");
  dsl::AlgebraDecl decl = support::decl("gp.lie");
  ContactData cd = *is_contact(L, support::form(L, "Xi*")).data;
  MetricData md = dsl::build_metric(decl);
};

const IdentityCheck& find(const ContactMetricReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST_CASE("contact forms and Reeb vectors") {
  Gp g;
  const ContactResult r = is_contact(g.L, support::form(g.L, "Xi*"));
  CHECK(r.contact);
  CHECK(r.data->reeb == g.L.basis_vector(4));
  CHECK(r.data->n == 2);
  CHECK(r.volume == Scalar(-2) * support::form(g.L, "A*^B*^U*^R*^Xi*"));

  const LieAlgebra h = support::algebra("heis3.lie");
  const ContactResult rh = is_contact(h, support::form(h, "Z*"));
  CHECK(rh.contact);
  CHECK(rh.data->reeb == h.basis_vector(2));
  CHECK(rh.volume == -support::form(h, "Z*^X*^Y*"));

  const LieAlgebra ab = LieAlgebra::build({"A", "B", "C", "D", "E"}, {});
  CHECK_FALSE(is_contact(ab, support::form(ab, "A* + E*")).contact);

  try {
    is_contact(support::algebra("k-times-r.lie"), support::form(support::algebra("k-times-r.lie"), "A*"));
    FAIL("expected even-dimension");
  } catch (const Error& e) {
    CHECK(e.kind() == "even-dimension");
  }
}

TEST_CASE("the K-contact structure of gp") {
  Gp g;
  const ContactMetricReport r = is_contact_metric(g.L, g.cd, g.md);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.status == CheckStatus::pass);
  }
  CHECK(r.ok());
  const KContactReport k = is_k_contact(g.L, g.cd, g.md);
  CHECK(k.central);
  CHECK(k.killing);

  const LieAlgebra h = support::algebra("heis5.lie");
  const dsl::AlgebraDecl hd = support::decl("heis5.lie");
  const ContactData hc = *is_contact(h, support::form(h, "Z*")).data;
  CHECK(is_contact_metric(h, hc, dsl::build_metric(hd)).ok());
  const KContactReport hk = is_k_contact(h, hc, dsl::build_metric(hd));
  CHECK(hk.central);
  CHECK(hk.killing);
}

TEST_CASE("broken contact metric data is caught") {
  Gp g;
  MetricData flipped = g.md;
  flipped.phi(1, 0) = 1;  // phi(A) = +B
  const IdentityCheck& c = find(is_contact_metric(g.L, g.cd, flipped), "deta-compatible");
  CHECK(c.status == CheckStatus::fail);
  REQUIRE(c.witness);
  CHECK(((c.witness->first == 0 && c.witness->second == 1) || (c.witness->first == 1 && c.witness->second == 0)));

  ContactData scaled = g.cd;
  for (auto& x : scaled.reeb) x *= Scalar(2);
  CHECK(find(is_contact_metric(g.L, scaled, g.md), "phi-squared").status == CheckStatus::fail);
}

TEST_CASE("a non-Killing Reeb field") {
  // [Xi, A] = A; Xi is not skew for the identity metric
  const LieAlgebra L = LieAlgebra::build({"A", "B", "Xi"}, {{0, 2, Vector{Scalar(-1), Scalar(0), Scalar(0)}}});
  ContactData cd;
  cd.eta = Form::covector(3, 2);
  cd.reeb = L.basis_vector(2);
  cd.n = 1;
  MetricData md{Matrix<Scalar>::identity(3), Matrix<Scalar>(3, 3)};
  const KContactReport k = is_k_contact(L, cd, md);
  CHECK_FALSE(k.central);
  CHECK_FALSE(k.killing);
  REQUIRE(k.witness);
  CHECK(*k.witness == std::pair<int, int>{0, 0});
}

TEST_CASE("Hard Lefschetz on gp") {
  Gp g;
  const FormCohomology H(g.L, ce_form_complex(g.L));
  for (int p : {0, 1, 2}) {
    const LefschetzReport r = lefschetz_relation(H, g.cd, p);
    CAPTURE(p);
    CHECK(r.graph_of_iso);
    CHECK(r.dim_h == H.betti()[static_cast<std::size_t>(p)]);
  }
  // degree 1: [theta] -> [eta ^ d eta ^ theta] = -[eta^alpha^beta^theta]
  const Form eta = g.cd.eta, deta = g.L.d(eta);
  for (const char* b : {"U*", "R*"}) {
    const Form beta = support::form(g.L, b);
    const Form image = wedge(wedge(eta, deta), beta);
    CHECK(image == -wedge(wedge(eta, support::form(g.L, "A*^B*")), beta));
    CHECK(H.class_of(image).closed);
    CHECK_FALSE(H.is_zero(H.class_of(image).cls));
  }
  // degree 2: the primitive representative (gamma^theta - alpha^beta)/2
  const Form prim = Scalar(Rational(1, 2)) * support::form(g.L, "R*^U* - A*^B*");
  CHECK(wedge(deta, prim).is_zero());
  CHECK(g.L.d(prim).is_zero());
  CHECK_FALSE(H.is_zero(H.class_of(wedge(eta, prim)).cls));
}

TEST_CASE("Hard Lefschetz fails in degree 1 when b1 is odd") {
  const LieAlgebra L = support::algebra("hl-fail.lie");
  const ContactData cd = *is_contact(L, support::form(L, "X5*")).data;
  const FormCohomology H(L, ce_form_complex(L));
  CHECK(H.betti()[1] == 3);
  const auto lr = lefschetz_relation(H, cd, 1);
  CHECK_FALSE(lr.graph_of_iso);
  // The relation is a well-defined map; it fails by not being onto.
  CHECK(lr.total);
  CHECK(lr.single_valued);
  CHECK(lr.image_rank < lr.dim_h_image);
}

TEST_CASE("symplectization quotient") {
  Gp g;
  const LieAlgebra kr = support::algebra("k-times-r.lie");
  const AlgebraHom pi = AlgebraHom::by_names(g.L, kr);
  const Form omega = support::form(kr, "-(A*^B* + R*^U*)");
  const QuotientCheck ok = symplectization_quotient_check(pi, omega, g.cd);
  CHECK(ok.equal);
  CHECK(ok.difference.is_zero());
  const QuotientCheck flipped = symplectization_quotient_check(pi, -omega, g.cd);
  CHECK_FALSE(flipped.equal);
  CHECK(flipped.difference == Scalar(2) * support::form(g.L, "A*^B* + R*^U*"));
  try {
    symplectization_quotient_check(pi, support::form(kr, "A*^B*"), g.cd);
    FAIL("expected omega-degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == "omega-degenerate");
  }
}
