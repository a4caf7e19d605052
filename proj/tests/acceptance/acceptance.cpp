// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "kcontact/cli/commands.hpp"
#include "kcontact/cohomology/forms.hpp"
#include "kcontact/contact/contact.hpp"
#include "kcontact/lattice/lattice.hpp"
#include "kcontact/liealg/hom.hpp"
#include "kcontact/tievsky/basic.hpp"
#include "kcontact/tievsky/morphism.hpp"
#include "support.hpp"

#include <functional>
#include <iostream>

using namespace kc;
using Betti = std::vector<std::size_t>;

namespace {

const Betti kGpBetti{1, 2, 1, 1, 2, 1};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

cli::Report run(const std::string& command, const std::string& file, std::optional<std::string> at = {}) {
  cli::Options o;
  o.command = command;
  o.file = file;
  o.specialize = std::move(at);
  return cli::run(o);
}

ContactData gp_contact(const LieAlgebra& L) { return *is_contact(L, support::form(L, "Xi*")).data; }

MorphismReport verify(const std::string& path) {
  const dsl::Document doc = dsl::load(path);
  return verify_morphism(
      dsl::build_morphism(doc.morphisms.at(0), std::filesystem::path(path).parent_path(), std::nullopt).morphism);
}

Outcome betti_reproduction() {
  Outcome o;
  const auto generic = run("cohomology", support::fixture("gp.lie"));
  o.require(generic.exit_code == 0 && generic.results["betti"] == nlohmann::json(kGpBetti), "generic Betti");
  o.require(generic.lines.at(0) == "betti: 1 2 1 1 2 1", "text line");
  for (const char* p : {"p=1", "p=2", "p=1/3"}) {
    const auto s = run("cohomology", support::fixture("gp.lie"), std::string(p));
    o.require(s.results["betti"] == nlohmann::json(kGpBetti), std::string("Betti at ") + p);
  }
  return o;
}

Outcome structure_reproduction() {
  Outcome o;
  const LieAlgebra L = support::algebra("gp.lie");
  auto f = [&](const char* s) { return support::form(L, s); };
  const Scalar p = Scalar::parameter();
  o.require(L.d(f("A*")) == p * wedge(f("A*"), f("U*")), "d alpha");
  o.require(L.d(f("B*")) == -p * wedge(f("B*"), f("U*")), "d beta");
  o.require(L.d(f("U*")).is_zero() && L.d(f("R*")).is_zero(), "d theta, d gamma");
  o.require(L.d(f("Xi*")) == -wedge(f("A*"), f("B*")) - wedge(f("R*"), f("U*")), "d eta");
  bool square_zero = true;
  try {
    L.ce_complex().check_square_zero();
  } catch (const Error&) {
    square_zero = false;
  }
  o.require(square_zero, "d^2 = 0");
  return o;
}

Outcome contact_and_k_contact() {
  Outcome o;
  const LieAlgebra L = support::algebra("gp.lie");
  const ContactResult cr = is_contact(L, support::form(L, "Xi*"));
  o.require(cr.contact && !cr.volume.is_zero(), "eta ^ (d eta)^2 != 0");
  if (!cr.contact) return o;
  o.require(cr.data->reeb == L.basis_vector(L.index_of("Xi")), "Reeb = Xi");
  const MetricData md = dsl::build_metric(support::decl("gp.lie"));
  o.require(is_contact_metric(L, *cr.data, md).ok(), "contact metric identities");
  const KContactReport k = is_k_contact(L, *cr.data, md);
  o.require(k.central, "Xi central");
  o.require(k.killing, "ad Xi skew");
  return o;
}

Outcome hard_lefschetz() {
  Outcome o;
  const LieAlgebra L = support::algebra("gp.lie");
  const FormCohomology H(L, ce_form_complex(L));
  const ContactData cd = gp_contact(L);
  o.require(lefschetz_relation(H, cd, 1).graph_of_iso, "degree 1");
  o.require(lefschetz_relation(H, cd, 2).graph_of_iso, "degree 2");
  const LieAlgebra bad = support::algebra("hl-fail.lie");
  const FormCohomology HB(bad, ce_form_complex(bad));
  o.require(!lefschetz_relation(HB, *is_contact(bad, support::form(bad, "X5*")).data, 1).graph_of_iso,
            "counterexample fails in degree 1");
  return o;
}

Outcome basic_cohomology_ring() {
  Outcome o;
  const LieAlgebra L = support::algebra("gp.lie");
  const ContactData cd = gp_contact(L);
  const FormCohomology HB = basic_cohomology(L, cd);
  o.require(HB.betti() == Betti{1, 2, 2, 2, 1}, "basic Betti");
  auto cls = [&](const char* s) { return HB.class_of(support::form(L, s)).cls; };
  const CohClass u = cls("R*"), v = cls("U*"), w = cls("A*^B*");
  o.require(HB.is_zero(HB.cup(u, u)) && HB.is_zero(HB.cup(v, v)), "u^2 = v^2 = 0");
  o.require(HB.is_zero(HB.cup(w, w)), "w^2 = 0");
  o.require(!HB.is_zero(HB.cup(HB.cup(u, v), w)), "uvw != 0");
  const IdentifiedRing R = identify_ring(HB, {{"u", support::form(L, "R*")},
                                              {"v", support::form(L, "U*")},
                                              {"w", support::form(L, "A*^B*")}});
  o.require(R.isomorphism, "ring identification");
  if (R.isomorphism) o.require(R.ring.format(R.pull(HB.class_of(L.d(cd.eta)).cls)) == "-u*v - w", "[d eta]_B");
  return o;
}

Outcome tievsky_and_formality() {
  Outcome o;
  const auto t = run("tievsky", support::fixture("gp.lie"));
  o.require(t.exit_code == 0 && t.results["model_betti"] == t.results["ce_betti"], "model Betti = CE Betti");
  o.require(verify(support::fixture("tau.mor")).quasi_iso, "tau quasi-iso");
  o.require(verify(support::fixture("rho.mor")).quasi_iso, "rho quasi-iso");
  o.require(!verify(support::data("rho-zero.mor")).quasi_iso, "rho' not quasi-iso");
  return o;
}

Outcome lattice() {
  Outcome o;
  for (const HyperbolicMatrix& n : {HyperbolicMatrix{2, 1, 1, 1}, HyperbolicMatrix{3, 1, 2, 1}, HyperbolicMatrix{5, 2, 2, 1}}) {
    const LatticeData ld = build_lattice(n);
    o.require(verify_lattice(ld).ok(), "relations for " + n.to_string());
    o.require(!ld.z2.is_zero(), "z2 != 0 for " + n.to_string());
  }
  cli::Options opts;
  opts.command = "lattice";
  opts.matrix = "2,1,1,1";
  const auto rep = cli::run(opts);
  o.require(rep.exit_code == 0 && rep.field == "Q(sqrt5)", "lattice command over Q(sqrt5)");
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(2024);
  for (const auto& f : support::corpus()) {
    const LieAlgebra L = support::algebra(f);
    const DualityReport d = duality_report(L);
    if (L.dim() >= 1) o.require(d.euler == 0, "Euler characteristic of " + f);
    if (d.unimodular) o.require(d.poincare, "Poincare duality of " + f);
    if (L.dim() <= 6) {
      const Betti generic = betti(L.ce_complex());
      for (int t = 0; t < 5; ++t) {
        Rational r = support::random_rational(rng);
        if (r == 0) r = Rational(2, 5);
        o.require(oracle::betti(support::constants_at(L, r)) == generic, "oracle Betti of " + f + " at " + r.get_str());
      }
    }
  }
  const LieAlgebra L = support::algebra("gp.lie");
  const FormCohomology H(L, ce_form_complex(L));
  std::uniform_int_distribution<int> c(-2, 2);
  auto perturb = [&](const CohClass& x) {
    Form noise(L.dim(), x.degree - 1);
    for (Blade b : L.blades().of_degree(x.degree - 1))
      if (int v = c(rng)) noise.add_term(b, Scalar(v));
    return H.representative(x) + L.d(noise);
  };
  const auto b = H.betti();
  for (int t = 0; t < 100; ++t) {
    const int j = 1 + t % 2, k = 2;
    CohClass x{j, Vector(b[static_cast<std::size_t>(j)], Scalar(0))}, y{k, Vector(b[static_cast<std::size_t>(k)], Scalar(0))};
    for (auto& e : x.coords) e = c(rng);
    for (auto& e : y.coords) e = c(rng);
    const FormClassResult z = H.class_of(wedge(perturb(x), perturb(y)));
    o.require(z.closed && z.cls.coords == H.cup(x, y).coords, "cup product independent of representatives");
  }
  return o;
}

Outcome symplectic_quotient() {
  Outcome o;
  const LieAlgebra g = support::algebra("gp.lie"), kr = support::algebra("k-times-r.lie");
  const AlgebraHom pi = AlgebraHom::by_names(g, kr);
  const dsl::AlgebraDecl kd = support::decl("k-times-r.lie");
  const Form omega = dsl::build_form(kd, *kd.symplectic);
  const ContactData cd = gp_contact(g);
  o.require(symplectization_quotient_check(pi, omega, cd).equal, "pi* Omega = d eta");
  o.require(!symplectization_quotient_check(pi, -omega, cd).equal, "sign-flipped Omega rejected");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Betti numbers of gp are 1 2 1 1 2 1, generic and at p = 1, 2, 1/3", betti_reproduction},
      {"2 structure equations of gp and d^2 = 0", structure_reproduction},
      {"3 eta contact, Reeb = Xi, contact metric identities, K-contact", contact_and_k_contact},
      {"4 Hard Lefschetz in degrees 1 and 2; b1 = 3 algebra fails in degree 1", hard_lefschetz},
      {"5 basic Betti 1 2 2 2 1, ring relations, [d eta]_B = -uv - w", basic_cohomology_ring},
      {"6 Tievsky model Betti, tau and rho quasi-isomorphisms, rho' not", tievsky_and_formality},
      {"7 lattice relations for [[2,1],[1,1]], [[3,1],[2,1]], [[5,2],[2,1]]", lattice},
      {"8 Euler, Poincare, oracle Betti, representative-independent cup products", property_suites},
      {"9 symplectic quotient pi* Omega = d eta, sign flip rejected", symplectic_quotient},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.pass) std::cout << "  [" << o.detail << "]";
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (9 - failed) << "/9 criteria pass\n";
  return failed ? 1 : 0;
}
