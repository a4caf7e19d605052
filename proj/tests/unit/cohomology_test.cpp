#include "kcontact/cohomology/forms.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kc;

namespace {

using Betti = std::vector<std::size_t>;

Form random_form(std::mt19937& rng, const LieAlgebra& L, int k) {
  std::uniform_int_distribution<int> c(-3, 3);
  Form f(L.dim(), k);
  for (Blade b : L.blades().of_degree(k))
    if (int v = c(rng)) f.add_term(b, Scalar(v));
  return f;
}

}  // namespace

TEST_CASE("Betti numbers of small algebras") {
  CHECK(betti(support::algebra("heis3.lie").ce_complex()) == Betti{1, 2, 2, 1});
  CHECK(betti(support::algebra("heis5.lie").ce_complex()) == Betti{1, 4, 5, 5, 4, 1});
  CHECK(betti(support::algebra("gp.lie").ce_complex()) == Betti{1, 2, 1, 1, 2, 1});
  CHECK(betti(LieAlgebra::build({"A", "B", "C"}, {}).ce_complex()) == Betti{1, 3, 3, 1});
}

TEST_CASE("generic Betti numbers match the dense oracle at random parameters") {
  std::mt19937 rng(47);
  for (const auto& f : support::corpus()) {
    CAPTURE(f);
    const LieAlgebra L = support::algebra(f);
    if (L.dim() > 6) continue;
    const Betti generic = betti(L.ce_complex());
    for (int t = 0; t < 5; ++t) {
      Rational r = support::random_rational(rng);
      if (r == 0) r = Rational(1, 7);
      CAPTURE(r.get_str());
      CHECK(oracle::betti(support::constants_at(L, r)) == generic);
      if (L.field().parameter) CHECK(betti(L.specialize(r).ce_complex()) == generic);
    }
  }
}

TEST_CASE("Euler characteristic and Poincare duality on the corpus") {
  for (const auto& f : support::corpus()) {
    CAPTURE(f);
    const LieAlgebra L = support::algebra(f);
    const DualityReport d = duality_report(L);
    CHECK(d.euler == 0);
    if (d.unimodular) CHECK(d.poincare);
  }
  // aff is not unimodular and duality fails: (1, 1, 0)
  const DualityReport aff = duality_report(support::algebra("aff.lie"));
  CHECK_FALSE(aff.unimodular);
  CHECK_FALSE(aff.poincare);
}

TEST_CASE("parallel and per-degree cohomology spaces agree") {
  const LieAlgebra L = support::algebra("heis5.lie");
  const auto all = cohomology_spaces(L.ce_complex());
  for (int k = 0; k <= L.dim(); ++k) {
    const auto one = cohomology_space(L.ce_complex(), k);
    CHECK(one.betti == all[static_cast<std::size_t>(k)].betti);
    CHECK(one.representatives == all[static_cast<std::size_t>(k)].representatives);
  }
}

TEST_CASE("representatives and classes on gp") {
  const LieAlgebra L = support::algebra("gp.lie");
  const FormCohomology H(L, ce_form_complex(L));
  auto f = [&](const char* s) { return support::form(L, s); };

  const auto h1 = H.representatives(1);
  CHECK(h1 == std::vector<Form>{f("U*"), f("R*")});
  CHECK(H.representatives(5) == std::vector<Form>{f("A*^B*^U*^R*^Xi*")});

  const FormClassResult ab = H.class_of(f("A*^B*")), gt = H.class_of(f("R*^U*"));
  REQUIRE(ab.closed);
  REQUIRE(gt.closed);
  CHECK_FALSE(H.is_zero(ab.cls));
  for (std::size_t i = 0; i < ab.cls.coords.size(); ++i) CHECK(ab.cls.coords[i] == -gt.cls.coords[i]);

  const FormClassResult de = H.class_of(L.d(f("Xi*")));
  CHECK(de.closed);
  CHECK(H.is_zero(de.cls));

  const FormClassResult a = H.class_of(f("A*"));
  CHECK_FALSE(a.closed);
  CHECK(a.witness == Scalar::parameter() * f("A*^U*"));
}

TEST_CASE("cup products on gp") {
  const LieAlgebra L = support::algebra("gp.lie");
  const FormCohomology H(L, ce_form_complex(L));
  const CohClass theta = H.class_of(support::form(L, "U*")).cls, gamma = H.class_of(support::form(L, "R*")).cls;
  CHECK_FALSE(H.is_zero(H.cup(theta, gamma)));
  CHECK(H.is_zero(H.cup(theta, theta)));
  CHECK(H.cup(H.unit(), theta).coords == theta.coords);
  CHECK(H.cup(theta, gamma).coords == H.class_of(support::form(L, "U*^R*")).cls.coords);
}

TEST_CASE("cup products do not depend on representatives") {
  std::mt19937 rng(53);
  for (const auto& f : {"gp.lie", "heis5.lie", "hl-fail.lie"}) {
    CAPTURE(f);
    const LieAlgebra L = support::algebra(f);
    const FormCohomology H(L, ce_form_complex(L));
    const auto b = H.betti();
    std::uniform_int_distribution<int> deg(1, L.dim() - 1), c(-2, 2);
    int done = 0;
    while (done < 100) {
      const int j = deg(rng), k = deg(rng);
      if (j + k > L.dim() || b[static_cast<std::size_t>(j)] == 0 || b[static_cast<std::size_t>(k)] == 0) continue;
      CohClass x{j, Vector(b[static_cast<std::size_t>(j)], Scalar(0))}, y{k, Vector(b[static_cast<std::size_t>(k)], Scalar(0))};
      for (auto& e : x.coords) e = c(rng);
      for (auto& e : y.coords) e = c(rng);
      const Form xr = H.representative(x) + L.d(random_form(rng, L, j - 1));
      const Form yr = H.representative(y) + L.d(random_form(rng, L, k - 1));
      const FormClassResult z = H.class_of(wedge(xr, yr));
      REQUIRE(z.closed);
      CHECK(z.cls.coords == H.cup(x, y).coords);
      ++done;
    }
  }
}

TEST_CASE("class lookup rejects forms outside the complex") {
  const LieAlgebra L = support::algebra("heis3.lie");
  const FormCohomology H(L, ce_form_complex(L));
  CHECK(H.class_of(support::form(L, "X*^Y*")).closed);
  CHECK(H.is_zero(H.class_of(support::form(L, "X*^Y*")).cls));
  CHECK_FALSE(H.class_of(support::form(L, "Z*")).closed);
}
