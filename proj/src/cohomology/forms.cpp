#include "kcontact/cohomology/forms.hpp"

#include "kcontact/liealg/classify.hpp"
#include "kcontact/linalg/elimination.hpp"

namespace kc {

std::optional<Vector> FormComplex::coordinates(const Form& f, const BladeBasis& blades) const {
  const auto k = static_cast<std::size_t>(f.degree());
  if (k >= basis.size()) return std::nullopt;
  const Vector b = f.coordinates(blades);
  if (basis[k].empty()) {
    if (!is_zero_vec(b)) return std::nullopt;
    return Vector{};
  }
  return solve(embedding[k], b);
}

Form FormComplex::form(int k, const Vector& coords) const {
  Form out(dim, k);
  const auto& forms = basis.at(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!coords[i].is_zero()) out += coords[i] * forms[i];
  return out;
}

FormComplex ce_form_complex(const LieAlgebra& L) {
  FormComplex fc;
  fc.dim = L.dim();
  fc.complex = L.ce_complex();
  const BladeBasis& blades = L.blades();
  for (int k = 0; k <= L.dim(); ++k) {
    std::vector<Form> forms;
    for (Blade b : blades.of_degree(k)) forms.push_back(Form::blade(L.dim(), b));
    fc.basis.push_back(std::move(forms));
    fc.embedding.push_back(Matrix<Scalar>::identity(blades.count(k)));
  }
  return fc;
}

FormCohomology::FormCohomology(const LieAlgebra& L, FormComplex fc)
    : algebra_(L), fc_(std::move(fc)), spaces_(cohomology_spaces(fc_.complex)) {}

std::vector<std::size_t> FormCohomology::betti() const {
  std::vector<std::size_t> out;
  for (const auto& s : spaces_) out.push_back(s.betti);
  return out;
}

std::vector<Form> FormCohomology::representatives(int k) const {
  std::vector<Form> out;
  for (const auto& r : space(k).representatives) out.push_back(fc_.form(k, r));
  return out;
}

Form FormCohomology::representative(const CohClass& c) const {
  const auto& s = space(c.degree);
  return fc_.form(c.degree, representative_of(s, c.coords, fc_.complex.dims[static_cast<std::size_t>(c.degree)]));
}

FormClassResult FormCohomology::class_of(const Form& a) const {
  auto coords = fc_.coordinates(a, algebra_.blades());
  if (!coords) throw Error("not-in-subcomplex", "form is not a cochain of this complex");
  const int k = a.degree();
  ClassResult r = kc::class_of(fc_.complex, space(k), *coords);
  FormClassResult out;
  out.closed = r.closed;
  out.cls.degree = k;
  if (r.closed) {
    out.cls.coords = std::move(r.coords);
  } else {
    out.witness = fc_.form(k + 1, r.witness);
  }
  return out;
}

CohClass FormCohomology::cup(const CohClass& x, const CohClass& y) const {
  if (x.degree + y.degree > top()) return CohClass{x.degree + y.degree, {}};
  auto r = class_of(wedge(representative(x), representative(y)));
  if (!r.closed) throw Error("d-squared-nonzero", "wedge of cocycles is not closed");
  return r.cls;
}

CohClass FormCohomology::unit() const {
  auto r = class_of(Form::constant(algebra_.dim(), Scalar(1)));
  return r.cls;
}

DualityReport duality_report(const LieAlgebra& L) {
  DualityReport rep;
  rep.betti = betti(L.ce_complex());
  for (std::size_t k = 0; k < rep.betti.size(); ++k) {
    const long b = static_cast<long>(rep.betti[k]);
    rep.euler += (k % 2 == 0) ? b : -b;
  }
  const auto tr = ad_traces(L);
  rep.unimodular = std::all_of(tr.begin(), tr.end(), [](const Scalar& t) { return t.is_zero(); });
  rep.poincare = true;
  const std::size_t n = rep.betti.size();
  for (std::size_t k = 0; k < n; ++k)
    if (rep.betti[k] != rep.betti[n - 1 - k]) rep.poincare = false;
  return rep;
}

}  // namespace kc
