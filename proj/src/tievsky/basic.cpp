#include "kcontact/tievsky/basic.hpp"

#include "kcontact/linalg/elimination.hpp"

namespace kc {

FormComplex basic_complex(const LieAlgebra& L, const ContactData& cd) {
  const int n = L.dim();
  const BladeBasis& blades = L.blades();
  FormComplex fc;
  fc.dim = n;
  for (int k = 0; k <= n; ++k) {
    const auto& src = blades.of_degree(k);
    const std::size_t below = k > 0 ? blades.count(k - 1) : 0;
    Matrix<Scalar> cond(below + blades.count(k), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Form b = Form::blade(n, src[c]);
      if (k > 0) {
        const Form ib = interior(cd.reeb, b);
        for (const auto& [bl, coef] : ib.terms()) cond(blades.index(bl), c) = coef;
      }
      if (k < n) {
        const Form idb = interior(cd.reeb, L.d(b));
        for (const auto& [bl, coef] : idb.terms()) cond(below + blades.index(bl), c) = coef;
      }
    }
    std::vector<Form> forms;
    for (const auto& v : kernel_basis(cond)) forms.push_back(Form::from_coordinates(blades, k, v));
    std::vector<Vector> cols;
    for (const auto& f : forms) cols.push_back(f.coordinates(blades));
    fc.embedding.push_back(Matrix<Scalar>::from_columns(cols, blades.count(k)));
    fc.basis.push_back(std::move(forms));
    fc.complex.dims.push_back(fc.basis.back().size());
  }
  for (int k = 0; k < n; ++k) {
    const auto& forms = fc.basis[static_cast<std::size_t>(k)];
    Matrix<Scalar> d(fc.complex.dims[static_cast<std::size_t>(k + 1)], forms.size());
    for (std::size_t c = 0; c < forms.size(); ++c) {
      auto coords = fc.coordinates(L.d(forms[c]), blades);
      if (!coords) throw Error("not-closed-under-d", "d of a basic form is not basic");
      for (std::size_t r = 0; r < coords->size(); ++r) d(r, c) = (*coords)[r];
    }
    fc.complex.d.push_back(std::move(d));
  }
  // i_xi is injective on top-degree forms, so the complex ends one degree early
  while (fc.basis.size() > 1 && fc.basis.back().empty()) {
    fc.basis.pop_back();
    fc.embedding.pop_back();
    fc.complex.dims.pop_back();
    fc.complex.d.pop_back();
  }
  fc.complex.check_square_zero();
  return fc;
}

}  // namespace kc
