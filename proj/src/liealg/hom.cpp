#include "kcontact/liealg/hom.hpp"

namespace kc {

AlgebraHom::AlgebraHom(LieAlgebra source, LieAlgebra target, Matrix<Scalar> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const auto ns = static_cast<std::size_t>(source_.dim());
  const auto nt = static_cast<std::size_t>(target_.dim());
  if (matrix_.rows() != nt || matrix_.cols() != ns) throw Error("dimension-mismatch", "homomorphism matrix shape");
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = i + 1; j < ns; ++j) {
      const Vector lhs = apply(source_.bracket(static_cast<int>(i), static_cast<int>(j)));
      const Vector rhs = target_.bracket(matrix_.column(i), matrix_.column(j));
      if (lhs != rhs)
        throw Error("not-a-homomorphism", "h([" + source_.names()[i] + ", " + source_.names()[j] +
                                              "]) differs from [h(" + source_.names()[i] + "), h(" +
                                              source_.names()[j] + ")]");
    }
}

AlgebraHom AlgebraHom::by_names(LieAlgebra source, LieAlgebra target) {
  Matrix<Scalar> m(static_cast<std::size_t>(target.dim()), static_cast<std::size_t>(source.dim()));
  for (int i = 0; i < source.dim(); ++i) {
    const int t = target.index_of(source.names()[static_cast<std::size_t>(i)]);
    if (t >= 0) m(static_cast<std::size_t>(t), static_cast<std::size_t>(i)) = Scalar(1);
  }
  return AlgebraHom(std::move(source), std::move(target), std::move(m));
}

Form pullback(const AlgebraHom& h, const Form& a) {
  const int ns = h.source().dim();
  if (a.dim() != h.target().dim()) throw Error("dimension-mismatch", "pullback of a form on another algebra");
  // h*(e^k) = sum_i M(k, i) e^i
  std::vector<Form> pulled;
  for (int k = 0; k < a.dim(); ++k) {
    Form f(ns, 1);
    for (int i = 0; i < ns; ++i) {
      const Scalar& c = h.matrix()(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
      if (!c.is_zero()) f.add_term(Blade{1} << i, c);
    }
    pulled.push_back(std::move(f));
  }
  Form out(ns, a.degree());
  for (const auto& [blade, coef] : a.terms()) {
    Form term = Form::constant(ns, coef);
    for (int k : blade_indices(blade)) term = wedge(term, pulled[static_cast<std::size_t>(k)]);
    out += term;
  }
  return out;
}

}  // namespace kc
