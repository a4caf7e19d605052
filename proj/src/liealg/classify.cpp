#include "kcontact/liealg/classify.hpp"

#include "kcontact/linalg/elimination.hpp"
#include "kcontact/scalars/roots.hpp"

namespace kc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<Vector> bracket_span(const LieAlgebra& L, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> products;
  for (const auto& x : a)
    for (const auto& y : b) products.push_back(L.bracket(x, y));
  return span_basis(products, static_cast<std::size_t>(L.dim()));
}

std::vector<Scalar> ad_traces(const LieAlgebra& L) {
  std::vector<Scalar> out;
  for (int i = 0; i < L.dim(); ++i) {
    Scalar t(0);
    for (int j = 0; j < L.dim(); ++j) t += L.bracket(i, j)[static_cast<std::size_t>(j)];
    out.push_back(t);
  }
  return out;
}

namespace {

std::vector<Vector> standard_basis(int n) {
  std::vector<Vector> out;
  for (int i = 0; i < n; ++i) {
    Vector v(static_cast<std::size_t>(n), Scalar(0));
    v[static_cast<std::size_t>(i)] = Scalar(1);
    out.push_back(std::move(v));
  }
  return out;
}

// Coordinates on g / I: complement spanned by the non-pivot standard vectors.
struct Quotient {
  Echelon<Scalar> ideal;
  std::vector<std::size_t> free;  // complement coordinates

  Quotient(const std::vector<Vector>& basis, std::size_t n) {
    ideal = basis.empty() ? Echelon<Scalar>{Matrix<Scalar>(0, n), {}} : rref(Matrix<Scalar>::from_rows(basis, n));
    std::vector<bool> pivot(n, false);
    for (auto c : ideal.pivots) pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!pivot[c]) free.push_back(c);
  }

  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < ideal.pivots.size(); ++k) {
      const Scalar c = v[ideal.pivots[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!ideal.reduced(k, j).is_zero()) v[j] -= c * ideal.reduced(k, j);
    }
    return v;
  }

  Vector coords(const Vector& v) const {
    Vector r = reduce(v);
    Vector out;
    for (auto c : free) out.push_back(r[c]);
    return out;
  }

  Vector lift(const Vector& q, std::size_t n) const {
    Vector v(n, Scalar(0));
    for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = q[k];
    return v;
  }
};

struct EigenSearch {
  std::vector<Matrix<Scalar>> ops;
  std::vector<RootSearch> spectra;
  bool limited = false;

  // W given by column basis; intersect with eigenspaces of ops[j..].
  std::optional<Vector> run(const std::vector<Vector>& W, std::size_t j) {
    if (W.empty()) return std::nullopt;
    if (j == ops.size()) return W.front();
    const std::size_t m = ops[j].rows();
    const Matrix<Scalar> wm = Matrix<Scalar>::from_columns(W, m);
    for (const auto& [lambda, mult] : spectra[j].roots) {
      Matrix<Scalar> shifted = ops[j];
      for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= lambda;
      std::vector<Vector> next;
      for (const auto& c : kernel_basis(shifted * wm)) next.push_back(wm * c);
      next = span_basis(next, m);
      if (auto found = run(next, j + 1)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Vector> common_eigenvector_mod(const LieAlgebra& L, const std::vector<Vector>& ideal, bool& limited) {
  const auto n = static_cast<std::size_t>(L.dim());
  const Quotient q(ideal, n);
  const std::size_t m = q.free.size();
  if (m == 0) return std::nullopt;
  EigenSearch search;
  for (int j = 0; j < L.dim(); ++j) {
    Matrix<Scalar> t(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      Vector image = q.coords(L.bracket(L.basis_vector(j), q.lift(standard_basis(static_cast<int>(m))[c], n)));
      for (std::size_t r = 0; r < m; ++r) t(r, c) = image[r];
    }
    RootSearch rs = roots_in_field(charpoly(t));
    if (!rs.splits || !rs.exhaustive) limited = true;
    search.ops.push_back(std::move(t));
    search.spectra.push_back(std::move(rs));
  }
  auto found = search.run(standard_basis(static_cast<int>(m)), 0);
  if (!found) return std::nullopt;
  return q.lift(*found, n);
}

StructureReport classify(const LieAlgebra& L, std::optional<Rational> sample) {
  StructureReport rep;
  const int n = L.dim();
  const auto all = standard_basis(n);

  std::vector<Vector> cur = all;
  rep.lower_central_dims.push_back(cur.size());
  while (!cur.empty()) {
    auto next = bracket_span(L, all, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    rep.lower_central_dims.push_back(cur.size());
  }
  rep.nilpotent = cur.empty();

  cur = all;
  rep.derived_dims.push_back(cur.size());
  while (!cur.empty()) {
    auto next = bracket_span(L, cur, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    rep.derived_dims.push_back(cur.size());
  }
  rep.solvable = cur.empty();

  const auto traces = ad_traces(L);
  rep.unimodular = std::all_of(traces.begin(), traces.end(), [](const Scalar& t) { return t.is_zero(); });
  if (sample) {
    bool ok = true;
    for (const auto& t : traces)
      if (specialize(t, *sample) != 0) ok = false;
    rep.unimodular_at_specialization = ok;
  }

  if (!rep.solvable) {
    rep.completely_solvable = Verdict::no;
    return rep;
  }
  std::vector<Vector> flag;
  bool limited = false;
  while (static_cast<int>(flag.size()) < n) {
    auto v = common_eigenvector_mod(L, flag, limited);
    if (!v) {
      rep.completely_solvable = limited ? Verdict::unknown : Verdict::no;
      return rep;
    }
    flag.push_back(std::move(*v));
  }
  rep.completely_solvable = Verdict::yes;
  rep.flag = std::move(flag);
  return rep;
}

}  // namespace kc
