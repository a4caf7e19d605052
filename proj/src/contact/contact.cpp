#include "kcontact/contact/contact.hpp"

#include "kcontact/linalg/elimination.hpp"

namespace kc {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Linear map beta -> op(beta) from degree-k blade coords to degree-m blade coords.
template <class Op>
Matrix<Scalar> operator_matrix(const BladeBasis& blades, int k, int m, Op op) {
  Matrix<Scalar> out(blades.count(m), blades.count(k));
  const auto& src = blades.of_degree(k);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Form image = op(Form::blade(blades.dim(), src[c]));
    for (const auto& [b, coef] : image.terms()) out(blades.index(b), c) = coef;
  }
  return out;
}

Matrix<Scalar> stack(const std::vector<Matrix<Scalar>>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix<Scalar> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = p(i, j);
    r0 += p.rows();
  }
  return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unknown: return "unknown";
  }
  return "unknown";
}

bool ContactMetricReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.status == CheckStatus::pass; });
}

ContactResult is_contact(const LieAlgebra& L, const Form& eta) {
  const int dim = L.dim();
  if (dim % 2 == 0) throw Error("even-dimension", "contact forms need odd dimension");
  if (eta.degree() != 1 || eta.dim() != dim) throw Error("invalid-degree", "contact form must be a 1-form on the algebra");
  const int n = (dim - 1) / 2;
  const Form deta = L.d(eta);
  ContactResult res;
  res.volume = wedge(eta, power(deta, n));
  if (res.volume.is_zero()) return res;
  res.contact = true;

  // eta(xi) = 1 and i_xi d eta = 0, stacked as one linear system in xi.
  const auto un = sz(dim);
  Matrix<Scalar> a(1 + un, un);
  Vector rhs(1 + un, Scalar(0));
  rhs[0] = Scalar(1);
  for (int j = 0; j < dim; ++j) {
    a(0, sz(j)) = eta.coeff(Blade{1} << j);
    const Form c = interior(L.basis_vector(j), deta);
    for (int i = 0; i < dim; ++i) a(1 + sz(i), sz(j)) = c.coeff(Blade{1} << i);
  }
  auto xi = solve(a, rhs);
  if (!xi || rank(a) != un) throw Error("internal", "Reeb system is not uniquely solvable for a contact form");
  res.data = ContactData{eta, std::move(*xi), n};
  return res;
}

ContactMetricReport is_contact_metric(const LieAlgebra& L, const ContactData& cd, const MetricData& md,
                                      std::optional<Rational> sample) {
  const auto n = sz(L.dim());
  if (md.g.rows() != n || md.g.cols() != n || md.phi.rows() != n || md.phi.cols() != n)
    throw Error("dimension-mismatch", "metric and phi must be square of the algebra's dimension");
  ContactMetricReport rep;
  Vector eta(n);
  for (std::size_t i = 0; i < n; ++i) eta[i] = cd.eta.coeff(Blade{1} << i);

  auto compare = [&](const std::string& name, const Matrix<Scalar>& lhs, const Matrix<Scalar>& rhs) {
    IdentityCheck c;
    c.name = name;
    for (std::size_t i = 0; i < lhs.rows() && c.status == CheckStatus::pass; ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (lhs(i, j) != rhs(i, j)) {
          c.status = CheckStatus::fail;
          c.witness = {static_cast<int>(i), static_cast<int>(j)};
          c.lhs = lhs(i, j);
          c.rhs = rhs(i, j);
          break;
        }
    rep.checks.push_back(std::move(c));
  };

  compare("metric-symmetric", md.g, md.g.transpose());

  Matrix<Scalar> target = Matrix<Scalar>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) target(i, j) = cd.reeb[i] * eta[j] - target(i, j);
  compare("phi-squared", md.phi * md.phi, target);

  Matrix<Scalar> pxi(n, 1), zero(n, 1);
  const Vector v = md.phi * cd.reeb;
  for (std::size_t i = 0; i < n; ++i) pxi(i, 0) = v[i];
  compare("phi-reeb", pxi, zero);

  Matrix<Scalar> gm = md.g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gm(i, j) -= eta[i] * eta[j];
  compare("metric-compatible", md.phi.transpose() * md.g * md.phi, gm);

  const Form deta = L.d(cd.eta);
  Matrix<Scalar> dm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector vs[2] = {L.basis_vector(static_cast<int>(i)), L.basis_vector(static_cast<int>(j))};
      dm(i, j) = evaluate(deta, vs);
    }
  compare("deta-compatible", dm, md.phi.transpose() * md.g);

  IdentityCheck pd;
  pd.name = "positive-definite";
  for (std::size_t k = 1; k <= n && pd.status != CheckStatus::fail; ++k) {
    Matrix<Scalar> lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = md.g(i, j);
    const Scalar minor = determinant(lead);
    std::optional<Rational> value;
    if (minor.is_constant()) {
      value = minor.constant_value();
    } else if (sample) {
      value = specialize(minor, *sample);
    }
    if (!value) {
      pd.status = CheckStatus::unknown;
      pd.note = "leading minor " + std::to_string(k) + " depends on the parameter; pass a sample value";
      continue;
    }
    if (sgn(*value) <= 0) {
      pd.status = CheckStatus::fail;
      pd.witness = {static_cast<int>(k), static_cast<int>(k)};
      pd.lhs = minor;
      pd.rhs = Scalar(0);
      pd.note = "leading principal minor " + std::to_string(k) + " is not positive";
    }
  }
  rep.checks.push_back(std::move(pd));
  return rep;
}

KContactReport is_k_contact(const LieAlgebra& L, const ContactData& cd, const MetricData& md) {
  KContactReport rep;
  const Matrix<Scalar> m = L.ad(cd.reeb);
  rep.central = m.is_zero();
  const Matrix<Scalar> s = m.transpose() * md.g + md.g * m;
  rep.killing = true;
  for (std::size_t i = 0; i < s.rows() && rep.killing; ++i)
    for (std::size_t j = i; j < s.cols(); ++j)
      if (!s(i, j).is_zero()) {
        rep.killing = false;
        rep.witness = {static_cast<int>(i), static_cast<int>(j)};
        rep.residual = s(i, j);
        break;
      }
  return rep;
}

LefschetzReport lefschetz_relation(const FormCohomology& H, const ContactData& cd, int p) {
  const LieAlgebra& L = H.algebra();
  const int n = cd.n;
  if (p < 0 || p > n) throw Error("invalid-degree", "Lefschetz degree must lie in 0..n");
  const BladeBasis& blades = L.blades();
  const int dim = L.dim();
  const int q = 2 * n + 1 - p;
  const Form deta = L.d(cd.eta);
  const Form kill = power(deta, n - p + 1);
  const Form lift = wedge(cd.eta, power(deta, n - p));

  std::vector<Matrix<Scalar>> parts;
  if (p < dim) parts.push_back(L.ce_complex().differential(p));
  if (p > 0) parts.push_back(operator_matrix(blades, p, p - 1, [&](const Form& b) { return interior(cd.reeb, b); }));
  if (p + kill.degree() <= dim)
    parts.push_back(operator_matrix(blades, p, p + kill.degree(), [&](const Form& b) { return wedge(kill, b); }));
  const std::size_t cols = blades.count(p);
  std::vector<Vector> z = parts.empty() ? std::vector<Vector>{} : kernel_basis(stack(parts, cols));
  if (parts.empty())
    for (std::size_t i = 0; i < cols; ++i) z.push_back(Form::blade(dim, blades.of_degree(p)[i]).coordinates(blades));

  LefschetzReport rep;
  rep.degree = p;
  rep.image_degree = q;
  rep.dim_h = H.space(p).betti;
  rep.dim_h_image = H.space(q).betti;

  std::vector<Vector> c1, c2, pairs;
  for (const auto& coords : z) {
    const Form beta = Form::from_coordinates(blades, p, coords);
    rep.relation_basis.push_back(beta);
    const Form image = wedge(lift, beta);
    auto r1 = H.class_of(beta);
    auto r2 = H.class_of(image);
    if (!r2.closed)
      throw Error("image-not-closed", "eta ^ (d eta)^(n-p) ^ beta is not closed for beta = " +
                                          to_string(beta, L.dual_names()));
    Vector both = r1.cls.coords;
    both.insert(both.end(), r2.cls.coords.begin(), r2.cls.coords.end());
    c1.push_back(std::move(r1.cls.coords));
    c2.push_back(std::move(r2.cls.coords));
    pairs.push_back(std::move(both));
  }
  const std::size_t m = z.size();
  const auto rank_of = [](const std::vector<Vector>& cs, std::size_t len) {
    return (cs.empty() || len == 0) ? std::size_t{0} : rank(Matrix<Scalar>::from_columns(cs, len));
  };
  rep.relation_dim = rank_of(pairs, rep.dim_h + rep.dim_h_image);
  const std::size_t r1 = rank_of(c1, rep.dim_h);
  const std::size_t r2 = rank_of(c2, rep.dim_h_image);
  rep.image_rank = r2;
  rep.total = r1 == rep.dim_h;
  rep.single_valued = rep.relation_dim == r1;
  rep.graph_of_iso = rep.total && rep.single_valued && rep.dim_h == rep.dim_h_image && r2 == rep.dim_h_image;

  if (rep.total && rep.single_valued) {
    const std::size_t b = rep.dim_h;
    Matrix<Scalar> f(rep.dim_h_image, b);
    if (b > 0 && m > 0) {
      const Matrix<Scalar> m1 = Matrix<Scalar>::from_columns(c1, b);
      const auto sel = independent_columns(m1);
      Matrix<Scalar> a(b, b), c(rep.dim_h_image, b);
      for (std::size_t k = 0; k < b; ++k) {
        for (std::size_t i = 0; i < b; ++i) a(i, k) = c1[sel[k]][i];
        for (std::size_t i = 0; i < rep.dim_h_image; ++i) c(i, k) = c2[sel[k]][i];
      }
      f = c * *inverse(a);
    }
    rep.matrix = std::move(f);
  }
  return rep;
}

QuotientCheck symplectization_quotient_check(const AlgebraHom& h, const Form& omega, const ContactData& cd) {
  const LieAlgebra& target = h.target();
  if (omega.degree() != 2 || omega.dim() != target.dim()) throw Error("invalid-degree", "omega must be a 2-form on the target");
  const Form domega = target.d(omega);
  if (!domega.is_zero()) throw Error("omega-not-closed", "d omega = " + to_string(domega, target.dual_names()));
  if (target.dim() % 2 != 0 || power(omega, target.dim() / 2).is_zero())
    throw Error("omega-degenerate", "omega^" + std::to_string(target.dim() / 2) + " vanishes on the target");
  QuotientCheck res;
  res.pullback = pullback(h, omega);
  res.difference = res.pullback - h.source().d(cd.eta);
  res.equal = res.difference.is_zero();
  return res;
}

}  // namespace kc
