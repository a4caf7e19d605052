#include "kcontact/cli/build.hpp"

#include "kcontact/tievsky/basic.hpp"

#include <fstream>
#include <sstream>

namespace kc::dsl {

namespace {

bool is_scalar(const Vector& v, std::size_t unit) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != unit && !v[i].is_zero()) return false;
  return true;
}

Vector scale(Vector v, const Scalar& c) {
  for (auto& x : v) x *= c;
  return v;
}

Vector unit_vector(const Space& s, const Scalar& c) {
  Vector v(s.size, Scalar(0));
  v[s.unit] = c;
  return v;
}

[[noreturn]] void fail(const Expr& e, const std::string& kind, const std::string& msg) {
  throw ParseError(kind, e.line, e.column, msg);
}

Vector eval(const Expr& e, const Space& s) {
  switch (e.kind) {
    case Expr::Kind::number: return unit_vector(s, Scalar(Rational(e.value)));
    case Expr::Kind::ident:
    case Expr::Kind::dual: {
      const bool dual = e.kind == Expr::Kind::dual;
      if (!dual && s.parameter && e.name == *s.parameter) return unit_vector(s, RatFunc::parameter());
      if (auto v = s.atom(e.name, dual)) return *v;
      fail(e, "unknown-identifier", "unknown name '" + e.name + (dual ? "*" : "") + "'");
    }
    case Expr::Kind::neg: return scale(eval(e.args[0], s), Scalar(-1));
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      Vector a = eval(e.args[0], s);
      const Vector b = eval(e.args[1], s);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = e.kind == Expr::Kind::add ? a[i] + b[i] : a[i] - b[i];
      return a;
    }
    case Expr::Kind::mul:
    case Expr::Kind::wedge: return s.mul(eval(e.args[0], s), eval(e.args[1], s));
    case Expr::Kind::div: {
      const Vector den = eval(e.args[1], s);
      if (!is_scalar(den, s.unit)) fail(e, "nonlinear", "can only divide by a scalar");
      if (den[s.unit].is_zero()) fail(e, "division-by-zero", "division by zero");
      return scale(eval(e.args[0], s), Scalar(1) / den[s.unit]);
    }
    case Expr::Kind::pow: {
      const Vector base = eval(e.args[0], s);
      Vector acc = unit_vector(s, Scalar(1));
      for (int k = 0; k < e.exponent; ++k) acc = s.mul(acc, base);
      return acc;
    }
  }
  fail(e, "syntax-error", "bad expression");
}

// Linear combinations of basis names: index 0 is the scalar slot.
Space linear_space(const AlgebraDecl& a) {
  Space s;
  s.size = a.basis.size() + 1;
  s.unit = 0;
  s.parameter = a.parameter;
  s.atom = [&a, n = s.size](const std::string& name, bool dual) -> std::optional<Vector> {
    if (dual) return std::nullopt;
    for (std::size_t i = 0; i < a.basis.size(); ++i)
      if (a.basis[i] == name) {
        Vector v(n, Scalar(0));
        v[i + 1] = Scalar(1);
        return v;
      }
    return std::nullopt;
  };
  s.mul = [](const Vector& x, const Vector& y) {
    if (is_scalar(x, 0)) return scale(y, x[0]);
    if (is_scalar(y, 0)) return scale(x, y[0]);
    throw Error("nonlinear", "product of two algebra elements in a linear expression");
  };
  return s;
}

// The exterior algebra with blades as indices (bitmask = index).
Space exterior_space(const AlgebraDecl& a) {
  const int n = static_cast<int>(a.basis.size());
  if (n > kMaxDimension) throw Error("invalid-dimension", "at most 16 basis elements are supported");
  Space s;
  s.size = std::size_t{1} << n;
  s.unit = 0;
  s.parameter = a.parameter;
  s.atom = [&a, size = s.size](const std::string& name, bool dual) -> std::optional<Vector> {
    if (!dual) return std::nullopt;
    for (std::size_t i = 0; i < a.basis.size(); ++i)
      if (a.basis[i] == name) {
        Vector v(size, Scalar(0));
        v[std::size_t{1} << i] = Scalar(1);
        return v;
      }
    return std::nullopt;
  };
  s.mul = [size = s.size](const Vector& x, const Vector& y) {
    Vector out(size, Scalar(0));
    for (std::size_t i = 0; i < size; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (y[j].is_zero()) continue;
        const int sg = wedge_sign(static_cast<Blade>(i), static_cast<Blade>(j));
        if (sg != 0) out[i | j] += Scalar(sg) * x[i] * y[j];
      }
    }
    return out;
  };
  return s;
}

Space cdga_space(const CDGA& A, const std::optional<std::string>& parameter) {
  Space s;
  s.size = A.size();
  s.unit = A.unit_index();
  s.parameter = parameter;
  s.atom = [&A](const std::string& name, bool dual) -> std::optional<Vector> {
    const std::string key = dual ? name + "*" : name;
    for (std::size_t i = 0; i < A.size(); ++i)
      if (A.name(i) == key) return A.basis(i);
    return std::nullopt;
  };
  s.mul = [&A](const Vector& x, const Vector& y) { return A.mul(x, y); };
  return s;
}

}  // namespace

Vector evaluate(const Expr& e, const Space& space) { return eval(e, space); }

LieAlgebra build_algebra(const AlgebraDecl& a) {
  const Space s = linear_space(a);
  std::vector<BracketSpec> specs;
  const auto index = [&](const std::string& n) {
    return static_cast<int>(std::find(a.basis.begin(), a.basis.end(), n) - a.basis.begin());
  };
  for (const auto& b : a.brackets) {
    const Vector v = eval(b.value, s);
    if (!v[0].is_zero()) fail(b.value, "nonlinear", "bracket value has a constant term");
    Vector value(v.begin() + 1, v.end());
    if (b.left == b.right) {
      if (!is_zero_vec(value))
        throw ParseError("illegal-bracket", b.line, 1, "diagonal bracket [" + b.left + ", " + b.left + "] must be zero");
      continue;
    }
    specs.push_back({index(b.left), index(b.right), std::move(value)});
  }
  FieldInfo f;
  f.parameter = a.parameter;
  return LieAlgebra::build(a.basis, specs, f);
}

Form build_form(const AlgebraDecl& a, const Expr& e) {
  const Space s = exterior_space(a);
  const Vector v = eval(e, s);
  const int n = static_cast<int>(a.basis.size());
  std::optional<int> degree;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const int d = blade_degree(static_cast<Blade>(i));
    if (degree && *degree != d) fail(e, "inhomogeneous-form", "form mixes degrees " + std::to_string(*degree) + " and " + std::to_string(d));
    degree = d;
  }
  Form f(n, degree.value_or(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) f.add_term(static_cast<Blade>(i), v[i]);
  return f;
}

Vector build_vector(const AlgebraDecl& a, const Expr& e) {
  const Vector v = eval(e, linear_space(a));
  if (!v[0].is_zero()) fail(e, "nonlinear", "vector expression has a constant term");
  return Vector(v.begin() + 1, v.end());
}

MetricData build_metric(const AlgebraDecl& a) {
  const std::size_t n = a.basis.size();
  MetricData md{Matrix<Scalar>::identity(n), Matrix<Scalar>(n, n)};
  for (const auto& [from, to] : a.phi) {
    const auto j = static_cast<std::size_t>(std::find(a.basis.begin(), a.basis.end(), from) - a.basis.begin());
    const Vector v = build_vector(a, to);
    for (std::size_t i = 0; i < n; ++i) md.phi(i, j) = v[i];
  }
  if (a.metric && !a.metric->identity) {
    const auto& rows = a.metric->rows;
    if (rows.size() != n) throw Error("dimension-mismatch", "metric needs " + std::to_string(n) + " rows");
    Space s = linear_space(a);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error("dimension-mismatch", "metric row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        const Vector v = eval(rows[i][j], s);
        if (!is_scalar(v, 0)) fail(rows[i][j], "nonlinear", "metric entries must be scalars");
        md.g(i, j) = v[0];
      }
    }
  }
  return md;
}

Form specialize(const Form& f, const Rational& r) {
  Form out(f.dim(), f.degree());
  for (const auto& [b, c] : f.terms()) out.add_term(b, Scalar(kc::specialize(c, r)));
  return out;
}

Vector specialize(const Vector& v, const Rational& r) {
  Vector out;
  for (const auto& c : v) out.emplace_back(kc::specialize(c, r));
  return out;
}

Matrix<Scalar> specialize(const Matrix<Scalar>& m, const Rational& r) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Scalar(kc::specialize(m(i, j), r));
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::filesystem::path& p) { return parse(read_file(p)); }

AlgebraDecl load_algebra(const std::filesystem::path& p) {
  Document d = load(p);
  if (d.algebras.size() != 1) throw Error("syntax-error", p.string() + " must contain exactly one algebra");
  return std::move(d.algebras.front());
}

BuiltMorphism build_morphism(const MorphismDecl& m, const std::filesystem::path& base,
                             const std::optional<Rational>& specialize_at) {
  const AlgebraDecl decl = load_algebra(base / m.target_path);
  LieAlgebra L = build_algebra(decl);
  if (specialize_at) L = L.specialize(*specialize_at);

  std::vector<GeneratorSpec> gens;
  for (const auto& g : m.source) gens.push_back({g.name, g.degree, g.nilpotency});
  BuiltMorphism out;
  out.morphism.source = monomial_algebra(gens);

  if (m.target_kind == "ce") {
    out.morphism.target = ce_cdga(L);
  } else {
    if (!decl.contact) throw Error("missing-contact", m.target_path + " has no contact form");
    Form eta = build_form(decl, *decl.contact);
    if (specialize_at) eta = specialize(eta, *specialize_at);
    const ContactResult cr = is_contact(L, eta);
    if (!cr.contact) throw Error("not-contact", "the contact form of " + m.target_path + " is not contact");
    const FormCohomology hb = basic_cohomology(L, *cr.data);
    std::vector<std::pair<std::string, Form>> named;
    for (const auto& [name, e] : m.identify) {
      Form f = build_form(decl, e);
      if (specialize_at) f = specialize(f, *specialize_at);
      named.emplace_back(name, std::move(f));
    }
    if (named.empty()) throw Error("syntax-error", "a tievsky target needs an 'identify:' line");
    IdentifiedRing ring = identify_ring(hb, named);
    if (!ring.isomorphism) throw Error("not-an-isomorphism", "identified classes do not give the basic cohomology ring: " + ring.failure.value_or(""));
    const FormClassResult deta = hb.class_of(L.d(cr.data->eta));
    Vector b = ring.pull(deta.cls);
    out.morphism.target = hirsch_extension(ring.ring, b);
    out.deta = std::move(b);
    out.ring = std::move(ring);
  }

  const Space s = cdga_space(out.morphism.target, decl.parameter);
  for (const auto& g : m.source) {
    auto it = std::find_if(m.images.begin(), m.images.end(), [&](const auto& im) { return im.first == g.name; });
    if (it == m.images.end()) throw Error("missing-image", "no image given for generator '" + g.name + "'");
    Vector v = eval(it->second, s);
    if (specialize_at) v = specialize(v, *specialize_at);
    out.morphism.images.push_back(std::move(v));
  }
  return out;
}

}  // namespace kc::dsl
