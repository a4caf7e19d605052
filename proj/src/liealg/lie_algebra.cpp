#include "kcontact/liealg/lie_algebra.hpp"

#include <bit>
#include <sstream>

namespace kc {

std::string FieldInfo::describe() const {
  if (specialized_at) return "Q (" + parameter.value_or("p") + " = " + specialized_at->get_str() + ")";
  if (parameter) return "Q(" + *parameter + ")";
  return "Q";
}

struct LieAlgebra::Data {
  int dim = 0;
  std::vector<std::string> names;
  FieldInfo field;
  std::vector<Vector> table;  // dim*dim, table[i*dim+j] = [X_i, X_j]
  BladeBasis blades{0};
  std::vector<Form> d_gen;
  CochainComplex complex;
};

namespace {

std::vector<Vector> bracket_table(int n, const std::vector<BracketSpec>& brackets) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Vector> table(un * un, Vector(un, Scalar(0)));
  std::vector<bool> seen(un * un, false);
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= n || b.j >= n) throw Error("invalid-index", "bracket index out of range");
    if (b.value.size() != un) throw Error("dimension-mismatch", "bracket value has wrong length");
    if (b.i == b.j) {
      if (!is_zero_vec(b.value)) throw Error("illegal-bracket", "diagonal bracket must be zero");
      continue;
    }
    const auto ij = static_cast<std::size_t>(b.i) * un + static_cast<std::size_t>(b.j);
    const auto ji = static_cast<std::size_t>(b.j) * un + static_cast<std::size_t>(b.i);
    if (seen[ij]) throw Error("duplicate-bracket", "bracket given twice");
    seen[ij] = seen[ji] = true;
    table[ij] = b.value;
    Vector neg(un);
    for (std::size_t k = 0; k < un; ++k) neg[k] = -b.value[k];
    table[ji] = std::move(neg);
  }
  return table;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

LieAlgebra LieAlgebra::build(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                             FieldInfo field) {
  return assemble(std::move(names), brackets, std::move(field), true);
}

LieAlgebra LieAlgebra::build_unchecked(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                                       FieldInfo field) {
  return assemble(std::move(names), brackets, std::move(field), false);
}

LieAlgebra LieAlgebra::assemble(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                                FieldInfo field, bool check_jacobi) {
  const int n = static_cast<int>(names.size());
  if (n > kMaxDimension) throw Error("invalid-dimension", "at most 16 basis elements are supported");
  auto data = std::make_shared<Data>();
  data->dim = n;
  data->names = std::move(names);
  data->field = std::move(field);
  data->table = bracket_table(n, brackets);
  data->blades = BladeBasis(n);
  for (int i = 0; i < n; ++i) {
    Form f(n, 2);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Scalar& c = data->table[static_cast<std::size_t>(j * n + k)][static_cast<std::size_t>(i)];
        if (!c.is_zero()) f.add_term((Blade{1} << j) | (Blade{1} << k), -c);
      }
    data->d_gen.push_back(std::move(f));
  }
  LieAlgebra L(data);
  if (check_jacobi) {
    if (auto bad = L.jacobi_residual()) {
      const auto& t = bad->triple;
      std::ostringstream os;
      os << "Jacobi identity fails on (" << L.names()[static_cast<std::size_t>(t[0])] << ", "
         << L.names()[static_cast<std::size_t>(t[1])] << ", " << L.names()[static_cast<std::size_t>(t[2])] << ")";
      throw JacobiViolation(t, bad->residual, os.str());
    }
  }
  data->complex = ce_differential_parallel(L);
  if (check_jacobi) data->complex.check_square_zero();
  return L;
}

int LieAlgebra::dim() const { return data_->dim; }
const std::vector<std::string>& LieAlgebra::names() const { return data_->names; }
const FieldInfo& LieAlgebra::field() const { return data_->field; }

std::vector<std::string> LieAlgebra::dual_names() const {
  std::vector<std::string> out;
  for (const auto& n : data_->names) out.push_back(n + "*");
  return out;
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (data_->names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

const Vector& LieAlgebra::bracket(int i, int j) const {
  return data_->table[static_cast<std::size_t>(i * dim() + j)];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const int n = dim();
  Vector r(static_cast<std::size_t>(n), Scalar(0));
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j || y[static_cast<std::size_t>(j)].is_zero()) continue;
      const Vector& b = bracket(i, j);
      const Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k)
        if (!b[static_cast<std::size_t>(k)].is_zero()) r[static_cast<std::size_t>(k)] += c * b[static_cast<std::size_t>(k)];
    }
  }
  return r;
}

Vector LieAlgebra::basis_vector(int i) const {
  Vector v(static_cast<std::size_t>(dim()), Scalar(0));
  v[static_cast<std::size_t>(i)] = Scalar(1);
  return v;
}

Matrix<Scalar> LieAlgebra::ad(const Vector& x) const {
  const auto n = static_cast<std::size_t>(dim());
  Matrix<Scalar> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(x, basis_vector(static_cast<int>(j)));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix<Scalar> LieAlgebra::ad(int i) const { return ad(basis_vector(i)); }

std::optional<JacobiResidual> LieAlgebra::jacobi_residual() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vector xi = basis_vector(i), xj = basis_vector(j), xk = basis_vector(k);
        Vector s = bracket(bracket(xi, xj), xk);
        s = add(std::move(s), bracket(bracket(xj, xk), xi));
        s = add(std::move(s), bracket(bracket(xk, xi), xj));
        if (!is_zero_vec(s)) return JacobiResidual{{i, j, k}, std::move(s)};
      }
  return std::nullopt;
}

const BladeBasis& LieAlgebra::blades() const { return data_->blades; }
const Form& LieAlgebra::d_generator(int i) const { return data_->d_gen.at(static_cast<std::size_t>(i)); }
const CochainComplex& LieAlgebra::ce_complex() const { return data_->complex; }

Form LieAlgebra::d(const Form& f) const {
  if (f.dim() != dim()) throw Error("dimension-mismatch", "form lives on a different algebra");
  const int k = f.degree();
  Form out(dim(), k + 1);
  if (k >= dim()) return out;
  Vector v = data_->complex.apply(k, f.coordinates(blades()));
  return Form::from_coordinates(blades(), k + 1, v);
}

LieAlgebra LieAlgebra::specialize(const Rational& value) const {
  const int n = dim();
  std::vector<BracketSpec> specs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector& b = bracket(i, j);
      if (is_zero_vec(b)) continue;
      Vector v;
      for (const auto& c : b) v.emplace_back(kc::specialize(c, value));
      specs.push_back({i, j, std::move(v)});
    }
  FieldInfo f = field();
  f.specialized_at = value;
  return build(names(), specs, f);
}

namespace {

// d(e^B) with B = {i} u R, i the lowest index: de^i ^ e^R - e^i ^ d(e^R).
Form blade_differential(const LieAlgebra& L, Blade b, const std::vector<Form>& previous, const BladeBasis& basis) {
  const int n = L.dim();
  if (b == 0) return Form(n, 1);
  const int i = std::countr_zero(b);
  const Blade rest = b & (b - 1);
  const Form er = Form::blade(n, rest);
  Form out = wedge(L.d_generator(i), er);
  if (rest != 0) {
    const Form& drest = previous[basis.index(rest)];
    out -= wedge(Form::covector(n, i), drest);
  }
  return out;
}

CochainComplex assemble_complex(const LieAlgebra& L, bool parallel) {
  const int n = L.dim();
  const BladeBasis& basis = L.blades();
  CochainComplex c;
  for (int k = 0; k <= n; ++k) c.dims.push_back(basis.count(k));
  std::vector<Form> previous;
  for (int k = 0; k < n; ++k) {
    const auto& blades = basis.of_degree(k);
    std::vector<Form> current(blades.size(), Form(n, k + 1));
    const long count = static_cast<long>(blades.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long t = 0; t < count; ++t)
        current[static_cast<std::size_t>(t)] = blade_differential(L, blades[static_cast<std::size_t>(t)], previous, basis);
    } else {
      for (long t = 0; t < count; ++t)
        current[static_cast<std::size_t>(t)] = blade_differential(L, blades[static_cast<std::size_t>(t)], previous, basis);
    }
    Matrix<Scalar> m(basis.count(k + 1), blades.size());
    for (std::size_t col = 0; col < blades.size(); ++col)
      for (const auto& [bl, coef] : current[col].terms()) m(basis.index(bl), col) = coef;
    c.d.push_back(std::move(m));
    previous = std::move(current);
  }
  return c;
}

}  // namespace

CochainComplex ce_differential_serial(const LieAlgebra& L) { return assemble_complex(L, false); }
CochainComplex ce_differential_parallel(const LieAlgebra& L) { return assemble_complex(L, true); }

}  // namespace kc
