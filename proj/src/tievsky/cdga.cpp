#include "kcontact/tievsky/cdga.hpp"

#include "kcontact/linalg/elimination.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kc {

CDGA::CDGA(std::vector<std::string> names, std::vector<int> degrees, std::vector<Terms> product, Matrix<Scalar> d,
           std::size_t unit)
    : names_(std::move(names)), degrees_(std::move(degrees)), product_(std::move(product)), d_(std::move(d)), unit_(unit) {
  const std::size_t n = names_.size();
  if (degrees_.size() != n || product_.size() != n * n || d_.rows() != n || d_.cols() != n || unit_ >= n)
    throw Error("dimension-mismatch", "inconsistent CDGA tables");
  int top = 0;
  for (int g : degrees_) {
    if (g < 0) throw Error("invalid-degree", "negative degree in CDGA");
    top = std::max(top, g);
  }
  by_degree_.assign(static_cast<std::size_t>(top + 1), {});
  position_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& bucket = by_degree_[static_cast<std::size_t>(degrees_[i])];
    position_[i] = bucket.size();
    bucket.push_back(i);
  }
}

Vector CDGA::basis(std::size_t i) const {
  Vector v = zero();
  v[i] = Scalar(1);
  return v;
}

Vector CDGA::mul(const Vector& a, const Vector& b) const {
  Vector out = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (b[j].is_zero()) continue;
      const Terms& t = product(i, j);
      if (t.empty()) continue;
      const Scalar c = a[i] * b[j];
      for (const auto& [k, coef] : t) out[k] += c * coef;
    }
  }
  return out;
}

std::optional<int> CDGA::degree_of(const Vector& a) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    if (deg && *deg != degrees_[i]) return std::nullopt;
    deg = degrees_[i];
  }
  return deg;
}

Vector CDGA::restrict(const Vector& a, int k) const {
  Vector out;
  if (k < 0 || k > top_degree()) return out;
  for (std::size_t i : of_degree(k)) out.push_back(a[i]);
  return out;
}

Vector CDGA::extend(const Vector& a, int k) const {
  Vector out = zero();
  const auto& idx = of_degree(k);
  for (std::size_t t = 0; t < idx.size(); ++t) out[idx[t]] = a[t];
  return out;
}

CochainComplex CDGA::complex() const {
  CochainComplex c;
  const int top = top_degree();
  for (int k = 0; k <= top; ++k) c.dims.push_back(of_degree(k).size());
  for (int k = 0; k < top; ++k) {
    const auto& src = of_degree(k);
    const auto& dst = of_degree(k + 1);
    Matrix<Scalar> m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = d_(dst[i], src[j]);
    c.d.push_back(std::move(m));
  }
  return c;
}

std::string CDGA::format(const Vector& a) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    std::string coef = scalar_to_string(a[i]);
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool is_unit = i == unit_;
    if (coef == "1") {
      out += is_unit ? "1" : names_[i];
    } else {
      const bool wrap = coef.find_first_of("+- ") != std::string::npos;
      out += wrap ? "(" + coef + ")" : coef;
      if (!is_unit) out += "*" + names_[i];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

using Sparse = std::map<std::size_t, Scalar>;

void add_to(Sparse& acc, std::size_t k, const Scalar& c) {
  auto [it, fresh] = acc.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Sparse left_times(const CDGA& A, const Sparse& x, std::size_t j) {
  Sparse out;
  for (const auto& [i, c] : x)
    for (const auto& [k, coef] : A.product(i, j)) add_to(out, k, c * coef);
  return out;
}

Sparse right_times(const CDGA& A, std::size_t i, const Sparse& y) {
  Sparse out;
  for (const auto& [j, c] : y)
    for (const auto& [k, coef] : A.product(i, j)) add_to(out, k, c * coef);
  return out;
}

Sparse to_sparse(const Terms& t) {
  Sparse s;
  for (const auto& [k, c] : t) add_to(s, k, c);
  return s;
}

Sparse column(const CDGA& A, std::size_t j) {
  Sparse s;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!A.differential()(i, j).is_zero()) s.emplace(i, A.differential()(i, j));
  return s;
}

Sparse d_of(const CDGA& A, const Sparse& x) {
  Sparse out;
  for (const auto& [j, c] : x)
    for (const auto& [i, coef] : column(A, j)) add_to(out, i, c * coef);
  return out;
}

Sparse combine(Sparse a, const Sparse& b, int sign) {
  for (const auto& [k, c] : b) add_to(a, k, sign > 0 ? c : -c);
  return a;
}

std::string pair_name(const CDGA& A, std::size_t i, std::size_t j) { return "(" + A.name(i) + ", " + A.name(j) + ")"; }

}  // namespace

std::optional<CdgaViolation> validate(const CDGA& A) {
  const std::size_t n = A.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, c] : column(A, j))
      if (A.degree(i) != A.degree(j) + 1) return CdgaViolation{"degree", "d " + A.name(j) + " has a term " + A.name(i)};
    if (!d_of(A, column(A, j)).empty()) return CdgaViolation{"d-squared", "d d " + A.name(j) + " != 0"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Sparse ei{{i, Scalar(1)}};
    if (to_sparse(A.product(A.unit_index(), i)) != ei || to_sparse(A.product(i, A.unit_index())) != ei)
      return CdgaViolation{"unit", "1 * " + A.name(i) + " != " + A.name(i)};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Sparse xy = to_sparse(A.product(i, j));
      for (const auto& [k, c] : xy)
        if (A.degree(k) != A.degree(i) + A.degree(j))
          return CdgaViolation{"degree", "product " + pair_name(A, i, j) + " has a term " + A.name(k)};
      const int s = ((A.degree(i) * A.degree(j)) % 2 == 0) ? 1 : -1;
      if (combine(xy, to_sparse(A.product(j, i)), -s).size() != 0)
        return CdgaViolation{"graded-commutativity", pair_name(A, i, j)};
      // d(xy) = dx y + (-1)^|x| x dy
      const Sparse lhs = d_of(A, xy);
      const Sparse rhs = combine(left_times(A, column(A, i), j), right_times(A, i, column(A, j)),
                                 A.degree(i) % 2 == 0 ? 1 : -1);
      if (lhs != rhs) return CdgaViolation{"leibniz", pair_name(A, i, j)};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Sparse xy = to_sparse(A.product(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        const Sparse yz = to_sparse(A.product(j, k));
        if (left_times(A, xy, k) != right_times(A, i, yz))
          return CdgaViolation{"associativity", "(" + A.name(i) + ", " + A.name(j) + ", " + A.name(k) + ")"};
      }
    }
  return std::nullopt;
}

CdgaCohomology cdga_cohomology(const CDGA& A) {
  CdgaCohomology h;
  const CochainComplex c = A.complex();
  h.spaces = cohomology_spaces(c);
  for (const auto& s : h.spaces) h.betti.push_back(s.betti);
  return h;
}

CDGA ce_cdga(const LieAlgebra& L) {
  const BladeBasis& blades = L.blades();
  const int dim = L.dim();
  std::vector<Blade> order;
  std::vector<std::size_t> index(std::size_t{1} << dim);
  for (int k = 0; k <= dim; ++k)
    for (Blade b : blades.of_degree(k)) {
      index[b] = order.size();
      order.push_back(b);
    }
  const std::size_t n = order.size();
  std::vector<std::string> names;
  std::vector<int> degrees;
  const auto duals = L.dual_names();
  for (Blade b : order) {
    degrees.push_back(blade_degree(b));
    names.push_back(b == 0 ? "1" : to_string(Form::blade(dim, b), duals));
  }
  std::vector<Terms> product(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s = wedge_sign(order[i], order[j]);
      if (s != 0) product[i * n + j].emplace_back(index[order[i] | order[j]], Scalar(s));
    }
  Matrix<Scalar> d(n, n);
  const CochainComplex& c = L.ce_complex();
  for (int k = 0; k < dim; ++k) {
    const auto& src = blades.of_degree(k);
    const auto& dst = blades.of_degree(k + 1);
    for (std::size_t jj = 0; jj < src.size(); ++jj)
      for (std::size_t ii = 0; ii < dst.size(); ++ii) {
        const Scalar& v = c.d[static_cast<std::size_t>(k)](ii, jj);
        if (!v.is_zero()) d(index[dst[ii]], index[src[jj]]) = v;
      }
  }
  CDGA A(std::move(names), std::move(degrees), std::move(product), std::move(d), 0);
  for (int i = 0; i < dim; ++i) A.generators.push_back(index[Blade{1} << i]);
  for (Blade b : order) {
    std::vector<std::size_t> w;
    for (int i : blade_indices(b)) w.push_back(index[Blade{1} << i]);
    A.words.push_back(std::move(w));
  }
  return A;
}

CDGA monomial_algebra(const std::vector<GeneratorSpec>& gens) {
  const std::size_t m = gens.size();
  std::vector<int> cap(m);
  for (std::size_t g = 0; g < m; ++g) {
    if (gens[g].degree <= 0) throw Error("invalid-degree", "generator " + gens[g].name + " needs positive degree");
    cap[g] = gens[g].degree % 2 == 1 ? 2 : (gens[g].nilpotency > 0 ? gens[g].nilpotency : 2);
  }
  using Exps = std::vector<int>;
  std::vector<Exps> monos{Exps(m, 0)};
  for (std::size_t g = 0; g < m; ++g) {
    std::vector<Exps> next;
    for (const auto& e : monos)
      for (int a = 0; a < cap[g]; ++a) {
        Exps f = e;
        f[g] = a;
        next.push_back(std::move(f));
      }
    monos = std::move(next);
  }
  auto degree = [&](const Exps& e) {
    int s = 0;
    for (std::size_t g = 0; g < m; ++g) s += e[g] * gens[g].degree;
    return s;
  };
  std::stable_sort(monos.begin(), monos.end(), [&](const Exps& a, const Exps& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a > b;
  });
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  const std::size_t n = monos.size();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& e : monos) {
    std::string s;
    for (std::size_t g = 0; g < m; ++g) {
      if (e[g] == 0) continue;
      if (!s.empty()) s += "*";
      s += gens[g].name;
      if (e[g] > 1) s += "^" + std::to_string(e[g]);
    }
    names.push_back(s.empty() ? "1" : s);
    degrees.push_back(degree(e));
  }
  std::vector<Terms> product(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Exps& a = monos[i];
      const Exps& b = monos[j];
      Exps c(m);
      bool zero = false;
      int swaps = 0;
      for (std::size_t g = 0; g < m; ++g) {
        c[g] = a[g] + b[g];
        if (c[g] >= cap[g]) zero = true;
        // moving b's factor g left past a's factors h > g
        if (b[g] > 0 && gens[g].degree % 2 == 1)
          for (std::size_t h = g + 1; h < m; ++h)
            if (gens[h].degree % 2 == 1) swaps += a[h] * b[g];
      }
      if (zero) continue;
      product[i * n + j].emplace_back(index[c], Scalar(swaps % 2 == 0 ? 1 : -1));
    }
  CDGA A(std::move(names), std::move(degrees), std::move(product), Matrix<Scalar>(n, n), index[Exps(m, 0)]);
  for (std::size_t g = 0; g < m; ++g) {
    Exps e(m, 0);
    e[g] = 1;
    A.generators.push_back(index[e]);
  }
  for (const auto& e : monos) {
    std::vector<std::size_t> w;
    for (std::size_t g = 0; g < m; ++g)
      for (int a = 0; a < e[g]; ++a) w.push_back(A.generators[g]);
    A.words.push_back(std::move(w));
  }
  return A;
}

CDGA hirsch_extension(const CDGA& A, const Vector& b, const std::string& y) {
  const std::size_t n = A.size();
  if (b.size() != n) throw Error("dimension-mismatch", "extension class lives in another algebra");
  if (auto deg = A.degree_of(b); !is_zero_vec(b) && deg != 2)
    throw Error("wrong-degree", "the extension class must have degree 2");
  if (!is_zero_vec(A.d(b))) throw Error("hirsch-class-not-closed", "d b = " + A.format(A.d(b)));

  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(A.name(i));
    degrees.push_back(A.degree(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == A.unit_index() ? y : A.name(i) + "*" + y);
    degrees.push_back(A.degree(i) + 1);
  }
  const std::size_t N = 2 * n;
  std::vector<Terms> product(N * N);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) {
      const std::size_t x = s % n, xp = t % n;
      const int a = s >= n ? 1 : 0, c = t >= n ? 1 : 0;
      if (a + c >= 2) continue;
      const int sign = (a == 1 && A.degree(xp) % 2 == 1) ? -1 : 1;
      for (const auto& [k, coef] : A.product(x, xp))
        product[s * N + t].emplace_back(k + (a + c == 1 ? n : 0), sign > 0 ? coef : -coef);
    }
  Matrix<Scalar> d(N, N);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector dx = A.d(A.basis(j));
    const Vector xb = A.mul(A.basis(j), b);
    const bool odd = A.degree(j) % 2 == 1;
    for (std::size_t i = 0; i < n; ++i) {
      d(i, j) = dx[i];
      d(i + n, j + n) = dx[i];
      d(i, j + n) = odd ? -xb[i] : xb[i];
    }
  }
  CDGA E(std::move(names), std::move(degrees), std::move(product), std::move(d), A.unit_index());
  if (!A.words.empty()) {
    E.generators = A.generators;
    E.generators.push_back(n + A.unit_index());
    E.words = A.words;
    for (std::size_t i = 0; i < n; ++i) {
      auto w = A.words[i];
      w.push_back(n + A.unit_index());
      E.words.push_back(std::move(w));
    }
  }
  return E;
}

CDGA cohomology_cdga(const FormCohomology& H) {
  const int top = H.top();
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<std::pair<int, std::size_t>> where;
  std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k)
    for (std::size_t j = 0; j < H.space(k).betti; ++j) {
      index[static_cast<std::size_t>(k)].push_back(names.size());
      names.push_back("h" + std::to_string(k) + "_" + std::to_string(j));
      degrees.push_back(k);
      where.emplace_back(k, j);
    }
  const CohClass one = H.unit();
  if (H.space(0).betti != 1 || one.coords.size() != 1 || one.coords[0] != Scalar(1))
    throw Error("unsupported", "degree-0 cohomology must be spanned by the constant 1");
  const std::size_t n = names.size();
  std::vector<Terms> product(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto [ka, ia] = where[s];
      const auto [kb, ib] = where[t];
      if (ka + kb > top) continue;
      CohClass x{ka, Vector(H.space(ka).betti, Scalar(0))}, y{kb, Vector(H.space(kb).betti, Scalar(0))};
      x.coords[ia] = Scalar(1);
      y.coords[ib] = Scalar(1);
      const CohClass z = H.cup(x, y);
      for (std::size_t r = 0; r < z.coords.size(); ++r)
        if (!z.coords[r].is_zero()) product[s * n + t].emplace_back(index[static_cast<std::size_t>(ka + kb)][r], z.coords[r]);
    }
  return CDGA(std::move(names), std::move(degrees), std::move(product), Matrix<Scalar>(n, n), 0);
}

Vector IdentifiedRing::pull(const CohClass& c) const {
  if (!isomorphism) throw Error("not-an-isomorphism", "identification is not a ring isomorphism");
  Vector out = ring.zero();
  if (c.degree > ring.top_degree()) return out;
  const Matrix<Scalar>& m = map.at(static_cast<std::size_t>(c.degree));
  if (m.cols() == 0) return out;
  auto x = solve(m, c.coords);
  if (!x) throw Error("internal", "class outside the identified ring");
  return ring.extend(*x, c.degree);
}

IdentifiedRing identify_ring(const FormCohomology& H, const std::vector<std::pair<std::string, Form>>& gens) {
  IdentifiedRing out;
  std::vector<GeneratorSpec> specs;
  std::vector<CohClass> classes;
  for (const auto& [name, form] : gens) {
    auto r = H.class_of(form);
    if (!r.closed) throw Error("not-closed", name + " is not closed");
    GeneratorSpec s{name, form.degree(), 0};
    if (s.degree <= 0) throw Error("invalid-degree", name + " must have positive degree");
    if (s.degree % 2 == 0) {
      // powers past the top degree come back as zero classes
      CohClass pw = r.cls;
      int k = 1;
      while (!H.is_zero(pw)) {
        pw = H.cup(pw, r.cls);
        ++k;
      }
      s.nilpotency = std::max(k, 2);
    }
    specs.push_back(s);
    classes.push_back(r.cls);
    out.generator_forms.push_back(form);
  }
  out.ring = monomial_algebra(specs);
  const CDGA& R = out.ring;
  const int top = std::max(R.top_degree(), H.top());
  out.isomorphism = true;
  for (int k = 0; k <= top; ++k) {
    const std::size_t hk = k <= H.top() ? H.space(k).betti : 0;
    const std::size_t rk = k <= R.top_degree() ? R.of_degree(k).size() : 0;
    Matrix<Scalar> m(hk, rk);
    for (std::size_t c = 0; c < rk; ++c) {
      const auto& word = R.words[R.of_degree(k)[c]];
      CohClass acc = H.unit();
      for (std::size_t g : word) {
        const auto gi = static_cast<std::size_t>(
            std::find(R.generators.begin(), R.generators.end(), g) - R.generators.begin());
        acc = H.cup(acc, classes[gi]);
      }
      for (std::size_t r = 0; r < hk && r < acc.coords.size(); ++r) m(r, c) = acc.coords[r];
    }
    if (out.isomorphism && (hk != rk || (hk > 0 && rank(m) != hk))) {
      out.isomorphism = false;
      out.failure = "degree " + std::to_string(k) + ": ring has dimension " + std::to_string(rk) +
                    ", cohomology has " + std::to_string(hk) + (hk == rk ? " but the map is singular" : "");
    }
    out.map.push_back(std::move(m));
  }
  return out;
}

}  // namespace kc
