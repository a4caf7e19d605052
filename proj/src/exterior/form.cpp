#include "kcontact/exterior/form.hpp"

#include "kcontact/error.hpp"
#include "kcontact/linalg/elimination.hpp"

#include <bit>
#include <sstream>

namespace kc {

int blade_degree(Blade b) { return std::popcount(b); }

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

Blade blade_from_indices(std::span<const int> indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxDimension) throw Error("invalid-index", "blade index out of range");
    const Blade bit = Blade{1} << i;
    if (b & bit) throw Error("invalid-index", "repeated blade index");
    b |= bit;
  }
  return b;
}

bool BladeLess::operator()(Blade a, Blade b) const {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da < db;
  if (a == b) return false;
  const Blade diff = a ^ b;
  const Blade low = diff & (~diff + 1);
  return (a & low) != 0;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // Each index j of b moves left past the indices of a above j.
  int swaps = 0;
  Blade rest = b;
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const Blade above = (j + 1 >= 32) ? 0 : (a >> (j + 1));
    swaps += std::popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

BladeBasis::BladeBasis(int dim) : dim_(dim), by_degree_(static_cast<std::size_t>(dim) + 1) {
  if (dim < 0 || dim > kMaxDimension) throw Error("invalid-dimension", "dimension must be in 0..16");
  const Blade count = Blade{1} << dim;
  index_.assign(count, 0);
  for (Blade b = 0; b < count; ++b) by_degree_[static_cast<std::size_t>(std::popcount(b))].push_back(b);
  for (auto& level : by_degree_) {
    std::sort(level.begin(), level.end(), BladeLess{});
    for (std::size_t k = 0; k < level.size(); ++k) index_[level[k]] = k;
  }
}

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDimension) throw Error("invalid-dimension", "dimension must be in 0..16");
  if (degree < 0) throw Error("invalid-degree", "negative form degree");
}

Form Form::covector(int dim, int index, const Scalar& c) {
  Form f(dim, 1);
  f.add_term(Blade{1} << index, c);
  return f;
}

Form Form::constant(int dim, const Scalar& c) {
  Form f(dim, 0);
  f.add_term(0, c);
  return f;
}

Form Form::blade(int dim, Blade b, const Scalar& c) {
  Form f(dim, blade_degree(b));
  f.add_term(b, c);
  return f;
}

Scalar Form::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(Blade b, const Scalar& c) {
  if (c.is_zero()) return;
  if (blade_degree(b) != degree_) throw Error("degree-mismatch", "blade degree differs from form degree");
  if (dim_ < 32 && (b >> dim_) != 0) throw Error("invalid-index", "blade index exceeds dimension");
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (o.dim_ != dim_ || o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero() && o.dim_ == dim_) return *this = o;
    throw Error("degree-mismatch", "adding forms of different degree or dimension");
  }
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

Vector Form::coordinates(const BladeBasis& basis) const {
  Vector v(basis.count(degree_), Scalar(0));
  for (const auto& [b, c] : terms_) v[basis.index(b)] = c;
  return v;
}

Form Form::from_coordinates(const BladeBasis& basis, int degree, const Vector& coords) {
  Form f(basis.dim(), degree);
  const auto& blades = basis.of_degree(degree);
  if (coords.size() != blades.size()) throw Error("dimension-mismatch", "coordinate vector length");
  for (std::size_t k = 0; k < blades.size(); ++k) f.add_term(blades[k], coords[k]);
  return f;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw Error("dimension-mismatch", "wedge of forms on different spaces");
  Form r(a.dim(), a.degree() + b.degree());
  if (r.degree() > a.dim()) return r;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(ba | bb, c);
    }
  return r;
}

Form power(const Form& a, int k) {
  Form r = Form::constant(a.dim(), 1);
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

Form interior(const Vector& v, const Form& a) {
  if (static_cast<int>(v.size()) != a.dim()) throw Error("dimension-mismatch", "interior product");
  if (a.degree() == 0) return Form(a.dim(), 0);
  Form r(a.dim(), a.degree() - 1);
  for (const auto& [b, c] : a.terms()) {
    int position = 0;
    for (int i : blade_indices(b)) {
      const Scalar& vi = v[static_cast<std::size_t>(i)];
      if (!vi.is_zero()) {
        Scalar term = c * vi;
        if (position & 1) term = -term;
        r.add_term(b & ~(Blade{1} << i), term);
      }
      ++position;
    }
  }
  return r;
}

Scalar evaluate(const Form& a, std::span<const Vector> vs) {
  if (static_cast<int>(vs.size()) != a.degree()) {
    throw Error("arity-mismatch", "form of degree " + std::to_string(a.degree()) + " evaluated on " +
                                      std::to_string(vs.size()) + " vectors");
  }
  for (const auto& v : vs)
    if (static_cast<int>(v.size()) != a.dim()) throw Error("dimension-mismatch", "evaluate");
  const std::size_t k = vs.size();
  Scalar total(0);
  for (const auto& [b, c] : a.terms()) {
    auto idx = blade_indices(b);
    Matrix<Scalar> m(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) m(r, s) = vs[s][static_cast<std::size_t>(idx[r])];
    total += c * determinant(m);
  }
  return total;
}

std::string scalar_to_string(const Scalar& s, const std::string& var) { return s.to_string(var); }

namespace {

bool simple_coefficient(const Scalar& c) {
  return c.is_polynomial() && c.num().term_count() == 1;
}

}  // namespace

std::string to_string(const Form& a, const std::vector<std::string>& dual_names, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    std::string blade;
    for (int i : blade_indices(b)) {
      if (!blade.empty()) blade += "^";
      blade += dual_names.at(static_cast<std::size_t>(i));
    }
    std::string term;
    bool negative = false;
    if (blade.empty()) {
      term = c.to_string(var);
      if (!term.empty() && term[0] == '-' && simple_coefficient(c)) {
        negative = true;
        term = term.substr(1);
      } else if (!simple_coefficient(c)) {
        term = "(" + term + ")";
      }
    } else if (c.is_one()) {
      term = blade;
    } else if ((-c).is_one()) {
      negative = true;
      term = blade;
    } else if (simple_coefficient(c)) {
      std::string cs = c.to_string(var);
      if (cs[0] == '-') {
        negative = true;
        cs = cs.substr(1);
      }
      term = cs + " " + blade;
    } else {
      term = "(" + c.to_string(var) + ") " + blade;
    }
    if (first) os << (negative ? "-" : "") << term;
    else os << (negative ? " - " : " + ") << term;
    first = false;
  }
  return os.str();
}

}  // namespace kc
