#include "kcontact/scalars/roots.hpp"

#include "kcontact/error.hpp"

#include <algorithm>

namespace kc {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kMaxDivisors = 20000;
constexpr std::size_t kMaxCombinations = 200000;

// Positive divisors of |n| (n != 0); nullopt if a large composite cofactor
// resists trial division.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  for (unsigned long q = 2; q <= kTrialLimit && Integer(q) * q <= rest; ++q) {
    if (rest % q != 0) continue;
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    factors.emplace_back(Integer(q), e);
  }
  if (rest > 1) {
    const bool small = rest < Integer(kTrialLimit) * kTrialLimit;
    if (!small && mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) return std::nullopt;
    factors.emplace_back(rest, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : factors) {
    const std::size_t base = divs.size();
    Integer pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
      if (divs.size() > kMaxDivisors) return std::nullopt;
    }
  }
  return divs;
}

Rational eval_rational(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Lagrange interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(1);
    Rational scale = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis *= Poly(std::vector<Rational>{-xs[j], 1});
      scale /= (xs[i] - xs[j]);
    }
    basis *= scale;
    acc += basis;
  }
  return acc;
}

Poly eval_poly_at_poly(const std::vector<Poly>& b, const Poly& r) {
  Poly acc;
  for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * r + *it;
  return acc;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() <= 1) return std::vector<Rational>{};
  std::vector<Rational> out;
  std::size_t low = 0;
  while (sgn(c[low]) == 0) ++low;
  if (low > 0) out.emplace_back(0);
  std::vector<Rational> red(c.begin() + static_cast<long>(low), c.end());
  if (red.size() > 1) {
    Integer den = 1;
    for (const auto& x : red) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> z;
    for (const auto& x : red) z.push_back(Integer(x.get_num() * (den / x.get_den())));
    auto dn = divisors(z.front());
    auto dd = divisors(z.back());
    if (!dn || !dd) return std::nullopt;
    for (const auto& d : *dn)
      for (const auto& e : *dd)
        for (int s : {1, -1}) {
          Rational cand(d * s, e);
          cand.canonicalize();
          if (sgn(eval_rational(red, cand)) == 0 &&
              std::find(out.begin(), out.end(), cand) == out.end())
            out.push_back(cand);
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSearch roots_in_field(const std::vector<RatFunc>& coeffs) {
  std::vector<RatFunc> a = coeffs;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  if (a.empty()) throw Error("zero-polynomial", "roots of the zero polynomial");
  RootSearch result;
  const std::size_t n = a.size() - 1;
  if (n == 0) {
    result.splits = true;
    return result;
  }
  const RatFunc lead = a.back();
  for (auto& x : a) x /= lead;

  // t = s/delta turns a into a monic polynomial with Q[p] coefficients.
  Poly delta(1);
  for (const auto& x : a) delta = lcm(delta, x.den());
  std::vector<Poly> b(n + 1);
  {
    RatFunc dpow(1);
    for (std::size_t k = 0; k <= n; ++k) {
      RatFunc v = a[n - k] * dpow;
      if (!v.is_polynomial()) throw Error("internal", "root rescaling left a denominator");
      b[n - k] = v.num();
      dpow *= RatFunc(delta);
    }
  }

  std::vector<std::pair<Poly, int>> sroots;
  int zero_mult = 0;
  while (b.size() > 1 && b.front().is_zero()) {
    b.erase(b.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) sroots.emplace_back(Poly(), zero_mult);

  const std::size_t m = b.size() - 1;
  if (m > 0) {
    // Roots in Q(p) of a monic polynomial over Q[p] lie in Q[p] with degree
    // at most max_i deg(b_i)/(m - i).
    int bound = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (b[i].is_zero()) continue;
      const int span = static_cast<int>(m - i);
      bound = std::max(bound, (b[i].degree() + span - 1) / span);
    }
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> values;
    bool empty_fibre = false;
    for (int k = 0; k <= bound; ++k) {
      Rational x(k + 1);
      std::vector<Rational> coeffs;
      for (const auto& bi : b) coeffs.push_back(bi.eval(x));
      auto rr = rational_roots(coeffs);
      if (!rr) {
        result.exhaustive = false;
        empty_fibre = true;
        break;
      }
      if (rr->empty()) {
        empty_fibre = true;
        break;
      }
      xs.push_back(x);
      values.push_back(std::move(*rr));
    }
    if (!empty_fibre) {
      std::size_t combos = 1;
      for (const auto& v : values) {
        combos *= v.size();
        if (combos > kMaxCombinations) break;
      }
      if (combos > kMaxCombinations) {
        result.exhaustive = false;
      } else {
        std::vector<std::size_t> idx(values.size(), 0);
        while (true) {
          std::vector<Rational> ys;
          for (std::size_t k = 0; k < values.size(); ++k) ys.push_back(values[k][idx[k]]);
          Poly cand = interpolate(xs, ys);
          if (eval_poly_at_poly(b, cand).is_zero()) {
            bool dup = std::any_of(sroots.begin(), sroots.end(), [&](const auto& r) { return r.first == cand; });
            if (!dup) sroots.emplace_back(cand, 0);
          }
          std::size_t k = 0;
          while (k < idx.size() && ++idx[k] == values[k].size()) idx[k++] = 0;
          if (k == idx.size()) break;
        }
      }
    }
    // Multiplicities by repeated synthetic division.
    for (auto& [r, mult] : sroots) {
      if (r.is_zero()) continue;
      std::vector<Poly> cur = b;
      while (cur.size() > 1) {
        std::vector<Poly> q(cur.size() - 1);
        Poly carry;
        for (std::size_t i = cur.size() - 1; i >= 1; --i) {
          carry = cur[i] + carry * r;
          q[i - 1] = carry;
        }
        Poly rem = cur[0] + carry * r;
        if (!rem.is_zero()) break;
        cur = std::move(q);
        ++mult;
      }
    }
  }

  int total = 0;
  for (const auto& [r, mult] : sroots) {
    total += mult;
    result.roots.emplace_back(RatFunc(r, delta), mult);
  }
  result.splits = total == static_cast<int>(n);
  return result;
}

}  // namespace kc
