#include "kcontact/scalars/rational.hpp"

#include "kcontact/error.hpp"

#include <cctype>

namespace kc {

int sign(const Rational& x) { return sgn(x); }
int sign(const Integer& x) { return sgn(x); }

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error("syntax-error", "bad rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw Error("syntax-error", "bad rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw Error("syntax-error", "bad rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw Error("division-by-zero", "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational divide(const Rational& x, const Rational& y) {
  if (sgn(y) == 0) throw Error("division-by-zero", "rational divisor is zero");
  return x / y;
}

std::size_t elimination_weight(const Rational& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

}  // namespace kc
