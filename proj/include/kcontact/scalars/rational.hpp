#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kc {

using Integer = mpz_class;
using Rational = mpq_class;

int sign(const Rational& x);
int sign(const Integer& x);

// "3/2", "-4", "0".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "a" or "a/b" with optional leading sign. Throws kc::Error on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Checked division; throws kc::Error("division-by-zero").
Rational divide(const Rational& x, const Rational& y);

// Small bit-size proxy used for pivot selection.
std::size_t elimination_weight(const Rational& x);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace kc
