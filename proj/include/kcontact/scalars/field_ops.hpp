#pragma once

#include "kcontact/error.hpp"
#include "kcontact/scalars/quad.hpp"
#include "kcontact/scalars/ratfunc.hpp"

namespace kc {

enum class ArithOp { add, sub, mul, div };

// Uniform entry point over the three scalar domains; division by zero and
// mixed quadratic fields raise kc::Error.
template <class F>
F field_arith(const F& x, const F& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div:
      if (is_zero(y)) throw Error("division-by-zero", "field_arith divisor is zero");
      return x / y;
  }
  return x;
}

}  // namespace kc
