#pragma once

#include "kcontact/error.hpp"
#include "kcontact/scalars/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc::dsl {

class ParseError : public Error {
 public:
  ParseError(const std::string& kind, int line, int column, const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

struct Expr {
  enum class Kind { number, ident, dual, neg, add, sub, mul, wedge, div, pow };
  Kind kind = Kind::number;
  Integer value;      // number
  std::string name;   // ident, dual (without the '*')
  int exponent = 0;   // pow
  std::vector<Expr> args;
  int line = 0, column = 0;  // not part of equality

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
  }
};

struct BracketDecl {
  std::string left, right;
  Expr value;
  int line = 0;
  friend bool operator==(const BracketDecl& a, const BracketDecl& b) {
    return a.left == b.left && a.right == b.right && a.value == b.value;
  }
};

struct MetricDecl {
  bool identity = true;
  std::vector<std::vector<Expr>> rows;
  friend bool operator==(const MetricDecl&, const MetricDecl&) = default;
};

struct AlgebraDecl {
  std::string name;
  std::optional<std::string> parameter;
  std::vector<std::string> basis;
  std::vector<BracketDecl> brackets;
  std::optional<Expr> contact;
  std::vector<std::pair<std::string, Expr>> phi;
  std::optional<MetricDecl> metric;
  std::optional<Expr> symplectic;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct SourceGenerator {
  std::string name;
  int degree = 1;
  int nilpotency = 0;  // even degree: name^nilpotency = 0
  friend bool operator==(const SourceGenerator&, const SourceGenerator&) = default;
};

struct MorphismDecl {
  std::string name;
  std::vector<SourceGenerator> source;  // free (exterior on odd generators) with zero differential
  std::string target_kind;              // "ce" or "tievsky"
  std::string target_path;
  std::vector<std::pair<std::string, Expr>> identify;
  std::vector<std::pair<std::string, Expr>> images;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct Document {
  std::vector<AlgebraDecl> algebras;
  std::vector<MorphismDecl> morphisms;
  friend bool operator==(const Document&, const Document&) = default;
};

// Parses and checks names: bracket entries must use basis names, contact and
// symplectic forms dual names, metric entries only the parameter.
Document parse(const std::string& text);
Expr parse_expression(const std::string& text);

std::string print(const Document& doc);
std::string print(const Expr& e);

}  // namespace kc::dsl
