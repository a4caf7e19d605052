#pragma once

#include "kcontact/cli/build.hpp"
#include "kcontact/liealg/lie_algebra.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace support {

inline std::string fixture(const std::string& name) { return std::string(KCONTACT_FIXTURES) + "/" + name; }
inline std::string data(const std::string& name) { return std::string(KCONTACT_TEST_DATA) + "/" + name; }

inline kc::dsl::AlgebraDecl decl(const std::string& name) { return kc::dsl::load_algebra(fixture(name)); }
inline kc::LieAlgebra algebra(const std::string& name) { return kc::dsl::build_algebra(decl(name)); }

// Every shipped .lie fixture, sorted.
inline std::vector<std::string> corpus() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(KCONTACT_FIXTURES))
    if (e.path().extension() == ".lie") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Structure constants of L with the parameter (if any) set to r.
inline oracle::Constants constants_at(const kc::LieAlgebra& L, const kc::Rational& r) {
  oracle::Constants C;
  C.n = L.dim();
  C.c.assign(static_cast<std::size_t>(C.n * C.n * C.n), 0);
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j) {
      const kc::Vector& v = L.bracket(i, j);
      for (int k = 0; k < C.n; ++k) C.at(i, j, k) = kc::specialize(v[static_cast<std::size_t>(k)], r);
    }
  return C;
}

inline kc::Rational random_rational(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  kc::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline kc::Form form(const kc::LieAlgebra& L, const std::string& text) {
  kc::dsl::AlgebraDecl d;
  d.basis = L.names();
  d.parameter = L.field().parameter;
  return kc::dsl::build_form(d, kc::dsl::parse_expression(text));
}

}  // namespace support
