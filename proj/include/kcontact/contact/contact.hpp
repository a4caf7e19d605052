#pragma once

#include "kcontact/cohomology/forms.hpp"
#include "kcontact/liealg/hom.hpp"
#include "kcontact/liealg/lie_algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc {

struct ContactData {
  Form eta{0, 1};
  Vector reeb;
  int n = 0;  // dim = 2n + 1
};

struct ContactResult {
  bool contact = false;
  Form volume{0, 0};  // eta ^ (d eta)^n; the zero form when contact fails
  std::optional<ContactData> data;
};

// Throws even-dimension, or invalid-degree if eta is not a 1-form.
ContactResult is_contact(const LieAlgebra& L, const Form& eta);

// g is the Gram matrix of the basis; column i of phi is phi(X_i).
struct MetricData {
  Matrix<Scalar> g;
  Matrix<Scalar> phi;
};

enum class CheckStatus { pass, fail, unknown };
std::string to_string(CheckStatus s);

struct IdentityCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::pair<int, int>> witness;  // basis pair (or row, column)
  Scalar lhs, rhs;                             // both sides at the witness
  std::string note;
};

struct ContactMetricReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

// Identities, in order: metric-symmetric, phi-squared (phi^2 = -I + xi eta),
// phi-reeb (phi xi = 0), metric-compatible (g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)),
// deta-compatible (d eta(X, Y) = g(phi X, Y)), positive-definite (leading
// principal minors; minors depending on p are evaluated at `sample` or left unknown).
ContactMetricReport is_contact_metric(const LieAlgebra& L, const ContactData& cd, const MetricData& md,
                                      std::optional<Rational> sample = std::nullopt);

struct KContactReport {
  bool central = false;
  bool killing = false;  // ad_xi skew-adjoint for g
  std::optional<std::pair<int, int>> witness;
  Scalar residual;       // g(ad_xi X, Y) + g(X, ad_xi Y) at the witness
};

KContactReport is_k_contact(const LieAlgebra& L, const ContactData& cd, const MetricData& md);

struct LefschetzReport {
  int degree = 0;
  int image_degree = 0;
  std::size_t dim_h = 0;        // b_p
  std::size_t dim_h_image = 0;  // b_{2n+1-p}
  std::size_t relation_dim = 0;
  std::size_t image_rank = 0;   // rank of the image classes in H^{2n+1-p}
  bool total = false;
  bool single_valued = false;
  bool graph_of_iso = false;
  std::vector<Form> relation_basis;  // the beta's spanning Z
  std::optional<Matrix<Scalar>> matrix;  // induced map in representative coordinates
};

// Throws image-not-closed naming the offending beta.
LefschetzReport lefschetz_relation(const FormCohomology& H, const ContactData& cd, int p);

struct QuotientCheck {
  bool equal = false;
  Form pullback{0, 2};
  Form difference{0, 2};  // pullback - d eta
};

// Throws omega-not-closed or omega-degenerate.
QuotientCheck symplectization_quotient_check(const AlgebraHom& h, const Form& omega, const ContactData& cd);

}  // namespace kc
