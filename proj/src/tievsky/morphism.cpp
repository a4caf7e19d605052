#include "kcontact/tievsky/morphism.hpp"

#include "kcontact/linalg/elimination.hpp"

#include <algorithm>

namespace kc {

std::vector<Vector> extend_multiplicatively(const CDGAMorphism& m) {
  const CDGA& S = m.source;
  if (S.words.size() != S.size()) throw Error("unsupported", "source algebra has no generator words");
  if (m.images.size() != S.generators.size())
    throw Error("missing-image", "expected " + std::to_string(S.generators.size()) + " generator images");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    Vector acc = m.target.unit();
    for (std::size_t g : S.words[i]) {
      const auto gi = static_cast<std::size_t>(std::find(S.generators.begin(), S.generators.end(), g) - S.generators.begin());
      acc = m.target.mul(acc, m.images[gi]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

Vector apply_linear(const std::vector<Vector>& basis_images, const Vector& v, std::size_t length) {
  Vector out(length, Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t k = 0; k < length; ++k)
      if (!basis_images[i][k].is_zero()) out[k] += v[i] * basis_images[i][k];
  }
  return out;
}

}  // namespace

MorphismReport verify_morphism(const CDGAMorphism& m) {
  const CDGA& S = m.source;
  const CDGA& T = m.target;
  MorphismReport rep;

  rep.degrees = true;
  for (std::size_t g = 0; g < S.generators.size() && rep.degrees; ++g) {
    const Vector& img = m.images.at(g);
    if (img.size() != T.size()) throw Error("dimension-mismatch", "image has the wrong length");
    if (is_zero_vec(img)) continue;
    const auto deg = T.degree_of(img);
    if (deg != S.degree(S.generators[g])) {
      rep.degrees = false;
      rep.witness = "image of " + S.name(S.generators[g]) + " is not homogeneous of degree " +
                    std::to_string(S.degree(S.generators[g]));
    }
  }
  if (!rep.degrees) return rep;

  const std::vector<Vector> img = extend_multiplicatively(m);
  rep.well_defined = img[S.unit_index()] == T.unit();
  if (!rep.well_defined) rep.witness = "unit is not mapped to the unit";
  for (std::size_t i = 0; i < S.size() && rep.well_defined; ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      const Vector lhs = apply_linear(img, S.mul(S.basis(i), S.basis(j)), T.size());
      const Vector rhs = T.mul(img[i], img[j]);
      if (lhs != rhs) {
        rep.well_defined = false;
        rep.witness = "m(" + S.name(i) + " " + S.name(j) + ") = " + T.format(lhs) + " but m(" + S.name(i) + ") m(" +
                      S.name(j) + ") = " + T.format(rhs);
        break;
      }
    }
  if (!rep.well_defined) return rep;

  rep.chain_map = true;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Vector lhs = T.d(img[i]);
    const Vector rhs = apply_linear(img, S.d(S.basis(i)), T.size());
    if (lhs != rhs) {
      rep.chain_map = false;
      rep.witness = "d m(" + S.name(i) + ") = " + T.format(lhs) + " but m(d " + S.name(i) + ") = " + T.format(rhs);
      break;
    }
  }
  if (!rep.chain_map) return rep;

  const CdgaCohomology hs = cdga_cohomology(S);
  const CdgaCohomology ht = cdga_cohomology(T);
  const CochainComplex ct = T.complex();
  rep.source_betti = hs.betti;
  rep.target_betti = ht.betti;
  rep.quasi_iso = true;
  const int top = std::max(S.top_degree(), T.top_degree());
  for (int k = 0; k <= top; ++k) {
    const std::size_t bs = k <= S.top_degree() ? hs.betti[static_cast<std::size_t>(k)] : 0;
    const std::size_t bt = k <= T.top_degree() ? ht.betti[static_cast<std::size_t>(k)] : 0;
    Matrix<Scalar> f(bt, bs);
    for (std::size_t c = 0; c < bs; ++c) {
      const Vector z = S.extend(hs.spaces[static_cast<std::size_t>(k)].representatives[c], k);
      const Vector w = apply_linear(img, z, T.size());
      if (k > T.top_degree()) continue;
      const ClassResult r = class_of(ct, ht.spaces[static_cast<std::size_t>(k)], T.restrict(w, k));
      if (!r.closed) throw Error("internal", "chain map sent a cocycle to a non-cocycle");
      for (std::size_t i = 0; i < bt; ++i) f(i, c) = r.coords[i];
    }
    if (rep.quasi_iso && (bs != bt || (bs > 0 && rank(f) != bs))) {
      rep.quasi_iso = false;
      rep.witness = "degree " + std::to_string(k) + ": induced map " + std::to_string(bt) + "x" + std::to_string(bs) +
                    " of rank " + std::to_string(bs == 0 || bt == 0 ? 0 : rank(f));
    }
    rep.induced.push_back(std::move(f));
  }
  return rep;
}

}  // namespace kc
