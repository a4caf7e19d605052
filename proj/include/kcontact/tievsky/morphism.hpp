#pragma once

#include "kcontact/tievsky/cdga.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kc {

// Map of CDGAs given by the images of the source generators. The source must
// carry its word structure so the map extends to every basis element.
struct CDGAMorphism {
  CDGA source;
  CDGA target;
  std::vector<Vector> images;  // one per source generator, target coordinates
};

struct MorphismReport {
  bool degrees = false;       // each image is homogeneous of its generator's degree (or zero)
  bool well_defined = false;  // multiplicative on every pair of source basis elements
  bool chain_map = false;     // d m = m d on every source basis element
  bool quasi_iso = false;     // induced map bijective in every degree
  std::optional<std::string> witness;  // first failure
  std::vector<std::size_t> source_betti, target_betti;
  std::vector<Matrix<Scalar>> induced;  // per degree, target reps x source reps

  bool ok() const { return degrees && well_defined && chain_map && quasi_iso; }
};

// Image of every source basis element, extended multiplicatively along words.
std::vector<Vector> extend_multiplicatively(const CDGAMorphism& m);

MorphismReport verify_morphism(const CDGAMorphism& m);

}  // namespace kc
