#pragma once

// The standard verification roster: every catalogued family at a fixed
// parameter choice, shared by the property tests and the acceptance suite.

#include <vector>

#include "nlcs/family.hpp"

namespace nlcs_tests {

inline std::vector<nlcs::RhoFamily> roster() {
  using nlcs::RhoFamily;
  return {
      RhoFamily::make("canonical"),
      RhoFamily::make("kps-a", {{"p", 2.0}}),
      RhoFamily::make("ml", {{"alpha", 1.0}, {"beta", 2.5}}),
      RhoFamily::make("kps-c"),
      RhoFamily::make("kps-d", {{"alpha", 1.5}}),
      RhoFamily::make("kps-e"),
      RhoFamily::make("kps-f"),
      RhoFamily::make("kps-g"),
      RhoFamily::make("kps-h"),
      RhoFamily::make("kps-da"),
      RhoFamily::make("kps-db"),
      RhoFamily::make("kps-dc"),
      RhoFamily::make("kps-dd"),
      RhoFamily::make("kps-de"),
      RhoFamily::make("kps-df"),
      RhoFamily::make("ps", {{"q", 0.8}}),
      RhoFamily::make("bg", {{"kappa", 1.5}}),
      RhoFamily::make("gp", {{"kappa", 1.5}}),
      RhoFamily::make("ll-action", {{"alpha", 0.5}, {"m", 1.0}}),
      RhoFamily::make("ll-paper", {{"alpha", 0.5}, {"m", 0.0}}),
  };
}

}  // namespace nlcs_tests
