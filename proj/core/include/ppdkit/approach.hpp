#pragma once

#include <string>

#include "ppdkit/errors.hpp"

namespace ppdkit {

// Modeling approach: generative parameterizes p_theta(y|x) and inverts it
// with an explicit label prior; discriminative parameterizes p_theta(x|y)
// directly.
enum class Approach { Generative, Discriminative };

inline const char* to_string(Approach a) {
  return a == Approach::Generative ? "generative" : "discriminative";
}

inline Approach approach_from_string(const std::string& s) {
  if (s == "generative") return Approach::Generative;
  if (s == "discriminative") return Approach::Discriminative;
  throw ConfigError("unknown approach '" + s +
                    "' (expected 'generative' or 'discriminative')");
}

}  // namespace ppdkit
