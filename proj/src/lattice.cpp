#include "qrm/lattice.hpp"

#include <cmath>

namespace qrm {

RotorConfiguration canonicalize(const RotorConfiguration& config) {
  RotorConfiguration out = config;
  for (std::size_t i = 0; i < out.angles.size(); ++i) {
    if (!std::isfinite(out.angles[i]))
      throw std::domain_error("canonicalize: non-finite angle at site " + std::to_string(i));
    out.angles[i] = wrap_angle(out.angles[i]);
  }
  return out;
}

}  // namespace qrm
