#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrm {

enum class Boundary { periodic };

// Square lattice of planar rotors, sites stored row-major.
struct LatticeSpec {
  int side_length = 2;
  Boundary boundary = Boundary::periodic;

  LatticeSpec() = default;
  explicit LatticeSpec(int L) : side_length(L) {
    if (L < 2) throw std::invalid_argument("LatticeSpec: side length must be >= 2, got " + std::to_string(L));
  }

  int L() const { return side_length; }
  int sites() const { return side_length * side_length; }
  int bonds() const { return 2 * sites(); }

  int index(int row, int col) const {
    const int L = side_length;
    row %= L; if (row < 0) row += L;
    col %= L; if (col < 0) col += L;
    return row * L + col;
  }

  bool operator==(const LatticeSpec& other) const {
    return side_length == other.side_length && boundary == other.boundary;
  }
};

struct CouplingParams {
  double J = 1.0;  // bond coupling, energy units
  double g = 1.0;  // dimensionless kinetic/coupling control parameter

  CouplingParams() = default;
  CouplingParams(double J_, double g_) : J(J_), g(g_) {
    if (!(J > 0.0)) throw std::invalid_argument("CouplingParams: J must be > 0");
    if (!(g >= 0.0)) throw std::invalid_argument("CouplingParams: g must be >= 0");
  }
};

// One ground-state sample: an L x L grid of planar angles in radians.
struct RotorConfiguration {
  LatticeSpec lattice;
  std::vector<double> angles;  // row-major, length L*L

  RotorConfiguration() = default;
  RotorConfiguration(LatticeSpec spec, std::vector<double> a)
      : lattice(spec), angles(std::move(a)) {
    if (static_cast<int>(angles.size()) != lattice.sites())
      throw std::invalid_argument("RotorConfiguration: angle count does not match lattice");
  }

  double& at(int row, int col) { return angles[lattice.index(row, col)]; }
  double at(int row, int col) const { return angles[lattice.index(row, col)]; }
};

// Wraps x into [-pi, pi); lower bound inclusive.
inline double wrap_angle(double x) {
  const double two_pi = 2.0 * M_PI;
  double y = std::remainder(x, two_pi);  // (-pi, pi]
  if (y >= M_PI) y -= two_pi;
  return y;
}

// Wraps every angle into [-pi, pi). Physical state (all cos/sin) unchanged.
RotorConfiguration canonicalize(const RotorConfiguration& config);

}  // namespace qrm
