#include "qrm/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qrm {

namespace {

void check_batch(const std::vector<RotorConfiguration>& batch) {
  if (batch.empty()) throw std::invalid_argument("observables: empty batch");
  for (const auto& c : batch)
    if (!(c.lattice == batch.front().lattice))
      throw std::invalid_argument("observables: configurations do not share one lattice");
}

}  // namespace

double magnetization(const std::vector<RotorConfiguration>& batch) {
  check_batch(batch);
  const int n = batch.front().lattice.sites();
  double acc = 0.0;
  for (const auto& c : batch) {
    double mx = 0.0, my = 0.0;
    for (double a : c.angles) {
      mx += std::cos(a);
      my += std::sin(a);
    }
    acc += std::sqrt(mx * mx + my * my) / n;
  }
  return acc / static_cast<double>(batch.size());
}

double potential_energy_density(const std::vector<RotorConfiguration>& batch,
                                const CouplingParams& params) {
  check_batch(batch);
  const LatticeSpec& lat = batch.front().lattice;
  const int L = lat.L();
  double acc = 0.0;
  for (const auto& c : batch) {
    double bond_sum = 0.0;
    for (int r = 0; r < L; ++r) {
      for (int col = 0; col < L; ++col) {
        const double a = c.angles[lat.index(r, col)];
        bond_sum += std::cos(a - c.angles[lat.index(r, col + 1)]);
        bond_sum += std::cos(a - c.angles[lat.index(r + 1, col)]);
      }
    }
    acc += bond_sum;
  }
  return -params.J / static_cast<double>(lat.sites()) * acc / static_cast<double>(batch.size());
}

ObservableRecord measure(const std::vector<RotorConfiguration>& batch,
                         const CouplingParams& params) {
  ObservableRecord rec;
  rec.magnetization = magnetization(batch);
  rec.potential_energy_density = potential_energy_density(batch, params);
  rec.sample_count = static_cast<long>(batch.size());
  return rec;
}

}  // namespace qrm
