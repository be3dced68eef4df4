#pragma once

#include <vector>

#include "qrm/lattice.hpp"

namespace qrm {

struct ObservableRecord {
  double magnetization = 0.0;            // M in [0, 1]
  double potential_energy_density = 0.0; // eps_p, energy units
  long sample_count = 0;
};

// M = <|sum_k n_k|>/N averaged over the batch, n_k = (cos theta_k, sin theta_k).
double magnetization(const std::vector<RotorConfiguration>& batch);

// eps_p = -(J/N) <sum_<k,l> cos(theta_k - theta_l)>, each bond counted once
// (forward x and y neighbors under periodic wrap, 2N bonds total).
double potential_energy_density(const std::vector<RotorConfiguration>& batch,
                                const CouplingParams& params);

ObservableRecord measure(const std::vector<RotorConfiguration>& batch,
                         const CouplingParams& params);

}  // namespace qrm
