#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qrm/lattice.hpp"

namespace qrm {

enum class Producer { vmc_hmc, dcgan };

std::string producer_name(Producer p);
Producer producer_from_name(const std::string& name);

struct DatasetHeader {
  double g = 0.0;
  double J = 1.0;
  int L = 0;
  long count = 0;
  long seed = 0;
  Producer producer = Producer::vmc_hmc;
};

// File layout: magic "QRGS" | u32 version=1 | u32 JSON byte length | UTF-8 JSON
// header | count*L*L little-endian float32 angles (row-major, sample-major).
void write_dataset(const std::string& path, const DatasetHeader& header,
                   const std::vector<RotorConfiguration>& batch);

std::pair<DatasetHeader, std::vector<RotorConfiguration>> read_dataset(const std::string& path);

DatasetHeader read_dataset_header(const std::string& path);

}  // namespace qrm
