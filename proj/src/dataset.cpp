#include "qrm/dataset.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qrm {

namespace {

constexpr char kMagic[4] = {'Q', 'R', 'G', 'S'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw std::runtime_error("dataset: truncated file while reading u32");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

static_assert(sizeof(float) == 4, "dataset format requires 32-bit float");

}  // namespace

std::string producer_name(Producer p) {
  return p == Producer::vmc_hmc ? "vmc-hmc" : "dcgan";
}

Producer producer_from_name(const std::string& name) {
  if (name == "vmc-hmc") return Producer::vmc_hmc;
  if (name == "dcgan") return Producer::dcgan;
  throw std::runtime_error("dataset: unknown producer '" + name + "'");
}

void write_dataset(const std::string& path, const DatasetHeader& header,
                   const std::vector<RotorConfiguration>& batch) {
  if (header.count < 1) throw std::invalid_argument("write_dataset: count must be >= 1");
  if (header.L < 2) throw std::invalid_argument("write_dataset: L must be >= 2");
  if (header.count != static_cast<long>(batch.size()))
    throw std::invalid_argument("write_dataset: header count does not match batch size");
  const long sites = static_cast<long>(header.L) * header.L;
  for (const auto& c : batch)
    if (c.lattice.L() != header.L || static_cast<long>(c.angles.size()) != sites)
      throw std::invalid_argument("write_dataset: configuration shape does not match header L");

  nlohmann::json j;
  j["g"] = header.g;
  j["J"] = header.J;
  j["L"] = header.L;
  j["count"] = header.count;
  j["seed"] = header.seed;
  j["producer"] = producer_name(header.producer);
  const std::string meta = j.dump();

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("write_dataset: cannot open '" + path + "'");
  os.write(kMagic, 4);
  write_u32(os, kVersion);
  write_u32(os, static_cast<std::uint32_t>(meta.size()));
  os.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  std::vector<float> row(static_cast<std::size_t>(sites));
  for (const auto& c : batch) {
    for (long i = 0; i < sites; ++i) row[static_cast<std::size_t>(i)] = static_cast<float>(c.angles[static_cast<std::size_t>(i)]);
    os.write(reinterpret_cast<const char*>(row.data()),
             static_cast<std::streamsize>(row.size() * sizeof(float)));
  }
  if (!os) throw std::runtime_error("write_dataset: write failed for '" + path + "'");
}

std::pair<DatasetHeader, std::vector<RotorConfiguration>> read_dataset(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_dataset: cannot open '" + path + "'");
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_dataset: bad magic in '" + path + "', expected \"QRGS\"");
  const std::uint32_t version = read_u32(is);
  if (version != kVersion)
    throw std::runtime_error("read_dataset: unsupported version " + std::to_string(version));
  const std::uint32_t meta_len = read_u32(is);
  std::string meta(meta_len, '\0');
  is.read(meta.data(), meta_len);
  if (!is) throw std::runtime_error("read_dataset: truncated metadata in '" + path + "'");

  DatasetHeader header;
  try {
    nlohmann::json j = nlohmann::json::parse(meta);
    header.g = j.at("g").get<double>();
    header.J = j.at("J").get<double>();
    header.L = j.at("L").get<int>();
    header.count = j.at("count").get<long>();
    header.seed = j.at("seed").get<long>();
    header.producer = producer_from_name(j.at("producer").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("read_dataset: invalid metadata: ") + e.what());
  }
  if (header.count < 1 || header.L < 2)
    throw std::runtime_error("read_dataset: header violates count >= 1, L >= 2");

  const long sites = static_cast<long>(header.L) * header.L;
  LatticeSpec lat(header.L);
  std::vector<RotorConfiguration> batch;
  batch.reserve(static_cast<std::size_t>(header.count));
  std::vector<float> row(static_cast<std::size_t>(sites));
  for (long s = 0; s < header.count; ++s) {
    is.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(float)));
    if (!is)
      throw std::runtime_error("read_dataset: truncated payload in '" + path + "' at sample " +
                               std::to_string(s));
    std::vector<double> angles(row.begin(), row.end());
    batch.emplace_back(lat, std::move(angles));
  }
  char extra;
  if (is.read(&extra, 1))
    throw std::runtime_error("read_dataset: trailing bytes beyond declared count in '" + path + "'");
  return {header, std::move(batch)};
}

DatasetHeader read_dataset_header(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_dataset: cannot open '" + path + "'");
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_dataset: bad magic in '" + path + "', expected \"QRGS\"");
  const std::uint32_t version = read_u32(is);
  if (version != kVersion)
    throw std::runtime_error("read_dataset: unsupported version " + std::to_string(version));
  const std::uint32_t meta_len = read_u32(is);
  std::string meta(meta_len, '\0');
  is.read(meta.data(), meta_len);
  if (!is) throw std::runtime_error("read_dataset: truncated metadata in '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(meta);
  DatasetHeader header;
  header.g = j.at("g").get<double>();
  header.J = j.at("J").get<double>();
  header.L = j.at("L").get<int>();
  header.count = j.at("count").get<long>();
  header.seed = j.at("seed").get<long>();
  header.producer = producer_from_name(j.at("producer").get<std::string>());
  return header;
}

}  // namespace qrm
