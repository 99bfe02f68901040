#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mkdvlab/solver.hpp"

namespace mkdv {

/// Library version baked in at build time.
std::string version_string();

/// Fields stamped into every output file so a run can be reproduced from it.
struct Provenance {
  std::string version = version_string();
  std::uint64_t seed = 0;
  int threads = 1;
  std::string command;
  std::string config_json;  ///< compact JSON echo of the validated configuration
};

/// 17 significant digits; non-finite values as inf, -inf, nan.
std::string format_double(double v);

/// CSV with a '#' provenance preamble, a header row, and fixed column order.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns, const Provenance& prov);
  void row(const std::vector<std::string>& cells);
  void row_numbers(const std::vector<double>& values);

 private:
  std::ofstream out_;
  std::size_t width_;
};

/// Writes dir/metadata.json, dir/snapshots.csv (t, then n samples) and dir/mass.csv.
void write_flow_record(const std::filesystem::path& dir, const FlowRecord& flow, const Provenance& prov);

/// Reads back the snapshot table and mass series of write_flow_record.
FlowRecord read_flow_record(const std::filesystem::path& dir);

}  // namespace mkdv
