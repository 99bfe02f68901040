#include "mkdvlab/persistence.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "mkdvlab/errors.hpp"

#ifndef MKDVLAB_VERSION
#define MKDVLAB_VERSION "0.0.0"
#endif

namespace mkdv {

using nlohmann::json;

std::string version_string() { return MKDVLAB_VERSION; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

json provenance_json(const Provenance& p) {
  json j;
  j["tool"] = "mkdvlab";
  j["version"] = p.version;
  j["command"] = p.command;
  j["seed"] = p.seed;
  j["threads"] = p.threads;
  j["config"] = p.config_json.empty() ? json::object() : json::parse(p.config_json);
  return j;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file " + path.string());
  return out;
}

}  // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns,
                     const Provenance& prov)
    : out_(open_out(path)), width_(columns.size()) {
  out_ << "# " << provenance_json(prov).dump() << '\n';
  for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("CSV row width does not match its header");
  for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << '\n';
}

void CsvWriter::row_numbers(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void write_flow_record(const std::filesystem::path& dir, const FlowRecord& flow, const Provenance& prov) {
  std::filesystem::create_directories(dir);
  const SolverConfig& c = flow.config;
  json meta = provenance_json(prov);
  meta["solver"] = {{"length", c.grid.length()}, {"n", c.grid.size()},       {"dt", c.dt},
                    {"horizon", c.horizon},      {"sign", c.sign},           {"dealias", c.dealias},
                    {"record_stride", c.record_stride}, {"nonlinearity", c.nonlinearity}};
  meta["steps_taken"] = flow.steps_taken;
  meta["blow_up"] = flow.blow_up;
  meta["last_finite_time"] = flow.last_finite_time;
  meta["mass_drift"] = flow.mass_drift();
  meta["wraparound"] = {{"ok", flow.wraparound.ok}, {"travel", flow.wraparound.travel},
                        {"limit", flow.wraparound.limit}};
  meta["snapshots"] = {{"file", "snapshots.csv"}, {"columns", "t, then n real samples u(x_j), x_j = j L / n"},
                       {"rows", flow.times.size()}};
  open_out(dir / "metadata.json") << meta.dump(2) << '\n';

  std::vector<std::string> cols{"t"};
  for (int j = 0; j < c.grid.size(); ++j) cols.push_back("u" + std::to_string(j));
  CsvWriter snaps(dir / "snapshots.csv", cols, prov);
  for (size_t i = 0; i < flow.times.size(); ++i) {
    std::vector<double> row{flow.times[i]};
    row.insert(row.end(), flow.states[i].samples.begin(), flow.states[i].samples.end());
    snaps.row_numbers(row);
  }
  CsvWriter mass(dir / "mass.csv", {"t", "mass"}, prov);
  for (size_t i = 0; i < flow.times.size(); ++i) mass.row_numbers({flow.times[i], flow.mass[i]});
}

namespace {

std::vector<std::vector<double>> read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FlowRecord read_flow_record(const std::filesystem::path& dir) {
  std::ifstream in(dir / "metadata.json");
  if (!in) throw ConfigError("cannot read " + (dir / "metadata.json").string());
  const json meta = json::parse(in);
  const json& s = meta.at("solver");
  FlowRecord rec;
  rec.config.grid = GridSpec(s.at("length").get<double>(), s.at("n").get<int>());
  rec.config.dt = s.at("dt").get<double>();
  rec.config.horizon = s.at("horizon").get<double>();
  rec.config.sign = s.at("sign").get<int>();
  rec.config.dealias = s.at("dealias").get<bool>();
  rec.config.record_stride = s.at("record_stride").get<int>();
  rec.config.nonlinearity = s.at("nonlinearity").get<double>();
  rec.steps_taken = meta.at("steps_taken").get<long long>();
  rec.blow_up = meta.at("blow_up").get<bool>();
  rec.last_finite_time = meta.at("last_finite_time").get<double>();
  rec.wraparound = {meta.at("wraparound").at("ok").get<bool>(), meta.at("wraparound").at("travel").get<double>(),
                    meta.at("wraparound").at("limit").get<double>()};
  for (auto& row : read_table(dir / "snapshots.csv")) {
    rec.times.push_back(row.front());
    rec.states.emplace_back(rec.config.grid, std::vector<double>(row.begin() + 1, row.end()));
  }
  for (auto& row : read_table(dir / "mass.csv")) rec.mass.push_back(row.at(1));
  return rec;
}

}  // namespace mkdv
