#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "mkdvlab/errors.hpp"

namespace mkdv::config {

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config " + path.string() + " must be a JSON object");
  return j;
}

double to_number(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ConfigError(where + " must be a number (or \"inf\")");
}

Reader::Reader(const json& object, std::string context) : obj_(object), context_(std::move(context)) {
  if (!obj_.is_object()) throw ConfigError(context_ + " must be a JSON object");
}

bool Reader::has(const std::string& key) const { return obj_.contains(key); }

const json& Reader::at(const std::string& key) {
  used_.insert(key);
  return obj_.at(key);
}

double Reader::number(const std::string& key, double fallback) {
  return has(key) ? to_number(at(key), where(key)) : fallback;
}

double Reader::number(const std::string& key) {
  if (!has(key)) throw ConfigError(where(key) + " is required");
  return to_number(at(key), where(key));
}

long long Reader::integer(const std::string& key, long long fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_unsigned()) return static_cast<long long>(v.get<unsigned long long>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw ConfigError(where(key) + " must be an integer");
}

bool Reader::boolean(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_boolean()) throw ConfigError(where(key) + " must be true or false");
  return v.get<bool>();
}

std::string Reader::string(const std::string& key, const std::string& fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_string()) throw ConfigError(where(key) + " must be a string");
  return v.get<std::string>();
}

std::vector<double> Reader::numbers(const std::string& key, const std::vector<double>& fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_array()) throw ConfigError(where(key) + " must be an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(to_number(v[i], where(key) + "[" + std::to_string(i) + "]"));
  return out;
}

const json& Reader::raw(const std::string& key) {
  if (!has(key)) throw ConfigError(where(key) + " is required");
  return at(key);
}

void Reader::finish() const {
  std::string unknown;
  for (auto it = obj_.begin(); it != obj_.end(); ++it)
    if (!used_.count(it.key())) unknown += (unknown.empty() ? "" : ", ") + it.key();
  if (!unknown.empty()) throw ConfigError("unknown keys in " + context_ + ": " + unknown);
}

}  // namespace mkdv::config
