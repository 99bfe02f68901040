#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace mkdv::config {

using nlohmann::json;

/// Reads a JSON object file; throws ConfigError on I/O or syntax errors.
json load_file(const std::filesystem::path& path);

/// A number, or one of the strings "inf", "+inf", "-inf".
double to_number(const json& value, const std::string& where);

/// Typed access to one JSON object. Every key that is read is marked; finish()
/// rejects whatever is left, so typos surface as validation errors.
class Reader {
 public:
  Reader(const json& object, std::string context);

  bool has(const std::string& key) const;
  double number(const std::string& key, double fallback);
  double number(const std::string& key);
  long long integer(const std::string& key, long long fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, const std::string& fallback);
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
  /// Raw sub-value (object or array); marks the key as used.
  const json& raw(const std::string& key);
  std::string where(const std::string& key) const { return context_ + "." + key; }

  void finish() const;

 private:
  const json& at(const std::string& key);

  const json& obj_;
  std::string context_;
  std::set<std::string> used_;
};

}  // namespace mkdv::config
