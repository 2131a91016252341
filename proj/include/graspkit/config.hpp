#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "graspkit/error.hpp"

namespace graspkit {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key=value configuration. Lines are `key = value`, blank lines and
/// `#` comments are ignored. All modules read their parameters from one
/// shared namespace; keys are exactly the field names they configure.
class Config {
 public:
  Config() = default;

  static Config from_file(const std::filesystem::path& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse<double>(key, it->second);
  }

  int get_int(const std::string& key, int fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse<int>(key, it->second);
  }

  std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse<std::uint64_t>(key, it->second);
  }

  bool get_bool(const std::string& key, bool fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw ValidationError("config key '" + key + "': expected boolean, got '" + it->second + "'");
  }

  /// Comma-separated integer list, e.g. edgeconv_channels = 64,64,128,256.
  std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;

  /// Entries from `other` override entries already present.
  void merge(const Config& other) {
    for (const auto& [k, v] : other.values_) values_[k] = v;
  }

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  template <typename T>
  static T parse(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !(in >> std::ws).eof()) {
      throw ValidationError("config key '" + key + "': cannot parse '" + text + "'");
    }
    return value;
  }

  std::map<std::string, std::string> values_;
};

}  // namespace graspkit
