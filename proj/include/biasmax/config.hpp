#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace biasmax {

// Plain-text key-value configuration: one `key = value` per line, `#` starts
// a comment. Keys are kept in file order for deterministic round trips.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig load(const std::filesystem::path& path);
  static KeyValueConfig parse(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;               // throws ConfigError if absent
  std::string get_or(const std::string& key, std::string fallback) const;
  double get_real(const std::string& key) const;
  long long get_int(const std::string& key) const;
  std::vector<double> get_reals(const std::string& key) const;        // comma-separated
  std::vector<std::string> get_strings(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  // Keys with the given prefix, in file order.
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

  std::string to_string() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::size_t> index_;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace biasmax
