#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sensnet {

// Flat key=value settings. Values from later sources win, so command-line
// tokens override a config file named by the `config` token.
class Config {
 public:
  static Config from_tokens(const std::vector<std::string>& tokens);
  static Config from_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_str(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key, double def) const;
  long long get_int(const std::string& key, long long def) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t def) const;
  bool get_bool(const std::string& key, bool def) const;

  // Comma-separated doubles.
  std::vector<double> get_list(const std::string& key, const std::vector<double>& def) const;

  // Throws listing the offending keys when any key is not in `allowed`.
  void require_known(const std::vector<std::string>& allowed) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace sensnet
