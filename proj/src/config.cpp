#include "sensnet/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace sensnet {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_kv(const std::string& token, const std::string& where) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument(where + ": expected key=value, got \"" + token + "\"");
  const std::string key = trim(token.substr(0, eq));
  const std::string val = trim(token.substr(eq + 1));
  if (key.empty()) throw std::invalid_argument(where + ": empty key in \"" + token + "\"");
  return {key, val};
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file " + path);
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [k, v] = split_kv(line, path + ":" + std::to_string(lineno));
    c.kv_[k] = v;
  }
  return c;
}

Config Config::from_tokens(const std::vector<std::string>& tokens) {
  Config c;
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(tokens.size());
  for (const auto& t : tokens) pairs.push_back(split_kv(t, "argument"));
  for (const auto& [k, v] : pairs) {
    if (k == "config") {
      const Config file = from_file(v);
      for (const auto& [fk, fv] : file.kv_) c.kv_[fk] = fv;  // tokens still win below
    }
  }
  for (const auto& [k, v] : pairs) c.kv_[k] = v;
  return c;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_str(const std::string& key, const std::string& def) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? def : it->second;
}

double Config::get_double(const std::string& key, double def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not a number: " + it->second);
  }
  if (used != it->second.size() || !std::isfinite(v))
    throw std::invalid_argument("config: key " + key + " is not a finite number: " + it->second);
  return v;
}

long long Config::get_int(const std::string& key, long long def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(it->second, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not an integer: " + it->second);
  }
  if (used != it->second.size())
    throw std::invalid_argument("config: key " + key + " is not an integer: " + it->second);
  return v;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(it->second, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " is not an unsigned integer: " +
                                it->second);
  }
  if (used != it->second.size())
    throw std::invalid_argument("config: key " + key + " is not an unsigned integer: " +
                                it->second);
  return v;
}

bool Config::get_bool(const std::string& key, bool def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: key " + key + " is not a boolean: " + v);
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::vector<double> out;
  std::string rest = it->second;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string piece = trim(comma == std::string::npos ? rest : rest.substr(0, comma));
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    if (piece.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key " + key + " has a bad list entry: " + piece);
    }
    if (used != piece.size() || !std::isfinite(v))
      throw std::invalid_argument("config: key " + key + " has a bad list entry: " + piece);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("config: key " + key + " is an empty list");
  return out;
}

void Config::require_known(const std::vector<std::string>& allowed) const {
  std::string bad;
  for (const auto& [k, v] : kv_) {
    if (k == "config") continue;
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      if (!bad.empty()) bad += ", ";
      bad += k;
    }
  }
  if (!bad.empty()) {
    std::string ok;
    for (const auto& k : allowed) {
      if (!ok.empty()) ok += ", ";
      ok += k;
    }
    throw std::invalid_argument("unknown key(s): " + bad + "; accepted: " + ok);
  }
}

}  // namespace sensnet
