#ifndef VNDN_UTIL_CONFIG_HPP
#define VNDN_UTIL_CONFIG_HPP

#include "errors.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace vndn {

/// Flat key=value configuration text with '#' comments; section structure is
/// expressed with dotted prefixes (e.g. mac.full_rate_mbps=143.4).
class Config {
public:
  static Config
  parse(std::string_view text)
  {
    Config cfg;
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view row =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line;
      if (!row.empty() && row.back() == '\r')
        row.remove_suffix(1);
      std::size_t hash = row.find('#');
      if (hash != std::string_view::npos)
        row = row.substr(0, hash);
      row = trim(row);
      if (row.empty())
        continue;
      std::size_t eq = row.find('=');
      if (eq == std::string_view::npos)
        throw ValidationError("config line " + std::to_string(line) + ": expected key=value");
      std::string key(trim(row.substr(0, eq)));
      std::string value(trim(row.substr(eq + 1)));
      if (key.empty())
        throw ValidationError("config line " + std::to_string(line) + ": empty key");
      if (!cfg.m_entries.emplace(key, value).second)
        throw ValidationError("config line " + std::to_string(line) + ": duplicate key '" + key + "'");
    }
    return cfg;
  }

  static Config
  load(const std::string& path)
  {
    std::ifstream f(path, std::ios::binary);
    if (!f)
      throw ValidationError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
      return parse(ss.str());
    }
    catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }

  bool
  has(const std::string& key) const
  {
    return m_entries.count(key) != 0;
  }

  const std::map<std::string, std::string>&
  entries() const
  {
    return m_entries;
  }

  std::int64_t
  getInt(const std::string& key, std::int64_t fallback) const
  {
    auto it = m_entries.find(key);
    if (it == m_entries.end())
      return fallback;
    std::int64_t value = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ValidationError("config key '" + key + "': invalid integer '" + s + "'");
    return value;
  }

  double
  getDouble(const std::string& key, double fallback) const
  {
    auto it = m_entries.find(key);
    if (it == m_entries.end())
      return fallback;
    double value = 0.0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ValidationError("config key '" + key + "': invalid number '" + s + "'");
    return value;
  }

private:
  static std::string_view
  trim(std::string_view s)
  {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  }

  std::map<std::string, std::string> m_entries;
};

} // namespace vndn

#endif // VNDN_UTIL_CONFIG_HPP
