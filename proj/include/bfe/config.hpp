#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bfe/adaptive.hpp"
#include "bfe/locking.hpp"
#include "bfe/schedule.hpp"
#include "bfe/signal.hpp"

namespace bfe {

/// Sectioned key-value configuration document ("[section]" headers, one
/// "key = value" per line, '#' or ';' comments). Every physical quantity
/// carries its unit in the key name (t_max_ms, f_c_true_hz, ...).
/// Lookups are tracked so unknown keys can be reported as errors.
class ConfigDoc {
 public:
  static ConfigDoc parse_file(const std::string& path);
  static ConfigDoc parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  long get_int(const std::string& section, const std::string& key) const;
  long get_int(const std::string& section, const std::string& key, long fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  /// Throws ConfigError naming the first unknown key, checking only sections
  /// this document was queried about (a file may carry sections for several
  /// subcommands).
  void reject_unused() const;

 private:
  std::string origin_;
  std::map<std::string, std::map<std::string, std::string>> sections_;
  mutable std::set<std::string> used_keys_;
  mutable std::set<std::string> used_sections_;

  const std::string* find(const std::string& section, const std::string& key) const;
  [[noreturn]] void missing(const std::string& section, const std::string& key) const;
};

/// Scheme from the [scheme] section: a, g, m_tilde, m_b, t_max_ms,
/// optional t_min_ms.
Scheme scheme_from_config(const ConfigDoc& doc, const std::string& section = "scheme");

/// Scheme from a colon-separated tuple "a:g:m_tilde:m_b:t_max_ms[:t_min_ms]".
Scheme scheme_from_tuple(const std::string& tuple);

/// Signal model from the [signal] section. The optional per-trial random
/// ground truth is handled by the caller; f_c_true_hz here defaults to 0.
SignalModel signal_from_config(const ConfigDoc& doc);

/// LO noise model from the [lo] section.
LoModel lo_from_config(const ConfigDoc& doc);

/// Two-column (T_R seconds, f_s Hz) table, linearly interpolated and clamped
/// to the end values outside the tabulated range.
ShiftModel load_shift_table(const std::string& path);

}  // namespace bfe
