#include "bfe/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bfe/errors.hpp"

namespace bfe {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(s);
  while (std::getline(stream, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& value, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": not a number: '" + value + "'");
  }
}

long parse_int(const std::string& value, const std::string& where) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": not an integer: '" + value + "'");
  }
}

}  // namespace

ConfigDoc ConfigDoc::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_string(text.str(), path);
}

ConfigDoc ConfigDoc::parse_string(const std::string& text, const std::string& origin) {
  ConfigDoc doc;
  doc.origin_ = origin;
  std::istringstream stream(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
      }
      doc.sections_[section];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    doc.sections_[section][key] = value;
  }
  return doc;
}

const std::string* ConfigDoc::find(const std::string& section, const std::string& key) const {
  used_sections_.insert(section);
  auto sec = sections_.find(section);
  if (sec == sections_.end()) return nullptr;
  auto item = sec->second.find(key);
  if (item == sec->second.end()) return nullptr;
  used_keys_.insert(section + "." + key);
  return &item->second;
}

void ConfigDoc::missing(const std::string& section, const std::string& key) const {
  throw ConfigError(origin_ + ": missing required key '" + key + "' in section [" + section + "]");
}

bool ConfigDoc::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::string ConfigDoc::get_string(const std::string& section, const std::string& key) const {
  const std::string* v = find(section, key);
  if (!v) missing(section, key);
  return *v;
}

std::string ConfigDoc::get_string(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
  const std::string* v = find(section, key);
  return v ? *v : fallback;
}

double ConfigDoc::get_double(const std::string& section, const std::string& key) const {
  return parse_double(get_string(section, key), "[" + section + "] " + key);
}

double ConfigDoc::get_double(const std::string& section, const std::string& key,
                             double fallback) const {
  const std::string* v = find(section, key);
  return v ? parse_double(*v, "[" + section + "] " + key) : fallback;
}

long ConfigDoc::get_int(const std::string& section, const std::string& key) const {
  return parse_int(get_string(section, key), "[" + section + "] " + key);
}

long ConfigDoc::get_int(const std::string& section, const std::string& key, long fallback) const {
  const std::string* v = find(section, key);
  return v ? parse_int(*v, "[" + section + "] " + key) : fallback;
}

bool ConfigDoc::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  const std::string* v = find(section, key);
  if (!v) return fallback;
  std::string lower = *v;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "true" || lower == "1" || lower == "yes" || lower == "on") return true;
  if (lower == "false" || lower == "0" || lower == "no" || lower == "off") return false;
  throw ConfigError("[" + section + "] " + key + ": not a boolean: '" + *v + "'");
}

void ConfigDoc::reject_unused() const {
  for (const auto& [section, items] : sections_) {
    if (!used_sections_.contains(section)) continue;
    for (const auto& [key, value] : items) {
      if (!used_keys_.contains(section + "." + key)) {
        throw ConfigError(origin_ + ": unknown key '" + key + "' in section [" + section + "]");
      }
    }
  }
}

Scheme scheme_from_config(const ConfigDoc& doc, const std::string& section) {
  Scheme scheme;
  scheme.growth_ratio = doc.get_double(section, "a");
  scheme.steps_per_growth = static_cast<int>(doc.get_int(section, "g"));
  scheme.plateau_steps = static_cast<int>(doc.get_int(section, "m_tilde"));
  scheme.iterations = static_cast<int>(doc.get_int(section, "m_b"));
  scheme.t_max_s = doc.get_double(section, "t_max_ms") * 1e-3;
  scheme.t_min_s = doc.get_double(section, "t_min_ms", 0.0) * 1e-3;
  scheme.validate();
  return scheme;
}

Scheme scheme_from_tuple(const std::string& tuple) {
  auto parts = split(tuple, ':');
  if (parts.size() != 5 && parts.size() != 6) {
    throw ConfigError("scheme tuple must be a:g:m_tilde:m_b:t_max_ms[:t_min_ms], got '" + tuple +
                      "'");
  }
  Scheme scheme;
  scheme.growth_ratio = parse_double(parts[0], "scheme tuple a");
  scheme.steps_per_growth = static_cast<int>(parse_int(parts[1], "scheme tuple g"));
  scheme.plateau_steps = static_cast<int>(parse_int(parts[2], "scheme tuple m_tilde"));
  scheme.iterations = static_cast<int>(parse_int(parts[3], "scheme tuple m_b"));
  scheme.t_max_s = parse_double(parts[4], "scheme tuple t_max_ms") * 1e-3;
  scheme.t_min_s = parts.size() == 6 ? parse_double(parts[5], "scheme tuple t_min_ms") * 1e-3 : 0.0;
  scheme.validate();
  return scheme;
}

SignalModel signal_from_config(const ConfigDoc& doc) {
  SignalModel model;
  model.f_c_true_hz = doc.get_double("signal", "f_c_true_hz", 0.0);
  model.snr_r = doc.get_double("signal", "r", 1540.0);
  model.contrast = doc.get_double("signal", "contrast", 1.0);
  std::string table = doc.get_string("signal", "shift_table", "");
  if (!table.empty()) model.shift_model = load_shift_table(table);
  model.validate();
  return model;
}

LoModel lo_from_config(const ConfigDoc& doc) {
  LoModel lo;
  lo.offset_hz = doc.get_double("lo", "offset_hz", 0.0);
  lo.white_fm_sigma_1s = doc.get_double("lo", "white_fm_sigma_1s", 0.0);
  lo.drift_hz_per_s = doc.get_double("lo", "drift_hz_per_s", 0.0);
  lo.nominal_hz = doc.get_double("lo", "nominal_hz", 6.835e9);
  lo.validate();
  return lo;
}

ShiftModel load_shift_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open shift table: " + path);
  std::vector<std::pair<double, double>> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    double t_r = 0.0, f_s = 0.0;
    if (!(row >> t_r >> f_s)) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected two columns (T_R seconds, f_s Hz)");
    }
    std::string extra;
    if (row >> extra) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": trailing content '" + extra +
                        "'");
    }
    table.emplace_back(t_r, f_s);
  }
  if (table.empty()) throw ConfigError(path + ": shift table is empty");
  std::sort(table.begin(), table.end());
  return [table](double t_r_s) {
    if (t_r_s <= table.front().first) return table.front().second;
    if (t_r_s >= table.back().first) return table.back().second;
    auto upper = std::upper_bound(table.begin(), table.end(), t_r_s,
                                  [](double t, const auto& row) { return t < row.first; });
    auto lower = upper - 1;
    double span = upper->first - lower->first;
    double frac = span > 0.0 ? (t_r_s - lower->first) / span : 0.0;
    return lower->second + frac * (upper->second - lower->second);
  };
}

}  // namespace bfe
