// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Front-end configuration: the global CLI knobs, their key=value config
// file form, and coefficient parsing shared by flags and config values.

#ifndef BOHL_CONFIG_HPP
#define BOHL_CONFIG_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bohl/counter.hpp"
#include "bohl/errors.hpp"
#include "bohl/trinomial.hpp"

namespace bohl {

struct CliConfig {
  std::string format = "json";  ///< one of json, csv, text
  bool closed_disk = false;
  double tol_int = 1e-10;      ///< integer-hit tolerance
  double grid_density = 1.0;   ///< oracle grid multiplier
  unsigned long long seed = 0; ///< test-corpus generation only

  friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

inline void validate(const CliConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
    throw Error("format must be one of json, csv, text (got \"" +
                cfg.format + "\")");
  }
  if (!(cfg.tol_int > 0.0) || !(cfg.tol_int < 0.5)) {
    throw Error("tol_int must lie in (0, 0.5)");
  }
  if (!(cfg.grid_density > 0.0)) {
    throw Error("grid_density must be positive");
  }
}

inline CountOptions to_count_options(const CliConfig& cfg) {
  CountOptions opts;
  opts.tol.integer_hit = cfg.tol_int;
  opts.oracle.grid_density = cfg.grid_density;
  opts.closed_disk = cfg.closed_disk;
  return opts;
}

namespace detail {

inline double parse_double_strict(const std::string& s, const char* what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || !end || *end != '\0' || !std::isfinite(v)) {
    throw Error(std::string("cannot parse ") + what + " from \"" + s + "\"");
  }
  return v;
}

inline std::string trim(const std::string& s) {
  std::size_t lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return "";
  std::size_t hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

}  // namespace detail

/// Parses a coefficient given as "re,im", as polar "mod@argdeg" (argument
/// in degrees), or as a bare real number.
inline Complex parse_complex(const std::string& text) {
  std::string s = detail::trim(text);
  if (s.empty()) throw Error("empty coefficient");
  if (auto at = s.find('@'); at != std::string::npos) {
    double mod = detail::parse_double_strict(s.substr(0, at), "modulus");
    double deg = detail::parse_double_strict(s.substr(at + 1), "argument");
    return std::polar(mod, deg * kPi / 180.0);
  }
  if (auto comma = s.find(','); comma != std::string::npos) {
    double re = detail::parse_double_strict(s.substr(0, comma), "real part");
    double im = detail::parse_double_strict(s.substr(comma + 1),
                                            "imaginary part");
    return Complex{re, im};
  }
  return Complex{detail::parse_double_strict(s, "real number"), 0.0};
}

/// Parses key=value lines; '#' starts a comment, blank lines are skipped.
/// Unknown keys are rejected so typos do not silently fall back to
/// defaults.
inline CliConfig parse_config_text(const std::string& text) {
  CliConfig cfg;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("config line " + std::to_string(line_no) +
                  " is not key=value: \"" + line + "\"");
    }
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key == "format") {
      cfg.format = value;
    } else if (key == "closed_disk") {
      if (value != "true" && value != "false") {
        throw Error("closed_disk must be true or false");
      }
      cfg.closed_disk = value == "true";
    } else if (key == "tol_int") {
      cfg.tol_int = detail::parse_double_strict(value, "tol_int");
    } else if (key == "grid_density") {
      cfg.grid_density = detail::parse_double_strict(value, "grid_density");
    } else if (key == "seed") {
      cfg.seed = std::strtoull(value.c_str(), nullptr, 10);
    } else {
      throw Error("unknown config key \"" + key + "\"");
    }
  }
  validate(cfg);
  return cfg;
}

/// Inverse of parse_config_text; doubles are written losslessly.
inline std::string config_to_text(const CliConfig& cfg) {
  char tol[40], density[40];
  std::snprintf(tol, sizeof tol, "%.17g", cfg.tol_int);
  std::snprintf(density, sizeof density, "%.17g", cfg.grid_density);
  std::string out;
  out += "format=" + cfg.format + "\n";
  out += std::string("closed_disk=") +
         (cfg.closed_disk ? "true" : "false") + "\n";
  out += std::string("tol_int=") + tol + "\n";
  out += std::string("grid_density=") + density + "\n";
  out += "seed=" + std::to_string(cfg.seed) + "\n";
  return out;
}

}  // namespace bohl

#endif  // BOHL_CONFIG_HPP
