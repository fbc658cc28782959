#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rhodyn::units {

// Energies are eV throughout.  Internal evolution time is measured in
// hbar/eV, so phases are exp(-i * energy_eV * tau).
inline constexpr double hbar_ev_fs = 0.6582119569;
inline constexpr double kb_ev_per_k = 8.617333262e-5;

inline double fs_to_internal(double t_fs) { return t_fs / hbar_ev_fs; }
inline double internal_to_fs(double tau) { return tau * hbar_ev_fs; }
inline double ps_to_internal(double t_ps) { return fs_to_internal(t_ps * 1e3); }
inline double internal_to_ps(double tau) { return internal_to_fs(tau) * 1e-3; }

// Rate in eV (per internal time unit) -> 1/ps.
inline double rate_ev_to_per_ps(double r) { return r * 1e3 / hbar_ev_fs; }

// Parses a time with a mandatory fs/ps/ns suffix, returns femtoseconds.
inline double parse_time_fs(const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad time literal '" + text + "'");
  }
  while (pos < text.size() && text[pos] == ' ') ++pos;
  const std::string suffix = text.substr(pos);
  if (suffix == "fs") return value;
  if (suffix == "ps") return value * 1e3;
  if (suffix == "ns") return value * 1e6;
  throw std::invalid_argument("time '" + text +
                              "' needs an explicit fs/ps/ns suffix");
}

inline std::string format_time_fs(double t_fs) {
  // Emit with the largest suffix that keeps the mantissa exact-ish.
  char buf[64];
  if (t_fs >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.17gns", t_fs * 1e-6);
  } else if (t_fs >= 1e3) {
    std::snprintf(buf, sizeof buf, "%.17gps", t_fs * 1e-3);
  } else {
    std::snprintf(buf, sizeof buf, "%.17gfs", t_fs);
  }
  return buf;
}

}  // namespace rhodyn::units
