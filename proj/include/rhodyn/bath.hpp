#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rhodyn/units.hpp"

namespace rhodyn {

enum class BathChannel { tuning_x, torsion_phi };

inline const char* channel_name(BathChannel c) {
  return c == BathChannel::tuning_x ? "x" : "phi";
}

/// Ohmic bath with exponential cutoff attached to one system channel.
struct BathSpec {
  BathChannel channel = BathChannel::tuning_x;
  double eta = 0.0;          // dimensionless coupling strength
  double omega_c = 0.0;      // cutoff (eV)
  double temperature = 0.0;  // kelvin; 0 means beta -> infinity

  void validate() const {
    const std::string tag = std::string("bath.") + channel_name(channel);
    if (!(eta >= 0)) throw std::invalid_argument(tag + ".eta must be >= 0");
    if (!(omega_c > 0)) throw std::invalid_argument(tag + ".omega_c must be > 0");
    if (!(temperature >= 0))
      throw std::invalid_argument(tag + ".temperature must be >= 0");
  }

  bool zero_temperature() const { return temperature == 0.0; }
  double beta() const {  // 1/eV; only meaningful at finite temperature
    return 1.0 / (units::kb_ev_per_k * temperature);
  }
};

/// J(w) = eta * w * exp(-w / w_c) for w >= 0.
inline double spectral_density(double omega, const BathSpec& bath) {
  if (omega < 0) throw std::invalid_argument("spectral_density: omega < 0");
  return bath.eta * omega * std::exp(-omega / bath.omega_c);
}

/// Bose-Einstein occupation; exactly 0 at zero temperature.
inline double occupation(double omega, double temperature) {
  if (!(omega > 0)) throw std::invalid_argument("occupation: omega must be > 0");
  if (temperature == 0.0) return 0.0;
  const double beta = 1.0 / (units::kb_ev_per_k * temperature);
  return 1.0 / std::expm1(beta * omega);
}

/// One-sided golden-rule rate kernel (eV):
///   gamma(w > 0) = J(w) (nbar + 1)   (emission)
///   gamma(w < 0) = J(|w|) nbar(|w|)  (absorption)
///   gamma(0)     = eta/beta, the continuous limit (0 at T = 0).
/// Detailed balance: gamma(w) e^{-beta w} = gamma(-w).
inline double rate_kernel(double omega, const BathSpec& bath) {
  constexpr double tiny = 1e-14;
  if (bath.zero_temperature()) {
    if (omega <= tiny) return 0.0;
    return spectral_density(omega, bath);
  }
  const double beta = bath.beta();
  if (std::abs(omega) <= tiny) return bath.eta / beta;
  const double a = std::abs(omega);
  const double j = spectral_density(a, bath);
  const double n = 1.0 / std::expm1(beta * a);
  return omega > 0 ? j * (n + 1.0) : j * n;
}

}  // namespace rhodyn
