#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rhodyn {

/// Scalar parameters of the two-state two-mode Hamiltonian (all eV).
/// Defaults are the published parameter set for the retinal model.
struct ModelParameters {
  double m_inv = 2.80e-3;   // inverse mass of the torsional coordinate
  double e0 = 0.0;          // diabatic origin of |0>
  double e1 = 2.58;         // diabatic origin of |1>
  double v0 = 3.56;         // torsional amplitude on |0>
  double v1 = 1.19;         // torsional amplitude on |1>
  double omega = 0.19;      // tuning-mode frequency
  double kappa = 0.19;      // gradient coupling on |1>
  double lambda_c = 0.19;   // diabatic coupling

  void validate() const {
    if (!(m_inv > 0)) throw std::invalid_argument("model.m_inv must be > 0");
    if (!(omega > 0)) throw std::invalid_argument("model.omega must be > 0");
    // v0 = v1 = 0 is the separable free-rotor limit used by the test oracles.
    if (v0 < 0) throw std::invalid_argument("model.v0 must be >= 0");
    if (v1 < 0) throw std::invalid_argument("model.v1 must be >= 0");
  }

  /// Diabatic potential at (phi, x): el in {0,1}.
  double diabatic_potential(int el, double phi, double x = 0.0) const {
    const double torsion = (el == 0)
        ? e0 + 0.5 * v0 * (1.0 - std::cos(phi))
        : e1 - 0.5 * v1 * (1.0 - std::cos(phi));
    return torsion + 0.5 * omega * x * x + (el == 1 ? kappa * x : 0.0);
  }

  /// Harmonic frequency of the torsion near the cis minimum, sqrt(V0/2 * m_inv).
  double torsional_frequency() const { return std::sqrt(0.5 * v0 * m_inv); }
};

/// Primitive-basis sizes and eigenstate retention threshold.
struct BasisSpec {
  int n_rotor_max = 150;       // plane-wave index cutoff, m in [-n, n]
  int n_ho = 24;               // harmonic-oscillator levels for x
  double energy_cutoff = 3.0;  // retain eigenstates with e_k <= cutoff (eV)
  bool parity_split = true;

  static constexpr std::int64_t max_primitive_dim = 40000;

  int rotor_count() const { return 2 * n_rotor_max + 1; }
  std::int64_t primitive_dim() const {
    return 2ll * rotor_count() * n_ho;
  }

  void validate() const {
    if (n_rotor_max < 1) throw std::invalid_argument("basis.n_rotor_max must be >= 1");
    if (n_ho < 1) throw std::invalid_argument("basis.n_ho must be >= 1");
    if (!(energy_cutoff > 0)) throw std::invalid_argument("basis.energy_cutoff must be > 0");
    if (primitive_dim() > max_primitive_dim)
      throw std::invalid_argument(
          "basis dimension " + std::to_string(primitive_dim()) +
          " exceeds the guard limit " + std::to_string(max_primitive_dim));
  }
};

enum class VariationKind { scale_m_inv, shift_e1_compensated, scale_omega, scale_lambda };

struct ParameterVariation {
  VariationKind kind = VariationKind::scale_m_inv;
  double value = 1.0;  // factor for scale_*, offset in eV for shift_e1
};

/// Applies a single-parameter variation.  E1 shifts compensate V1 so that
/// E1 + V1 (and with it the energy storage and trans product gap) stays fixed.
inline ModelParameters apply_parameter_variation(const ModelParameters& p,
                                                 const ParameterVariation& var) {
  ModelParameters out = p;
  switch (var.kind) {
    case VariationKind::scale_m_inv:
      out.m_inv = p.m_inv * var.value;
      if (!(out.m_inv > 0))
        throw std::invalid_argument("variation makes m_inv <= 0");
      break;
    case VariationKind::shift_e1_compensated:
      out.e1 = p.e1 + var.value;
      out.v1 = p.v1 - var.value;
      if (!(out.v1 > 0))
        throw std::invalid_argument("variation makes v1 <= 0");
      break;
    case VariationKind::scale_omega:
      out.omega = p.omega * var.value;
      if (!(out.omega > 0))
        throw std::invalid_argument("variation makes omega <= 0");
      break;
    case VariationKind::scale_lambda:
      out.lambda_c = p.lambda_c * var.value;
      break;
  }
  return out;
}

inline const char* variation_name(VariationKind k) {
  switch (k) {
    case VariationKind::scale_m_inv: return "m_inv";
    case VariationKind::shift_e1_compensated: return "e1";
    case VariationKind::scale_omega: return "omega";
    case VariationKind::scale_lambda: return "lambda_c";
  }
  return "?";
}

}  // namespace rhodyn
