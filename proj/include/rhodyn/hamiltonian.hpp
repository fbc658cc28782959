#pragma once

#include <Eigen/Dense>

#include "rhodyn/model.hpp"
#include "rhodyn/rotor.hpp"

// Assembly of the system Hamiltonian
//   H = T + E_n + (-1)^n V_n/2 (1 - cos phi) + omega x^2/2
//       + kappa x |1><1| + lambda x (|0><1| + |1><0|),
//   T = -(m_inv/2) d^2/dphi^2 - (omega/2) d^2/dx^2,
// in the product basis |el> (x) |rotor> (x) |ho>.  Index layout is el-major:
//   idx = el * R * n_ho + r * n_ho + v,
// where R is the rotor block (or full plane-wave) size.

namespace rhodyn {

namespace detail {

inline Eigen::MatrixXd assemble(const ModelParameters& p, int n_ho,
                                const Eigen::VectorXd& m2,
                                const Eigen::MatrixXd& cos_phi) {
  const int r = static_cast<int>(m2.size());
  const int d1 = r * n_ho;
  const Eigen::MatrixXd x = ho_position(n_ho);
  const Eigen::VectorXd eho = ho_energies(n_ho, p.omega);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * d1, 2 * d1);
  auto block = [&](int el_a, int el_b) {
    return h.block(el_a * d1, el_b * d1, d1, d1);
  };

  // rotor-diagonal pieces per electronic surface
  for (int el = 0; el < 2; ++el) {
    const double sign = el == 0 ? 1.0 : -1.0;
    const double en = el == 0 ? p.e0 : p.e1;
    const double vn = el == 0 ? p.v0 : p.v1;
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) {
        // E_n + T_rot + (-1)^n V_n/2 (1 - cos)
        double rot = -sign * 0.5 * vn * cos_phi(a, b);
        if (a == b) rot += en + 0.5 * vn + 0.5 * p.m_inv * m2(a);
        if (rot == 0.0) continue;
        for (int v = 0; v < n_ho; ++v)
          block(el, el)(a * n_ho + v, b * n_ho + v) += rot;
      }
      // HO ladder and the kappa shift on |1>
      for (int v = 0; v < n_ho; ++v) {
        block(el, el)(a * n_ho + v, a * n_ho + v) += eho(v);
        if (el == 1) {
          for (int w = 0; w < n_ho; ++w) {
            if (x(v, w) != 0.0)
              block(1, 1)(a * n_ho + v, a * n_ho + w) += p.kappa * x(v, w);
          }
        }
      }
    }
  }

  // diabatic coupling lambda * x between the surfaces
  for (int a = 0; a < r; ++a)
    for (int v = 0; v < n_ho; ++v)
      for (int w = 0; w < n_ho; ++w)
        if (x(v, w) != 0.0) {
          block(0, 1)(a * n_ho + v, a * n_ho + w) += p.lambda_c * x(v, w);
          block(1, 0)(a * n_ho + v, a * n_ho + w) += p.lambda_c * x(v, w);
        }

  return h;
}

}  // namespace detail

/// One real parity block of H in the cos/sin rotor basis.
inline Eigen::MatrixXd build_parity_block(const ModelParameters& p,
                                          const BasisSpec& basis, Parity parity) {
  p.validate();
  basis.validate();
  return detail::assemble(p, basis.n_ho, rotor_m_squared(basis.n_rotor_max, parity),
                          rotor_cos(basis.n_rotor_max, parity));
}

/// Full H in the plane-wave rotor basis m = -M..M (real symmetric).
inline Eigen::MatrixXd build_hamiltonian_plane_wave(const ModelParameters& p,
                                                    const BasisSpec& basis) {
  p.validate();
  basis.validate();
  return detail::assemble(p, basis.n_ho,
                          rotor_m_squared_plane_wave(basis.n_rotor_max),
                          rotor_cos_plane_wave(basis.n_rotor_max));
}

}  // namespace rhodyn
