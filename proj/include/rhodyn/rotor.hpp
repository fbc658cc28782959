#pragma once

#include <Eigen/Dense>
#include <cmath>

// Operator matrices for the torsional rotor and the harmonic tuning mode.
//
// Two rotor representations are used:
//  * plane waves exp(i m phi)/sqrt(2 pi), m = -M..M, in which cos(phi)
//    couples m <-> m+-1 with element 1/2;
//  * the real parity-adapted combinations 1/sqrt(2 pi), cos(m phi)/sqrt(pi)
//    (even) and sin(m phi)/sqrt(pi) (odd), in which every operator of the
//    model is real and block-diagonal in parity.
// The even block has M+1 functions (m = 0..M), the odd block M (m = 1..M).

namespace rhodyn {

enum class Parity : int { even = +1, odd = -1 };

inline int rotor_block_size(int n_rotor_max, Parity p) {
  return p == Parity::even ? n_rotor_max + 1 : n_rotor_max;
}

/// m quantum number of basis function `j` within a parity block.
inline int rotor_m_of(int j, Parity p) { return p == Parity::even ? j : j + 1; }

/// cos(phi) in a real parity block.
inline Eigen::MatrixXd rotor_cos(int n_rotor_max, Parity p) {
  const int n = rotor_block_size(n_rotor_max, p);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) c(j, j + 1) = c(j + 1, j) = 0.5;
  if (p == Parity::even && n > 1) c(0, 1) = c(1, 0) = 1.0 / std::sqrt(2.0);
  return c;
}

/// Kinetic diagonal m^2 (multiply by m_inv/2 for energy) in a parity block.
inline Eigen::VectorXd rotor_m_squared(int n_rotor_max, Parity p) {
  const int n = rotor_block_size(n_rotor_max, p);
  Eigen::VectorXd k(n);
  for (int j = 0; j < n; ++j) {
    const double m = rotor_m_of(j, p);
    k(j) = m * m;
  }
  return k;
}

/// (1 - cos phi)/2, the trans-ness weight, in a real parity block.
inline Eigen::MatrixXd rotor_trans_weight(int n_rotor_max, Parity p) {
  const int n = rotor_block_size(n_rotor_max, p);
  return 0.5 * (Eigen::MatrixXd::Identity(n, n) - rotor_cos(n_rotor_max, p));
}

namespace detail {
// integral of cos(k phi) over [pi/2, 3pi/2)
inline double cos_integral_half_circle(int k) {
  if (k == 0) return M_PI;
  const int a = std::abs(k);
  if (a % 2 == 0) return 0.0;
  const double sign = ((a - 1) / 2) % 2 == 0 ? -2.0 : 2.0;
  return sign / a;
}
}  // namespace detail

/// Exact matrix of the indicator of the trans region phi in [pi/2, 3pi/2)
/// in a real parity block.  Diagonal entries are exactly 1/2; the
/// cos<->sin cross blocks vanish, so parity blocks suffice.
inline Eigen::MatrixXd rotor_theta_trans(int n_rotor_max, Parity p) {
  const int n = rotor_block_size(n_rotor_max, p);
  Eigen::MatrixXd t(n, n);
  for (int j = 0; j < n; ++j) {
    const int m = rotor_m_of(j, p);
    for (int jj = j; jj < n; ++jj) {
      const int mm = rotor_m_of(jj, p);
      double val;
      if (p == Parity::even && m == 0 && mm == 0) {
        val = 0.5;
      } else if (p == Parity::even && m == 0) {
        val = detail::cos_integral_half_circle(mm) / (M_PI * std::sqrt(2.0));
      } else if (m == mm) {
        val = 0.5;
      } else {
        const double plus = detail::cos_integral_half_circle(m + mm);
        const double minus = detail::cos_integral_half_circle(m - mm);
        val = (p == Parity::even ? minus + plus : minus - plus) / (2.0 * M_PI);
      }
      t(j, jj) = t(jj, j) = val;
    }
  }
  return t;
}

/// cos(phi) in the plane-wave basis m = -M..M (index j = m + M).
inline Eigen::MatrixXd rotor_cos_plane_wave(int n_rotor_max) {
  const int n = 2 * n_rotor_max + 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) c(j, j + 1) = c(j + 1, j) = 0.5;
  return c;
}

inline Eigen::VectorXd rotor_m_squared_plane_wave(int n_rotor_max) {
  const int n = 2 * n_rotor_max + 1;
  Eigen::VectorXd k(n);
  for (int j = 0; j < n; ++j) {
    const double m = j - n_rotor_max;
    k(j) = m * m;
  }
  return k;
}

/// Dimensionless position operator of the tuning mode, <v|x|v+1> = sqrt((v+1)/2).
inline Eigen::MatrixXd ho_position(int n_ho) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_ho, n_ho);
  for (int v = 0; v + 1 < n_ho; ++v)
    x(v, v + 1) = x(v + 1, v) = std::sqrt((v + 1) / 2.0);
  return x;
}

/// HO energies omega*(v + 1/2).
inline Eigen::VectorXd ho_energies(int n_ho, double omega) {
  Eigen::VectorXd e(n_ho);
  for (int v = 0; v < n_ho; ++v) e(v) = omega * (v + 0.5);
  return e;
}

}  // namespace rhodyn
