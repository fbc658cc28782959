#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "rhodyn/eigensystem.hpp"

namespace rhodyn {

/// Franck-Condon state: the ground-state nuclear wavefunction promoted to the
/// diabatic surface |1> (Condon approximation), expanded over eigenstates.
struct FranckCondonState {
  Eigen::VectorXd amplitudes;  // c_k, unit norm
  int brightest_index = 0;     // argmax |c_k|^2
  double captured_norm2 = 0.0; // sum |c_k|^2 before renormalization
};

inline FranckCondonState franck_condon_state(const Eigensystem& sys,
                                             double norm_floor = 0.5) {
  if (!sys.has_vectors())
    throw std::invalid_argument("franck_condon_state needs eigenvector coefficients");
  if (sys.retained() == 0) throw std::invalid_argument("empty eigensystem");

  const int r_count = sys.basis.rotor_count();
  const int nho = sys.basis.n_ho;
  const std::ptrdiff_t d1 = static_cast<std::ptrdiff_t>(r_count) * nho;

  // nuclear part of the global ground state on |0>, placed on |1>
  const auto ground = sys.coefficients.col(0);
  Eigen::VectorXd promoted = Eigen::VectorXd::Zero(2 * d1);
  promoted.tail(d1) = ground.head(d1);
  const double promoted_norm2 = promoted.squaredNorm();
  if (promoted_norm2 <= 0.0)
    throw std::runtime_error("ground state has no |0> component to promote");
  promoted /= std::sqrt(promoted_norm2);

  FranckCondonState fc;
  fc.amplitudes = sys.coefficients.transpose() * promoted;
  fc.captured_norm2 = fc.amplitudes.squaredNorm();
  if (fc.captured_norm2 < norm_floor)
    throw std::runtime_error(
        "energy cutoff too low to contain the Franck-Condon envelope: captured " +
        std::to_string(fc.captured_norm2) + " < floor " + std::to_string(norm_floor));
  fc.amplitudes /= std::sqrt(fc.captured_norm2);

  fc.amplitudes.cwiseAbs2().maxCoeff(&fc.brightest_index);
  return fc;
}

}  // namespace rhodyn
