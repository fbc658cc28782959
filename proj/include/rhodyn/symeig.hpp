#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#ifdef RHODYN_USE_LAPACKE
#include <lapacke.h>
#endif

namespace rhodyn {

enum class EigBackend { automatic, lapack, eigen };

struct SymEigResult {
  Eigen::VectorXd values;   // ascending, only those <= vmax
  Eigen::MatrixXd vectors;  // n x found, empty when not requested
};

namespace detail {

inline SymEigResult sym_eig_eigen(const Eigen::MatrixXd& a, double vmax,
                                  bool want_vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  const Eigen::VectorXd& w = solver.eigenvalues();
  int keep = 0;
  while (keep < w.size() && w(keep) <= vmax) ++keep;
  SymEigResult out;
  out.values = w.head(keep);
  if (want_vectors) out.vectors = solver.eigenvectors().leftCols(keep);
  return out;
}

#ifdef RHODYN_USE_LAPACKE
// dsyevr with range selection (-inf, vmax]; the input matrix is consumed.
inline SymEigResult sym_eig_lapack(Eigen::MatrixXd& a, double vmax,
                                   bool want_vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return {};
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z;
  if (want_vectors) z.resize(n, n);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'V', 'L', n, a.data(), n,
      -1e308, vmax, 0, 0, 0.0, &found, w.data(),
      want_vectors ? z.data() : nullptr, n, isuppz.data());
  if (info != 0)
    throw std::runtime_error("LAPACKE_dsyevr failed, info=" + std::to_string(info));
  SymEigResult out;
  out.values = w.head(found);
  if (want_vectors) out.vectors = z.leftCols(found);
  return out;
}
#endif

}  // namespace detail

/// All eigenpairs of a real symmetric matrix with eigenvalue <= vmax,
/// ascending.  The matrix is destroyed by the LAPACK path.
inline SymEigResult sym_eig_upto(Eigen::MatrixXd& a, double vmax,
                                 bool want_vectors,
                                 EigBackend backend = EigBackend::automatic) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
#ifdef RHODYN_USE_LAPACKE
  if (backend != EigBackend::eigen)
    return detail::sym_eig_lapack(a, vmax, want_vectors);
#endif
  if (backend == EigBackend::lapack)
    throw std::runtime_error("LAPACK backend requested but not built in");
  return detail::sym_eig_eigen(a, vmax, want_vectors);
}

}  // namespace rhodyn
