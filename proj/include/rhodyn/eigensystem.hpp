#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rhodyn/hamiltonian.hpp"
#include "rhodyn/symeig.hpp"

namespace rhodyn {

// Retained eigenstates of the system Hamiltonian.  Coefficients are stored
// against the real rotor product basis with el-major layout
//   idx = el * (2M+1) * n_ho + r * n_ho + v,
// where rotor index r = 0..M are the cos(m phi) functions (m = r) and
// r = M+1..2M the sin(m phi) functions (m = r - M).  Even-parity states have
// support only on the cos rows, odd-parity states only on the sin rows.
struct Eigensystem {
  ModelParameters params;
  BasisSpec basis;
  Eigen::VectorXd energies;    // ascending
  Eigen::VectorXi parity;      // +1 even, -1 odd
  Eigen::VectorXd transness;   // l_k in [0,1]
  Eigen::MatrixXd coefficients;  // primitive_dim x retained, empty if not kept
  bool cutoff_warning = false;   // cutoff close to the basis convergence edge

  int retained() const { return static_cast<int>(energies.size()); }
  bool has_vectors() const { return coefficients.size() > 0; }

  int rotor_row(Parity p, int j) const {
    return p == Parity::even ? j : basis.n_rotor_max + 1 + j;
  }
  int prim_index(int el, int rotor_r, int v) const {
    const int r_count = basis.rotor_count();
    return (el * r_count + rotor_r) * basis.n_ho + v;
  }
};

struct DiagonalizeOptions {
  bool want_vectors = true;
  EigBackend backend = EigBackend::automatic;
  double degeneracy_window = 1e-9;  // plane-wave path parity disentangling
};

/// Trans-ness l_k of one normalized coefficient vector (real rotor layout).
inline double trans_character(const Eigen::Ref<const Eigen::VectorXd>& coeff,
                              const BasisSpec& basis) {
  const int M = basis.n_rotor_max;
  const int nho = basis.n_ho;
  const int r_count = basis.rotor_count();
  const double norm2 = coeff.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-8)
    throw std::invalid_argument("trans_character expects a normalized vector");

  const Eigen::MatrixXd we = rotor_trans_weight(M, Parity::even);
  const Eigen::MatrixXd wo = rotor_trans_weight(M, Parity::odd);
  double l = 0.0;
  for (int el = 0; el < 2; ++el) {
    // view the slice as (rotor x ho); rows are contiguous in v
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        slice(coeff.data() + static_cast<std::ptrdiff_t>(el) * r_count * nho,
              r_count, nho);
    const auto ce = slice.topRows(M + 1);
    const auto co = slice.bottomRows(M);
    l += (ce.transpose() * we * ce).trace();
    l += (co.transpose() * wo * co).trace();
  }
  return l;
}

namespace detail {

struct BlockSolution {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // block-local
  Parity parity;
};

// Fix the sign so the largest-magnitude entry is positive.
inline void fix_phase(Eigen::Ref<Eigen::VectorXd> v) {
  int imax = 0;
  double amax = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > amax) {
      amax = a;
      imax = i;
    }
  }
  if (v(imax) < 0) v = -v;
}

inline bool cutoff_near_edge(const ModelParameters& p, const BasisSpec& b) {
  const double m_classical = std::sqrt(2.0 * b.energy_cutoff / p.m_inv);
  if (m_classical > 0.8 * b.n_rotor_max) return true;
  if (b.energy_cutoff / p.omega > 0.85 * b.n_ho) return true;
  return false;
}

}  // namespace detail

/// Diagonalizes H and retains all eigenpairs with energy <= basis.energy_cutoff,
/// merged across parity blocks and sorted ascending.
inline Eigensystem diagonalize(const ModelParameters& params, const BasisSpec& basis,
                               const DiagonalizeOptions& opts = {}) {
  params.validate();
  basis.validate();

  const int M = basis.n_rotor_max;
  const int nho = basis.n_ho;
  const int r_count = basis.rotor_count();
  const auto dim = static_cast<Eigen::Index>(basis.primitive_dim());

  Eigensystem sys;
  sys.params = params;
  sys.basis = basis;
  sys.cutoff_warning = detail::cutoff_near_edge(params, basis);

  std::vector<double> energies;
  std::vector<int> parities;
  std::vector<Eigen::VectorXd> columns;  // already in the merged layout

  auto embed_block = [&](const Eigen::Ref<const Eigen::VectorXd>& local,
                         Parity p) {
    // block layout: el-major, rotor within parity, ho
    const int rb = rotor_block_size(M, p);
    Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
    for (int el = 0; el < 2; ++el)
      for (int j = 0; j < rb; ++j) {
        const int r = p == Parity::even ? j : M + 1 + j;
        full.segment(((static_cast<std::ptrdiff_t>(el) * r_count) + r) * nho, nho) =
            local.segment(((static_cast<std::ptrdiff_t>(el) * rb) + j) * nho, nho);
      }
    return full;
  };

  if (basis.parity_split) {
    for (Parity p : {Parity::even, Parity::odd}) {
      Eigen::MatrixXd h = build_parity_block(params, basis, p);
      SymEigResult r = sym_eig_upto(h, basis.energy_cutoff, opts.want_vectors,
                                    opts.backend);
      for (int k = 0; k < r.values.size(); ++k) {
        energies.push_back(r.values(k));
        parities.push_back(static_cast<int>(p));
        if (opts.want_vectors) columns.push_back(embed_block(r.vectors.col(k), p));
      }
    }
  } else {
    Eigen::MatrixXd h = build_hamiltonian_plane_wave(params, basis);
    SymEigResult r = sym_eig_upto(h, basis.energy_cutoff, opts.want_vectors,
                                  opts.backend);
    if (!opts.want_vectors)
      throw std::invalid_argument(
          "parity_split=false requires eigenvectors to assign parity labels");

    // Rotate numerically degenerate clusters onto parity eigenstates.
    // Parity in the plane-wave basis is the permutation m -> -m.
    auto pw_index = [&](int el, int m, int v) {
      return ((static_cast<std::ptrdiff_t>(el) * r_count) + (m + M)) * nho + v;
    };
    const int found = static_cast<int>(r.values.size());
    int c0 = 0;
    while (c0 < found) {
      int c1 = c0 + 1;
      while (c1 < found &&
             r.values(c1) - r.values(c1 - 1) < opts.degeneracy_window)
        ++c1;
      const int width = c1 - c0;
      if (width > 1) {
        // diagonalize the cluster-projected parity operator
        Eigen::MatrixXd pc(static_cast<Eigen::Index>(dim), width);
        for (int c = 0; c < width; ++c) {
          const auto col = r.vectors.col(c0 + c);
          Eigen::VectorXd flipped(dim);
          for (int el = 0; el < 2; ++el)
            for (int m = -M; m <= M; ++m)
              for (int v = 0; v < nho; ++v)
                flipped(pw_index(el, m, v)) = col(pw_index(el, -m, v));
          pc.col(c) = flipped;
        }
        const Eigen::MatrixXd small =
            r.vectors.middleCols(c0, width).transpose() * pc;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            0.5 * (small + small.transpose()));
        r.vectors.middleCols(c0, width) =
            (r.vectors.middleCols(c0, width) * es.eigenvectors()).eval();
      }
      c0 = c1;
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < found; ++k) {
      const auto col = r.vectors.col(k);
      Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
      double even_w = 0.0, odd_w = 0.0;
      for (int el = 0; el < 2; ++el) {
        for (int v = 0; v < nho; ++v) {
          const double c0v = col(pw_index(el, 0, v));
          full(sys.prim_index(el, 0, v)) = c0v;
          even_w += c0v * c0v;
        }
        for (int m = 1; m <= M; ++m)
          for (int v = 0; v < nho; ++v) {
            const double cp = col(pw_index(el, m, v));
            const double cm = col(pw_index(el, -m, v));
            const double ce = (cp + cm) * inv_sqrt2;
            const double cs = (cp - cm) * inv_sqrt2;  // coefficient on i*sin
            full(sys.prim_index(el, m, v)) = ce;
            full(sys.prim_index(el, M + m, v)) = cs;
            even_w += ce * ce;
            odd_w += cs * cs;
          }
      }
      // After the cluster rotation each state is parity pure; zero the
      // residual opposite-sector leakage and renormalize.  For odd states
      // this drops the global phase i carried by the sin components.
      const bool is_even = even_w >= odd_w;
      for (int el = 0; el < 2; ++el)
        for (int m = 1; m <= M; ++m) {
          const int kill_r = is_even ? M + m : m;
          full.segment(static_cast<std::ptrdiff_t>(sys.prim_index(el, kill_r, 0)),
                       nho).setZero();
        }
      full.normalize();
      energies.push_back(r.values(k));
      parities.push_back(is_even ? +1 : -1);
      columns.push_back(std::move(full));
    }
  }

  // merge-sort by (energy, parity) for determinism
  std::vector<int> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (energies[a] != energies[b]) return energies[a] < energies[b];
    return parities[a] > parities[b];
  });

  const int n = static_cast<int>(order.size());
  sys.energies.resize(n);
  sys.parity.resize(n);
  if (opts.want_vectors) sys.coefficients.resize(dim, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    sys.energies(k) = energies[src];
    sys.parity(k) = parities[src];
    if (opts.want_vectors) {
      detail::fix_phase(columns[src]);
      sys.coefficients.col(k) = columns[src];
    }
  }
  if (opts.want_vectors) {
    sys.transness.resize(n);
    for (int k = 0; k < n; ++k)
      sys.transness(k) = trans_character(sys.coefficients.col(k), basis);
  }
  return sys;
}

/// Copy of the eigensystem restricted to the given state indices.
inline Eigensystem restrict_states(const Eigensystem& sys,
                                   const std::vector<int>& indices) {
  Eigensystem out;
  out.params = sys.params;
  out.basis = sys.basis;
  out.cutoff_warning = sys.cutoff_warning;
  const int n = static_cast<int>(indices.size());
  out.energies.resize(n);
  out.parity.resize(n);
  if (sys.transness.size() > 0) out.transness.resize(n);
  if (sys.has_vectors()) out.coefficients.resize(sys.coefficients.rows(), n);
  for (int k = 0; k < n; ++k) {
    const int s = indices[k];
    if (s < 0 || s >= sys.retained())
      throw std::out_of_range("restrict_states index out of range");
    out.energies(k) = sys.energies(s);
    out.parity(k) = sys.parity(s);
    if (sys.transness.size() > 0) out.transness(k) = sys.transness(s);
    if (sys.has_vectors()) out.coefficients.col(k) = sys.coefficients.col(s);
  }
  return out;
}

inline std::vector<int> sector_indices(const Eigensystem& sys, Parity p) {
  std::vector<int> idx;
  for (int k = 0; k < sys.retained(); ++k)
    if (sys.parity(k) == static_cast<int>(p)) idx.push_back(k);
  return idx;
}

/// Max eigenvalue drift below the cutoff when both basis sizes grow by `factor`.
inline double basis_convergence_drift(const ModelParameters& params,
                                      const BasisSpec& basis,
                                      double factor = 1.25,
                                      EigBackend backend = EigBackend::automatic) {
  BasisSpec big = basis;
  big.n_rotor_max = static_cast<int>(std::ceil(basis.n_rotor_max * factor));
  big.n_ho = static_cast<int>(std::ceil(basis.n_ho * factor));
  DiagonalizeOptions opts;
  opts.want_vectors = false;
  opts.backend = backend;
  const Eigensystem a = diagonalize(params, basis, opts);
  const Eigensystem b = diagonalize(params, big, opts);
  const int n = std::min(a.retained(), b.retained());
  double drift = 0.0;
  for (int k = 0; k < n; ++k)
    drift = std::max(drift, std::abs(a.energies(k) - b.energies(k)));
  return drift;
}

}  // namespace rhodyn
