#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tff/config_matrix.hpp"
#include "tff/error.hpp"
#include "tff/partition.hpp"
#include "tff/rational.hpp"
#include "tff/tff.hpp"

namespace tff {

// ---------------------------------------------------------------------------
// Spectra of a sum of two projections

/// Eigenvalue → multiplicity of P + Q. Entries with multiplicity 0 are
/// treated as absent.
using multiplicity_fn = std::map<rational, int>;

inline int multiplicity_at(const multiplicity_fn& m, const rational& value) {
  auto it = m.find(value);
  return it == m.end() ? 0 : it->second;
}

/// Conditions (i)–(v) for a spectrum of P + Q with rank P = p, rank Q = q.
inline bool validate_multiplicity(int p, int q, int dim, const multiplicity_fn& m) {
  if (p < 0 || q < 0 || p > dim || q > dim) return false;
  int total = 0;
  for (const auto& [value, mult] : m) {
    if (mult < 0) return false;
    if (mult == 0) continue;
    if (value < 0 || value > 2) return false;
    if (value > 0 && value < 2 && multiplicity_at(m, 2 - value) != mult) return false;
    total += mult;
  }
  if (total != dim) return false;
  if (multiplicity_at(m, 1) < std::abs(p - q)) return false;
  return multiplicity_at(m, 0) - multiplicity_at(m, 2) == dim - p - q;
}

/// Builds P, Q realizing `m` as a direct sum of small blocks: shared lines
/// (eigenvalue 2), 2×2 blocks of two lines at angle θ with 1 ± cos θ = {λ, 2−λ},
/// lines in only one of P, Q (eigenvalue 1), pairs of orthogonal lines for
/// the remaining eigenvalue-1 multiplicity, and zero blocks.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> two_projection_sum(int p, int q, int dim,
                                                                      const multiplicity_fn& m) {
  if (!validate_multiplicity(p, q, dim, m))
    throw error(errc::invalid_multiplicity, "multiplicity function violates the spectral conditions");
  Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(dim, dim), qm = Eigen::MatrixXd::Zero(dim, dim);
  int at = 0;
  for (int i = 0; i < multiplicity_at(m, 2); ++i, ++at) pm(at, at) = qm(at, at) = 1.0;
  for (const auto& [value, mult] : m) {
    if (!(value > 1 && value < 2)) continue;
    const double c = to_double(value) - 1.0;
    const double s = std::sqrt(1.0 - c * c);
    for (int i = 0; i < mult; ++i, at += 2) {
      pm(at, at) = 1.0;
      qm(at, at) = c * c;
      qm(at, at + 1) = qm(at + 1, at) = c * s;
      qm(at + 1, at + 1) = s * s;
    }
  }
  const int p_only = std::max(p - q, 0), q_only = std::max(q - p, 0);
  const int pairs = (multiplicity_at(m, 1) - std::abs(p - q)) / 2;
  for (int i = 0; i < p_only; ++i, ++at) pm(at, at) = 1.0;
  for (int i = 0; i < q_only; ++i, ++at) qm(at, at) = 1.0;
  for (int i = 0; i < pairs; ++i, at += 2) {
    pm(at, at) = 1.0;
    qm(at + 1, at + 1) = 1.0;
  }
  return {pm, qm};
}

// ---------------------------------------------------------------------------
// Spectrum targets from certificates

/// Row k lists the eigenvalues of P_1 + … + P_k implied by the certificate:
/// the parts of μ^k divided by N, padded with zeros to N entries.
inline std::vector<std::vector<rational>> spectrum_chain(const config_matrix& a) {
  const auto chain = mu_chain(a);
  std::vector<std::vector<rational>> out;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    std::vector<rational> row;
    for (int v : chain[k].padded(a.dim())) row.emplace_back(v, a.dim());
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projection sets

/// K orthonormal block bases U_k (N × L_k); P_k = U_k U_kᵀ.
struct projection_set {
  int dim = 0;
  rational alpha;
  std::vector<Eigen::MatrixXd> bases;
  double tolerance = 0.0;

  std::vector<int> ranks() const {
    std::vector<int> out;
    for (const auto& u : bases) out.push_back(static_cast<int>(u.cols()));
    return out;
  }

  /// The concatenated N × M basis matrix [U_1 | … | U_K].
  Eigen::MatrixXd concatenated() const {
    Eigen::Index cols = 0;
    for (const auto& u : bases) cols += u.cols();
    Eigen::MatrixXd out(dim, cols);
    Eigen::Index at = 0;
    for (const auto& u : bases) {
      out.middleCols(at, u.cols()) = u;
      at += u.cols();
    }
    return out;
  }
};

inline std::string to_csv(const projection_set& s) {
  std::ostringstream out;
  out.precision(17);
  const Eigen::MatrixXd u = s.concatenated();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) out << (j ? "," : "") << u(i, j);
    out << '\n';
  }
  return out.str();
}

struct verification_report {
  double sum_residual = 0.0;
  std::vector<double> orthonormality;  // ‖U_kᵀU_k − I‖_F
  std::vector<double> idempotence;     // ‖P_k² − P_k‖_F
  std::vector<int> numerical_ranks;
  std::vector<int> expected_ranks;
  bool pass = false;
};

/// Checks every block and the frame identity ΣP_k = αI; ranks are counted
/// as eigenvalues of P_k above 1/2.
inline verification_report verify_tff(const projection_set& s, const rational& alpha, double tol) {
  verification_report r;
  const int n = s.dim;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  bool ok = true;
  for (const auto& u : s.bases) {
    if (u.rows() != n) throw error(errc::dimension_mismatch, "basis row count differs from dimension");
    const Eigen::MatrixXd p = u * u.transpose();
    sum += p;
    const double ortho = (u.transpose() * u - Eigen::MatrixXd::Identity(u.cols(), u.cols())).norm();
    const double idem = (p * p - p).norm();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p, Eigen::EigenvaluesOnly);
    const int rank = static_cast<int>((eig.eigenvalues().array() > 0.5).count());
    r.orthonormality.push_back(ortho);
    r.idempotence.push_back(idem);
    r.numerical_ranks.push_back(rank);
    r.expected_ranks.push_back(static_cast<int>(u.cols()));
    ok = ok && ortho <= tol && idem <= tol && rank == u.cols();
  }
  r.sum_residual = (sum - to_double(alpha) * Eigen::MatrixXd::Identity(n, n)).norm();
  r.pass = ok && r.sum_residual <= tol;
  return r;
}

class convergence_error : public error {
 public:
  explicit convergence_error(double best)
      : error(errc::convergence_failure, "best residual " + std::to_string(best)), best_(best) {}
  double best_residual() const noexcept { return best_; }

 private:
  double best_;
};

namespace detail {

inline Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& sym, bool& ok) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  const auto& d = eig.eigenvalues();
  ok = d.minCoeff() > 1e-12;
  if (!ok) return sym;
  return eig.eigenvectors() * d.cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
}

inline double frame_residual(const Eigen::MatrixXd& u, double alpha) {
  return (u * u.transpose() - alpha * Eigen::MatrixXd::Identity(u.rows(), u.rows())).norm();
}

}  // namespace detail

struct realize_options {
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int max_restarts = 20;
  int max_iterations = 20000;
};

/// Numerically builds a tight fusion frame with ranks L in R^N. Alternates
/// between rescaling the concatenated basis to a tight frame
/// (U ← √α S^{-1/2} U with S = UUᵀ) and re-orthonormalizing each block by
/// its polar factor. Each restart draws a fresh Gaussian start from
/// (seed, restart index); the first restart to reach `tol` wins.
inline projection_set realize_tff(const partition& ranks, int dim, const realize_options& opt = {}) {
  if (!decide(ranks, dim))
    throw error(errc::not_a_tff_sequence, to_string(ranks) + " is not a TFF sequence in dimension " + std::to_string(dim));
  const rational alpha(ranks.size(), dim);
  const double a = to_double(alpha);
  const int m = ranks.size();

  projection_set out{dim, alpha, {}, opt.tol};
  if (ranks.length() == 1) {
    out.bases.push_back(Eigen::MatrixXd::Identity(dim, dim));
    return out;
  }

  double best = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd u(dim, m);
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      for (Eigen::Index i = 0; i < u.rows(); ++i) u(i, j) = gauss(gen);

    auto orthonormalize_blocks = [&](bool& ok) {
      Eigen::Index at = 0;
      for (int r : ranks.parts()) {
        auto block = u.middleCols(at, r);
        Eigen::MatrixXd gram = block.transpose() * block;
        Eigen::MatrixXd w = detail::inverse_sqrt(gram, ok);
        if (!ok) return;
        block = block * w;
        at += r;
      }
    };

    bool ok = true;
    orthonormalize_blocks(ok);
    double residual = detail::frame_residual(u, a);
    double checkpoint = residual;
    for (int it = 0; ok && it < opt.max_iterations; ++it) {
      Eigen::MatrixXd scale = detail::inverse_sqrt(u * u.transpose(), ok);
      if (!ok) break;
      u = std::sqrt(a) * scale * u;
      orthonormalize_blocks(ok);
      if (!ok) break;
      residual = detail::frame_residual(u, a);
      best = std::min(best, residual);
      if (residual <= opt.tol * 0.5) break;
      if (it % 500 == 499) {
        if (residual > 0.999 * checkpoint) break;  // stalled
        checkpoint = residual;
      }
    }
    if (ok && residual <= opt.tol * 0.5) {
      Eigen::Index at = 0;
      for (int r : ranks.parts()) {
        out.bases.emplace_back(u.middleCols(at, r));
        at += r;
      }
      return out;
    }
  }
  throw convergence_error(best);
}

}  // namespace tff
