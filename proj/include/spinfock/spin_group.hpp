#pragma once

// Group-level machinery for Spin(2n+1): exponentials, Haar sampling and the
// matrix-coefficient embedding psi -> f_psi(g) = <vacuum, pi(g) psi>.

#include "spinfock/random.hpp"
#include "spinfock/so_algebra.hpp"
#include "spinfock/statistics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace spinfock {

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kLogBranchGuard = 1e-8;

/// exp(M) for anti-Hermitian M through the eigendecomposition of iM.
inline Matrix exp_skew_hermitian(const Matrix& m) {
  const Matrix h = kI * m;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (h + h.adjoint()));
  if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed in exp");
  const Vector phases = (-kI * eig.eigenvalues().cast<Complex>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Matrix exponential for arbitrary complex input (Pade, scaling and squaring).
inline Matrix expm_unchecked(const Matrix& m) { return m.exp(); }

struct GroupPoint {
  int n;
  Matrix spin;
  std::optional<RealMatrix> defining;

  static GroupPoint identity(int n) {
    check_modes(n);
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
    return {n, Matrix::Identity(dim, dim), RealMatrix::Identity(algebra_rank(n), algebra_rank(n))};
  }

  double unitarity_defect() const { return spinfock::unitarity_defect(spin); }

  friend GroupPoint operator*(const GroupPoint& a, const GroupPoint& b) {
    if (a.n != b.n) throw SizeError("group points for different n");
    GroupPoint out{a.n, a.spin * b.spin, std::nullopt};
    if (a.defining && b.defining) out.defining = *a.defining * *b.defining;
    return out;
  }

  /// The other lift of the same rotation (deck transformation).
  GroupPoint deck_flipped() const { return {n, -spin, defining}; }
};

inline Matrix group_exp(const AlgebraElement& a, const Representation& rep) {
  if (!a.has_real_coefficients()) {
    throw DomainError("group_exp needs real coefficients; use expm_unchecked for complex input");
  }
  return exp_skew_hermitian(rep.apply(a));
}

inline GroupPoint group_exp(const AlgebraElement& a) {
  const int n = a.modes();
  return {n, group_exp(a, Representation::spin(n)), group_exp(a, Representation::defining(n)).real()};
}

/// Principal logarithm of a rotation whose angles all stay below pi - guard.
/// Uses the Hermitian eigensystem of i (R - R^T)/2 and reads each angle from
/// (sin, cos); falls back to the Schur-Parlett logarithm when two planes
/// share |sin| and the eigenvectors cannot be separated.
inline std::optional<RealMatrix> rotation_log(const RealMatrix& r, double guard = kLogBranchGuard) {
  const RealMatrix sym = 0.5 * (r + r.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> cosines(sym, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < cosines.eigenvalues().size(); ++i) {
    const double chord = std::sqrt(std::max(0.0, 2.0 * (1.0 + cosines.eigenvalues()[i])));
    if (chord < guard) return std::nullopt;
  }
  const Matrix skew = (0.5 * (r - r.transpose())).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(kI * skew);
  const Matrix& v = eig.eigenvectors();
  const Matrix rc = r.cast<Complex>();
  Vector angles(v.cols());
  bool separated = true;
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const Vector col = v.col(i);
    const Complex lambda = col.dot(rc * col);  // e^{i theta} for an eigenvector of R
    const double theta = std::atan2(lambda.imag(), lambda.real());
    if ((rc * col - std::polar(1.0, theta) * col).norm() > 1e-9) separated = false;
    angles[i] = Complex(0.0, theta);
  }
  RealMatrix log;
  if (separated) {
    log = (v * angles.asDiagonal() * v.adjoint()).real();
  } else {
    log = r.log();
  }
  return RealMatrix(0.5 * (log - log.transpose()));
}

/// Real algebra element whose defining image is the antisymmetric matrix a.
inline AlgebraElement element_from_antisymmetric(const RealMatrix& a, int n) {
  AlgebraElement x(n);
  const int rank = algebra_rank(n);
  for (int j = 1; j <= rank; ++j)
    for (int k = j + 1; k <= rank; ++k)
      if (a(j - 1, k - 1) != 0.0) x.add(j, k, a(j - 1, k - 1));
  return x;
}

/// Haar-distributed rotation in SO(2n+1) (QR of a Gaussian matrix with the
/// diagonal sign fix and a determinant fix).
inline RealMatrix haar_rotation(Rng& rng, int n) {
  const int rank = algebra_rank(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(rank, rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < rank; ++r) g(r, c) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix& packed = qr.matrixQR();
  for (int i = 0; i < rank; ++i)
    if (packed(i, i) < 0.0) q.col(i) *= -1.0;
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

/// Haar sample on SO(2n+1) lifted to the spin representation through the
/// principal logarithm. Rotations too close to angle pi are redrawn.
inline GroupPoint haar_sample(Rng& rng, int n, const Representation& spin) {
  for (;;) {
    RealMatrix rotation = haar_rotation(rng, n);
    auto log = rotation_log(rotation);
    if (!log) continue;
    Matrix u = exp_skew_hermitian(spin.apply(element_from_antisymmetric(*log, n)));
    return {n, std::move(u), std::move(rotation)};
  }
}

inline GroupPoint haar_sample(Rng& rng, int n) { return haar_sample(rng, n, Representation::spin(n)); }

/// g -> <vacuum, pi(g) psi>.
struct MatrixCoefficient {
  FockVector state;

  Complex operator()(const Matrix& spin) const {
    if (static_cast<std::size_t>(spin.cols()) != state.dimension()) {
      throw SizeError("group point does not match Fock dimension");
    }
    return (spin.row(0) * state.amplitudes()).value();
  }

  Complex operator()(const GroupPoint& g) const {
    if (g.n != state.modes()) throw SizeError("group point and state disagree on n");
    return (*this)(g.spin);
  }
};

inline Complex evaluate_coefficient(const MatrixCoefficient& c, const GroupPoint& g) { return c(g); }

/// Monte Carlo estimate of the L2(Haar) inner product of two matrix
/// coefficients; the exact value is 2^{-n} <psi, phi>.
inline McEstimate l2_inner_mc(const FockVector& psi, const FockVector& phi, std::size_t samples, Rng& rng) {
  if (psi.modes() != phi.modes()) throw SizeError("l2_inner_mc: states disagree on n");
  if (samples < 100) throw DomainError("l2_inner_mc needs at least 100 samples");
  const int n = psi.modes();
  const Representation spin = Representation::spin(n);
  const MatrixCoefficient f{psi}, g{phi};
  ComplexAccumulator acc;
  for (std::size_t s = 0; s < samples; ++s) {
    const GroupPoint x = haar_sample(rng, n, spin);
    acc.add(std::conj(f(x)) * g(x));
  }
  return {acc.mean(), acc.std_error(), acc.count()};
}

/// Estimate of E|tr R|^2 over Haar rotations; equals 1 for the defining
/// representation of SO(2n+1).
inline McEstimate haar_trace_moment(int n, std::size_t samples, Rng& rng) {
  ComplexAccumulator acc;
  for (std::size_t s = 0; s < samples; ++s) {
    const double tr = haar_rotation(rng, n).trace();
    acc.add(tr * tr);
  }
  return {acc.mean(), acc.std_error(), acc.count()};
}

struct EntryMoments {
  RealMatrix mean;
  RealMatrix std_error;
};

inline EntryMoments haar_entry_means(int n, std::size_t samples, Rng& rng) {
  const int rank = algebra_rank(n);
  RealMatrix sum = RealMatrix::Zero(rank, rank), sum_sq = RealMatrix::Zero(rank, rank);
  for (std::size_t s = 0; s < samples; ++s) {
    const RealMatrix r = haar_rotation(rng, n);
    sum += r;
    sum_sq += r.cwiseProduct(r);
  }
  const double count = static_cast<double>(samples);
  RealMatrix mean = sum / count;
  RealMatrix var = (sum_sq / count - mean.cwiseProduct(mean)) * (count / (count - 1.0));
  return {mean, (var / count).cwiseSqrt()};
}

}  // namespace spinfock
