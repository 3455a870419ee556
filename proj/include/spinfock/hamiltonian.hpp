#pragma once

// Quasi-Hamiltonian H~ = sum_k E_k D_k^+ D_k^- in a finite representation and
// its split H~ = P0 + i B0 into the second-order part P0 = -sum E_k L_k and
// the first-order part B0 = sum E_k [D_{2k-1,2n+1}, D_{2k,2n+1}].

#include "spinfock/so_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spinfock {

struct HamiltonianSpec {
  int n;
  std::vector<double> energies;

  HamiltonianSpec(int modes, std::vector<double> e) : n(modes), energies(std::move(e)) { validate(); }

  void validate() const {
    check_modes(n);
    if (energies.size() != static_cast<std::size_t>(n)) {
      throw SizeError("expected " + std::to_string(n) + " energies, got " + std::to_string(energies.size()));
    }
    for (std::size_t k = 0; k < energies.size(); ++k) {
      if (!(energies[k] > 0.0) || !std::isfinite(energies[k])) throw DomainError("energies must be finite and > 0");
      if (k > 0 && energies[k] < energies[k - 1]) throw DomainError("energies must be non-decreasing");
    }
  }

  double total_energy() const {
    double s = 0.0;
    for (double e : energies) s += e;
    return s;
  }
};

struct HamiltonianParts {
  RepTag rep;
  int n;
  Matrix h_tilde;
  Matrix p0;
  Matrix b0;
  std::vector<Matrix> t;        // T_k = D_{2k-1,2k}
  std::vector<Matrix> l;        // L_k = D_{2k-1,2n+1}^2 + D_{2k,2n+1}^2
  std::vector<Matrix> d_plus;   // D_k^+
  std::vector<Matrix> d_minus;  // D_k^-
};

inline HamiltonianParts build_parts(const HamiltonianSpec& spec, const Representation& rep) {
  spec.validate();
  if (rep.modes() != spec.n) throw SizeError("representation and spec disagree on n");
  const int n = spec.n;
  const int top = algebra_rank(n);
  const auto dim = rep.dimension();
  HamiltonianParts parts{rep.tag(), n, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                         {}, {}, {}, {}};
  for (int k = 1; k <= n; ++k) {
    const double e = spec.energies[k - 1];
    const Matrix& a = rep.image(2 * k - 1, top);
    const Matrix& b = rep.image(2 * k, top);
    parts.d_plus.push_back(a + kI * b);
    parts.d_minus.push_back(-a + kI * b);
    parts.t.push_back(rep.image(2 * k - 1, 2 * k));
    parts.l.push_back(a * a + b * b);
    parts.h_tilde += e * (parts.d_plus.back() * parts.d_minus.back());
    parts.p0 -= e * parts.l.back();
    parts.b0 += e * commutator(a, b);
  }
  return parts;
}

inline HamiltonianParts build_parts(const HamiltonianSpec& spec, RepTag tag) {
  return build_parts(spec, Representation::of(tag, spec.n));
}

/// H~ rebuilt from the expanded product
/// -sum E_k (D_{2k-1} + i D_{2k}) (D_{2k-1} - i D_{2k}).
inline Matrix factorized_h_tilde(const HamiltonianSpec& spec, const Representation& rep) {
  const int top = algebra_rank(spec.n);
  Matrix h = Matrix::Zero(rep.dimension(), rep.dimension());
  for (int k = 1; k <= spec.n; ++k) {
    const Matrix& a = rep.image(2 * k - 1, top);
    const Matrix& b = rep.image(2 * k, top);
    h -= spec.energies[k - 1] * ((a + kI * b) * (a - kI * b));
  }
  return h;
}

struct CarCheck {
  bool passed;
  double max_residual;
};

/// Canonical anticommutation relations among the D_k^{+/-} of a parts set.
inline CarCheck car_on_subspace_check(const HamiltonianParts& parts, double tol = 1e-12) {
  const auto dim = parts.h_tilde.rows();
  const Matrix id = Matrix::Identity(dim, dim);
  double worst = 0.0;
  for (int j = 0; j < parts.n; ++j) {
    for (int k = 0; k < parts.n; ++k) {
      Matrix mixed = anticommutator(parts.d_minus[j], parts.d_plus[k]);
      if (j == k) mixed -= id;
      worst = std::max({worst, max_abs(mixed), max_abs(anticommutator(parts.d_plus[j], parts.d_plus[k])),
                        max_abs(anticommutator(parts.d_minus[j], parts.d_minus[k]))});
    }
  }
  return {worst <= tol, worst};
}

/// Ascending eigenvalues of a Hermitian matrix.
inline std::vector<double> hermitian_spectrum(const Matrix& m, double tol = 1e-10) {
  if (!is_hermitian(m, tol)) throw DomainError("spectrum requested for a non-Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  const auto& ev = eig.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Sorted subset sums sum_{k in S} E_k over all S.
inline std::vector<double> subset_sums(const std::vector<double>& energies) {
  std::vector<double> sums;
  const std::size_t count = std::size_t{1} << energies.size();
  sums.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    double total = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k)
      if (s & (std::size_t{1} << k)) total += energies[k];
    sums.push_back(total);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

/// e^{-tM} for Hermitian M by spectral calculus.
inline Matrix exact_semigroup(const Matrix& m, double t, double tol = 1e-10) {
  if (!(t >= 0.0)) throw DomainError("semigroup time must be >= 0");
  if (!is_hermitian(m, tol)) throw DomainError("exact_semigroup requires a Hermitian generator");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.adjoint()));
  if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  const Eigen::VectorXd decay = (-t * eig.eigenvalues().array()).exp();
  return eig.eigenvectors() * decay.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace spinfock
