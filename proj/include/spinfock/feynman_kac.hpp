#pragma once

// Path-space check of
//
//   (f_psi, e^{-t H~} f_phi)_{L2} = E[ conj(f_psi(X(0))) (e^{-i t B0} f_phi)(X(t)) ]
//
// on matrix coefficients, with X the P0 diffusion started from Haar measure.
// The left side is 2^{-n} <psi, e^{-tH} phi> for H = sum E_k c_k^dagger c_k.
// On coefficients e^{-i t B0} acts as the matrix semigroup e^{-tS} of
// S = pi(i B0) = sum E_k (N_k - 1/2).

#include "spinfock/sde.hpp"

#include <cmath>
#include <vector>

namespace spinfock {

struct FKEstimate {
  Complex mean;
  double std_error;
  std::size_t n_paths;
  Complex lhs_exact;
  double z_score;
};

struct FKParams {
  std::size_t n_paths = 10000;
  double dt = 1e-3;
  std::uint64_t seed = 0;
  SigmaConvention sigma = SigmaConvention::Corrected;
  unsigned threads = 0;
};

inline Complex fk_lhs_exact(const FockVector& psi, const FockVector& phi, const HamiltonianSpec& spec, double t) {
  if (psi.modes() != spec.n || phi.modes() != spec.n) throw SizeError("fk_lhs_exact: n mismatch");
  const Matrix semigroup = exact_semigroup(free_hamiltonian(spec.energies), t);
  return std::ldexp(1.0, -spec.n) * psi.amplitudes().dot(semigroup * phi.amplitudes());
}

/// Self-adjoint S = pi(i B0) acting on Fock space.
inline Matrix phase_generator(const HamiltonianSpec& spec) {
  return kI * build_parts(spec, RepTag::Spin).b0;
}

inline FKEstimate fk_rhs_mc(const FockVector& psi, const FockVector& phi, const HamiltonianSpec& spec, double t,
                            const FKParams& params) {
  if (params.n_paths < 100) throw DomainError("fk_rhs_mc needs at least 100 paths");
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  if (psi.modes() != spec.n || phi.modes() != spec.n) throw SizeError("fk_rhs_mc: n mismatch");
  SDEConfig config{spec, Process::P0, params.dt, 0.0, params.sigma, params.seed};
  const std::size_t steps = step_count(t, params.dt);
  if (steps > 0) config.dt = t / static_cast<double>(steps);
  config.horizon = std::max(t, config.dt);
  const FockVector chi = apply_operator(exact_semigroup(phase_generator(spec), t), phi);
  const auto values = haar_started_products(config, psi, {{steps, chi}}, params.n_paths, params.threads);
  const McEstimate est = summarize(values.front());
  const Complex lhs = fk_lhs_exact(psi, phi, spec, t);
  return {est.mean, est.std_error, est.samples, lhs, std::abs(est.mean - lhs) / est.std_error};
}

struct FKRow {
  double t;
  FKEstimate estimate;
};

inline std::vector<FKRow> fk_report(const FockVector& psi, const FockVector& phi, const HamiltonianSpec& spec,
                                    const std::vector<double>& t_grid, const FKParams& params) {
  std::vector<FKRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) rows.push_back({t, fk_rhs_mc(psi, phi, spec, t, params)});
  return rows;
}

}  // namespace spinfock
