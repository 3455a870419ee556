#pragma once

// Left-invariant Stratonovich diffusions on Spin(2n+1), evolved in the spin
// representation:
//
//   (P0)  dX = sum_j sigma_j A_j(X) o dW^j
//   (P)   dY = sum_j sigma_j A_j(Y) o dW^j - B0(Y) dt
//
// with A_j = X_{j,2n+1}, diffusion weights E'_{2k-1} = E'_{2k} = E_k and
// sigma_j = sqrt(2 E'_j) (corrected) or sqrt(E'_j) (paper_literal). Each step
// right-multiplies by exp(sum_j sigma_j pi(A_j) dW^j + drift dt), which keeps
// the state exactly unitary up to rounding.

#include "spinfock/hamiltonian.hpp"
#include "spinfock/parallel.hpp"
#include "spinfock/spin_group.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spinfock {

enum class Process { P, P0 };
enum class SigmaConvention { Corrected, PaperLiteral };

inline std::string to_string(Process p) { return p == Process::P ? "p" : "p0"; }
inline std::string to_string(SigmaConvention s) {
  return s == SigmaConvention::Corrected ? "corrected" : "paper-literal";
}

struct SDEConfig {
  HamiltonianSpec spec;
  Process process = Process::P0;
  double dt = 1e-3;
  double horizon = 0.0;
  SigmaConvention sigma = SigmaConvention::Corrected;
  std::uint64_t seed = 0;

  void validate() const {
    spec.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be finite and > 0");
    if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be finite and >= 0");
    if (horizon > 0.0 && dt > horizon) throw DomainError("dt must not exceed the horizon");
  }

  /// E'_j for j = 1..2n.
  std::vector<double> diffusion_weights() const {
    std::vector<double> w;
    for (double e : spec.energies) {
      w.push_back(e);
      w.push_back(e);
    }
    return w;
  }

  std::vector<double> sigmas() const {
    std::vector<double> s;
    for (double w : diffusion_weights())
      s.push_back(sigma == SigmaConvention::Corrected ? std::sqrt(2.0 * w) : std::sqrt(w));
    return s;
  }
};

inline std::size_t step_count(double horizon, double dt) {
  if (horizon <= 0.0) return 0;
  const double ratio = horizon / dt;
  if (ratio > 1e15) throw DomainError("horizon/dt does not fit the step counter");
  return static_cast<std::size_t>(std::ceil(ratio - 1e-9));
}

struct PathState {
  double time;
  GroupPoint point;
};

/// Precomputed step kernel for one configuration. Thread-safe: all methods
/// are const and allocate their own scratch.
class SpinDiffusion {
 public:
  SpinDiffusion(const SDEConfig& config, double step) : n_(config.spec.n), step_(step), sigmas_(config.sigmas()) {
    config.validate();
    const Representation spin = Representation::spin(n_);
    const int top = algebra_rank(n_);
    for (int j = 1; j <= 2 * n_; ++j) generators_.push_back(spin.image(j, top));
    if (config.process == Process::P) drift_ = -build_parts(config.spec, spin).b0;
  }

  explicit SpinDiffusion(const SDEConfig& config) : SpinDiffusion(config, config.dt) {}

  int modes() const { return n_; }
  double step() const { return step_; }
  bool has_drift() const { return drift_.size() > 0; }
  const std::vector<double>& sigmas() const { return sigmas_; }
  const Matrix& generator(int j) const { return generators_.at(j - 1); }
  const Matrix& drift() const { return drift_; }

  /// exp(sum_j sigma_j pi(A_j) w_j + drift * step) for Brownian increments w.
  void step_factor(std::span<const double> increments, Matrix& factor, double sign = 1.0) const {
    if (increments.size() != generators_.size()) throw SizeError("expected 2n Brownian increments");
    const auto dim = generators_.front().rows();
    Matrix omega = Matrix::Zero(dim, dim);
    double theta_sq = 0.0;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (!std::isfinite(increments[j])) throw NumericError("non-finite Brownian increment");
      const double a = sign * sigmas_[j] * increments[j];
      omega += a * generators_[j];
      theta_sq += 0.25 * a * a;
    }
    if (has_drift()) {
      factor = exp_skew_hermitian(omega + step_ * drift_);
      return;
    }
    // omega = 1/2 gamma(a) squares to -theta^2 I.
    const double theta = std::sqrt(theta_sq);
    const double sinc = theta == 0.0 ? 1.0 : std::sin(theta) / theta;
    factor = sinc * omega;
    factor.diagonal().array() += std::cos(theta);
  }

  Matrix step_factor(std::span<const double> increments) const {
    Matrix f;
    step_factor(increments, f);
    return f;
  }

  /// Advances u by `steps` steps, calling observe(step_index, u) after each.
  template <typename Observer>
  void evolve(Matrix& u, std::size_t steps, Rng& rng, Observer&& observe) const {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(step_);
    std::vector<double> w(generators_.size());
    Matrix factor, next(u.rows(), u.cols());
    for (std::size_t s = 0; s < steps; ++s) {
      for (double& x : w) x = scale * normal(rng);
      step_factor(w, factor);
      next.noalias() = u * factor;
      u.swap(next);
      observe(s + 1, u);
    }
  }

  void evolve(Matrix& u, std::size_t steps, Rng& rng) const {
    evolve(u, steps, rng, [](std::size_t, const Matrix&) {});
  }

  /// Generator of the diffusion acting on coefficient states:
  /// 1/2 sum sigma_j^2 pi(A_j)^2 + drift.
  Matrix generator_matrix() const {
    const auto dim = generators_.front().rows();
    Matrix g = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < generators_.size(); ++j)
      g += 0.5 * sigmas_[j] * sigmas_[j] * (generators_[j] * generators_[j]);
    if (has_drift()) g += drift_;
    return g;
  }

 private:
  int n_;
  double step_;
  std::vector<double> sigmas_;
  std::vector<Matrix> generators_;  // pi(X_{j,2n+1}) = 1/2 gamma_j
  Matrix drift_;                    // -pi(B0) for process P, empty otherwise
};

/// One step with caller-supplied increments (each ~ N(0, dt)).
inline PathState sde_step(const PathState& state, std::span<const double> increments, const SDEConfig& config) {
  const SpinDiffusion diffusion(config);
  if (state.point.n != config.spec.n) throw SizeError("state and config disagree on n");
  return {state.time + config.dt, GroupPoint{state.point.n, state.point.spin * diffusion.step_factor(increments),
                                             std::nullopt}};
}

/// Path from `initial` to the horizon in ceil(horizon/dt) equal steps.
inline PathState simulate_path(const SDEConfig& config, const GroupPoint& initial, Rng& rng) {
  config.validate();
  const std::size_t steps = step_count(config.horizon, config.dt);
  if (steps == 0) return {0.0, initial};
  const SpinDiffusion diffusion(config, config.horizon / static_cast<double>(steps));
  Matrix u = initial.spin;
  diffusion.evolve(u, steps, rng);
  return {config.horizon, GroupPoint{initial.n, std::move(u), std::nullopt}};
}

struct GeneratorCheck {
  Complex f_x;               // f(x)
  Complex empirical;         // (E f(X(dt)) - f(x)) / dt
  double std_error;
  Complex generator_target;  // (L f)(x) for the configured sigma convention
  Complex semigroup_target;  // -(P0 f)(x) for P0, -(P f)(x) for P
};

/// One-step estimate of the generator on f = f_psi at x, using antithetic
/// increment pairs (w, -w).
inline GeneratorCheck generator_check(const FockVector& psi, const GroupPoint& x, double dt, std::size_t samples,
                                      const SDEConfig& config, Rng& rng) {
  if (psi.modes() != config.spec.n || x.n != config.spec.n) throw SizeError("generator_check: n mismatch");
  if (samples < 2) throw DomainError("generator_check needs at least 2 samples");
  const SpinDiffusion diffusion(config, dt);
  const MatrixCoefficient f{psi};
  const Complex fx = f(x);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> w(2 * config.spec.n);
  Matrix plus, minus;
  ComplexAccumulator acc;
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : w) v = std::sqrt(dt) * normal(rng);
    diffusion.step_factor(w, plus, 1.0);
    diffusion.step_factor(w, minus, -1.0);
    const Complex avg = 0.5 * (f(Matrix(x.spin * plus)) + f(Matrix(x.spin * minus)));
    acc.add((avg - fx) / dt);
  }
  const Representation spin = Representation::spin(config.spec.n);
  const HamiltonianParts parts = build_parts(config.spec, spin);
  Matrix semigroup = -parts.p0;
  if (config.process == Process::P) semigroup -= parts.b0;
  const MatrixCoefficient lf{apply_operator(diffusion.generator_matrix(), psi)};
  const MatrixCoefficient sf{apply_operator(semigroup, psi)};
  return {fx, acc.mean(), acc.std_error(), lf(x), sf(x)};
}

/// Observation of conj(f_psi(X(0))) f_chi(X(t)) along Haar-started paths.
struct Observation {
  std::size_t step;
  FockVector chi;
};

/// values[i][p] = conj(f_psi(X_p(0))) * f_{chi_i}(X_p(step_i * dt)) with
/// X_p(0) ~ Haar and path p driven by stream_rng(seed, p).
inline std::vector<std::vector<Complex>> haar_started_products(const SDEConfig& config, const FockVector& psi,
                                                               const std::vector<Observation>& observations,
                                                               std::size_t n_paths, unsigned threads = 0) {
  config.validate();
  const int n = config.spec.n;
  std::size_t last = 0;
  for (const auto& o : observations) {
    if (o.chi.modes() != n) throw SizeError("observation state disagrees on n");
    last = std::max(last, o.step);
  }
  if (psi.modes() != n) throw SizeError("psi disagrees on n");
  const SpinDiffusion diffusion(config);
  const Representation spin = Representation::spin(n);
  const MatrixCoefficient f{psi};
  std::vector<MatrixCoefficient> chis;
  for (const auto& o : observations) chis.push_back({o.chi});

  std::vector<std::vector<Complex>> values(observations.size(), std::vector<Complex>(n_paths));
  parallel_for(
      n_paths,
      [&](std::size_t p) {
        Rng rng = stream_rng(config.seed, p);
        const GroupPoint start = haar_sample(rng, n, spin);
        const Complex weight = std::conj(f(start));
        Matrix u = start.spin;
        auto record = [&](std::size_t step, const Matrix& current) {
          for (std::size_t i = 0; i < observations.size(); ++i)
            if (observations[i].step == step) values[i][p] = weight * chis[i](current);
        };
        record(0, u);
        diffusion.evolve(u, last, rng, record);
        if (!std::isfinite(u.norm())) throw NumericError("path diverged");
      },
      threads);
  return values;
}

struct DecayPoint {
  double t;
  McEstimate estimate;
};

struct DecayFit {
  double rate;
  double rate_std_error;
  std::vector<DecayPoint> points;
};

namespace detail {

// Least-squares slope of log(y) against t, ignoring non-positive y.
inline double log_slope(const std::vector<double>& t, const std::vector<double>& y) {
  double st = 0, sy = 0, stt = 0, sty = 0;
  int m = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > 0.0)) continue;
    const double ly = std::log(y[i]);
    st += t[i];
    sy += ly;
    stt += t[i] * t[i];
    sty += t[i] * ly;
    ++m;
  }
  if (m < 2) throw NumericError("decay fit needs at least two positive points");
  const double denom = m * stt - st * st;
  if (denom == 0.0) throw DomainError("decay fit needs at least two distinct times");
  return (m * sty - st * sy) / denom;
}

}  // namespace detail

/// Fits the exponential decay rate of |E[conj(f_psi(X(0))) f_psi(X(t))]| over
/// a time grid. Grid times are rounded to whole steps of config.dt; the rate
/// error comes from 20 batch fits.
inline DecayFit fit_decay_rate(const FockVector& psi, SDEConfig config, const std::vector<double>& t_grid,
                               std::size_t n_paths, unsigned threads = 0) {
  if (t_grid.size() < 2) throw DomainError("decay fit needs at least two grid times");
  if (n_paths < 100) throw DomainError("decay fit needs at least 100 paths");
  std::vector<Observation> obs;
  std::vector<double> times;
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw DomainError("grid times must be >= 0");
    const auto step = static_cast<std::size_t>(std::llround(t / config.dt));
    obs.push_back({step, psi});
    times.push_back(static_cast<double>(step) * config.dt);
  }
  config.horizon = *std::max_element(times.begin(), times.end());
  if (config.horizon < config.dt) config.horizon = config.dt;
  const auto values = haar_started_products(config, psi, obs, n_paths, threads);

  DecayFit fit{0.0, 0.0, {}};
  std::vector<double> means;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    fit.points.push_back({times[i], summarize(values[i])});
    means.push_back(std::abs(fit.points.back().estimate.mean));
  }
  fit.rate = -detail::log_slope(times, means);

  constexpr std::size_t kBatches = 20;
  const std::size_t per_batch = n_paths / kBatches;
  ComplexAccumulator batch_rates;
  for (std::size_t b = 0; b < kBatches; ++b) {
    std::vector<double> batch_means;
    for (std::size_t i = 0; i < obs.size(); ++i) {
      Complex s{};
      for (std::size_t p = b * per_batch; p < (b + 1) * per_batch; ++p) s += values[i][p];
      batch_means.push_back(std::abs(s) / static_cast<double>(per_batch));
    }
    batch_rates.add(-detail::log_slope(times, batch_means));
  }
  fit.rate_std_error = batch_rates.std_error();
  return fit;
}

}  // namespace spinfock
