#pragma once

// Command drivers behind the spinfock CLI. Each command takes a resolved
// RunConfig and returns an exit code with a JSON report:
//
//   verify     algebraic invariants with max residuals   {config, checks, residuals}
//   spectrum   eigenvalues of H~ against subset sums     {config, rows, residuals}
//   fk         Feynman-Kac estimates on a time grid      {config, rows, estimates}
//   calibrate  decay-rate fit and one generator check    {config, rows, estimates}
//   haar-test  Haar-measure moment checks                {config, checks, residuals}
//
// Exit codes: 0 pass, 1 check failure, 2 usage or config error, 3 numeric failure.

#include "spinfock/clifford.hpp"
#include "spinfock/feynman_kac.hpp"
#include "spinfock/report.hpp"
#include "spinfock/uea.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinfock {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2, kExitNumeric = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int n = 1;
  std::vector<double> energies;  // empty: n ones
  std::vector<double> t_grid;    // empty: command default
  double dt = 1e-3;
  std::size_t paths = 10000;
  std::optional<std::uint64_t> seed;
  SigmaConvention sigma = SigmaConvention::Corrected;
  Process process = Process::P0;
  std::string format = "json";
  std::string out;                // empty: stdout
  std::optional<std::vector<int>> psi;  // occupied modes; empty: command default
  std::optional<std::vector<int>> phi;
  unsigned threads = 0;           // not part of the report; results do not depend on it
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify", "spectrum", "fk", "calibrate", "haar-test"};
  return names;
}

inline bool is_stochastic(const std::string& command) {
  return command == "fk" || command == "calibrate" || command == "haar-test";
}

inline SigmaConvention parse_sigma(const std::string& s) {
  if (s == "corrected") return SigmaConvention::Corrected;
  if (s == "paper-literal" || s == "paper_literal") return SigmaConvention::PaperLiteral;
  throw UsageError("sigma must be corrected or paper-literal, got '" + s + "'");
}

inline Process parse_process(const std::string& s) {
  if (s == "p0") return Process::P0;
  if (s == "p") return Process::P;
  throw UsageError("process must be p0 or p, got '" + s + "'");
}

/// Comma-separated list of doubles, e.g. "1,1.5,2.5".
inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

namespace detail {

inline std::vector<double> doubles_from(const Json& j, const char* key) {
  if (j.is_string()) return parse_double_list(j.get<std::string>());
  if (!j.is_array()) throw UsageError(std::string(key) + " must be a list of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw UsageError(std::string(key) + " must be a list of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

inline std::vector<int> modes_from(const Json& j, const char* key) {
  std::vector<int> out;
  for (double x : doubles_from(j, key)) {
    if (x != std::floor(x)) throw UsageError(std::string(key) + " must list integer modes");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

template <typename T>
T integer_from(const Json& j, const char* key) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<std::int64_t>() < 0) throw UsageError(std::string(key) + " must be >= 0");
    return j.get<T>();
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size() && s.find('-') == std::string::npos) return static_cast<T>(v);
    } catch (const std::exception&) {
    }
  }
  throw UsageError(std::string(key) + " must be a non-negative integer");
}

}  // namespace detail

/// Applies the keys of a flat JSON object onto cfg. Unknown keys are errors.
inline void apply_config_json(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "command") {
        cfg.command = value.get<std::string>();
      } else if (key == "n") {
        cfg.n = static_cast<int>(detail::integer_from<std::uint64_t>(value, "n"));
      } else if (key == "energies") {
        cfg.energies = detail::doubles_from(value, "energies");
      } else if (key == "t_grid" || key == "t-grid") {
        cfg.t_grid = detail::doubles_from(value, "t_grid");
      } else if (key == "dt") {
        if (!value.is_number()) throw UsageError("dt must be a number");
        cfg.dt = value.get<double>();
      } else if (key == "paths" || key == "n_paths") {
        cfg.paths = detail::integer_from<std::size_t>(value, "paths");
      } else if (key == "seed") {
        if (value.is_null()) {
          cfg.seed.reset();
        } else {
          cfg.seed = detail::integer_from<std::uint64_t>(value, "seed");
        }
      } else if (key == "sigma" || key == "sigma_convention") {
        cfg.sigma = parse_sigma(value.get<std::string>());
      } else if (key == "process") {
        cfg.process = parse_process(value.get<std::string>());
      } else if (key == "format") {
        cfg.format = value.get<std::string>();
      } else if (key == "out") {
        cfg.out = value.get<std::string>();
      } else if (key == "psi") {
        cfg.psi = detail::modes_from(value, "psi");
      } else if (key == "phi") {
        cfg.phi = detail::modes_from(value, "phi");
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    } catch (const Json::exception& e) {
      throw UsageError("bad value for config key '" + key + "': " + e.what());
    }
  }
}

inline std::vector<double> default_t_grid(const std::string& command) {
  if (command == "fk") return {0.25, 0.5, 1.0};
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.1 * i);
  return grid;
}

/// Fills defaulted fields and checks every module precondition up front.
inline RunConfig resolve(RunConfig cfg) {
  if (std::find(command_names().begin(), command_names().end(), cfg.command) == command_names().end()) {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  if (cfg.n < 1 || cfg.n > kMaxModes) throw UsageError("n must be in [1, " + std::to_string(kMaxModes) + "]");
  if (cfg.command == "verify" && cfg.n > 4) throw UsageError("verify supports n <= 4");
  if (cfg.energies.empty()) cfg.energies.assign(static_cast<std::size_t>(cfg.n), 1.0);
  try {
    HamiltonianSpec(cfg.n, cfg.energies);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("format must be json or csv");
  if (!is_stochastic(cfg.command)) return cfg;

  if (!cfg.seed) throw UsageError("command '" + cfg.command + "' needs --seed");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw UsageError("dt must be finite and > 0");
  if (cfg.paths < 100) throw UsageError("paths must be >= 100");
  if (cfg.command == "haar-test") return cfg;

  if (cfg.t_grid.empty()) cfg.t_grid = default_t_grid(cfg.command);
  for (double t : cfg.t_grid)
    if (!(t >= 0.0) || !std::isfinite(t)) throw UsageError("t grid values must be finite and >= 0");
  if (cfg.command == "calibrate" && cfg.t_grid.size() < 2) throw UsageError("calibrate needs at least two grid times");
  // fk defaults to the filled state, calibrate to the vacuum.
  std::vector<int> default_state;
  if (cfg.command == "fk")
    for (int k = 1; k <= cfg.n; ++k) default_state.push_back(k);
  if (!cfg.psi) cfg.psi = default_state;
  if (!cfg.phi) cfg.phi = *cfg.psi;
  for (const auto* modes : {&*cfg.psi, &*cfg.phi})
    for (int m : *modes)
      if (m < 1 || m > cfg.n) throw UsageError("state modes must lie in 1..n");
  return cfg;
}

inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["n"] = cfg.n;
  j["energies"] = cfg.energies;
  if (is_stochastic(cfg.command)) {
    if (cfg.command != "haar-test") j["t_grid"] = cfg.t_grid;
    if (cfg.command != "haar-test") j["dt"] = cfg.dt;
    j["paths"] = cfg.paths;
    j["seed"] = *cfg.seed;
    if (cfg.command != "haar-test") {
      j["sigma"] = to_string(cfg.sigma);
      j["process"] = to_string(cfg.process);
      j["psi"] = *cfg.psi;
      j["phi"] = *cfg.phi;
    }
  }
  j["format"] = cfg.format;
  j["out"] = cfg.out;
  return j;
}

struct CommandResult {
  int exit_code = kExitPass;
  Json report;
  std::string table;  // key of the report's tabular section

  std::vector<std::string> failed_checks() const {
    std::vector<std::string> names;
    if (report.contains("checks"))
      for (const auto& c : report["checks"])
        if (!c["passed"].get<bool>()) names.push_back(c["name"].get<std::string>());
    return names;
  }

  std::string render(const std::string& format) const {
    return format == "csv" ? render_csv(report, table) : render_json(report);
  }
};

struct VerifyOptions {
  // Test hook: bracket used for every homomorphism and symbolic check.
  const StructureConstants* structure = nullptr;
  std::size_t confluence_orders = 20;
};

namespace detail {

struct CheckList {
  Json checks = Json::array();
  Json residuals = Json::object();
  bool all_passed = true;

  void add(const std::string& name, double residual, double tolerance) {
    const bool passed = residual <= tolerance;
    all_passed = all_passed && passed;
    checks.push_back({{"name", name}, {"passed", passed}, {"residual", residual}, {"tolerance", tolerance}});
    residuals[name] = residual;
  }
};

inline FockVector state_from(const std::vector<int>& modes, int n) {
  return modes.empty() ? FockVector::vacuum(n) : FockVector::wedge(n, modes);
}

}  // namespace detail

inline CommandResult cmd_verify(const RunConfig& cfg, const VerifyOptions& options = {}) {
  const int n = cfg.n;
  const StructureConstants& table = options.structure ? *options.structure : standard_structure_constants();
  const HamiltonianSpec spec(n, cfg.energies);
  const auto dim = static_cast<Eigen::Index>(fock_dimension(n));
  const Matrix id = Matrix::Identity(dim, dim);
  detail::CheckList list;

  double car = 0.0;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      Matrix mixed = anticommutator(annihilation_matrix(j, n), creation_matrix(k, n));
      if (j == k) mixed -= id;
      car = std::max({car, max_abs(mixed), max_abs(anticommutator(creation_matrix(j, n), creation_matrix(k, n)))});
    }
  list.add("car", car, 1e-12);

  const CliffordGenerators gammas(n);
  double clifford = 0.0, reconstruction = 0.0;
  for (int j = 1; j <= 2 * n; ++j)
    for (int k = 1; k <= 2 * n; ++k) {
      Matrix anti = anticommutator(gammas(j), gammas(k));
      if (j == k) anti += 2.0 * id;
      clifford = std::max(clifford, max_abs(anti));
    }
  for (int k = 1; k <= n; ++k) {
    const Matrix up = 0.5 * (gammas(2 * k - 1) + kI * gammas(2 * k));
    const Matrix down = 0.5 * (kI * gammas(2 * k) - gammas(2 * k - 1));
    reconstruction = std::max({reconstruction, max_abs(up - creation_matrix(k, n)),
                               max_abs(down - annihilation_matrix(k, n))});
  }
  list.add("clifford_relations", clifford, 1e-12);
  list.add("clifford_reconstruction", reconstruction, 1e-12);

  list.add("homomorphism_spin", homomorphism_residual(Representation::spin(n), table), 1e-12);
  list.add("homomorphism_defining", homomorphism_residual(Representation::defining(n), table), 1e-12);

  double weights = 0.0;
  for (double w : weight_of(FockVector::vacuum(n))) weights = std::max(weights, std::abs(w + 0.5));
  for (double w : weight_of(FockVector::filled(n))) weights = std::max(weights, std::abs(w - 0.5));
  list.add("weights", weights, 1e-12);

  if (n <= 3) {
    // Residual counts non-zero normal forms; exact arithmetic, so 0 or more.
    double nonzero = 0.0;
    for (int l = 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k)
        if (!commutator_LU(l, k, n, table).is_zero()) nonzero += 1.0;
    list.add("symbolic_casimir_cartan", nonzero, 0.0);

    // [P0, B0] vanishes for any energies; binary rounding keeps them exact.
    std::vector<Rational> exact;
    for (double e : cfg.energies) exact.push_back(Rational(static_cast<std::int64_t>(std::llround(e * 1024)), 1024));
    const UEAHamiltonianParts uparts = uea_hamiltonian_parts(exact);
    const UEAPolynomial probe = uea_commutator(uparts.p0, uparts.b0);
    const UEAPolynomial canonical = pbw_normalize(probe, table);
    Rng rng(cfg.seed.value_or(0));
    double mismatches = canonical.is_zero() ? 0.0 : 1.0;
    for (std::size_t r = 0; r < options.confluence_orders; ++r)
      if (!(pbw_normalize_randomized(probe, rng, table) == canonical)) mismatches += 1.0;
    list.add("symbolic_confluence", mismatches, 0.0);
  }

  double commutes = 0.0, car_subspace = 0.0;
  for (RepTag tag : {RepTag::Spin, RepTag::Defining}) {
    const Representation rep = Representation::of(tag, n);
    const HamiltonianParts parts = build_parts(spec, rep);
    list.add("decomposition_" + to_string(tag),
             std::max(max_abs(parts.h_tilde - (parts.p0 + kI * parts.b0)),
                      max_abs(parts.h_tilde - factorized_h_tilde(spec, rep))),
             1e-12);
    commutes = max_abs(commutator(parts.p0, parts.b0));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        commutes = std::max({commutes, max_abs(commutator(parts.t[k], parts.l[l])),
                             max_abs(commutator(parts.t[k], parts.t[l]))});
    list.add("commutators_" + to_string(tag), commutes, 1e-12);
    if (tag == RepTag::Spin) car_subspace = car_on_subspace_check(parts).max_residual;
  }
  list.add("car_subspace_spin", car_subspace, 1e-12);

  const auto ev = hermitian_spectrum(build_parts(spec, RepTag::Spin).h_tilde);
  const auto sums = subset_sums(spec.energies);
  double spectrum = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) spectrum = std::max(spectrum, std::abs(ev[i] - sums[i]));
  list.add("spectrum", spectrum, 1e-10);

  CommandResult result;
  result.table = "checks";
  result.report["config"] = config_json(cfg);
  result.report["checks"] = list.checks;
  result.report["residuals"] = list.residuals;
  result.exit_code = list.all_passed ? kExitPass : kExitCheckFailure;
  return result;
}

inline CommandResult cmd_spectrum(const RunConfig& cfg) {
  const HamiltonianSpec spec(cfg.n, cfg.energies);
  const HamiltonianParts parts = build_parts(spec, RepTag::Spin);
  const auto ev = hermitian_spectrum(parts.h_tilde);
  const auto sums = subset_sums(spec.energies);
  Json rows = Json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double diff = std::abs(ev[i] - sums[i]);
    worst = std::max(worst, diff);
    rows.push_back({{"index", i}, {"eigenvalue", ev[i]}, {"subset_sum", sums[i]}, {"abs_diff", diff}});
  }
  const double split = max_abs(parts.h_tilde - (parts.p0 + kI * parts.b0));
  CommandResult result;
  result.table = "rows";
  result.report["config"] = config_json(cfg);
  result.report["rows"] = rows;
  result.report["residuals"] = {{"spectrum", worst}, {"decomposition", split}};
  result.exit_code = (worst <= 1e-10 && split <= 1e-12) ? kExitPass : kExitCheckFailure;
  return result;
}

inline CommandResult cmd_fk(const RunConfig& cfg) {
  const HamiltonianSpec spec(cfg.n, cfg.energies);
  const FockVector psi = detail::state_from(*cfg.psi, cfg.n), phi = detail::state_from(*cfg.phi, cfg.n);
  FKParams params;
  params.n_paths = cfg.paths;
  params.dt = cfg.dt;
  params.seed = *cfg.seed;
  params.sigma = cfg.sigma;
  params.threads = cfg.threads;
  Json rows = Json::array();
  double max_z = 0.0;
  for (const FKRow& row : fk_report(psi, phi, spec, cfg.t_grid, params)) {
    const FKEstimate& e = row.estimate;
    if (!std::isfinite(e.mean.real()) || !std::isfinite(e.std_error)) throw NumericError("non-finite estimate");
    max_z = std::max(max_z, e.z_score);
    rows.push_back({{"t", row.t},
                    {"lhs", e.lhs_exact.real()},
                    {"lhs_imag", e.lhs_exact.imag()},
                    {"rhs", e.mean.real()},
                    {"rhs_imag", e.mean.imag()},
                    {"stderr", e.std_error},
                    {"z", e.z_score}});
  }
  const bool passed = max_z <= 3.0;
  CommandResult result;
  result.table = "rows";
  result.report["config"] = config_json(cfg);
  result.report["rows"] = rows;
  result.report["estimates"] = {{"max_abs_z", max_z}, {"z_threshold", 3.0}, {"passed", passed}};
  result.exit_code = passed ? kExitPass : kExitCheckFailure;
  return result;
}

inline CommandResult cmd_calibrate(const RunConfig& cfg) {
  const HamiltonianSpec spec(cfg.n, cfg.energies);
  const FockVector psi = detail::state_from(*cfg.psi, cfg.n);
  SDEConfig sde{spec, cfg.process, cfg.dt, 0.0, cfg.sigma, *cfg.seed};
  const DecayFit fit = fit_decay_rate(psi, sde, cfg.t_grid, cfg.paths, cfg.threads);
  if (!std::isfinite(fit.rate)) throw NumericError("non-finite decay rate");

  Json rows = Json::array();
  for (const DecayPoint& p : fit.points)
    rows.push_back({{"t", p.t}, {"mean", p.estimate.mean.real()}, {"mean_imag", p.estimate.mean.imag()},
                    {"stderr", p.estimate.std_error}});

  const double half = 0.5 * spec.total_energy(), quarter = 0.25 * spec.total_energy();
  const double expected = cfg.sigma == SigmaConvention::Corrected ? half : quarter;
  const double tolerance = std::max(0.05, 4.0 * fit.rate_std_error);
  const bool passed = std::abs(fit.rate - expected) <= tolerance;

  // One-step generator estimate at a Haar point drawn from a stream no path uses.
  Rng rng = stream_rng(*cfg.seed, ~std::uint64_t{0});
  const GroupPoint x = haar_sample(rng, cfg.n);
  const GeneratorCheck g = generator_check(psi, x, cfg.dt, cfg.paths, sde, rng);
  const auto complex_json = [](Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; };

  CommandResult result;
  result.table = "rows";
  result.report["config"] = config_json(cfg);
  result.report["rows"] = rows;
  result.report["estimates"] = {
      {"fitted_rate", fit.rate},
      {"rate_stderr", fit.rate_std_error},
      {"candidate_half_total_energy", half},
      {"candidate_quarter_total_energy", quarter},
      {"expected_rate", expected},
      {"tolerance", tolerance},
      {"nearest_candidate", std::abs(fit.rate - half) <= std::abs(fit.rate - quarter) ? "half" : "quarter"},
      {"passed", passed},
      {"generator_check",
       {{"f_x", complex_json(g.f_x)},
        {"empirical", complex_json(g.empirical)},
        {"stderr", g.std_error},
        {"generator_target", complex_json(g.generator_target)},
        {"semigroup_target", complex_json(g.semigroup_target)}}}};
  result.exit_code = passed ? kExitPass : kExitCheckFailure;
  return result;
}

inline CommandResult cmd_haar_test(const RunConfig& cfg) {
  const int n = cfg.n;
  const std::uint64_t seed = *cfg.seed;
  Json checks = Json::array(), residuals = Json::object();
  bool all = true;
  const auto add = [&](const std::string& name, const McEstimate& est, double target, double threshold) {
    const double z = est.z_score(target);
    const bool passed = z <= threshold;
    all = all && passed;
    checks.push_back({{"name", name}, {"passed", passed}, {"estimate", est.mean.real()},
                      {"estimate_imag", est.mean.imag()}, {"stderr", est.std_error}, {"target", target}, {"z", z},
                      {"z_threshold", threshold}});
    residuals[name] = z;
  };
  Rng r1 = stream_rng(seed, 1), r2 = stream_rng(seed, 2), r3 = stream_rng(seed, 3), r4 = stream_rng(seed, 4);
  add("l2_vacuum_vacuum", l2_inner_mc(FockVector::vacuum(n), FockVector::vacuum(n), cfg.paths, r1),
      std::ldexp(1.0, -n), 3.0);
  add("l2_vacuum_e1", l2_inner_mc(FockVector::vacuum(n), FockVector::wedge(n, {1}), cfg.paths, r2), 0.0, 3.0);
  add("trace_second_moment", haar_trace_moment(n, cfg.paths, r3), 1.0, 3.0);

  // Many entries are tested at once, so the per-entry threshold is widened.
  const EntryMoments m = haar_entry_means(n, cfg.paths, r4);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.mean.rows(); ++i)
    for (Eigen::Index j = 0; j < m.mean.cols(); ++j) worst = std::max(worst, std::abs(m.mean(i, j)) / m.std_error(i, j));
  const bool entries_ok = worst <= 4.0;
  all = all && entries_ok;
  checks.push_back({{"name", "entry_means"}, {"passed", entries_ok}, {"estimate", m.mean.cwiseAbs().maxCoeff()},
                    {"estimate_imag", 0.0}, {"stderr", m.std_error.maxCoeff()}, {"target", 0.0}, {"z", worst},
                    {"z_threshold", 4.0}});
  residuals["entry_means"] = worst;

  CommandResult result;
  result.table = "checks";
  result.report["config"] = config_json(cfg);
  result.report["checks"] = checks;
  result.report["residuals"] = residuals;
  result.exit_code = all ? kExitPass : kExitCheckFailure;
  return result;
}

/// Runs cfg.command after resolving defaults. Usage problems become exit 2
/// and numeric breakdowns exit 3; the report is empty in both cases.
struct CommandOutcome {
  int exit_code;
  std::optional<CommandResult> result;
  std::string error;
};

inline CommandOutcome run_command(const RunConfig& raw, const VerifyOptions& verify_options = {}) {
  RunConfig cfg;
  try {
    cfg = resolve(raw);
  } catch (const std::exception& e) {
    return {kExitUsage, std::nullopt, e.what()};
  }
  try {
    CommandResult r;
    if (cfg.command == "verify") r = cmd_verify(cfg, verify_options);
    if (cfg.command == "spectrum") r = cmd_spectrum(cfg);
    if (cfg.command == "fk") r = cmd_fk(cfg);
    if (cfg.command == "calibrate") r = cmd_calibrate(cfg);
    if (cfg.command == "haar-test") r = cmd_haar_test(cfg);
    std::string message;
    if (r.exit_code == kExitCheckFailure) {
      const auto failed = r.failed_checks();
      message = failed.empty() ? "check failed" : "failed checks:";
      for (const auto& name : failed) message += " " + name;
    }
    const int code = r.exit_code;
    return {code, std::move(r), message};
  } catch (const NumericError& e) {
    return {kExitNumeric, std::nullopt, e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, std::nullopt, e.what()};
  } catch (const std::out_of_range& e) {
    return {kExitUsage, std::nullopt, e.what()};
  } catch (const std::domain_error& e) {
    return {kExitUsage, std::nullopt, e.what()};
  }
}

}  // namespace spinfock
