// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds are fixed so every run prints the same numbers.

#include "spinfock/commands.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace spinfock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome car_relations() {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const Matrix id = Matrix::Identity(1 << n, 1 << n);
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Matrix mixed = anticommutator(annihilation_matrix(j, n), creation_matrix(k, n));
        if (j == k) mixed -= id;
        worst = std::max({worst, max_abs(mixed), max_abs(anticommutator(creation_matrix(j, n), creation_matrix(k, n))),
                          max_abs(anticommutator(annihilation_matrix(j, n), annihilation_matrix(k, n)))});
      }
  }
  return {worst < 1e-12, fmt("n=1..4 max residual %.3g", worst)};
}

Outcome clifford_relations() {
  double worst = 0.0, recon = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const Matrix id = Matrix::Identity(1 << n, 1 << n);
    const CliffordGenerators g(n);
    for (int j = 1; j <= 2 * n; ++j)
      for (int k = 1; k <= 2 * n; ++k) {
        Matrix a = anticommutator(g(j), g(k));
        if (j == k) a += 2.0 * id;
        worst = std::max(worst, max_abs(a));
      }
    for (int k = 1; k <= n; ++k) {
      recon = std::max(recon, max_abs(0.5 * (g(2 * k - 1) + kI * g(2 * k)) - creation_matrix(k, n)));
      recon = std::max(recon, max_abs(0.5 * (kI * g(2 * k) - g(2 * k - 1)) - annihilation_matrix(k, n)));
    }
  }
  return {worst < 1e-12 && recon == 0.0, fmt("n=1..4 anticommutator residual %.3g, reconstruction residual %.3g", worst, recon)};
}

Outcome homomorphism() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (RepTag tag : {RepTag::Spin, RepTag::Defining})
      worst = std::max(worst, homomorphism_residual(Representation::of(tag, n)));
  const double secs = seconds_since(start);
  return {worst < 1e-12 && secs < 10.0, fmt("n=1..3 both reps max residual %.3g in %.2fs", worst, secs)};
}

Outcome weights() {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (double w : weight_of(FockVector::vacuum(n))) worst = std::max(worst, std::abs(w + 0.5));
    for (double w : weight_of(FockVector::filled(n))) worst = std::max(worst, std::abs(w - 0.5));
  }
  return {worst < 1e-12, fmt("vacuum -1/2, filled +1/2, max deviation %.3g", worst)};
}

UEAPolynomial random_polynomial(int n, std::mt19937_64& rng) {
  const auto symbols = basis_indices(n);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<int> len(1, 4), coef(-3, 3);
  UEAPolynomial p(n);
  for (int term = 0; term < 3; ++term) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(symbols[pick(rng)]);
    const int c = coef(rng);
    if (c != 0) p.add_term(w, GaussianRational(Rational(c), Rational(coef(rng), 2)));
  }
  return p;
}

Outcome symbolic() {
  const auto start = std::chrono::steady_clock::now();
  int nonzero = 0;
  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k)
        if (!commutator_LU(l, k, n).is_zero()) ++nonzero;

  std::mt19937_64 rng(2024);
  int mismatches = 0, orders = 0;
  std::vector<UEAPolynomial> probes;
  for (int n = 1; n <= 3; ++n) {
    probes.push_back(uea_commutator(casimir_pair(n, n), UEAPolynomial::symbol(1, 2, n)));
    for (int i = 0; i < 3; ++i) probes.push_back(random_polynomial(n, rng));
  }
  for (const auto& p : probes) {
    const UEAPolynomial canonical = pbw_normalize(p);
    for (int r = 0; r < 100; ++r, ++orders)
      if (!(pbw_normalize_randomized(p, rng) == canonical)) ++mismatches;
  }
  const double secs = seconds_since(start);
  return {nonzero == 0 && mismatches == 0 && secs < 30.0,
          std::to_string(nonzero) + " non-zero [L_l, X_{2k-1,2k}] for n=1..3; " + std::to_string(mismatches) + "/" +
              std::to_string(orders) + " random rewrite orders disagree" + fmt(" (%.2fs)", secs)};
}

Outcome decomposition() {
  double split = 0.0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<double> e;
    for (int k = 1; k <= n; ++k) e.push_back(0.5 * k + 0.25);
    for (RepTag tag : {RepTag::Spin, RepTag::Defining}) {
      const auto parts = build_parts(HamiltonianSpec(n, e), tag);
      split = std::max(split, max_abs(parts.h_tilde - (parts.p0 + kI * parts.b0)));
    }
  }
  double spectrum = 0.0;
  for (const HamiltonianSpec& spec : {HamiltonianSpec(2, {1.0, 2.0}), HamiltonianSpec(3, {1.0, 1.5, 2.5})}) {
    const auto ev = hermitian_spectrum(build_parts(spec, RepTag::Spin).h_tilde);
    const auto sums = subset_sums(spec.energies);
    for (std::size_t i = 0; i < ev.size(); ++i) spectrum = std::max(spectrum, std::abs(ev[i] - sums[i]));
  }
  return {split < 1e-12 && spectrum < 1e-10,
          fmt("H~ - (P0 + iB0) residual %.3g; spectrum vs subset sums %.3g", split, spectrum)};
}

Outcome commutation() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<double> e;
    for (int k = 1; k <= n; ++k) e.push_back(k);
    for (RepTag tag : {RepTag::Spin, RepTag::Defining}) {
      const auto parts = build_parts(HamiltonianSpec(n, e), tag);
      worst = std::max(worst, max_abs(commutator(parts.p0, parts.b0)));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          worst = std::max({worst, max_abs(commutator(parts.t[k], parts.l[l])),
                            max_abs(commutator(parts.t[k], parts.t[l]))});
    }
  }
  return {worst < 1e-12, fmt("[P0,B0], [T_k,L_l], [T_k,T_l] max residual %.3g", worst)};
}

Outcome haar() {
  const auto start = std::chrono::steady_clock::now();
  Rng a = stream_rng(8, 0), b = stream_rng(8, 1);
  const McEstimate inner = l2_inner_mc(FockVector::vacuum(1), FockVector::vacuum(1), 10000, a);
  const McEstimate trace = haar_trace_moment(1, 10000, b);
  const double secs = seconds_since(start);
  return {inner.within(0.5, 3.0) && trace.within(1.0, 3.0) && secs < 10.0,
          fmt("(f_vac, f_vac) z=%.2f, E|tr R|^2 z=%.2f, ", inner.z_score(0.5), trace.z_score(1.0)) +
              fmt("in %.2fs", secs)};
}

Outcome decay_rates() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.1 * i);
  SDEConfig cfg{HamiltonianSpec(1, {1.0}), Process::P0, 1e-3, 0.0, SigmaConvention::Corrected, 19};
  const DecayFit corrected = fit_decay_rate(FockVector::vacuum(1), cfg, grid, 10000);
  cfg.sigma = SigmaConvention::PaperLiteral;
  const DecayFit literal = fit_decay_rate(FockVector::vacuum(1), cfg, grid, 10000);
  const double secs = seconds_since(start);
  return {std::abs(corrected.rate - 0.5) <= 0.05 && std::abs(literal.rate - 0.25) <= 0.05 && secs < 60.0,
          fmt("corrected %.4f (target 0.50), paper-literal %.4f (target 0.25), ", corrected.rate, literal.rate) +
              fmt("%.1fs", secs)};
}

Outcome feynman_kac() {
  FKParams params;
  params.n_paths = 10000;
  params.dt = 1e-3;
  params.seed = 20240601;
  std::string detail;
  bool ok = true;
  double slowest = 0.0;

  const FockVector e1 = FockVector::wedge(1, {1});
  auto start = std::chrono::steady_clock::now();
  for (const FKRow& row : fk_report(e1, e1, HamiltonianSpec(1, {1.0}), {0.25, 0.5, 1.0}, params)) {
    ok = ok && row.estimate.z_score <= 3.0;
    detail += fmt("t=%.2f z=%.2f; ", row.t, row.estimate.z_score);
  }
  slowest = std::max(slowest, seconds_since(start));

  const FockVector top = FockVector::wedge(2, {1, 2});
  start = std::chrono::steady_clock::now();
  const FKEstimate two = fk_rhs_mc(top, top, HamiltonianSpec(2, {1.0, 2.0}), 0.3, params);
  ok = ok && two.z_score <= 3.0;
  detail += fmt("n=2 t=0.30 z=%.2f; ", two.z_score);
  slowest = std::max(slowest, seconds_since(start));

  // Smoke version: n=1, t=0.25, 100 seeds.
  start = std::chrono::steady_clock::now();
  int passes = 0;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    params.seed = s;
    if (fk_rhs_mc(e1, e1, HamiltonianSpec(1, {1.0}), 0.25, params).z_score <= 3.0) ++passes;
  }
  slowest = std::max(slowest, seconds_since(start));
  ok = ok && passes >= 99 && slowest < 120.0;
  detail += std::to_string(passes) + "/100 smoke seeds within 3 sigma" + fmt("; slowest config %.1fs", slowest);
  return {ok, detail};
}

Outcome determinism() {
  RunConfig cfg;
  cfg.command = "fk";
  cfg.n = 1;
  cfg.seed = 77;
  cfg.paths = 2000;
  const CommandOutcome a = run_command(cfg), b = run_command(cfg);
  if (!a.result || !b.result) return {false, "cmd_fk failed: " + a.error};
  const bool same = a.result->render("json") == b.result->render("json") &&
                    a.result->render("csv") == b.result->render("csv");
  return {same, same ? "two cmd_fk runs rendered byte-identical json and csv" : "reports differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"car", car_relations},
      {"clifford", clifford_relations},
      {"homomorphism", homomorphism},
      {"weights", weights},
      {"symbolic-uea", symbolic},
      {"decomposition-spectrum", decomposition},
      {"commutation", commutation},
      {"haar-moments", haar},
      {"decay-rate", decay_rates},
      {"feynman-kac", feynman_kac},
      {"determinism", determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s %2d %-24s %s\n", o.passed ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
