// spinfock: command-line driver for the verification suites.
//
//   spinfock verify --n 2 --energies 1,2
//   spinfock fk --n 1 --t-grid 0.25,0.5,1 --seed 7 --out fk.json
//   spinfock calibrate --n 1 --sigma paper-literal --seed 3 --format csv
//
// Settings come from --config (a flat JSON object) and are overridden by
// command-line flags.

#include "spinfock/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spinfock;

namespace {

struct Flags {
  std::optional<int> n;
  std::optional<std::string> energies, t_grid, sigma, process, format, out, psi, phi, config;
  std::optional<double> dt;
  std::optional<std::size_t> paths;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--n", f.n, "number of fermion modes");
  cmd.add_option("--energies", f.energies, "comma list E_1,...,E_n (positive, non-decreasing)");
  cmd.add_option("--t-grid", f.t_grid, "comma list of times");
  cmd.add_option("--dt", f.dt, "SDE step size");
  cmd.add_option("--paths", f.paths, "Monte Carlo paths or samples");
  cmd.add_option("--seed", f.seed, "master seed (required for fk, calibrate, haar-test)");
  cmd.add_option("--sigma", f.sigma, "corrected | paper-literal");
  cmd.add_option("--process", f.process, "p0 | p");
  cmd.add_option("--format", f.format, "json | csv");
  cmd.add_option("--out", f.out, "output file (default stdout)");
  cmd.add_option("--psi", f.psi, "occupied modes of psi, comma list");
  cmd.add_option("--phi", f.phi, "occupied modes of phi, comma list");
  cmd.add_option("--threads", f.threads, "worker threads (0 = hardware); output does not depend on it");
  cmd.add_option("--config", f.config, "flat JSON config file");
}

Json overrides_from(const Flags& f) {
  Json j = Json::object();
  if (f.n) j["n"] = *f.n;
  if (f.energies) j["energies"] = *f.energies;
  if (f.t_grid) j["t_grid"] = *f.t_grid;
  if (f.dt) j["dt"] = *f.dt;
  if (f.paths) j["paths"] = *f.paths;
  if (f.seed) j["seed"] = *f.seed;
  if (f.sigma) j["sigma"] = *f.sigma;
  if (f.process) j["process"] = *f.process;
  if (f.format) j["format"] = *f.format;
  if (f.out) j["out"] = *f.out;
  if (f.psi) j["psi"] = *f.psi;
  if (f.phi) j["phi"] = *f.phi;
  return j;
}

Json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion Fock space and Spin(2n+1) verification tools"};
  app.require_subcommand(1);
  Flags flags;
  for (const auto& name : command_names()) add_flags(*app.add_subcommand(name), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  RunConfig cfg;
  try {
    if (flags.config) apply_config_json(cfg, read_config_file(*flags.config));
    apply_config_json(cfg, overrides_from(flags));
  } catch (const std::exception& e) {
    std::cerr << "spinfock: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (flags.threads) cfg.threads = *flags.threads;

  const CommandOutcome outcome = run_command(cfg);
  if (!outcome.error.empty()) std::cerr << "spinfock " << cfg.command << ": " << outcome.error << "\n";
  if (!outcome.result) return outcome.exit_code;

  const std::string text = outcome.result->render(cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "spinfock: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  return outcome.exit_code;
}
