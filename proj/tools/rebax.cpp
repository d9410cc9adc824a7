// Command-line driver: verification campaigns, chain construction, spectra.
// Emits a JSON report on stdout (and to --out when given).
// Exit codes: 0 all checks pass, 1 any check failed, 2 configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rebax/suites.hpp"

namespace {

void add_common_options(CLI::App* cmd, rebax::RunConfig& cfg) {
  cmd->add_option("--rep", cfg.rep,
                  "representation name (gl2, gl3, sp2, so3, ...)");
  cmd->add_option("--q", cfg.q, "deformation parameter, e.g. 2 or 7/3");
  cmd->add_option("--a", cfg.a, "baxterization root: q or -1/q");
  cmd->add_option("--xi", cfg.xi, "boundary parameter: scalar, auto or wrong");
  cmd->add_option("--xi2", cfg.xi2, "right boundary parameter: scalar or auto");
  cmd->add_option("--seed", cfg.seeds, "sampler seeds (repeatable)");
  cmd->add_option("--samples", cfg.samples, "sample points per seed");
  cmd->add_option("--out", cfg.out, "write the JSON report to this path");
}

int emit(const rebax::Report& report, const std::string& out) {
  const std::string body = report.to_json().dump(2);
  std::cout << body << std::endl;
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write report to " << out << "\n";
      return 2;
    }
    f << body << "\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for baxterized reflection-equation "
               "solutions and open spin chains"};
  app.require_subcommand(1);

  rebax::RunConfig cfg;
  if (const char* env = std::getenv("REBAX_THREADS")) {
    cfg.threads = std::max(1, std::atoi(env));
  }

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option(
      "--suite", cfg.suite,
      "ybe | unitarity | cross-unitarity | constant-re | re | conjugated-re | "
      "bmw-constants | antisymmetrizers | all");
  add_common_options(verify, cfg);

  auto* chain = app.add_subcommand("chain", "build a chain and verify "
                                            "commuting transfer matrices");
  chain->add_option("--sites", cfg.sites, "number of chain sites");
  chain->add_option("--left", cfg.left,
                    "trivial | rational | evaluation | poly | small | bmw-rational | "
                    "bmw2");
  chain->add_option("--right", cfg.right, "trivial | conjugated");
  chain->add_option("--ltilde", cfg.ltilde,
                    "auto | swap | scalar:<v> | left");
  chain->add_option("--ham", cfg.hams,
                    "Hamiltonian kinds to test (repeatable, default inferred)");
  add_common_options(chain, cfg);

  auto* spectrum = app.add_subcommand("spectrum",
                                      "exact characteristic polynomial and "
                                      "spectrum of a chain Hamiltonian");
  spectrum->add_option("--sites", cfg.sites, "number of chain sites");
  spectrum->add_option("--left", cfg.left, "left boundary");
  spectrum->add_option("--right", cfg.right, "right boundary");
  spectrum->add_option("--ltilde", cfg.ltilde, "right boundary matrix");
  spectrum->add_option("--ham", cfg.ham, "Hamiltonian kind (H0..H7)");
  add_common_options(spectrum, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) cfg.command = "verify";
  if (chain->parsed()) cfg.command = "chain";
  if (spectrum->parsed()) cfg.command = "spectrum";

  try {
    return emit(rebax::run_command(cfg), cfg.out);
  } catch (const rebax::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const rebax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
