#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "suncs/report.hpp"

namespace {

struct CommonFlags {
  int n = 0;
  std::string c_list;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t sector_cap = 0;
  std::vector<std::string> tol_flags;
  std::string config_path;
  std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--n", flags.n, "group rank N");
  cmd->add_option("--c", flags.c_list, "Casimir labels C_1,...,C_{N-1} (comma list)");
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--samples", flags.samples, "sample / sweep count");
  cmd->add_option("--sector-cap", flags.sector_cap, "max sector dimension");
  cmd->add_option("--tol", flags.tol_flags, "tolerance override name=value");
  cmd->add_option("--config", flags.config_path, "JSON config file (flags win)");
  cmd->add_option("--out", flags.out_path, "write the JSON report here instead of stdout");
}

suncs::RunConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
  suncs::RunConfig config;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + flags.config_path);
    nlohmann::json j;
    in >> j;
    config = suncs::RunConfig::from_json(j);
  }
  if (cmd->count("--n") > 0) config.n = flags.n;
  if (cmd->count("--c") > 0) config.c = suncs::parse_int_list(flags.c_list);
  if (cmd->count("--seed") > 0) config.seed = flags.seed;
  if (cmd->count("--samples") > 0) config.samples = flags.samples;
  if (cmd->count("--sector-cap") > 0) config.sector_cap = flags.sector_cap;
  suncs::apply_tolerance_flags(config, flags.tol_flags);
  return config;
}

int emit(const suncs::Report& report, const std::string& out_path) {
  const std::string text = report.to_json().dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write report to: " + out_path);
    out << text << "\n";
  }
  if (!report.pass()) {
    for (const suncs::Check& c : report.checks)
      if (!c.pass)
        std::cerr << "check failed: " << c.name << " value=" << c.value
                  << " tolerance=" << c.tolerance << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(N) Schwinger-boson and coherent-state verification suite"};
  app.require_subcommand(1);

  CommonFlags algebra_flags, irrep_flags, coherent_flags, identity_flags;
  CLI::App* algebra = app.add_subcommand(
      "algebra", "generator, structure-constant and wedge-representation checks");
  add_common_flags(algebra, algebra_flags);
  CLI::App* irrep = app.add_subcommand(
      "irrep", "sector, Casimir and irreducible-subspace checks");
  add_common_flags(irrep, irrep_flags);
  CLI::App* coherent = app.add_subcommand(
      "coherent", "frame geometry, covariance and membership checks");
  add_common_flags(coherent, coherent_flags);
  CLI::App* identity = app.add_subcommand(
      "identity", "Monte-Carlo resolution-of-identity check");
  add_common_flags(identity, identity_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (algebra->parsed())
      return emit(suncs::cmd_algebra(build_config(algebra, algebra_flags)),
                  algebra_flags.out_path);
    if (irrep->parsed())
      return emit(suncs::cmd_irrep(build_config(irrep, irrep_flags)),
                  irrep_flags.out_path);
    if (coherent->parsed())
      return emit(suncs::cmd_coherent(build_config(coherent, coherent_flags)),
                  coherent_flags.out_path);
    if (identity->parsed())
      return emit(suncs::cmd_identity(build_config(identity, identity_flags)),
                  identity_flags.out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
