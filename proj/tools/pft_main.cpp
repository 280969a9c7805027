// Command line front end: configure constants, run verification suites and
// collision sweeps, emit deterministic reports and traces.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pft/constants.hpp"
#include "pft/diffops.hpp"
#include "pft/fock.hpp"
#include "pft/grid.hpp"
#include "pft/quanta.hpp"
#include "pft/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw pft::ParseError("cannot open file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw pft::ParseError("cannot write file '" + path + "'");
  }
  out << text;
}

pft::Constants load_constants(const std::string& config_path) {
  if (config_path.empty()) {
    return pft::natural_units();
  }
  return pft::constants_from_config(read_file(config_path));
}

struct CommonOptions {
  std::string config_path;
  std::uint64_t seed = 42;
  std::vector<double> sweep{1.0, 0.37, 5.0};
  bool sweep_given = false;
};

int run_verify(const CommonOptions& common, const std::vector<std::string>& suites, bool all,
               int grid_points, const std::string& out_path, const std::string& format) {
  pft::VerifyConfig cfg;
  cfg.constants = load_constants(common.config_path);
  cfg.epsilon_sweep = common.sweep;
  cfg.seed = common.seed;
  cfg.grid_points = grid_points;
  if (!all && !suites.empty()) {
    cfg.suites = suites;
  }

  const pft::VerificationReport report = pft::run_all(cfg);
  write_file(out_path, format == "table" ? report.to_table() : report.to_json());

  std::cout << "checks " << report.summary.total << ", passed " << report.summary.passed
            << ", failed " << report.summary.failed << ", seed " << report.seed << ", report "
            << out_path << "\n";
  return report.summary.failed == 0 ? 0 : 1;
}

int run_collide(const CommonOptions& common, int events, const std::string& out_path) {
  pft::Constants ct = load_constants(common.config_path);
  if (common.sweep_given) {
    ct.epsilon = common.sweep.front();
  }
  ct.validate();

  const auto trace = pft::generate_elastic_events(events, common.seed, ct);
  {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw pft::ParseError("cannot write file '" + out_path + "'");
    }
    pft::write_event_trace(out, trace);
  }

  std::vector<pft::QuantaRecord> records;
  records.reserve(2 * trace.size());
  for (const auto& ev : trace) {
    records.push_back(ev.quanta_a);
    records.push_back(ev.quanta_b);
  }
  const pft::ConservationReport rep = pft::conservation_check(records);

  std::printf("events %d, seed %llu, epsilon %.17g\n", events,
              static_cast<unsigned long long>(common.seed), ct.epsilon);
  std::printf("momentum closure: residual %.17g, scale %.17g, %s\n", rep.momentum_residual,
              rep.momentum_scale, rep.momentum_ok ? "ok" : "FAIL");
  std::printf("energy closure:   residual %.17g, scale %.17g, %s\n", rep.energy_residual,
              rep.energy_scale, rep.energy_ok ? "ok" : "FAIL");
  std::printf("trace written to %s\n", out_path.c_str());
  return rep.ok() ? 0 : 1;
}

int run_ho_spectrum(const CommonOptions& common, int n_max, double omega, double mass) {
  pft::Constants ct = load_constants(common.config_path);
  if (common.sweep_given) {
    ct.epsilon = common.sweep.front();
  }
  ct.validate();

  const pft::GridSpec grid{1, 256, 24.0};
  const pft::Operator h = pft::ho_hamiltonian_op(mass, omega, ct);
  const double rel_bound = 1e-6;

  std::printf("oscillator power ladder: omega %.17g, mass %.17g, epsilon %.17g, hbar %.17g\n",
              omega, mass, ct.epsilon, ct.hbar);
  std::printf("%3s  %-22s  %-22s  %s\n", "n", "analytic P_n", "grid (eps/hbar)<H>", "rel error");
  bool all_within = true;
  for (int n = 0; n <= n_max; ++n) {
    const pft::WaveFunction psi = pft::ho_eigenstate(n, omega, mass, grid, ct);
    const double measured = ct.power_scale() * pft::expectation(h, psi).real();
    const double analytic = ct.epsilon * omega * (n + 0.5);
    const double rel = std::abs(measured - analytic) / analytic;
    all_within = all_within && rel < rel_bound;
    std::printf("%3d  %.16e  %.16e  %.3e\n", n, analytic, measured, rel);
  }
  return all_within ? 0 : 1;
}

int run_em_modes(const CommonOptions& common, const std::string& modes_path, int cutoff,
                 const std::string& out_path) {
  pft::Constants ct = load_constants(common.config_path);
  if (common.sweep_given) {
    ct.epsilon = common.sweep.front();
  }
  ct.validate();

  const pft::ModeSet ms = pft::ModeSet::from_config(read_file(modes_path), cutoff, ct);
  const pft::EmConsistencyReport rep = pft::em_consistency_check(ms, ct);

  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "modes %zu, cutoff %d, states %zu, epsilon %.17g\n"
                "max power residual %.17g\n"
                "max force residual %.17g\n"
                "tolerance %.17g\n"
                "%s\n",
                ms.modes.size(), ms.cutoff, rep.states_checked, ct.epsilon,
                rep.max_power_residual, rep.max_force_residual, rep.tolerance,
                rep.all_pass ? "PASS" : "FAIL");
  std::cout << buf;
  if (!out_path.empty()) {
    write_file(out_path, buf);
  }
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks of the energy-constant power, force and torque maps"};
  app.require_subcommand(1);

  CommonOptions common;
  const auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "constants config file (key = value lines)");
    sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
    sub->add_option("--epsilon", common.sweep, "epsilon sweep values")
        ->delimiter(',')
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
  std::vector<std::string> suites;
  bool all = false;
  int grid_points = 256;
  std::string verify_out = "report.json";
  std::string format = "json-text";
  add_common(verify);
  auto* suite_opt = verify->add_option("--suite", suites, "suites to run (repeatable)");
  auto* all_opt = verify->add_flag("--all", all, "run every suite");
  all_opt->excludes(suite_opt);
  verify->add_option("--grid-n", grid_points, "points per axis for the working grids")
      ->capture_default_str();
  verify->add_option("--out", verify_out, "report path")->capture_default_str();
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json-text", "table"}))
      ->capture_default_str();

  auto* collide = app.add_subcommand("collide", "generate seeded elastic collisions and a trace");
  int events = 10000;
  std::string collide_out = "events.txt";
  add_common(collide);
  collide->add_option("--events", events, "number of two-body events")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  collide->add_option("--out", collide_out, "trace path")->capture_default_str();

  auto* ho = app.add_subcommand("ho-spectrum", "tabulate the oscillator power ladder");
  int n_max = 10;
  double omega = 1.0;
  double mass = 1.0;
  add_common(ho);
  ho->add_option("--n-max", n_max, "highest level")->check(CLI::Range(0, 20))->capture_default_str();
  ho->add_option("--omega", omega, "oscillator frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ho->add_option("--mass", mass, "particle mass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* em = app.add_subcommand("em-modes", "radiation-mode number-state consistency sweep");
  std::string modes_path;
  int cutoff = 2;
  std::string em_out;
  add_common(em);
  em->add_option("--modes", modes_path, "mode config file (kx ky kz sigma lines)")->required();
  em->add_option("--cutoff", cutoff, "occupation cutoff per mode")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  em->add_option("--out", em_out, "also write the summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  common.sweep_given = verify->count("--epsilon") > 0 || collide->count("--epsilon") > 0 ||
                       ho->count("--epsilon") > 0 || em->count("--epsilon") > 0;

  try {
    if (verify->parsed()) {
      return run_verify(common, suites, all, grid_points, verify_out, format);
    }
    if (collide->parsed()) {
      return run_collide(common, events, collide_out);
    }
    if (ho->parsed()) {
      return run_ho_spectrum(common, n_max, omega, mass);
    }
    if (em->parsed()) {
      return run_em_modes(common, modes_path, cutoff, em_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
