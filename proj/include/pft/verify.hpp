#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pft/constants.hpp"
#include "pft/grid.hpp"

namespace pft {

/// One verified identity: the residual actually measured, the tolerance it
/// was held to, and enough metadata (grid size, epsilon, seed, ...) to
/// reproduce a failure.
struct CheckResult {
  std::string check_id;
  std::string relation;  ///< the identity under test, human readable
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct ReportSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

/// Full run output: constants used, checks sorted by check_id, counts.
/// Serialization is deterministic, so equal config and seed give
/// byte-identical reports.
struct VerificationReport {
  Constants constants;
  std::vector<double> epsilon_sweep;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  ReportSummary summary;

  std::string to_json() const;
  std::string to_table() const;
};

/// Suite selection and scales. suites = nullopt runs everything; an empty
/// list runs nothing. grid_points controls the 1d working grids and scales
/// the 3d ones; it must satisfy the GridSpec contract.
struct VerifyConfig {
  Constants constants;
  std::vector<double> epsilon_sweep{1.0, 0.37, 5.0};
  std::uint64_t seed = 42;
  int grid_points = 256;
  std::optional<std::vector<std::string>> suites;
};

/// Names accepted in VerifyConfig::suites, in execution order.
const std::vector<std::string>& suite_names();

// Individual suites. Each returns its checks; failures are recorded, not
// thrown, and a check whose setup throws is recorded as failed with the
// error message in its metadata.
std::vector<CheckResult> grid_suite(const VerifyConfig& cfg);
std::vector<CheckResult> diffops_suite(const VerifyConfig& cfg);
std::vector<CheckResult> angular_suite(const VerifyConfig& cfg);
std::vector<CheckResult> quanta_suite(const VerifyConfig& cfg);
std::vector<CheckResult> relativity_suite(const VerifyConfig& cfg);
std::vector<CheckResult> fock_suite(const VerifyConfig& cfg);

/// Uncertainty products Dx * DF_x per state and axis against the eps/2
/// floor. States carry an optional saturation target (value in units of
/// eps, absolute tolerance); the floor itself is held to slack 1e-9.
struct EnsembleState {
  std::string name;
  WaveFunction psi;
  std::optional<std::pair<double, double>> saturation;  ///< {product/eps, tol}
};
std::vector<CheckResult> uncertainty_suite(const std::vector<EnsembleState>& states,
                                           const Constants& ct);

/// Central-difference check of i eps d_t psi = P psi under free evolution.
/// Base step horizon/steps, then halved twice to expose the second-order
/// decay; horizon = 0 or steps = 0 yields no checks. Also verifies the
/// plane-wave phase advance under the P/eps generator.
std::vector<CheckResult> time_power_suite(const WaveFunction& psi0, double mass, double horizon,
                                          int steps, const Constants& ct);

/// Constancy of <F> and <p> under free evolution, sampled uniformly over
/// the horizon, plus the eps/hbar relation between the two drifts.
std::vector<CheckResult> ehrenfest_force_suite(const WaveFunction& psi0, double mass,
                                               double horizon, int samples, const Constants& ct);

/// Runs the selected suites and assembles the deterministic report.
/// Invalid config (bad grid, unknown suite name, bad sweep) throws before
/// any suite executes.
VerificationReport run_all(const VerifyConfig& cfg);

}  // namespace pft
