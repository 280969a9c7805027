#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pft/diffops.hpp"
#include "pft/verify.hpp"

using pft::VerifyConfig;

namespace {

const pft::CheckResult* find_check(const std::vector<pft::CheckResult>& checks,
                                   const std::string& id) {
  for (const auto& c : checks) {
    if (c.check_id == id) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("config validation happens before any suite runs") {
  VerifyConfig cfg;
  cfg.suites = std::vector<std::string>{"grid", "bogus"};
  CHECK_THROWS_AS(pft::run_all(cfg), pft::DomainError);

  VerifyConfig bad_sweep;
  bad_sweep.suites = std::vector<std::string>{"angular"};
  bad_sweep.epsilon_sweep = {1.0, -2.0};
  CHECK_THROWS_AS(pft::run_all(bad_sweep), pft::DomainError);

  VerifyConfig empty_sweep;
  empty_sweep.suites = std::vector<std::string>{"angular"};
  empty_sweep.epsilon_sweep = {};
  CHECK_THROWS_AS(pft::run_all(empty_sweep), pft::DomainError);

  VerifyConfig bad_grid;
  bad_grid.suites = std::vector<std::string>{"angular"};
  bad_grid.grid_points = 100;  // not a power of two
  CHECK_THROWS_AS(pft::run_all(bad_grid), pft::DomainError);
}

TEST_CASE("an empty suite list runs nothing") {
  VerifyConfig cfg;
  cfg.suites = std::vector<std::string>{};
  const auto report = pft::run_all(cfg);
  CHECK(report.checks.empty());
  CHECK(report.summary.total == 0);
  CHECK(report.summary.passed == 0);
  CHECK(report.summary.failed == 0);
}

TEST_CASE("reports are deterministic and sorted") {
  VerifyConfig cfg;
  cfg.suites = std::vector<std::string>{"fock", "angular"};
  cfg.seed = 7;

  const auto a = pft::run_all(cfg);
  const auto b = pft::run_all(cfg);

  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_table() == b.to_table());

  CHECK(std::is_sorted(a.checks.begin(), a.checks.end(),
                       [](const auto& x, const auto& y) { return x.check_id < y.check_id; }));

  CHECK(a.to_json().rfind("{\n  \"constants\"", 0) == 0);
  CHECK(a.to_json().find("\"seed\": 7") != std::string::npos);
  CHECK(a.summary.total == static_cast<int>(a.checks.size()));
  CHECK(a.summary.passed + a.summary.failed == a.summary.total);
  CHECK(a.summary.failed == 0);
}

TEST_CASE("uncertainty suite floors and saturations") {
  const pft::Constants ct = pft::natural_units();
  const pft::GridSpec g{1, 256, 48.0};

  std::vector<pft::EnsembleState> states;
  states.push_back({"gaussian", pft::gaussian_packet({0, 0, 0}, {1.0, 0, 0}, 1.0, g),
                    std::pair{0.5, 1e-8}});
  states.push_back({"hermite_n1", pft::ho_eigenstate(1, 1.0, 1.0, g, ct),
                    std::pair{1.5, 1e-6}});

  for (double eps : {1.0, 0.37}) {
    pft::Constants scaled = ct;
    scaled.epsilon = eps;
    const auto checks = pft::uncertainty_suite(states, scaled);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CHECK(c.passed);
    }
  }
}

TEST_CASE("time power suite") {
  const pft::Constants ct = pft::natural_units();
  const pft::GridSpec g{1, 256, 64.0};
  const pft::WaveFunction psi = pft::gaussian_packet({0, 0, 0}, {0.25, 0, 0}, 2.0, g);

  SUBCASE("degenerate horizons yield no checks") {
    CHECK(pft::time_power_suite(psi, 1.0, 0.0, 1, ct).empty());
    CHECK(pft::time_power_suite(psi, 1.0, 4e-3, 0, ct).empty());
  }

  SUBCASE("default packet passes including the convergence order") {
    const auto checks = pft::time_power_suite(psi, 1.0, 4e-3, 1, ct);
    CHECK(checks.size() >= 4);
    for (const auto& c : checks) {
      CHECK(c.passed);
    }
    CHECK(find_check(checks, "time_power/convergence_order/eps=1.000") != nullptr);
  }
}

TEST_CASE("ehrenfest suite holds the force constant under free flight") {
  const pft::Constants ct = pft::natural_units();
  const pft::GridSpec g{1, 256, 64.0};
  const pft::WaveFunction psi = pft::gaussian_packet({-6.0, 0, 0}, {1.0, 0, 0}, 2.0, g);
  const auto checks = pft::ehrenfest_force_suite(psi, 1.0, 10.0, 11, ct);
  CHECK(checks.size() == 3);
  for (const auto& c : checks) {
    CHECK(c.passed);
  }
}

TEST_CASE("coarse grids degrade the stencil checks but not the spectral ones") {
  VerifyConfig cfg;
  cfg.grid_points = 8;
  cfg.suites = std::vector<std::string>{"diffops"};
  const auto report = pft::run_all(cfg);

  const auto* fd2 = find_check(report.checks, "diffops/fd2_convergence");
  REQUIRE(fd2 != nullptr);
  CHECK_FALSE(fd2->passed);

  const auto* spectral = find_check(report.checks, "diffops/force_eigen_1d_residual/eps=1.000");
  REQUIRE(spectral != nullptr);
  CHECK(spectral->passed);

  CHECK(report.summary.failed > 0);
}

TEST_CASE("ensembles that cannot fit the grid become failed setup checks") {
  VerifyConfig cfg;
  cfg.grid_points = 8;
  cfg.suites = std::vector<std::string>{"uncertainty"};
  const auto report = pft::run_all(cfg);  // must not throw

  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].check_id == "uncertainty/setup");
  CHECK_FALSE(report.checks[0].passed);
  CHECK(report.summary.failed == 1);
}
