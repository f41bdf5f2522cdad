// Named verification suites with fixed grids and fixtures; every identity is
// evaluated dual-path (both sides computed independently) and reduced to a
// pass/fail report.
#pragma once

#include <string>
#include <vector>

#include "jacobi0/json_io.hpp"

namespace jacobi0 {

// Canonical suite order; "all" runs every one of these.
const std::vector<std::string>& suite_names();

// Fixed sample grids shared by the suites and the CLI defaults.
const std::vector<Complex>& default_tau_grid();
const std::vector<Complex>& default_z_grid();
const std::vector<UnimodularMatrix>& default_matrix_sample();

// Runs one suite (or "all"); throws std::invalid_argument on unknown names.
std::vector<VerifyReport> run_suite(const std::string& name);

}  // namespace jacobi0
