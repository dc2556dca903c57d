#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nlcs/analysis.hpp"
#include "nlcs/family.hpp"
#include "nlcs/states.hpp"

namespace nlcs {

/// Fixed serialization schemas shared by the CLI and the test suites.
/// state  = {family, params, label, dim, amplitudes:[[re,im],...],
///           tail_mass, method} (+ fidelity_vs_series for non-series routes)
/// report = {check_id, family, inputs, residual, tolerance, passed, notes}
/// Field order is pinned so identical configs serialize bitwise-identically.

std::string state_to_json(const CoherentState& state,
                          std::optional<double> fidelity_vs_series = {});

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

struct TableRow {
  int n;
  double rho;
  double log_rho;
  double f;
  double e;
  double f_dual;
};

std::string table_to_json(const RhoFamily& family,
                          const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);

std::string catalog_to_json();
std::string catalog_to_csv();

std::string sweep_to_csv(const std::vector<std::array<double, 4>>& rows);

std::string error_to_json(const std::string& kind, const std::string& message);

}  // namespace nlcs
