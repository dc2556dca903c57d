#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlcs/family.hpp"
#include "nlcs/fock.hpp"
#include "nlcs/states.hpp"

namespace nlcs {

/// Structured pass/fail record of one verification check. passed is
/// always residual <= tolerance; notes carry units and context.
struct VerificationReport {
  std::string check_id;
  std::string family_id;
  Params params;
  std::map<std::string, std::string> inputs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;
};

VerificationReport make_report(std::string check_id, const RhoFamily& family,
                               std::map<std::string, std::string> inputs,
                               double residual, double tolerance,
                               std::string notes = {});

/// ||A|z> - z|z>|| for a z-labelled state; (J, gamma) labels are rejected.
VerificationReport eigen_residual(const CoherentState& state,
                                  double tol = 1e-8);

/// Weyl-Heisenberg algebra of {A, B^dag, B^dag A, I}: [A, B^dag] = I,
/// [A, B^dag A] = A, [B^dag, B^dag A] = -B^dag, and B^dag A = n = A^dag B,
/// all on the trust band (levels 0..N-2). Residuals are max-entry defects
/// relative to the generating operator's scale.
VerificationReport h4_check(const RhoFamily& family, int dim,
                            double tol = 1e-12);

/// Discrete-series ladder checks at Bargmann index kappa: the A/A^dag and
/// B/B^dag actions, [B, B^dag] = (2k-1)/((n+2k)(n+2k-1)), and the
/// commutator spectrum [A, A^dag] = e(n+1) - e(n) = 2(n+kappa).
VerificationReport su11_check(double kappa, int dim, double tol = 1e-12);

enum class WhichHamiltonian { NormalOrdered, Manko };

/// |<J,gamma|H|J,gamma> - J| with the normal-ordered Hamiltonian; switch
/// to the symmetric-ordered form to reproduce its failure.
VerificationReport action_identity(const RhoFamily& family, double J,
                                   double gamma,
                                   const StateOptions& options = {},
                                   WhichHamiltonian which =
                                       WhichHamiltonian::NormalOrdered,
                                   double tol = 1e-8);

/// || evolve(|J,gamma>, t) - |J,gamma+t> ||.
VerificationReport temporal_stability(const RhoFamily& family, double J,
                                      double gamma, double t,
                                      const StateOptions& options = {},
                                      double tol = 1e-12);

/// Q = (<n^2> - <n>^2)/<n> - 1 by direct summation. The vacuum returns 0
/// by convention (the ratio is 0/0) with an explanatory note.
double mandel_q(const CoherentState& state, std::string* note = nullptr);

/// Weight density for the moment condition integral x^n W(x) dx = rho(n).
struct WeightSpec {
  std::string description;
  double support_max;  // +inf for exponential-decay weights
  std::function<double(double)> density;
  enum class Decay { Exponential, CompactPolynomial } decay;
};

/// Built-in weights: canonical <-> exp(-x) on [0, inf); kps-da <-> 2x on
/// [0, 1]; kps-db <-> 6x(1-x) on [0, 1].
std::optional<WeightSpec> builtin_weight(const std::string& family_id);

/// Quadrature check of the moment condition for n = 0..n_max. Families
/// without a supplied or built-in weight yield an inconclusive report
/// (not a failure); so does quadrature non-convergence.
VerificationReport moment_check(const RhoFamily& family,
                                const std::optional<WeightSpec>& weight,
                                int n_max, double quad_tol);

/// <state|op|state>.
Complex expectation(const CoherentState& state, const FockOperator& op);

struct SuiteConfig {
  std::uint64_t seed = 0xC0FFEE;
  int gk_samples = 50;
  int algebra_dim = 50;
  int conformance_n_max = 50;
  int moment_n_max = 15;
  double eigen_tol = 1e-8;
  double route_displacement_tol = 1e-8;  // on 1 - fidelity
  double route_t_tol = 1e-10;
  double dual_fidelity_tol = 1e-8;
  double dual_ulp_tol = 2.0;  // ulps of 1
  double dual_h_tol = 1e-12;
  double algebra_tol = 1e-12;
  double temporal_tol = 1e-12;
  double action_tol = 1e-8;
  double moment_tol = 1e-8;
  double stats_tol = 1e-10;
};

/// Label grids used by the suites: plane families get
/// {0.25, 0.5+0.5i, 1, 2}, disk families {0.1, 0.3i, 0.5, 0.8}.
std::vector<Complex> label_grid(const RhoFamily& family);

/// Dual-route comparison label: 0.5 when the dual series converges there,
/// otherwise a smaller label with forced optimal truncation.
std::pair<Complex, bool> dual_check_label(const RhoFamily& family);

const std::vector<std::string>& suite_names();  // eigen routes dual algebra gk moments stats all

/// Runs one named suite; reports come back sorted by check_id and are
/// bitwise reproducible for a fixed config.
std::vector<VerificationReport> run_suite(const RhoFamily& family,
                                          const std::string& suite,
                                          const SuiteConfig& config = {});

}  // namespace nlcs
