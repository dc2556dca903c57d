// Command line front end: family catalog browsing, nonlinearity tables,
// state construction, verification suites, and |z| sweeps, with JSON/CSV
// output suitable for diffing and external plotting.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nlcs/analysis.hpp"
#include "nlcs/error.hpp"
#include "nlcs/family.hpp"
#include "nlcs/json_io.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/states.hpp"

namespace {

using nlcs::Complex;
using nlcs::Error;
using nlcs::Params;
using nlcs::RhoFamily;

struct FamilyFlags {
  std::string id;
  std::optional<double> p, alpha, beta, q, kappa, m;
  bool dual = false;

  RhoFamily build() const {
    bool known = id == "kps-b";
    for (const nlcs::FamilyInfo& info : nlcs::family_catalog())
      known = known || info.id == id;
    if (!known) nlcs::raise("usage", "unknown family id '" + id + "'");
    Params params;
    if (p) params["p"] = *p;
    if (alpha) params["alpha"] = *alpha;
    if (beta) params["beta"] = *beta;
    if (q) params["q"] = *q;
    if (kappa) params["kappa"] = *kappa;
    if (m) params["m"] = *m;
    RhoFamily family = RhoFamily::make(id, params);
    for (const std::string& warning : family.warnings())
      std::cerr << "warning: " << warning << "\n";
    return dual ? nlcs::dual_of(family) : family;
  }
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags) {
  cmd->add_option("--family", flags.id, "family id (see `catalog`)")
      ->required();
  cmd->add_option("--p", flags.p, "shift parameter p (kps-a)");
  cmd->add_option("--alpha", flags.alpha, "alpha parameter (ml, kps-d, ll-*)");
  cmd->add_option("--beta", flags.beta, "beta parameter (ml)");
  cmd->add_option("--q", flags.q, "deformation q in (0, 1] (ps)");
  cmd->add_option("--kappa", flags.kappa, "Bargmann index kappa >= 1/2 (bg, gp)");
  cmd->add_option("--m", flags.m, "ladder offset m (ll-*)");
  cmd->add_flag("--dual", flags.dual, "work with the dual family (f -> 1/f)");
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)),
                   std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    nlcs::raise("usage", "cannot parse complex label '" + text +
                             "'; expected re,im");
  }
}

std::string default_format() {
  const char* env = std::getenv("NLCS_FORMAT");
  if (env != nullptr && std::string(env) == "csv") return "csv";
  return "json";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) nlcs::raise("domain", "cannot open output file " + out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

int cmd_catalog(const std::string& format, const std::string& out_path) {
  emit(format == "csv" ? nlcs::catalog_to_csv() : nlcs::catalog_to_json(),
       out_path);
  return 0;
}

int cmd_table(const FamilyFlags& flags, int n_max, const std::string& format,
              const std::string& out_path) {
  if (n_max < 0 || n_max > 10000)
    nlcs::raise("usage", "--nmax must lie in 0..10000");
  const RhoFamily family = flags.build();
  std::vector<nlcs::TableRow> rows;
  for (int n = 0; n <= n_max && n <= family.max_level(); ++n) {
    nlcs::TableRow row;
    row.n = n;
    row.log_rho = family.rho_log(n);
    row.rho = std::exp(row.log_rho);
    row.f = n == 0 ? 1.0 : family.f(n);  // builder convention at n = 0
    row.e = family.e(n);
    row.f_dual = row.f == 0.0 ? std::numeric_limits<double>::infinity()
                              : 1.0 / row.f;
    rows.push_back(row);
  }
  emit(format == "csv" ? nlcs::table_to_csv(rows)
                       : nlcs::table_to_json(family, rows),
       out_path);
  return 0;
}

int cmd_state(const FamilyFlags& flags, const std::string& z_text,
              std::optional<double> J, double gamma, const std::string& method,
              std::optional<int> dim, bool force, const std::string& out_path) {
  const RhoFamily family = flags.build();
  nlcs::StateOptions options;
  options.force = force;
  if (dim) options.dim = *dim;

  std::optional<nlcs::CoherentState> state;
  if (J) {
    if (!z_text.empty())
      nlcs::raise("usage", "state takes either --z or --J/--gamma, not both");
    if (method != "series")
      nlcs::raise("usage", "(J, gamma) states support only the series route");
    state = nlcs::gk_state(family, *J, gamma, options);
  } else {
    if (z_text.empty()) nlcs::raise("usage", "state needs --z or --J");
    const Complex z = parse_complex(z_text);
    if (method == "series") {
      state = nlcs::cs_series(family, z, options);
    } else if (method == "displacement") {
      state = nlcs::cs_displacement(family, z, options);
    } else if (method == "dual-displacement") {
      state = nlcs::cs_dual_displacement(family, z, options);
    } else if (method == "t-operator") {
      nlcs::StateOptions fixed = options;
      if (!fixed.dim) fixed.dim = nlcs::auto_dim(family, std::abs(z), options);
      const nlcs::CoherentState canonical =
          nlcs::cs_series(RhoFamily::make("canonical"), z, fixed);
      state = nlcs::t_apply(family, *fixed.dim, nlcs::TDirection::Forward,
                            canonical);
    } else {
      nlcs::raise("usage", "unknown method '" + method + "'");
    }
  }

  std::optional<double> fidelity_vs_series;
  if (state->method() != nlcs::Method::Series) {
    nlcs::StateOptions fixed = options;
    fixed.dim = state->dim();
    fixed.force = true;
    const nlcs::CoherentState reference =
        nlcs::cs_series(state->family(), state->z_label(), fixed);
    fidelity_vs_series = nlcs::fidelity(state->vector(), reference.vector());
  }
  emit(nlcs::state_to_json(*state, fidelity_vs_series), out_path);
  return 0;
}

int cmd_verify(const FamilyFlags& flags, const std::string& suite,
               const nlcs::SuiteConfig& config, const std::string& format,
               const std::string& out_path) {
  bool known = false;
  for (const std::string& name : nlcs::suite_names()) known = known || name == suite;
  if (!known) nlcs::raise("usage", "unknown suite '" + suite + "'");
  const RhoFamily family = flags.build();
  const auto reports = nlcs::run_suite(family, suite, config);
  emit(format == "csv" ? nlcs::reports_to_csv(reports)
                       : nlcs::reports_to_json(reports),
       out_path);
  for (const nlcs::VerificationReport& report : reports)
    if (!report.passed) return 1;
  return 0;
}

int cmd_sweep(const FamilyFlags& flags, double z_max, int steps,
              const std::string& out_path) {
  if (steps < 1 || steps > 100000) nlcs::raise("usage", "--steps must be >= 1");
  if (!(z_max > 0.0)) nlcs::raise("usage", "--zmax must be positive");
  const RhoFamily family = flags.build();
  std::vector<std::array<double, 4>> rows;
  for (int k = 0; k <= steps; ++k) {
    const double abs_z = z_max * k / steps;
    const nlcs::CoherentState state =
        nlcs::cs_series(family, Complex(abs_z, 0.0));
    const double q = nlcs::mandel_q(state);
    const double mean =
        nlcs::expectation(state, nlcs::make_number(state.dim())).real();
    double norm_sum = 0.0;
    for (int n = 0; n < state.dim(); ++n) {
      norm_sum += std::exp((n == 0 ? 0.0 : 2.0 * n * std::log(abs_z)) -
                           family.rho_log(n));
    }
    rows.push_back({abs_z, q, mean, norm_sum});
  }
  emit(nlcs::sweep_to_csv(rows), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed-oscillator coherent state toolkit"};
  app.require_subcommand(1);

  std::string format = default_format();
  std::string out_path;
  auto add_io = [&](CLI::App* cmd, bool with_format = true) {
    if (with_format)
      cmd->add_option("--format", format, "output format: json or csv")
          ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "write output to this file");
  };

  CLI::App* catalog = app.add_subcommand("catalog", "list the family catalog");
  add_io(catalog);

  CLI::App* table = app.add_subcommand(
      "table", "emit rows of (n, rho, log_rho, f, e, f_dual)");
  FamilyFlags table_flags;
  int n_max = 20;
  add_family_flags(table, table_flags);
  table->add_option("--nmax", n_max, "highest level to tabulate");
  add_io(table);

  CLI::App* state = app.add_subcommand("state", "construct one coherent state");
  FamilyFlags state_flags;
  std::string z_text;
  std::optional<double> big_j;
  double gamma = 0.0;
  std::string method = "series";
  std::optional<int> dim;
  bool force = false;
  add_family_flags(state, state_flags);
  state->add_option("--z", z_text, "complex label as re,im");
  state->add_option("--J", big_j, "action label J >= 0");
  state->add_option("--gamma", gamma, "phase label gamma");
  state->add_option("--method", method,
                    "series | displacement | dual-displacement | t-operator");
  state->add_option("--dim", dim, "fixed truncation dimension");
  state->add_flag("--force", force,
                  "bypass the radius and tail gates (divergent duals)");
  add_io(state, false);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  FamilyFlags verify_flags;
  std::string suite = "all";
  nlcs::SuiteConfig config;
  add_family_flags(verify, verify_flags);
  verify->add_option("--suite", suite,
                     "eigen | routes | dual | algebra | gk | moments | stats | all");
  verify->add_option("--seed", config.seed, "seed of the randomized grids");
  verify->add_option("--eigen-tol", config.eigen_tol, "eigen residual tolerance");
  verify->add_option("--route-tol", config.route_displacement_tol,
                     "route agreement tolerance on 1 - fidelity");
  verify->add_option("--algebra-tol", config.algebra_tol, "algebra tolerance");
  verify->add_option("--temporal-tol", config.temporal_tol,
                     "temporal stability tolerance");
  verify->add_option("--action-tol", config.action_tol,
                     "action identity tolerance");
  verify->add_option("--moment-tol", config.moment_tol,
                     "moment condition tolerance");
  add_io(verify);

  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV of (|z|, Q, <n>, N(|z|^2)) over a grid");
  FamilyFlags sweep_flags;
  double z_max = 1.0;
  int steps = 10;
  add_family_flags(sweep, sweep_flags);
  sweep->add_option("--zmax", z_max, "largest |z| on the grid")->required();
  sweep->add_option("--steps", steps, "number of grid steps");
  add_io(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << nlcs::error_to_json("usage", e.what()) << "\n";
    return 2;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(format, out_path);
    if (table->parsed()) return cmd_table(table_flags, n_max, format, out_path);
    if (state->parsed())
      return cmd_state(state_flags, z_text, big_j, gamma, method, dim, force,
                       out_path);
    if (verify->parsed())
      return cmd_verify(verify_flags, suite, config, format, out_path);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, z_max, steps, out_path);
  } catch (const Error& e) {
    std::cerr << nlcs::error_to_json(e.kind(), e.what()) << "\n";
    return e.kind() == "usage" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << nlcs::error_to_json("internal", e.what()) << "\n";
    return 1;
  }
  return 0;
}
