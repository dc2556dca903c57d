#include "nlcs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "nlcs/error.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/quadrature.hpp"

namespace nlcs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_z(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

/// Max |entry| over the trust band (rows and columns 0..dim-3).
double band_max(const Eigen::MatrixXcd& m) {
  const int band = static_cast<int>(m.rows()) - 2;
  if (band <= 0) return 0.0;
  return m.topLeftCorner(band, band).cwiseAbs().maxCoeff();
}

double operator_scale(const FockOperator& op) {
  return std::max(1.0, op.entries().cwiseAbs().maxCoeff());
}

/// Deterministic uniform generator; the bit-level mapping avoids the
/// implementation-defined std::uniform_real_distribution.
struct DetRng {
  explicit DetRng(std::uint64_t seed) : engine(seed) {}
  double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
  std::mt19937_64 engine;
};

RhoFamily canonical_family() { return RhoFamily::make("canonical"); }

}  // namespace

VerificationReport make_report(std::string check_id, const RhoFamily& family,
                               std::map<std::string, std::string> inputs,
                               double residual, double tolerance,
                               std::string notes) {
  VerificationReport report;
  report.check_id = std::move(check_id);
  report.family_id = family.id() + (family.dual() ? " (dual)" : "");
  report.params = family.params();
  report.inputs = std::move(inputs);
  if (!std::isfinite(residual)) {
    residual = std::numeric_limits<double>::max();
    notes += (notes.empty() ? "" : "; ") + std::string("non-finite residual clamped");
  }
  report.residual = std::abs(residual);
  report.tolerance = tolerance;
  report.passed = report.residual <= tolerance;
  report.notes = std::move(notes);
  return report;
}

VerificationReport eigen_residual(const CoherentState& state, double tol) {
  const Complex z = state.z_label();  // throws unsupported-label for (J, gamma)
  const FockOperator a = build_A(state.family(), state.dim());
  const Eigen::VectorXcd defect =
      a.entries() * state.vector().amps() - z * state.vector().amps();
  return make_report("eigen/z=" + fmt_z(z), state.family(),
                     {{"z", fmt_z(z)}, {"dim", std::to_string(state.dim())}},
                     defect.norm(), tol);
}

VerificationReport h4_check(const RhoFamily& family, int dim, double tol) {
  if (dim < 4) raise("invalid-dimension", "h4_check requires dim >= 4");
  const FockOperator a = build_A(family, dim);
  const FockOperator a_dag = a.adjoint();
  const FockOperator b = build_B(family, dim);
  const FockOperator b_dag = b.adjoint();
  const FockOperator number = b_dag * a;  // = n^hat below the boundary
  const FockOperator identity = FockOperator::identity(dim);

  double residual = 0.0;
  auto track = [&](const FockOperator& defect, const FockOperator& reference) {
    residual = std::max(residual, band_max(defect.entries()) / operator_scale(reference));
  };
  const FockOperator n_hat = make_number(dim);
  track(commutator(a, b_dag) - identity, identity);
  track(commutator(a, number) - a, a);
  track(commutator(b_dag, number) + b_dag, b_dag);
  track(number - n_hat, n_hat);
  track(a_dag * b - n_hat, n_hat);

  return make_report("algebra/h4", family, {{"dim", std::to_string(dim)}},
                     residual, tol,
                     "max-entry defects on levels 0..N-2, relative to each "
                     "generator's scale");
}

VerificationReport su11_check(double kappa, int dim, double tol) {
  if (dim < 4) raise("invalid-dimension", "su11_check requires dim >= 4");
  const RhoFamily family = RhoFamily::make("bg", {{"kappa", kappa}});
  const FockOperator a = build_A(family, dim);
  const FockOperator b = build_B(family, dim);
  const double twok = 2.0 * kappa;

  double residual = 0.0;
  auto track = [&](double actual, double expected) {
    const double scale = std::max(1.0, std::abs(expected));
    residual = std::max(residual, std::abs(actual - expected) / scale);
  };

  for (int n = 1; n < dim; ++n) {
    track(a.entry(n - 1, n).real(), std::sqrt(n * (n + twok - 1.0)));
    track(b.entry(n - 1, n).real(), std::sqrt(n / (n + twok - 1.0)));
  }
  const FockOperator a_dag = a.adjoint();
  const FockOperator b_dag = b.adjoint();
  for (int n = 0; n + 1 < dim; ++n) {
    track(a_dag.entry(n + 1, n).real(), std::sqrt((n + twok) * (n + 1.0)));
    track(b_dag.entry(n + 1, n).real(), std::sqrt((n + 1.0) / (n + twok)));
  }
  const FockOperator comm_a = commutator(a, a_dag);
  const FockOperator comm_b = commutator(b, b_dag);
  for (int n = 0; n + 2 < dim; ++n) {
    track(comm_a.entry(n, n).real(), 2.0 * (n + kappa));
    track(comm_b.entry(n, n).real(),
          (twok - 1.0) / ((n + twok) * (n + twok - 1.0)));
  }

  return make_report(
      "algebra/su11", family, {{"dim", std::to_string(dim)}}, residual, tol,
      "commutator spectrum [A,A+] = e(n+1)-e(n) = 2(n+kappa); the su(1,1) "
      "generator L12 = [A,A+]/2 carries the single factor (n+kappa)");
}

VerificationReport action_identity(const RhoFamily& family, double J,
                                   double gamma, const StateOptions& options,
                                   WhichHamiltonian which, double tol) {
  const CoherentState state = gk_state(family, J, gamma, options);
  const FockOperator h = which == WhichHamiltonian::NormalOrdered
                             ? hamiltonian(family, state.dim())
                             : manko_hamiltonian(family, state.dim());
  const double value = expectation(state, h).real();
  const char* name =
      which == WhichHamiltonian::NormalOrdered ? "normal-ordered" : "symmetric-ordered";
  return make_report("gk/action", family,
                     {{"J", fmt(J)},
                      {"gamma", fmt(gamma)},
                      {"dim", std::to_string(state.dim())},
                      {"hamiltonian", name}},
                     std::abs(value - J), tol,
                     std::string("<H> = ") + fmt(value) + " with the " + name +
                         " Hamiltonian");
}

VerificationReport temporal_stability(const RhoFamily& family, double J,
                                      double gamma, double t,
                                      const StateOptions& options, double tol) {
  const CoherentState start = gk_state(family, J, gamma, options);
  StateOptions fixed = options;
  fixed.dim = start.dim();
  const CoherentState evolved = evolve(start, t);
  const CoherentState target = gk_state(family, J, gamma + t, fixed);
  const double residual =
      (evolved.vector().amps() - target.vector().amps()).norm();
  return make_report("gk/temporal", family,
                     {{"J", fmt(J)},
                      {"gamma", fmt(gamma)},
                      {"t", fmt(t)},
                      {"dim", std::to_string(start.dim())}},
                     residual, tol);
}

double mandel_q(const CoherentState& state, std::string* note) {
  const Eigen::VectorXcd& amps = state.vector().amps();
  double mean = 0.0;
  double second = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    const double p = std::norm(amps(n));
    mean += n * p;
    second += static_cast<double>(n) * n * p;
  }
  if (mean == 0.0) {
    if (std::abs(std::norm(amps(0)) - 1.0) < 1e-9) {
      if (note != nullptr)
        *note = "vacuum: Q defined as 0 by convention (the ratio is 0/0)";
      return 0.0;
    }
    raise("degenerate-statistics",
          "mean occupation underflowed to zero on a non-vacuum state");
  }
  if (note != nullptr) note->clear();
  return (second - mean * mean) / mean - 1.0;
}

std::optional<WeightSpec> builtin_weight(const std::string& family_id) {
  if (family_id == "canonical") {
    return WeightSpec{"exp(-x) on [0, inf)", kInf,
                      [](double x) { return std::exp(-x); },
                      WeightSpec::Decay::Exponential};
  }
  if (family_id == "kps-da") {
    return WeightSpec{"2x on [0, 1]", 1.0, [](double x) { return 2.0 * x; },
                      WeightSpec::Decay::CompactPolynomial};
  }
  if (family_id == "kps-db") {
    return WeightSpec{"6x(1-x) on [0, 1]", 1.0,
                      [](double x) { return 6.0 * x * (1.0 - x); },
                      WeightSpec::Decay::CompactPolynomial};
  }
  return std::nullopt;
}

VerificationReport moment_check(const RhoFamily& family,
                                const std::optional<WeightSpec>& weight,
                                int n_max, double quad_tol) {
  if (n_max < 0 || n_max > 20)
    raise("domain", "moment_check supports n_max in 0..20");
  std::optional<WeightSpec> spec = weight;
  if (!spec) spec = builtin_weight(family.id());
  const std::map<std::string, std::string> inputs{
      {"n_max", std::to_string(n_max)}, {"quad_tol", fmt(quad_tol)}};
  if (!spec) {
    return make_report("moments/condition", family, inputs, 0.0, quad_tol,
                       "inconclusive: no weight function available for this "
                       "family");
  }

  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    auto integrand = [&](double x) { return std::pow(x, n) * spec->density(x); };
    QuadratureResult result;
    if (spec->decay == WeightSpec::Decay::CompactPolynomial) {
      result = integrate_adaptive(integrand, 0.0, spec->support_max,
                                  quad_tol / 10.0);
    } else {
      result = integrate_exponential(integrand, quad_tol / 10.0);
    }
    if (!result.converged) {
      std::ostringstream os;
      os << "inconclusive: quadrature did not converge for the order-" << n
         << " moment of " << spec->description;
      return make_report("moments/condition", family, inputs, 0.0, quad_tol,
                         os.str());
    }
    const double expected = std::exp(family.rho_log(n));
    worst = std::max(worst, std::abs(result.value - expected) / expected);
  }
  return make_report("moments/condition", family, inputs, worst, quad_tol,
                     "max relative moment error, weight " + spec->description);
}

Complex expectation(const CoherentState& state, const FockOperator& op) {
  if (op.dim() != state.dim())
    raise("dimension-mismatch", "expectation dim mismatch");
  return state.vector().amps().dot(op.entries() * state.vector().amps());
}

std::vector<Complex> label_grid(const RhoFamily& family) {
  if (family.info().domain == FamilyInfo::Domain::Disk)
    return {Complex(0.1, 0.0), Complex(0.0, 0.3), Complex(0.5, 0.0),
            Complex(0.8, 0.0)};
  return {Complex(0.25, 0.0), Complex(0.5, 0.5), Complex(1.0, 0.0),
          Complex(2.0, 0.0)};
}

std::pair<Complex, bool> dual_check_label(const RhoFamily& family) {
  const RhoFamily dual = dual_of(family);
  const RadiusEstimate radius = radius_of_convergence(dual);
  if (radius.divergent) return {Complex(0.5, 0.0), false};
  if (!radius.indeterminate && radius.value > 0.3)
    return {Complex(0.5 * std::sqrt(std::min(radius.value, 1.0)), 0.0), false};
  // Dual series diverges everywhere; pick a label small enough that the
  // optimal truncation leaves an amplitude gap below 1e-18 in probability.
  const int cap = 512;
  for (const double z : {0.1, 0.05, 0.02, 0.01, 0.005}) {
    double lo = kInf;
    double hi = -kInf;
    bool usable = true;
    for (int n = 0; n < cap; ++n) {
      const double lr = dual.rho_log(n);
      if (lr == -kInf) {
        usable = false;
        break;
      }
      const double lm = (n == 0 ? 0.0 : n * std::log(z)) - 0.5 * lr;
      hi = std::max(hi, lm);
      if (n >= 1) lo = std::min(lo, lm);
    }
    if (usable && 2.0 * (lo - hi) < std::log(1e-18)) return {Complex(z, 0.0), true};
  }
  return {Complex(0.005, 0.0), true};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "eigen", "routes", "dual", "algebra", "gk", "moments", "stats", "all"};
  return names;
}

namespace {

void eigen_suite(const RhoFamily& family, const SuiteConfig& config,
                 std::vector<VerificationReport>& out) {
  for (const Complex z : label_grid(family)) {
    out.push_back(eigen_residual(cs_series(family, z), config.eigen_tol));
  }
}

void routes_suite(const RhoFamily& family, const SuiteConfig& config,
                  std::vector<VerificationReport>& out) {
  for (const Complex z : label_grid(family)) {
    StateOptions options;
    options.dim = auto_dim(family, std::abs(z));
    const CoherentState series = cs_series(family, z, options);
    const CoherentState displaced = cs_displacement(family, z, options);
    const std::map<std::string, std::string> inputs{
        {"z", fmt_z(z)}, {"dim", std::to_string(*options.dim)}};
    out.push_back(make_report(
        "routes/displacement/z=" + fmt_z(z), family, inputs,
        1.0 - fidelity(series.vector(), displaced.vector()),
        config.route_displacement_tol, "1 - fidelity(series, displacement)"));
    const CoherentState canonical = cs_series(canonical_family(), z, options);
    const CoherentState t_route =
        t_apply(family, *options.dim, TDirection::Forward, canonical);
    out.push_back(make_report(
        "routes/t-operator/z=" + fmt_z(z), family, inputs,
        1.0 - fidelity(series.vector(), t_route.vector()), config.route_t_tol,
        "1 - fidelity(series, T applied to the canonical state)"));
  }
}

void dual_suite(const RhoFamily& family, const SuiteConfig& config,
                std::vector<VerificationReport>& out) {
  const RhoFamily dual = dual_of(family);

  double worst_ulp = 0.0;
  for (int n = 1; n <= config.conformance_n_max; ++n) {
    worst_ulp = std::max(worst_ulp, std::abs(family.f(n) * dual.f(n) - 1.0) / kEps);
  }
  out.push_back(make_report(
      "dual/f-product", family,
      {{"n_max", std::to_string(config.conformance_n_max)}}, worst_ulp,
      config.dual_ulp_tol, "max |f * f_dual - 1| in ulps of 1"));

  const FockOperator h_dual = hamiltonian(dual, config.conformance_n_max + 1);
  double worst_h = std::abs(h_dual.entry(0, 0).real());
  for (int n = 1; n <= config.conformance_n_max; ++n) {
    const double expected = static_cast<double>(n) * n / family.e(n);
    worst_h = std::max(worst_h, std::abs(h_dual.entry(n, n).real() - expected) /
                                    expected);
  }
  out.push_back(make_report(
      "dual/hamiltonian", family,
      {{"n_max", std::to_string(config.conformance_n_max)}}, worst_h,
      config.dual_h_tol, "H_dual(n) vs n^2/e(n), relative; H_dual(0) vs 0"));

  const auto [z, forced] = dual_check_label(family);
  StateOptions options;
  options.force = forced;
  const CoherentState displaced = cs_dual_displacement(family, z, options);
  StateOptions fixed = options;
  fixed.dim = displaced.dim();
  const CoherentState series = cs_series(dual, z, fixed);
  out.push_back(make_report(
      "dual/displacement", family,
      {{"z", fmt_z(z)}, {"dim", std::to_string(displaced.dim())}},
      1.0 - fidelity(displaced.vector(), series.vector()),
      config.dual_fidelity_tol,
      forced ? "1 - fidelity(dual displacement, dual series); divergent dual "
               "series truncated at the amplitude minimum"
             : "1 - fidelity(dual displacement, dual series)"));
}

void algebra_suite(const RhoFamily& family, const SuiteConfig& config,
                   std::vector<VerificationReport>& out) {
  out.push_back(h4_check(family, config.algebra_dim, config.algebra_tol));

  const int dim = config.algebra_dim;
  const FockOperator a = build_A(family, dim);
  const FockOperator comm = commutator(a, a.adjoint());
  double worst = 0.0;
  for (int n = 0; n + 2 < dim; ++n) {
    const double expected = family.e(n + 1) - family.e(n);
    worst = std::max(worst, std::abs(comm.entry(n, n).real() - expected) /
                                std::max(1.0, std::abs(expected)));
  }
  out.push_back(make_report("algebra/commutator-spectrum", family,
                            {{"dim", std::to_string(dim)}}, worst,
                            config.algebra_tol,
                            "[A,A+] diagonal vs e(n+1)-e(n), relative, on "
                            "levels 0..N-2"));

  if (family.id() == "bg" || family.id() == "gp") {
    out.push_back(su11_check(family.params().at("kappa"), dim,
                             config.algebra_tol));
  }
}

void gk_suite(const RhoFamily& family, const SuiteConfig& config,
              std::vector<VerificationReport>& out) {
  const bool disk = family.info().domain == FamilyInfo::Domain::Disk;
  const double j_max = disk ? 0.8 : 1.0;

  out.push_back(action_identity(family, j_max, 0.7, {},
                                WhichHamiltonian::NormalOrdered,
                                config.action_tol));

  DetRng rng(config.seed);
  for (int k = 0; k < config.gk_samples; ++k) {
    const double J = j_max * rng.uniform();
    const double gamma = (2.0 * rng.uniform() - 1.0) * M_PI;
    const double t = (2.0 * rng.uniform() - 1.0) * M_PI;
    VerificationReport report =
        temporal_stability(family, J, gamma, t, {}, config.temporal_tol);
    std::ostringstream id;
    id << "gk/temporal/" << std::setw(2) << std::setfill('0') << k;
    report.check_id = id.str();
    out.push_back(std::move(report));
  }
}

void moments_suite(const RhoFamily& family, const SuiteConfig& config,
                   std::vector<VerificationReport>& out) {
  out.push_back(moment_check(family, std::nullopt, config.moment_n_max,
                             config.moment_tol));
}

void stats_suite(const RhoFamily& family, const SuiteConfig& config,
                 std::vector<VerificationReport>& out) {
  for (const Complex z : label_grid(family)) {
    const CoherentState state = cs_series(family, z);
    std::string note;
    const double q = mandel_q(state, &note);
    std::ostringstream notes;
    notes << "Q = " << fmt(q);
    if (!note.empty()) notes << "; " << note;
    double residual = 0.0;
    double tolerance = 0.0;
    if (family.id() == "canonical") {
      residual = std::abs(q);
      tolerance = config.stats_tol;
      notes << "; Poissonian expected";
    } else if (family.id() == "kps-e" && std::abs(z) > 0.0) {
      residual = std::max(0.0, q);
      notes << "; sub-Poissonian expected";
    } else {
      residual = std::isfinite(q) ? 0.0 : kInf;
    }
    out.push_back(make_report("stats/mandel-q/z=" + fmt_z(z), family,
                              {{"z", fmt_z(z)}}, residual, tolerance,
                              notes.str()));
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const RhoFamily& family,
                                          const std::string& suite,
                                          const SuiteConfig& config) {
  std::vector<VerificationReport> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](const char* name) { return all || suite == name; };
  if (want("eigen")) { eigen_suite(family, config, out); known = true; }
  if (want("routes")) { routes_suite(family, config, out); known = true; }
  if (want("dual")) { dual_suite(family, config, out); known = true; }
  if (want("algebra")) { algebra_suite(family, config, out); known = true; }
  if (want("gk")) { gk_suite(family, config, out); known = true; }
  if (want("moments")) { moments_suite(family, config, out); known = true; }
  if (want("stats")) { stats_suite(family, config, out); known = true; }
  if (!known) raise("usage", "unknown suite '" + suite + "'");
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.check_id < b.check_id;
                   });
  return out;
}

}  // namespace nlcs
