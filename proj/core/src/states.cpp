#include "nlcs/states.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nlcs/error.hpp"
#include "nlcs/operators.hpp"
#include "log_gamma.hpp"

namespace nlcs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// |amp(N)|^2 / max^2 threshold of the doubling rule, in log magnitude.
const double kTopLog = 0.5 * std::log(1e-18);
constexpr double kLastThreeProb = 1e-16;
constexpr double kDiskLabelCap = 0.95;
constexpr int kStartDim = 32;

/// Unnormalized log amplitude magnitudes of the series expansion,
/// log|amp(n)| = n log|z| - (1/2) log rho(n).
Eigen::VectorXd series_logmag(const RhoFamily& family, double log_abs_z,
                              int dim) {
  Eigen::VectorXd lm(dim);
  for (int n = 0; n < dim; ++n) {
    const double lr = family.rho_log(n);
    if (lr == -kInf) {
      std::ostringstream os;
      os << "family '" << family.id() << "' has zero moment at level " << n
         << "; series states are undefined for these parameters";
      raise("domain", os.str());
    }
    lm(n) = (n == 0 ? 0.0 : n * log_abs_z) - 0.5 * lr;
  }
  return lm;
}

bool tail_converged(const Eigen::VectorXd& lm) {
  const int dim = static_cast<int>(lm.size());
  const double peak = lm.maxCoeff();
  if (lm(dim - 1) - peak >= kTopLog) return false;
  double total = 0.0;
  double top3 = 0.0;
  for (int n = 0; n < dim; ++n) {
    const double p = std::exp(2.0 * (lm(n) - peak));
    total += p;
    if (n >= dim - 3) top3 += p;
  }
  return top3 < kLastThreeProb * total;
}

int dim_cap(const RhoFamily& family, const StateOptions& options) {
  int cap = options.max_dim;
  if (family.max_level() < cap - 1) cap = family.max_level() + 1;
  return cap;
}

int select_dim(const RhoFamily& family, double log_abs_z,
               const StateOptions& options) {
  if (options.dim) {
    if (*options.dim < 2) raise("invalid-dimension", "state dim must be >= 2");
    if (*options.dim - 1 > family.max_level())
      raise("invalid-dimension", "dim exceeds the family's table range");
    return *options.dim;
  }
  const int cap = dim_cap(family, options);
  for (int dim = std::min(kStartDim, cap);; dim = std::min(2 * dim, cap)) {
    if (tail_converged(series_logmag(family, log_abs_z, dim))) return dim;
    if (dim == cap) break;
  }
  if (!options.force) {
    std::ostringstream os;
    os << "series tail for family '" << family.id()
       << "' does not fit below dim = " << cap
       << "; enlarge the dimension cap or force the construction";
    raise("truncation", os.str());
  }
  // Forced: truncate at the amplitude minimum (the optimal cut of an
  // asymptotically divergent series).
  const Eigen::VectorXd lm = series_logmag(family, log_abs_z, cap);
  int best = 1;
  for (int n = 1; n < cap; ++n) {
    if (lm(n) < lm(best)) best = n;
  }
  return std::max(best + 1, 8);
}

/// Conservative geometric overestimate of the probability mass beyond the
/// truncation, from the last two normalized amplitude magnitudes.
double tail_estimate(const Eigen::VectorXcd& normalized) {
  const int dim = static_cast<int>(normalized.size());
  const double top = std::abs(normalized(dim - 1));
  if (top == 0.0) return 0.0;
  const double below = std::abs(normalized(dim - 2));
  if (below == 0.0) return 1.0;
  const double ratio = top / below;
  if (ratio >= 1.0) return 1.0;
  const double r2 = ratio * ratio;
  return top * top * r2 / (1.0 - r2);
}

void check_tail(double tail_mass, const StateOptions& options) {
  if (options.force) return;
  if (tail_mass > options.tail_tol) {
    std::ostringstream os;
    os << "estimated truncation tail mass " << tail_mass
       << " exceeds the tolerance " << options.tail_tol
       << "; enlarge dim or force the construction";
    raise("truncation", os.str());
  }
}

/// Gate |z|^2 < lim n f(n)^2 (strict), plus the |z| <= 0.95 guard for
/// disk families whose normalization converges too slowly near the rim.
void check_label_radius(const RhoFamily& family, double abs_z,
                        const StateOptions& options) {
  if (options.force || abs_z == 0.0) return;
  if (family.info().domain == FamilyInfo::Domain::Disk && !family.dual() &&
      abs_z > kDiskLabelCap) {
    std::ostringstream os;
    os << "labels with |z| > " << kDiskLabelCap
       << " are rejected for disk families; the normalization sum converges "
          "too slowly below the dimension cap";
    raise("domain", os.str());
  }
  const RadiusEstimate radius = radius_of_convergence(family);
  if (radius.divergent || radius.indeterminate) return;
  if (abs_z * abs_z >= radius.value) {
    std::ostringstream os;
    os << "label |z| = " << abs_z << " lies outside the convergence domain "
       << "(|z|^2 limit " << radius.value << ") of family '" << family.id()
       << "'";
    raise("domain", os.str());
  }
}

FockVector normalized_from_parts(const Eigen::VectorXd& logmag,
                                 const std::function<double(int)>& phase) {
  const int dim = static_cast<int>(logmag.size());
  const double peak = logmag.maxCoeff();
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n) {
    const double mag = std::exp(logmag(n) - peak);
    v(n) = std::polar(mag, phase(n));
  }
  v /= v.norm();
  return FockVector(std::move(v));
}

CoherentState exponential_route(const RhoFamily& state_family,
                                const FockOperator& generator, Complex z,
                                Method method, const StateOptions& options) {
  const FockOperator u = matrix_exponential(generator);
  Eigen::VectorXcd v = u.entries().col(0);
  const double scale = v.norm();
  if (scale == 0.0 || !v.allFinite())
    raise("evaluation", "displacement route produced a degenerate vector");
  v /= scale;
  const double tail = tail_estimate(v);
  check_tail(tail, options);
  return CoherentState(state_family, z, FockVector(std::move(v)), tail, method);
}

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::Series: return "series";
    case Method::Displacement: return "displacement";
    case Method::DualDisplacement: return "dual-displacement";
    case Method::TOperator: return "t-operator";
  }
  return "unknown";
}

CoherentState::CoherentState(RhoFamily family, StateLabel label,
                             FockVector vector, double tail_mass,
                             Method method)
    : family_(std::move(family)),
      label_(label),
      vector_(std::move(vector)),
      tail_mass_(tail_mass),
      method_(method) {}

Complex CoherentState::z_label() const {
  if (!has_z_label()) raise("unsupported-label", "state carries a (J, gamma) label");
  return std::get<Complex>(label_);
}

GkLabel CoherentState::gk_label() const {
  if (has_z_label()) raise("unsupported-label", "state carries a complex label");
  return std::get<GkLabel>(label_);
}

int auto_dim(const RhoFamily& family, double abs_z,
             const StateOptions& options) {
  return select_dim(family, std::log(abs_z), options);
}

CoherentState cs_series(const RhoFamily& family, Complex z,
                        const StateOptions& options) {
  const double abs_z = std::abs(z);
  check_label_radius(family, abs_z, options);
  const int dim = select_dim(family, std::log(abs_z), options);
  const Eigen::VectorXd lm = series_logmag(family, std::log(abs_z), dim);
  const double arg = std::arg(z);
  FockVector v = normalized_from_parts(lm, [&](int n) { return n * arg; });
  const double tail = tail_estimate(v.amps());
  check_tail(tail, options);
  return CoherentState(family, z, std::move(v), tail, Method::Series);
}

CoherentState cs_displacement(const RhoFamily& family, Complex z,
                              const StateOptions& options) {
  const double abs_z = std::abs(z);
  check_label_radius(family, abs_z, options);
  const int dim = select_dim(family, std::log(abs_z), options);
  const FockOperator generator =
      z * build_B_dag(family, dim) - std::conj(z) * build_A(family, dim);
  return exponential_route(family, generator, z, Method::Displacement, options);
}

CoherentState cs_dual_displacement(const RhoFamily& family, Complex z,
                                   const StateOptions& options) {
  const RhoFamily dual = dual_of(family);
  const double abs_z = std::abs(z);
  check_label_radius(dual, abs_z, options);
  const int dim = select_dim(dual, std::log(abs_z), options);
  StateOptions fixed = options;
  fixed.dim = dim;
  const FockOperator generator =
      z * build_A_dag(family, dim) - std::conj(z) * build_B(family, dim);
  return exponential_route(dual, generator, z, Method::DualDisplacement, fixed);
}

TOperator::TOperator(RhoFamily family, int dim) : family_(std::move(family)) {
  if (dim < 1) raise("invalid-dimension", "TOperator requires dim >= 1");
  // For a dual family sqrt(n!/rho_dual) = sqrt(rho_base/n!), the literal
  // reciprocal of the base diagonal; building it that way keeps
  // T(F) T(dual F) = 1 within ulps.
  const bool is_dual = family_.dual();
  const RhoFamily base = is_dual ? family_.dual_family() : family_;
  diag_.resize(dim);
  for (int n = 0; n < dim; ++n) {
    const double lr = base.rho_log(n);
    const double lg = detail::log_gamma(n + 1.0);
    double value = std::exp(0.5 * (lg - lr));
    if (is_dual) value = 1.0 / value;
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os << "T diagonal is non-finite at level " << n;
      raise("evaluation", os.str());
    }
    diag_(n) = value;
  }
}

FockOperator TOperator::matrix() const {
  return diagonal_function([&](int n) { return Complex(diag_(n)); }, dim());
}

bool TOperator::invertible() const {
  return (diag_.array() != 0.0).all();
}

TOperator TOperator::inverse() const {
  if (!invertible())
    raise("non-invertible", "T has a zero diagonal entry");
  return TOperator(family_.dual_family(), diag_.cwiseInverse());
}

FockVector TOperator::apply(const FockVector& v) const {
  if (v.dim() != dim()) raise("dimension-mismatch", "TOperator dim mismatch");
  return FockVector(diag_.cast<Complex>().asDiagonal() * v.amps());
}

CoherentState t_apply(const RhoFamily& family, int dim, TDirection direction,
                      const CoherentState& input) {
  if (input.dim() != dim)
    raise("dimension-mismatch", "t_apply input dim differs from requested dim");
  TOperator t(family, dim);
  RhoFamily out_family = family;
  if (direction == TDirection::Inverse) {
    t = t.inverse();
    out_family = dual_of(family);
  }
  FockVector w = t.apply(input.vector());
  if (w.norm() == 0.0)
    raise("evaluation", "T route produced the zero vector");
  w = w.normalized();
  const double tail = tail_estimate(w.amps());
  return CoherentState(out_family, input.label(), std::move(w), tail,
                       Method::TOperator);
}

CoherentState gk_state(const RhoFamily& family, double J, double gamma,
                       const StateOptions& options) {
  if (J < 0.0) raise("domain", "J must be nonnegative");
  const double abs_z = std::sqrt(J);
  check_label_radius(family, abs_z, options);
  const double log_abs = 0.5 * std::log(J);
  const int dim = select_dim(family, log_abs, options);
  const Eigen::VectorXd lm = series_logmag(family, log_abs, dim);
  Eigen::VectorXd energies(dim);
  for (int n = 0; n < dim; ++n) {
    energies(n) = family.e(n);
    if (!std::isfinite(energies(n) * gamma)) {
      std::ostringstream os;
      os << "phase e(" << n << ") * gamma is non-finite";
      raise("evaluation", os.str());
    }
  }
  FockVector v = normalized_from_parts(
      lm, [&](int n) { return -energies(n) * gamma; });
  const double tail = tail_estimate(v.amps());
  check_tail(tail, options);
  return CoherentState(family, GkLabel{J, gamma}, std::move(v), tail,
                       Method::Series);
}

CoherentState evolve(const CoherentState& state, double t) {
  const int dim = state.dim();
  Eigen::VectorXcd v = state.vector().amps();
  for (int n = 0; n < dim; ++n) {
    const double phase = state.family().e(n) * t;
    if (!std::isfinite(phase)) {
      std::ostringstream os;
      os << "phase e(" << n << ") * t is non-finite";
      raise("evaluation", os.str());
    }
    v(n) *= std::polar(1.0, -phase);
  }
  StateLabel label = state.label();
  if (!state.has_z_label()) {
    GkLabel gk = std::get<GkLabel>(label);
    gk.gamma += t;
    label = gk;
  }
  return CoherentState(state.family(), label, FockVector(std::move(v)),
                       state.tail_mass(), state.method());
}

}  // namespace nlcs
