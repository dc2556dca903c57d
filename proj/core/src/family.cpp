#include "nlcs/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nlcs/error.hpp"
#include "log_gamma.hpp"

namespace nlcs {

namespace {

using detail::log_gamma;

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonneg_integer(double x) {
  return x >= 0.0 && std::abs(x - std::round(x)) < 1e-9;
}

double get(const Params& p, const std::string& name) { return p.at(name); }

struct FamilySpec {
  FamilyInfo info;
  // Validates params, returns warnings; throws on hard violations.
  std::vector<std::string> (*validate)(const Params&);
  double (*log_rho)(const Params&, int n);
  // ln(rho(n)/rho(n-1)) with the Gamma recurrence telescoped out. This is
  // the accuracy-critical path behind f and e; the full log_rho stays the
  // independent cross-check (the moment-ratio invariant ties the two).
  double (*log_ratio)(const Params&, int n);
  // Direct f(n) for families defined through f rather than rho (ll-paper).
  double (*f_direct)(const Params&, int n);
  int (*base_offset)(const Params&);
};

std::vector<std::string> no_params(const Params& p) {
  if (!p.empty()) raise("parameter", "family takes no parameters");
  return {};
}

void require_exactly(const Params& p, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (!p.count(name)) {
      raise("parameter", std::string("missing parameter '") + name + "'");
    }
  }
  for (const auto& [key, value] : p) {
    (void)value;
    if (std::find_if(names.begin(), names.end(), [&](const char* n) {
          return key == n;
        }) == names.end()) {
      raise("parameter", "unknown parameter '" + key + "'");
    }
  }
}

int zero_offset(const Params&) { return 0; }
int m_offset(const Params& p) { return static_cast<int>(std::round(get(p, "m"))); }

// --- log rho(n) per family; n >= 0, params already validated -------------

double rho_canonical(const Params&, int n) { return log_gamma(n + 1.0); }

double rho_kps_a(const Params& p, int n) {
  const double pp = get(p, "p");
  return log_gamma(n + pp + 1.0) - log_gamma(pp + 1.0);
}

double rho_ml(const Params& p, int n) {
  const double alpha = get(p, "alpha");
  const double beta = get(p, "beta");
  return log_gamma(alpha * n + beta) - log_gamma(beta);
}

double rho_kps_c(const Params&, int n) {
  return log_gamma(n + 1.0) - std::log(n + 1.0);
}

double rho_kps_d(const Params& p, int n) {
  const double alpha = get(p, "alpha");
  return log_gamma(n + 1.0 + alpha) - log_gamma(1.0 + alpha) - std::log(1.0 + n);
}

double rho_kps_e(const Params&, int n) { return 2.0 * log_gamma(n + 1.0); }
double rho_kps_f(const Params&, int n) { return 3.0 * log_gamma(n + 1.0); }

double rho_kps_g(const Params&, int n) {
  return log_gamma(n + 1.0) + log_gamma(n + 4.0 / 3.0) - log_gamma(4.0 / 3.0);
}

double rho_kps_h(const Params&, int n) {
  return 3.0 * log_gamma(n + 1.0) + log_gamma(1.5) - log_gamma(n + 1.5);
}

double rho_kps_da(const Params&, int n) { return std::log(2.0) - std::log(n + 2.0); }

double rho_kps_db(const Params&, int n) {
  return std::log(6.0) - std::log(n + 2.0) - std::log(n + 3.0);
}

double rho_kps_dc(const Params&, int n) {
  return std::log(M_PI / 4.0) + 2.0 * log_gamma(n + 1.0) - 2.0 * log_gamma(n + 1.5);
}

double rho_kps_dd(const Params&, int n) {
  return std::log(3.0 * M_PI / 8.0) + log_gamma(n + 1.0) + log_gamma(n + 2.0) -
         log_gamma(n + 1.5) - log_gamma(n + 2.5);
}

double rho_kps_de(const Params&, int n) {
  return log_gamma(n + 1.0) + log_gamma(n + 1.5) - log_gamma(1.5) -
         2.0 * log_gamma(n + 2.0);
}

double rho_kps_df(const Params&, int n) {
  return std::log(3.0) + log_gamma(2.5) + log_gamma(n + 2.0) - std::log(n + 3.0) -
         log_gamma(n + 2.5);
}

double rho_ps(const Params& p, int n) {
  const double q = get(p, "q");
  return log_gamma(n + 1.0) - static_cast<double>(n) * (n - 1.0) * std::log(q);
}

double rho_bg(const Params& p, int n) {
  const double twok = 2.0 * get(p, "kappa");
  return log_gamma(n + 1.0) + log_gamma(n + twok) - log_gamma(twok);
}

double rho_gp(const Params& p, int n) {
  const double twok = 2.0 * get(p, "kappa");
  return log_gamma(n + 1.0) + log_gamma(twok) - log_gamma(n + twok);
}

double rho_ll_action(const Params& p, int n) {
  const double s = get(p, "alpha") + get(p, "m") + 1.0;
  return log_gamma(n + 1.0) + log_gamma(n + s) - log_gamma(s);
}

// rho(n) = (prod_{k=1..n} (k-m)(k+alpha))^2; identically zero from n = m
// onward when m >= 1 because the k = m factor vanishes.
double rho_ll_paper(const Params& p, int n) {
  const double alpha = get(p, "alpha");
  const int m = m_offset(p);
  if (n == 0) return 0.0;
  if (m >= 1 && n >= m) return -kInf;
  const double shifted = log_gamma(n + 1.0 + alpha) - log_gamma(1.0 + alpha);
  if (m == 0) return 2.0 * (log_gamma(n + 1.0) + shifted);
  return 2.0 * (log_gamma(static_cast<double>(m)) -
                log_gamma(static_cast<double>(m - n)) + shifted);
}

double f_ll_paper(const Params& p, int n) {
  const double alpha = get(p, "alpha");
  const double m = get(p, "m");
  return (n - m) * (n + alpha) / std::sqrt(static_cast<double>(n));
}

// --- ln(rho(n)/rho(n-1)) after telescoping Gamma(x+1) = x Gamma(x) ------

double ratio_canonical(const Params&, int n) { return std::log(static_cast<double>(n)); }

double ratio_kps_a(const Params& p, int n) { return std::log(n + get(p, "p")); }

double ratio_ml(const Params& p, int n) {
  const double alpha = get(p, "alpha");
  const double beta = get(p, "beta");
  if (alpha == 1.0) return std::log(n + beta - 1.0);
  return log_gamma(alpha * n + beta) - log_gamma(alpha * (n - 1.0) + beta);
}

double ratio_kps_c(const Params&, int n) {
  return 2.0 * std::log(static_cast<double>(n)) - std::log(n + 1.0);
}

double ratio_kps_d(const Params& p, int n) {
  return std::log(static_cast<double>(n)) + std::log(n + get(p, "alpha")) -
         std::log(n + 1.0);
}

double ratio_kps_e(const Params&, int n) {
  return 2.0 * std::log(static_cast<double>(n));
}

double ratio_kps_f(const Params&, int n) {
  return 3.0 * std::log(static_cast<double>(n));
}

double ratio_kps_g(const Params&, int n) {
  return std::log(static_cast<double>(n)) + std::log(n + 1.0 / 3.0);
}

double ratio_kps_h(const Params&, int n) {
  return 3.0 * std::log(static_cast<double>(n)) - std::log(n + 0.5);
}

double ratio_kps_da(const Params&, int n) {
  return std::log(n + 1.0) - std::log(n + 2.0);
}

double ratio_kps_db(const Params&, int n) {
  return std::log(n + 1.0) - std::log(n + 3.0);
}

double ratio_kps_dc(const Params&, int n) {
  return 2.0 * (std::log(2.0 * n) - std::log(2.0 * n + 1.0));
}

double ratio_kps_dd(const Params&, int n) {
  return std::log(4.0 * n) + std::log(n + 1.0) - std::log(2.0 * n + 1.0) -
         std::log(2.0 * n + 3.0);
}

double ratio_kps_de(const Params&, int n) {
  return std::log(static_cast<double>(n)) + std::log(n + 0.5) -
         2.0 * std::log(n + 1.0);
}

double ratio_kps_df(const Params&, int n) {
  return std::log(n + 1.0) + std::log(n + 2.0) - std::log(n + 3.0) -
         std::log(n + 1.5);
}

double ratio_ps(const Params& p, int n) {
  return std::log(static_cast<double>(n)) -
         2.0 * (n - 1.0) * std::log(get(p, "q"));
}

double ratio_bg(const Params& p, int n) {
  return std::log(static_cast<double>(n)) +
         std::log(n + 2.0 * get(p, "kappa") - 1.0);
}

double ratio_gp(const Params& p, int n) {
  return std::log(static_cast<double>(n)) -
         std::log(n + 2.0 * get(p, "kappa") - 1.0);
}

double ratio_ll_action(const Params& p, int n) {
  return std::log(static_cast<double>(n)) +
         std::log(n + get(p, "alpha") + get(p, "m"));
}

// --- validation ----------------------------------------------------------

std::vector<std::string> validate_kps_a(const Params& p) {
  require_exactly(p, {"p"});
  if (!is_nonneg_integer(get(p, "p")))
    raise("parameter", "p must be a nonnegative integer");
  return {};
}

std::vector<std::string> validate_ml(const Params& p) {
  require_exactly(p, {"alpha", "beta"});
  if (!(get(p, "alpha") > 0.0)) raise("parameter", "alpha must be > 0");
  if (!(get(p, "beta") > 0.0)) raise("parameter", "beta must be > 0");
  return {};
}

std::vector<std::string> validate_kps_d(const Params& p) {
  require_exactly(p, {"alpha"});
  if (!(get(p, "alpha") > -1.0)) raise("parameter", "alpha must be > -1");
  return {};
}

std::vector<std::string> validate_ps(const Params& p) {
  require_exactly(p, {"q"});
  const double q = get(p, "q");
  if (!(q > 0.0 && q <= 1.0)) raise("parameter", "q must lie in (0, 1]");
  return {};
}

std::vector<std::string> validate_kappa(const Params& p) {
  require_exactly(p, {"kappa"});
  const double kappa = get(p, "kappa");
  if (!(kappa >= 0.5)) raise("parameter", "kappa must be >= 1/2");
  std::vector<std::string> warnings;
  if (std::abs(2.0 * kappa - std::round(2.0 * kappa)) > 1e-9 || kappa < 1.0) {
    warnings.push_back(
        "kappa is off the discrete ladder {1, 3/2, 2, ...}; the formulas "
        "extend continuously");
  }
  return warnings;
}

std::vector<std::string> validate_ll(const Params& p) {
  require_exactly(p, {"alpha", "m"});
  if (!(get(p, "alpha") > -1.0)) raise("parameter", "alpha must be > -1");
  if (!is_nonneg_integer(get(p, "m")))
    raise("parameter", "m must be a nonnegative integer");
  return {};
}

std::vector<std::string> validate_ll_paper(const Params& p) {
  auto warnings = validate_ll(p);
  if (m_offset(p) >= 1) {
    warnings.push_back(
        "f vanishes at n = m, so the moment sequence is zero from n = m "
        "onward; state construction is rejected for this parameter choice");
  }
  return warnings;
}

using FI = FamilyInfo;

const std::vector<FamilySpec>& registry() {
  static const std::vector<FamilySpec> specs = {
      {{"canonical", "n!", {}, {}, FI::Domain::Plane, "1", "n"},
       no_params, rho_canonical, ratio_canonical, nullptr, zero_offset},
      {{"kps-a", "(n+p)!/p!", {"p"}, {"nonnegative integer"}, FI::Domain::Plane,
        "sqrt((n+p)/n)", "n+p"},
       validate_kps_a, rho_kps_a, ratio_kps_a, nullptr, zero_offset},
      {{"ml", "Gamma(alpha n + beta)/Gamma(beta)", {"alpha", "beta"},
        {"alpha > 0", "beta > 0"}, FI::Domain::Plane,
        "sqrt((n+beta-1)/n) for alpha=1", "n+beta-1 for alpha=1"},
       validate_ml, rho_ml, ratio_ml, nullptr, zero_offset},
      {{"kps-c", "n!/(n+1)", {}, {}, FI::Domain::Plane, "sqrt(n/(n+1))",
        "n^2/(n+1)"},
       no_params, rho_kps_c, ratio_kps_c, nullptr, zero_offset},
      {{"kps-d", "Gamma(n+1+alpha)/(Gamma(1+alpha)(n+1))", {"alpha"},
        {"alpha > -1"}, FI::Domain::Plane, "sqrt((n+alpha)/(n+1))",
        "n(n+alpha)/(n+1)"},
       validate_kps_d, rho_kps_d, ratio_kps_d, nullptr, zero_offset},
      {{"kps-e", "(n!)^2", {}, {}, FI::Domain::Plane, "sqrt(n)", "n^2"},
       no_params, rho_kps_e, ratio_kps_e, nullptr, zero_offset},
      {{"kps-f", "(n!)^3", {}, {}, FI::Domain::Plane, "n", "n^3"},
       no_params, rho_kps_f, ratio_kps_f, nullptr, zero_offset},
      {{"kps-g", "n! Gamma(n+4/3)/Gamma(4/3)", {}, {}, FI::Domain::Plane,
        "sqrt(n+1/3)", "n(n+1/3)"},
       no_params, rho_kps_g, ratio_kps_g, nullptr, zero_offset},
      {{"kps-h", "(n!)^3 Gamma(3/2)/Gamma(n+3/2)", {}, {}, FI::Domain::Plane,
        "n/sqrt(n+1/2)", "n^3/(n+1/2)"},
       no_params, rho_kps_h, ratio_kps_h, nullptr, zero_offset},
      {{"kps-da", "2/(n+2)", {}, {}, FI::Domain::Disk,
        "sqrt((n+1)/(n(n+2)))", "(n+1)/(n+2)"},
       no_params, rho_kps_da, ratio_kps_da, nullptr, zero_offset},
      {{"kps-db", "6/((n+2)(n+3))", {}, {}, FI::Domain::Disk,
        "sqrt((n+1)/(n(n+3)))", "(n+1)/(n+3)"},
       no_params, rho_kps_db, ratio_kps_db, nullptr, zero_offset},
      {{"kps-dc", "(pi/4)(n!)^2/Gamma(n+3/2)^2", {}, {}, FI::Domain::Disk,
        "2 sqrt(n)/(2n+1)", "4n^2/(2n+1)^2"},
       no_params, rho_kps_dc, ratio_kps_dc, nullptr, zero_offset},
      {{"kps-dd", "(3pi/8) n!(n+1)!/(Gamma(n+3/2)Gamma(n+5/2))", {}, {},
        FI::Domain::Disk, "2 sqrt((n+1)/((2n+1)(2n+3)))",
        "4n(n+1)/((2n+1)(2n+3))"},
       no_params, rho_kps_dd, ratio_kps_dd, nullptr, zero_offset},
      {{"kps-de", "n! Gamma(n+3/2)/(Gamma(3/2)((n+1)!)^2), the 2F1 moment "
                  "family at a=b=1/2, c=3/2",
        {}, {}, FI::Domain::Disk, "sqrt(n+1/2)/(n+1)", "n(n+1/2)/(n+1)^2"},
       no_params, rho_kps_de, ratio_kps_de, nullptr, zero_offset},
      {{"kps-df", "3 Gamma(5/2)(n+1)!/((n+3)Gamma(n+5/2))", {}, {},
        FI::Domain::Disk, "sqrt((n^2+3n+2)/(n(n+3)(n+3/2)))",
        "(n^2+3n+2)/((n+3)(n+3/2))"},
       no_params, rho_kps_df, ratio_kps_df, nullptr, zero_offset},
      {{"ps", "n! q^(-n(n-1))", {"q"}, {"q in (0, 1]"}, FI::Domain::Plane,
        "q^(1-n)", "n q^(2(1-n))"},
       validate_ps, rho_ps, ratio_ps, nullptr, zero_offset},
      {{"bg", "n! Gamma(n+2kappa)/Gamma(2kappa)", {"kappa"},
        {"kappa >= 1/2"}, FI::Domain::Plane, "sqrt(n+2kappa-1)",
        "n(n+2kappa-1)"},
       validate_kappa, rho_bg, ratio_bg, nullptr, zero_offset},
      {{"gp", "n! Gamma(2kappa)/Gamma(n+2kappa)", {"kappa"},
        {"kappa >= 1/2"}, FI::Domain::Disk, "1/sqrt(n+2kappa-1)",
        "n/(n+2kappa-1)"},
       validate_kappa, rho_gp, ratio_gp, nullptr, zero_offset},
      {{"ll-action", "n! Gamma(n+alpha+m+1)/Gamma(alpha+m+1), ladder index "
                     "counted from level m",
        {"alpha", "m"}, {"alpha > -1", "nonnegative integer"},
        FI::Domain::Plane, "sqrt(n+alpha+m)", "n(n+alpha+m)"},
       validate_ll, rho_ll_action, ratio_ll_action, nullptr, m_offset},
      {{"ll-paper", "(prod_{k<=n}(k-m)(k+alpha))^2; zero from n=m when m>=1",
        {"alpha", "m"}, {"alpha > -1", "nonnegative integer"},
        FI::Domain::Plane, "(n-m)(n+alpha)/sqrt(n)", "(n-m)^2(n+alpha)^2/n"},
       validate_ll_paper, rho_ll_paper, nullptr, f_ll_paper, m_offset},
  };
  return specs;
}

const FamilySpec* find_spec(const std::string& id) {
  std::string key = id;
  if (key == "kps-b") key = "ml";  // item-b alias
  for (const auto& spec : registry()) {
    if (spec.info.id == key) return &spec;
  }
  return nullptr;
}

const FamilyInfo& table_info() {
  static const FamilyInfo info{
      "user", "explicit finite table rho(0..N)", {}, {}, FI::Domain::Plane,
      "sqrt(rho(n)/(n rho(n-1)))", "rho(n)/rho(n-1)"};
  return info;
}

}  // namespace

RhoFamily RhoFamily::make(const std::string& id, const Params& params) {
  const FamilySpec* spec = find_spec(id);
  if (spec == nullptr) raise("parameter", "unknown family id '" + id + "'");
  RhoFamily family;
  family.id_ = spec->info.id;
  family.params_ = params;
  family.warnings_ = spec->validate(params);
  family.base_offset_ = spec->base_offset(params);
  family.spec_ = spec;
  return family;
}

RhoFamily RhoFamily::from_table(std::vector<double> rho) {
  if (rho.size() < 2) raise("parameter", "table must supply rho(0) and rho(1)");
  if (std::abs(rho[0] - 1.0) > 1e-12)
    raise("parameter", "table must have rho(0) = 1");
  for (std::size_t n = 0; n < rho.size(); ++n) {
    if (!(rho[n] > 0.0) || !std::isfinite(rho[n])) {
      std::ostringstream os;
      os << "table entry rho(" << n << ") must be positive and finite";
      raise("parameter", os.str());
    }
  }
  RhoFamily family;
  family.id_ = "user";
  family.table_ = std::move(rho);
  return family;
}

const FamilyInfo& RhoFamily::info() const {
  if (is_table()) return table_info();
  return static_cast<const FamilySpec*>(spec_)->info;
}

int RhoFamily::max_level() const {
  if (is_table()) return static_cast<int>(table_.size()) - 1;
  return std::numeric_limits<int>::max();
}

double RhoFamily::base_rho_log(int n) const {
  if (n < 0) raise("domain", "rho is defined for n >= 0");
  if (is_table()) {
    if (n > max_level()) {
      std::ostringstream os;
      os << "table family has no entry at level " << n;
      raise("evaluation", os.str());
    }
    return std::log(table_[static_cast<std::size_t>(n)]);
  }
  const auto* spec = static_cast<const FamilySpec*>(spec_);
  if (n == 0) return 0.0;
  return spec->log_rho(params_, n);
}

double RhoFamily::rho_log(int n) const {
  const double base = base_rho_log(n);
  if (!dual_) return base;
  return 2.0 * log_gamma(n + 1.0) - base;
}

double RhoFamily::base_log_ratio(int n) const {
  if (is_table()) {
    if (n > max_level()) {
      std::ostringstream os;
      os << "table family has no entry at level " << n;
      raise("evaluation", os.str());
    }
    return std::log(table_[static_cast<std::size_t>(n)] /
                    table_[static_cast<std::size_t>(n - 1)]);
  }
  const auto* spec = static_cast<const FamilySpec*>(spec_);
  if (spec->log_ratio != nullptr) return spec->log_ratio(params_, n);
  return base_rho_log(n) - base_rho_log(n - 1);
}

double RhoFamily::base_f(int n) const {
  if (n < 1) raise("domain", "f(n) is defined for n >= 1; f(0) := 1 applies "
                             "only inside operator builders");
  const auto* spec = static_cast<const FamilySpec*>(spec_);
  if (spec != nullptr && spec->f_direct != nullptr)
    return spec->f_direct(params_, n);
  return std::exp(0.5 * (base_log_ratio(n) - std::log(static_cast<double>(n))));
}

double RhoFamily::f(int n) const {
  const double base = base_f(n);
  if (!dual_) return base;
  if (base == 0.0) {
    std::ostringstream os;
    os << "dual nonlinearity is undefined at level " << n << " (f = 0)";
    raise("evaluation", os.str());
  }
  return 1.0 / base;
}

double RhoFamily::e(int n) const {
  if (n < 0) raise("domain", "e(n) is defined for n >= 0");
  if (n == 0) return 0.0;
  const double fn = f(n);
  return static_cast<double>(n) * fn * fn;
}

double RhoFamily::log_e(int n) const {
  if (n < 1) raise("domain", "log_e(n) is defined for n >= 1");
  const auto* spec = static_cast<const FamilySpec*>(spec_);
  double base;
  if (spec != nullptr && spec->f_direct != nullptr) {
    const double fn = spec->f_direct(params_, n);
    base = fn == 0.0 ? -kInf
                     : std::log(static_cast<double>(n)) + 2.0 * std::log(fn);
  } else {
    base = base_log_ratio(n);
  }
  if (!dual_) return base;
  return 2.0 * std::log(static_cast<double>(n)) - base;
}

RhoFamily RhoFamily::dual_family() const {
  RhoFamily out = *this;
  out.dual_ = !dual_;
  return out;
}

double rho_log(const RhoFamily& family, int n) { return family.rho_log(n); }
double f_eval(const RhoFamily& family, int n) { return family.f(n); }
double e_eval(const RhoFamily& family, int n) { return family.e(n); }
RhoFamily dual_of(const RhoFamily& family) { return family.dual_family(); }

RadiusEstimate radius_of_convergence(const RhoFamily& family,
                                     const RadiusOptions& options) {
  // lim n f(n)^2 = lim e(n). Sample e at geometrically growing levels,
  // classify growth from the sample differences, and extrapolate the 1/n
  // and 1/n^2 terms away when the sequence settles.
  const double log_threshold = std::log(options.divergence_threshold);
  std::vector<double> samples;
  int level = options.start_level;
  if (family.max_level() < level) level = std::max(2, family.max_level() / 4);
  for (int j = 0; j <= options.refinements; ++j) {
    if (level > family.max_level()) break;
    const double log_e = family.log_e(level);
    if (log_e > log_threshold) return {kInf, true, false};
    samples.push_back(std::exp(log_e));
    if (level > std::numeric_limits<int>::max() / 2) break;
    level *= 2;
  }
  if (samples.size() < 3) return {0.0, false, true};

  const double scale = std::max(1.0, std::abs(samples.back()));
  std::vector<double> diffs;
  for (std::size_t j = 0; j + 1 < samples.size(); ++j)
    diffs.push_back(samples[j + 1] - samples[j]);

  bool plateau = true;
  for (const double d : diffs) plateau = plateau && std::abs(d) <= 1e-9 * scale;
  if (plateau) return {samples.back(), false, false};

  // Difference ratios: ~1/2 for a 1/n approach to a limit, >= 1 for
  // genuine unbounded growth, negative for oscillation.
  bool growing = true;
  bool settling = true;
  for (std::size_t j = 0; j + 1 < diffs.size(); ++j) {
    if (std::abs(diffs[j]) <= 1e-12 * scale) {
      growing = false;
      continue;
    }
    const double ratio = diffs[j + 1] / diffs[j];
    growing = growing && ratio >= 0.9;
    settling = settling && ratio > 0.0 && ratio < 0.9;
  }
  if (growing) return {kInf, true, false};
  if (!settling) return {samples.back(), false, true};

  std::vector<double> first;
  for (std::size_t j = 0; j + 1 < samples.size(); ++j)
    first.push_back(2.0 * samples[j + 1] - samples[j]);
  std::vector<double> second;
  for (std::size_t j = 0; j + 1 < first.size(); ++j)
    second.push_back((4.0 * first[j + 1] - first[j]) / 3.0);

  const double estimate = second.back();
  const double spread = std::abs(second.back() - second.front());
  if (!std::isfinite(estimate) || spread > 1e-2 * std::max(1.0, std::abs(estimate)))
    return {estimate, false, true};
  return {estimate, false, false};
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& spec : registry()) out.push_back(spec.info);
    return out;
  }();
  return infos;
}

}  // namespace nlcs
