#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nlcs {

using Params = std::map<std::string, double>;

/// Catalog metadata for one moment-sequence family: parameter surface,
/// convergence-domain class and the closed forms of f(n) and H(n) as
/// display strings.
struct FamilyInfo {
  std::string id;
  std::string rho_text;                         // moment sequence, human readable
  std::vector<std::string> param_names;         // e.g. {"kappa"}
  std::vector<std::string> param_domains;       // e.g. {"kappa >= 1/2"}
  enum class Domain { Plane, Disk } domain = Domain::Plane;
  std::string f_closed_form;                    // e.g. "sqrt(n)"
  std::string h_closed_form;                    // e.g. "n^2"
};

/// A catalogued moment sequence rho(n) with parameters. rho(0) = 1 for
/// every family; rho(n) > 0 except for the degenerate ll-paper variant
/// with m >= 1, whose f has a zero at n = m (see catalog notes).
///
/// Values are immutable after construction; all member functions are pure.
class RhoFamily {
 public:
  /// Construct a catalogued family; throws a parameter error on an
  /// unknown id or out-of-domain parameters.
  static RhoFamily make(const std::string& id, const Params& params = {});

  /// User-supplied family from an explicit finite table rho(0..N).
  static RhoFamily from_table(std::vector<double> rho);

  const std::string& id() const { return id_; }
  const Params& params() const { return params_; }
  bool dual() const { return dual_; }
  int base_offset() const { return base_offset_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const FamilyInfo& info() const;
  bool is_table() const { return !table_.empty(); }
  /// Highest level a table-backed family can evaluate (INT_MAX otherwise).
  int max_level() const;

  /// ln rho(n), evaluated through log-gamma. -inf marks a genuinely zero
  /// moment (degenerate ll-paper). Honors the dual flag:
  /// rho_dual(n) = (n!)^2 / rho(n).
  double rho_log(int n) const;

  /// f(n) = sqrt(rho(n) / (n rho(n-1))) for n >= 1; reciprocal under the
  /// dual flag. n = 0 is a domain error.
  double f(int n) const;

  /// e(n) = n f(n)^2 = rho(n)/rho(n-1); e(0) = 0.
  double e(int n) const;

  /// ln e(n) for n >= 1, safe where e overflows a double.
  double log_e(int n) const;

  /// Same family with the dual flag toggled.
  RhoFamily dual_family() const;

 private:
  RhoFamily() = default;
  double base_rho_log(int n) const;
  double base_log_ratio(int n) const;
  double base_f(int n) const;

  std::string id_;
  Params params_;
  bool dual_ = false;
  int base_offset_ = 0;
  std::vector<std::string> warnings_;
  std::vector<double> table_;  // nonempty only for from_table
  const void* spec_ = nullptr;
};

double rho_log(const RhoFamily& family, int n);
double f_eval(const RhoFamily& family, int n);
double e_eval(const RhoFamily& family, int n);
RhoFamily dual_of(const RhoFamily& family);

/// f(n) with the operator-builder convention f(0) := 1. The value at 0
/// multiplies a|0> = 0 inside every builder, so it never reaches an
/// observable quantity.
struct NonlinearityFn {
  RhoFamily family;
  double operator()(int n) const { return n == 0 ? 1.0 : family.f(n); }
};

/// e(n) with e(0) = 0; the eigen-energy sequence of the normal-ordered
/// Hamiltonian.
struct SpectrumView {
  RhoFamily family;
  double operator()(int n) const { return family.e(n); }
};

struct RadiusEstimate {
  double value = 0.0;  // +inf when divergent
  bool divergent = false;
  bool indeterminate = false;
};

struct RadiusOptions {
  int start_level = 2048;
  int refinements = 4;        // levels n, 2n, 4n, ...
  double divergence_threshold = 1e6;
};

/// Numerical estimate of lim n f(n)^2 (the squared label radius) by
/// geometric sampling with Richardson extrapolation. Returns +inf with
/// the divergent flag when the sequence exceeds the threshold.
RadiusEstimate radius_of_convergence(const RhoFamily& family,
                                     const RadiusOptions& options = {});

/// All catalogued families in stable listing order.
const std::vector<FamilyInfo>& family_catalog();

}  // namespace nlcs
