#pragma once

#include <optional>
#include <variant>

#include "nlcs/family.hpp"
#include "nlcs/fock.hpp"

namespace nlcs {

enum class Method { Series, Displacement, DualDisplacement, TOperator };

const char* method_name(Method method);

/// Two-parameter label (J >= 0, gamma) of an energy-phase state.
struct GkLabel {
  double J;
  double gamma;
};

using StateLabel = std::variant<Complex, GkLabel>;

struct StateOptions {
  /// Fixed dimension; when absent the dimension doubles from 32 until the
  /// top amplitude satisfies |amp(N)|^2 / max^2 < 1e-18 and the last three
  /// levels carry < 1e-16 of the probability, capped at max_dim.
  std::optional<int> dim;
  double tail_tol = 1e-12;
  int max_dim = 512;
  /// Bypasses the convergence-radius and tail gates. When the doubling
  /// rule cannot converge (asymptotically divergent dual series), the
  /// construction truncates at the amplitude-minimum level instead.
  bool force = false;
};

/// A normalized coherent state on the truncated Fock space, tagged with
/// the family and label it was built from, the construction route, and a
/// conservative estimate of the probability mass beyond the truncation.
class CoherentState {
 public:
  CoherentState(RhoFamily family, StateLabel label, FockVector vector,
                double tail_mass, Method method);

  const RhoFamily& family() const { return family_; }
  const StateLabel& label() const { return label_; }
  const FockVector& vector() const { return vector_; }
  double tail_mass() const { return tail_mass_; }
  Method method() const { return method_; }
  int dim() const { return vector_.dim(); }

  bool has_z_label() const { return std::holds_alternative<Complex>(label_); }
  Complex z_label() const;
  GkLabel gk_label() const;

 private:
  RhoFamily family_;
  StateLabel label_;
  FockVector vector_;
  double tail_mass_;
  Method method_;
};

/// Dimension the automatic rule would pick for a state with label
/// magnitude |z| (use sqrt(J) for the two-parameter states).
int auto_dim(const RhoFamily& family, double abs_z,
             const StateOptions& options = {});

/// Series route: amplitude(n) proportional to z^n / sqrt(rho(n)),
/// normalized by direct summation.
CoherentState cs_series(const RhoFamily& family, Complex z,
                        const StateOptions& options = {});

/// Displacement route: exp(z B^dag - z* A)|0>, renormalized.
CoherentState cs_displacement(const RhoFamily& family, Complex z,
                              const StateOptions& options = {});

/// Dual displacement route: exp(z A^dag - z* B)|0>, renormalized. The
/// result is a state of dual_of(family), with amplitude(n) proportional
/// to z^n sqrt(rho(n)) / n!.
CoherentState cs_dual_displacement(const RhoFamily& family, Complex z,
                                   const StateOptions& options = {});

/// Diagonal map sqrt(n!/rho(n)) |n><n| carrying the canonical coherent
/// state onto the family state; its inverse carries it onto the dual.
class TOperator {
 public:
  TOperator(RhoFamily family, int dim);

  const RhoFamily& family() const { return family_; }
  int dim() const { return static_cast<int>(diag_.size()); }
  const Eigen::VectorXd& diag() const { return diag_; }
  FockOperator matrix() const;
  bool invertible() const;
  TOperator inverse() const;
  FockVector apply(const FockVector& v) const;

 private:
  TOperator(RhoFamily family, Eigen::VectorXd diag)
      : family_(std::move(family)), diag_(std::move(diag)) {}
  RhoFamily family_;
  Eigen::VectorXd diag_;
};

enum class TDirection { Forward, Inverse };

/// Applies T (forward) or T^{-1} (inverse) to the input state and
/// renormalizes. Forward on a canonical series state yields the family
/// state; inverse yields the dual state.
CoherentState t_apply(const RhoFamily& family, int dim, TDirection direction,
                      const CoherentState& input);

/// Two-parameter state with amplitude(n) proportional to
/// J^{n/2} exp(-i e_n gamma) / sqrt(rho(n)).
CoherentState gk_state(const RhoFamily& family, double J, double gamma,
                       const StateOptions& options = {});

/// Multiplies amplitude(n) by exp(-i e_n t) (hbar = omega = 1). A
/// (J, gamma) label shifts to (J, gamma + t).
CoherentState evolve(const CoherentState& state, double t);

}  // namespace nlcs
