#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace nlcs {

using Complex = std::complex<double>;

/// Complex amplitude sequence over Fock levels 0..N (dim = N+1 entries).
class FockVector {
 public:
  explicit FockVector(Eigen::VectorXcd amps);

  static FockVector zero(int dim);
  static FockVector basis(int dim, int level);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Eigen::VectorXcd& amps() const { return amps_; }
  Complex amp(int level) const;

  double norm() const { return amps_.norm(); }
  FockVector normalized() const;
  bool is_normalized(double tol = 1e-12) const;

 private:
  Eigen::VectorXcd amps_;
};

/// Dense complex operator on the truncated Fock space, row/column indexed
/// by Fock level.
class FockOperator {
 public:
  explicit FockOperator(Eigen::MatrixXcd entries);

  static FockOperator identity(int dim);
  static FockOperator zero(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex entry(int row, int col) const { return entries_(row, col); }

  FockOperator adjoint() const { return FockOperator(entries_.adjoint()); }

 private:
  Eigen::MatrixXcd entries_;
};

FockOperator operator*(const FockOperator& x, const FockOperator& y);
FockVector operator*(const FockOperator& x, const FockVector& v);
FockOperator operator+(const FockOperator& x, const FockOperator& y);
FockOperator operator-(const FockOperator& x, const FockOperator& y);
FockOperator operator*(Complex scale, const FockOperator& x);

/// a with a|n> = sqrt(n)|n-1>; entries[n-1][n] = sqrt(n).
FockOperator make_annihilator(int dim);
/// a^dag, the conjugate transpose of the annihilator.
FockOperator make_creator(int dim);
/// n^hat = a^dag a, diagonal (0, 1, ..., N).
FockOperator make_number(int dim);

/// Diagonal operator g(n^hat) with entries g(0)..g(N). Throws an
/// evaluation error naming the level when g is non-finite there.
FockOperator diagonal_function(const std::function<Complex(int)>& g, int dim);

/// exp(X) via a backward-error-controlled scaling-and-squaring scheme.
/// Exactly diagonal inputs take an elementwise scalar-exponential path.
FockOperator matrix_exponential(const FockOperator& x);

FockOperator commutator(const FockOperator& x, const FockOperator& y);

/// <u|v> with the left argument conjugated.
Complex inner_product(const FockVector& u, const FockVector& v);
double norm(const FockVector& v);

/// |<u|v>|^2 / (|u|^2 |v|^2), clamped to [0, 1]; invariant under nonzero
/// rescaling of either argument.
double fidelity(const FockVector& u, const FockVector& v);

}  // namespace nlcs
