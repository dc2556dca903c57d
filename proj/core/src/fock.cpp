#include "nlcs/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

#include "nlcs/error.hpp"

namespace nlcs {

namespace {

void check_dim(int dim) {
  if (dim < 1) raise("invalid-dimension", "Fock dimension must be >= 1");
}

void check_same_dim(int a, int b) {
  if (a != b) {
    std::ostringstream os;
    os << "dimension mismatch: " << a << " vs " << b;
    raise("dimension-mismatch", os.str());
  }
}

}  // namespace

FockVector::FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
  check_dim(dim());
  if (!amps_.allFinite()) raise("evaluation", "non-finite amplitude in FockVector");
}

FockVector FockVector::zero(int dim) {
  check_dim(dim);
  return FockVector(Eigen::VectorXcd::Zero(dim));
}

FockVector FockVector::basis(int dim, int level) {
  check_dim(dim);
  if (level < 0 || level >= dim) raise("domain", "basis level outside 0..N");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(level) = 1.0;
  return FockVector(std::move(v));
}

Complex FockVector::amp(int level) const {
  if (level < 0 || level >= dim()) raise("domain", "amplitude level outside 0..N");
  return amps_(level);
}

FockVector FockVector::normalized() const {
  const double n = norm();
  if (n == 0.0) raise("domain", "cannot normalize the zero vector");
  return FockVector(amps_ / n);
}

bool FockVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

FockOperator::FockOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    raise("invalid-dimension", "FockOperator must be square");
  check_dim(dim());
}

FockOperator FockOperator::identity(int dim) {
  check_dim(dim);
  return FockOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

FockOperator FockOperator::zero(int dim) {
  check_dim(dim);
  return FockOperator(Eigen::MatrixXcd::Zero(dim, dim));
}

FockOperator operator*(const FockOperator& x, const FockOperator& y) {
  check_same_dim(x.dim(), y.dim());
  return FockOperator(x.entries() * y.entries());
}

FockVector operator*(const FockOperator& x, const FockVector& v) {
  check_same_dim(x.dim(), v.dim());
  return FockVector(x.entries() * v.amps());
}

FockOperator operator+(const FockOperator& x, const FockOperator& y) {
  check_same_dim(x.dim(), y.dim());
  return FockOperator(x.entries() + y.entries());
}

FockOperator operator-(const FockOperator& x, const FockOperator& y) {
  check_same_dim(x.dim(), y.dim());
  return FockOperator(x.entries() - y.entries());
}

FockOperator operator*(Complex scale, const FockOperator& x) {
  return FockOperator(scale * x.entries());
}

FockOperator make_annihilator(int dim) {
  check_dim(dim);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FockOperator(std::move(a));
}

FockOperator make_creator(int dim) { return make_annihilator(dim).adjoint(); }

FockOperator make_number(int dim) {
  check_dim(dim);
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return FockOperator(std::move(n));
}

FockOperator diagonal_function(const std::function<Complex(int)>& g, int dim) {
  check_dim(dim);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    const Complex value = g(n);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      std::ostringstream os;
      os << "diagonal function is non-finite at level " << n;
      raise("evaluation", os.str());
    }
    d(n, n) = value;
  }
  return FockOperator(std::move(d));
}

FockOperator matrix_exponential(const FockOperator& x) {
  const Eigen::MatrixXcd& m = x.entries();
  if (!m.allFinite()) raise("evaluation", "matrix exponential of non-finite input");

  const bool diagonal = (m - Eigen::MatrixXcd(m.diagonal().asDiagonal())).isZero(0.0);
  Eigen::MatrixXcd result;
  if (diagonal) {
    result = Eigen::MatrixXcd::Zero(x.dim(), x.dim());
    for (int n = 0; n < x.dim(); ++n) result(n, n) = std::exp(m(n, n));
  } else {
    result = m.exp();
  }
  if (!result.allFinite()) {
    std::ostringstream os;
    os << "matrix exponential overflowed; input 1-norm = "
       << m.cwiseAbs().colwise().sum().maxCoeff();
    raise("overflow", os.str());
  }
  return FockOperator(std::move(result));
}

FockOperator commutator(const FockOperator& x, const FockOperator& y) {
  check_same_dim(x.dim(), y.dim());
  return FockOperator(x.entries() * y.entries() - y.entries() * x.entries());
}

Complex inner_product(const FockVector& u, const FockVector& v) {
  check_same_dim(u.dim(), v.dim());
  return u.amps().dot(v.amps());
}

double norm(const FockVector& v) { return v.norm(); }

double fidelity(const FockVector& u, const FockVector& v) {
  check_same_dim(u.dim(), v.dim());
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) raise("domain", "fidelity with a zero vector");
  const double overlap = std::abs(u.amps().dot(v.amps())) / (nu * nv);
  const double f = overlap * overlap;
  return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

}  // namespace nlcs
