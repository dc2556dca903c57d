#include "nlcs/operators.hpp"

#include <cmath>
#include <sstream>

#include "nlcs/error.hpp"

namespace nlcs {

namespace {

void check_min_dim(int dim, int min_dim) {
  if (dim < min_dim) {
    std::ostringstream os;
    os << "operator requires dim >= " << min_dim;
    raise("invalid-dimension", os.str());
  }
}

FockOperator deformed_lowering(const RhoFamily& family, int dim,
                               bool reciprocal) {
  check_min_dim(dim, 2);
  const NonlinearityFn f{family};
  const int top = dim - 1;

  auto factor = [&](int n) {
    const double value = f(n);
    if (reciprocal) {
      if (value == 0.0 || !std::isfinite(value)) {
        std::ostringstream os;
        os << "cannot build B: f is " << (value == 0.0 ? "zero" : "non-finite")
           << " at level " << n;
        raise("evaluation", os.str());
      }
      return 1.0 / value;
    }
    return value;
  };

  const FockOperator a = make_annihilator(dim);
  const FockOperator left =
      a * diagonal_function([&](int n) { return Complex(factor(n)); }, dim);
  // f(n^hat + 1) a: the shifted diagonal's top entry multiplies the zero
  // row of a, so it never enters; keep it at 1 to stay inside the table
  // range of user families.
  const FockOperator right =
      diagonal_function(
          [&](int n) { return Complex(n < top ? factor(n + 1) : 1.0); }, dim) *
      a;
  if (left.entries() != right.entries())
    raise("evaluation", "the two factorizations of the deformed lowering "
                        "operator disagree");
  return left;
}

}  // namespace

FockOperator build_A(const RhoFamily& family, int dim) {
  return deformed_lowering(family, dim, false);
}

FockOperator build_A_dag(const RhoFamily& family, int dim) {
  return build_A(family, dim).adjoint();
}

FockOperator build_B(const RhoFamily& family, int dim) {
  return deformed_lowering(family, dim, true);
}

FockOperator build_B_dag(const RhoFamily& family, int dim) {
  return build_B(family, dim).adjoint();
}

FockOperator hamiltonian(const RhoFamily& family, int dim) {
  check_min_dim(dim, 1);
  const SpectrumView e{family};
  return diagonal_function([&](int n) { return Complex(e(n)); }, dim);
}

FockOperator manko_hamiltonian(const RhoFamily& family, int dim) {
  check_min_dim(dim, 2);
  const FockOperator a = build_A(family, dim);
  const FockOperator a_dag = a.adjoint();
  return Complex(0.5) * (a * a_dag + a_dag * a);
}

}  // namespace nlcs
