#include <doctest.h>

#include <cmath>
#include <random>

#include "nlcs/error.hpp"
#include "nlcs/fock.hpp"

using namespace nlcs;

namespace {

FockVector apply(const FockOperator& op, int dim, int level) {
  return op * FockVector::basis(dim, level);
}

Eigen::MatrixXcd random_matrix(int dim, double one_norm, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(unit(), unit());
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  return m * (one_norm / norm);
}

}  // namespace

TEST_CASE("annihilator ladder action") {
  const FockOperator a2 = make_annihilator(2);
  CHECK(apply(a2, 2, 1).amp(0) == Complex(1.0, 0.0));  // sqrt(1) = 1

  const FockOperator a3 = make_annihilator(3);
  CHECK(apply(a3, 3, 0).norm() == 0.0);  // vacuum annihilation

  const FockOperator a4 = make_annihilator(4);
  const FockVector lowered = apply(a4, 4, 3);
  CHECK(lowered.amp(2).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  // cross-check against the creator transpose
  const FockOperator c4 = make_creator(4);
  CHECK(c4.entry(3, 2) == a4.entry(2, 3));
}

TEST_CASE("annihilator rejects dim 0") {
  CHECK_THROWS_WITH_AS(make_annihilator(0), doctest::Contains("dimension"),
                       Error);
}

TEST_CASE("creator ladder action and truncation boundary") {
  const FockOperator c3 = make_creator(3);
  CHECK(apply(c3, 3, 0).amp(1) == Complex(1.0, 0.0));
  CHECK(apply(c3, 3, 2).norm() == 0.0);  // boundary absorbs

  const FockOperator product = make_creator(5) * make_annihilator(5);
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(product.entry(n, n).real() - n) <=
          2 * std::numeric_limits<double>::epsilon() * std::max(1, n));
    CHECK(product.entry(n, n).imag() == 0.0);
  }
}

TEST_CASE("number operator") {
  const FockOperator n2 = make_number(2);
  CHECK(n2.entry(0, 0) == Complex(0.0, 0.0));
  CHECK(n2.entry(1, 1) == Complex(1.0, 0.0));

  // a^dag a equals the number operator up to product rounding
  const int dim = 9;
  const FockOperator product = make_creator(dim) * make_annihilator(dim);
  const FockOperator number = make_number(dim);
  for (int n = 0; n < dim; ++n) {
    CHECK(std::abs((product.entry(n, n) - number.entry(n, n)).real()) <=
          2 * std::numeric_limits<double>::epsilon() * std::max(1, n));
  }

  // diagonal matrices commute exactly
  const FockOperator g = diagonal_function(
      [](int n) { return Complex(std::sin(n + 1.0), 0.5 * n); }, dim);
  CHECK(commutator(number, g).entries().isZero(0.0));
}

TEST_CASE("diagonal_function") {
  const int dim = 6;
  const FockOperator one = diagonal_function([](int) { return Complex(1.0); }, dim);
  CHECK(one.entries() == Eigen::MatrixXcd::Identity(dim, dim));

  const FockOperator n_fn =
      diagonal_function([](int n) { return Complex(static_cast<double>(n)); }, dim);
  CHECK(n_fn.entries() == make_number(dim).entries());

  CHECK_THROWS_WITH_AS(
      diagonal_function(
          [](int n) { return Complex(n == 2 ? NAN : 1.0); }, dim),
      doctest::Contains("level 2"), Error);
}

TEST_CASE("matrix exponential: identity and diagonal fast path") {
  const FockOperator zero = FockOperator::zero(5);
  CHECK(matrix_exponential(zero).entries() ==
        Eigen::MatrixXcd::Identity(5, 5));

  const FockOperator d = diagonal_function(
      [](int n) { return Complex(n + 1.0); }, 2);
  const FockOperator ed = matrix_exponential(d);
  CHECK(ed.entry(0, 0).real() == std::exp(1.0));  // elementwise scalar exp
  CHECK(ed.entry(1, 1).real() == std::exp(2.0));
  CHECK(ed.entry(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("matrix exponential reproduces the canonical coherent state") {
  const int dim = 40;
  const Complex z(0.5, 0.0);
  const FockOperator x =
      z * make_creator(dim) - std::conj(z) * make_annihilator(dim);
  const FockVector state = matrix_exponential(x) * FockVector::basis(dim, 0);

  // closed-form amplitudes exp(-|z|^2/2) z^n / sqrt(n!)
  double log_fact = 0.0;
  double worst = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) log_fact += std::log(static_cast<double>(n));
    const double expected =
        std::exp(-0.125 + n * std::log(0.5) - 0.5 * log_fact);
    worst = std::max(worst, std::abs(state.amp(n).real() - expected));
    worst = std::max(worst, std::abs(state.amp(n).imag()));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("matrix exponential inverse property") {
  for (const std::uint64_t seed : {11u, 22u, 33u}) {
    const Eigen::MatrixXcd m = random_matrix(12, 10.0, seed);
    const FockOperator x{m};
    const FockOperator minus_x{-m};
    const Eigen::MatrixXcd product =
        (matrix_exponential(x) * matrix_exponential(minus_x)).entries() -
        Eigen::MatrixXcd::Identity(12, 12);
    CHECK(product.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("matrix exponential overflow reports the norm") {
  const FockOperator big =
      diagonal_function([](int) { return Complex(1.0e4); }, 3);
  CHECK_THROWS_WITH_AS(matrix_exponential(big), doctest::Contains("norm"),
                       Error);
}

TEST_CASE("commutator of a and a^dag on the truncated space") {
  const int dim = 7;
  const FockOperator comm = commutator(make_annihilator(dim), make_creator(dim));
  for (int n = 0; n + 1 < dim; ++n)
    CHECK(std::abs(comm.entry(n, n) - Complex(1.0, 0.0)) <=
          4 * std::numeric_limits<double>::epsilon() * (n + 1.0));
  CHECK(comm.entry(dim - 1, dim - 1).real() ==
        doctest::Approx(-(dim - 1.0)).epsilon(1e-14));  // truncation corner
}

TEST_CASE("inner product and fidelity") {
  const FockVector two = FockVector::basis(5, 2);
  CHECK(inner_product(two, two) == Complex(1.0, 0.0));

  std::mt19937_64 rng(7);
  auto unit = [&] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  Eigen::VectorXcd u(5), v(5);
  for (int i = 0; i < 5; ++i) {
    u(i) = Complex(unit(), unit());
    v(i) = Complex(unit(), unit());
  }
  const FockVector fu{u};
  const FockVector fv{v};
  const FockVector fu3{Complex(3.0, 0.0) * u};

  CHECK(fidelity(fu, fu3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity(fu, fv) == doctest::Approx(fidelity(fv, fu)).epsilon(1e-15));
  CHECK(fidelity(fu, fv) >= 0.0);
  CHECK(fidelity(fu, fv) <= 1.0);

  CHECK_THROWS_AS(inner_product(FockVector::basis(3, 0), FockVector::basis(4, 0)),
                  Error);
}

TEST_CASE("vector normalization flag") {
  Eigen::VectorXcd raw(3);
  raw << Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(-1.0, 0.5);
  const FockVector v{raw};
  CHECK_FALSE(v.is_normalized());
  CHECK(v.normalized().is_normalized(1e-15));
  CHECK_THROWS_AS(FockVector::zero(3).normalized(), Error);
}
