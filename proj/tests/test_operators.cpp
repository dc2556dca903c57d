#include <doctest.h>

#include <cmath>
#include <limits>

#include "nlcs/error.hpp"
#include "nlcs/operators.hpp"
#include "roster.hpp"

using namespace nlcs;
using nlcs_tests::roster;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

TEST_CASE("canonical deformed operators reduce to the plain ladder") {
  const int dim = 8;
  const FockOperator a = build_A(RhoFamily::make("canonical"), dim);
  const FockOperator plain = make_annihilator(dim);
  double worst = 0.0;
  for (int n = 1; n < dim; ++n)
    worst = std::max(worst, std::abs(a.entry(n - 1, n) - plain.entry(n - 1, n)));
  CHECK(worst <= 8 * kEps);

  const FockOperator b = build_B(RhoFamily::make("canonical"), dim);
  worst = 0.0;
  for (int n = 1; n < dim; ++n)
    worst = std::max(worst, std::abs(b.entry(n - 1, n) - plain.entry(n - 1, n)));
  CHECK(worst <= 8 * kEps);
}

TEST_CASE("deformed ladder actions") {
  // A|2> = sqrt(8)|1> for kappa = 3/2
  const RhoFamily bg = RhoFamily::make("bg", {{"kappa", 1.5}});
  const FockOperator a = build_A(bg, 6);
  CHECK(a.entry(1, 2).real() ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-13));

  // A|3> = sqrt(3) q^{-2} |2> for q = 0.9, cross-checked by matrix product
  const RhoFamily ps = RhoFamily::make("ps", {{"q", 0.9}});
  const FockOperator aps = build_A(ps, 6);
  const double expected = std::sqrt(3.0) * std::pow(0.9, -2.0);
  CHECK(aps.entry(2, 3).real() == doctest::Approx(expected).epsilon(1e-13));
  const FockVector lowered = aps * FockVector::basis(6, 3);
  CHECK(lowered.amp(2).real() == doctest::Approx(std::sqrt(3.0) * ps.f(3)).epsilon(1e-14));

  // B|2> = sqrt(2/4)|1> for the same kappa (the dual-system lowering)
  const FockOperator b = build_B(bg, 6);
  CHECK(b.entry(1, 2).real() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("A of the dual family equals B of the base family") {
  for (const RhoFamily& family : roster()) {
    if (family.id() == "ll-paper" && family.base_offset() >= 1) continue;
    const int dim = 12;
    const FockOperator b = build_B(family, dim);
    const FockOperator a_dual = build_A(dual_of(family), dim);
    double worst = 0.0;
    for (int n = 1; n < dim; ++n) {
      const double scale = std::max(1.0, std::abs(b.entry(n - 1, n)));
      worst = std::max(worst,
                       std::abs(a_dual.entry(n - 1, n) - b.entry(n - 1, n)) / scale);
    }
    INFO("family ", family.id());
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("diagonal_function lifts a nonlinearity to an operator") {
  // f_BG at kappa = 3/2 has diagonal sqrt(n + 2)
  const NonlinearityFn f{RhoFamily::make("bg", {{"kappa", 1.5}})};
  const FockOperator diag =
      diagonal_function([&](int n) { return Complex(f(n)); }, 8);
  CHECK(diag.entry(0, 0).real() == 1.0);  // builder convention
  for (int n = 1; n < 8; ++n) {
    CHECK(diag.entry(n, n).real() ==
          doctest::Approx(std::sqrt(n + 2.0)).epsilon(1e-13));
    CHECK(diag.entry(n, n).imag() == 0.0);
  }
}

TEST_CASE("the vacuum value of f never reaches the operators") {
  const RhoFamily family = RhoFamily::make("bg", {{"kappa", 2.0}});
  const NonlinearityFn f{family};
  const int dim = 7;
  const FockOperator a = make_annihilator(dim);
  const FockOperator with_convention =
      a * diagonal_function([&](int n) { return Complex(f(n)); }, dim);
  const FockOperator with_perturbed =
      a * diagonal_function([&](int n) { return Complex(n == 0 ? 77.0 : f(n)); },
                            dim);
  CHECK(with_convention.entries() == with_perturbed.entries());
}

TEST_CASE("B construction fails where f vanishes") {
  const RhoFamily paper = RhoFamily::make("ll-paper", {{"alpha", 0.5}, {"m", 2.0}});
  CHECK_THROWS_WITH_AS(build_B(paper, 8), doctest::Contains("level 2"), Error);
  CHECK_THROWS_AS(build_A(paper, 1), Error);  // dim >= 2
}

TEST_CASE("normal-ordered Hamiltonian diagonals") {
  // (n!)^3 family: H = n^3
  const FockOperator h_f = hamiltonian(RhoFamily::make("kps-f"), 12);
  for (int n = 0; n < 12; ++n) {
    CHECK(h_f.entry(n, n).real() ==
          doctest::Approx(static_cast<double>(n) * n * n).epsilon(1e-12));
  }

  // disk item with H = 4n^2/(2n+1)^2
  const FockOperator h_dc = hamiltonian(RhoFamily::make("kps-dc"), 12);
  for (int n = 0; n < 12; ++n) {
    const double expected = 4.0 * n * n / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
    CHECK(h_dc.entry(n, n).real() == doctest::Approx(expected).epsilon(1e-12));
  }

  // dual families carry H_dual(n) = n^2/e(n), H_dual(0) = 0
  const RhoFamily bg = RhoFamily::make("bg", {{"kappa", 1.5}});
  const FockOperator h_dual = hamiltonian(dual_of(bg), 12);
  CHECK(h_dual.entry(0, 0) == Complex(0.0, 0.0));
  for (int n = 1; n < 12; ++n) {
    const double expected = static_cast<double>(n) * n / bg.e(n);
    CHECK(h_dual.entry(n, n).real() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("H equals A^dag A entrywise on levels 0..N-1") {
  for (const RhoFamily& family : roster()) {
    if (family.id() == "ll-paper" && family.base_offset() >= 1) continue;
    const int dim = 24;
    const FockOperator h = hamiltonian(family, dim);
    const FockOperator product = build_A_dag(family, dim) * build_A(family, dim);
    double worst_ulp = 0.0;
    for (int n = 0; n < dim - 1; ++n) {
      const double expected = h.entry(n, n).real();
      const double got = product.entry(n, n).real();
      const double ulp = std::max(kEps * std::abs(expected), 5e-324);
      worst_ulp = std::max(worst_ulp, std::abs(got - expected) / ulp);
    }
    INFO("family ", family.id());
    CHECK(worst_ulp <= 2.0);
  }
}

TEST_CASE("symmetric-ordered Hamiltonian") {
  // canonical: n + 1/2
  const FockOperator hm = manko_hamiltonian(RhoFamily::make("canonical"), 10);
  for (int n = 0; n + 1 < 10; ++n)
    CHECK(hm.entry(n, n).real() == doctest::Approx(n + 0.5).epsilon(1e-13));

  // bg kappa = 1: (n(n+1) + (n+1)(n+2))/2
  const RhoFamily bg = RhoFamily::make("bg", {{"kappa", 1.0}});
  const FockOperator hm_bg = manko_hamiltonian(bg, 10);
  for (int n = 0; n + 1 < 10; ++n) {
    const double expected = 0.5 * (n * (n + 1.0) + (n + 1.0) * (n + 2.0));
    CHECK(hm_bg.entry(n, n).real() == doctest::Approx(expected).epsilon(1e-13));
  }

  // difference against the normal-ordered form is (e(n+1) - e(n))/2
  for (const RhoFamily& family : roster()) {
    if (family.id() == "ll-paper" && family.base_offset() >= 1) continue;
    const int dim = 16;
    const FockOperator gap = manko_hamiltonian(family, dim) - hamiltonian(family, dim);
    double worst = 0.0;
    for (int n = 0; n + 1 < dim; ++n) {
      const double expected = 0.5 * (family.e(n + 1) - family.e(n));
      const double scale = std::max(1.0, std::abs(expected));
      worst = std::max(worst, std::abs(gap.entry(n, n).real() - expected) / scale);
    }
    INFO("family ", family.id());
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("commutator spectrum [A, A^dag] = e(n+1) - e(n) on the trust band") {
  for (const RhoFamily& family : roster()) {
    if (family.id() == "ll-paper" && family.base_offset() >= 1) continue;
    const int dim = 20;
    const FockOperator a = build_A(family, dim);
    const FockOperator comm = commutator(a, a.adjoint());
    double worst = 0.0;
    for (int n = 0; n + 2 < dim; ++n) {
      const double expected = family.e(n + 1) - family.e(n);
      const double scale = std::max(1.0, std::abs(expected));
      worst = std::max(worst, std::abs(comm.entry(n, n).real() - expected) / scale);
    }
    INFO("family ", family.id());
    CHECK(worst <= 1e-12);
  }
}
