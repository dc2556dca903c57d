#include <doctest.h>

#include <cmath>

#include "nlcs/analysis.hpp"
#include "nlcs/error.hpp"
#include "nlcs/json_io.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/quadrature.hpp"
#include "roster.hpp"

using namespace nlcs;
using nlcs_tests::roster;

TEST_CASE("eigen residual") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  const VerificationReport ok =
      eigen_residual(cs_series(canonical, Complex(1.0, 0.0)));
  CHECK(ok.passed);
  CHECK(ok.residual <= 1e-10);

  const VerificationReport g =
      eigen_residual(cs_series(RhoFamily::make("kps-g"), Complex(1.5, 0.0)));
  CHECK(g.residual <= 1e-8);

  // a deliberately truncated space leaves a visible defect
  StateOptions short_dim;
  short_dim.dim = 5;
  short_dim.force = true;
  const VerificationReport bad =
      eigen_residual(cs_series(canonical, Complex(2.0, 0.0), short_dim));
  CHECK(bad.residual > 1e-2);
  CHECK_FALSE(bad.passed);

  CHECK_THROWS_AS(eigen_residual(gk_state(canonical, 0.5, 0.1)), Error);
}

TEST_CASE("h4 algebra closes") {
  const VerificationReport canonical =
      h4_check(RhoFamily::make("canonical"), 50);
  CHECK(canonical.residual <= 2e-14);  // sqrt(n)^2 rounding only

  CHECK(h4_check(RhoFamily::make("bg", {{"kappa", 2.0}}), 50).residual <= 1e-12);
  CHECK(h4_check(RhoFamily::make("ll-action", {{"alpha", 0.5}, {"m", 1.0}}), 40)
            .residual <= 1e-12);
  CHECK_THROWS_AS(h4_check(RhoFamily::make("canonical"), 3), Error);
}

TEST_CASE("discrete-series ladder checks") {
  CHECK(su11_check(1.5, 50).passed);
  CHECK(su11_check(1.0, 50).passed);
  CHECK(su11_check(2.0, 50).residual <= 1e-12);
  CHECK(su11_check(1.5, 50).notes.find("2(n+kappa)") != std::string::npos);

  // spot values behind the residual
  const RhoFamily bg = RhoFamily::make("bg", {{"kappa", 1.5}});
  const FockOperator a = build_A(bg, 10);
  CHECK(a.adjoint().entry(2, 1).real() ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-13));  // raise |1> -> sqrt(8)|2>
  const FockOperator comm = commutator(a, a.adjoint());
  CHECK(comm.entry(2, 2).real() == doctest::Approx(7.0).epsilon(1e-12));

  const RhoFamily bg1 = RhoFamily::make("bg", {{"kappa", 1.0}});
  const FockOperator b = build_B(bg1, 10);
  const FockOperator comm_b = commutator(b, b.adjoint());
  CHECK(comm_b.entry(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("action identity holds with the normal-ordered Hamiltonian only") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  CHECK(action_identity(canonical, 0.0, 0.3).residual <= 1e-14);
  CHECK(action_identity(canonical, 1.0, 0.3).residual <= 1e-10);

  const RhoFamily kps_f = RhoFamily::make("kps-f");
  CHECK(action_identity(kps_f, 0.5, 0.9).residual <= 1e-8);

  const VerificationReport manko = action_identity(
      kps_f, 0.5, 0.9, {}, WhichHamiltonian::Manko);
  CHECK(manko.residual > 0.4);
  CHECK_FALSE(manko.passed);

  // oracle: <H_M> - J = <e(n+1) - e(n)>/2 by direct summation
  const CoherentState state = gk_state(kps_f, 0.5, 0.9);
  double gap = 0.0;
  for (int n = 0; n + 1 < state.dim(); ++n) {
    const double p = std::norm(state.vector().amp(n));
    gap += 0.5 * (kps_f.e(n + 1) - kps_f.e(n)) * p;
  }
  CHECK(manko.residual == doctest::Approx(gap).epsilon(1e-8));
}

TEST_CASE("temporal stability") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  CHECK(temporal_stability(canonical, 1.0, 0.0, 0.0).residual == 0.0);
  CHECK(temporal_stability(canonical, 1.0, 0.0, M_PI).residual <= 1e-12);
  CHECK(temporal_stability(RhoFamily::make("bg", {{"kappa", 2.0}}), 0.8, 1.3, 2.7)
            .residual <= 1e-12);
}

TEST_CASE("Mandel Q") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  for (const double z : {0.5, 1.0, 2.0}) {
    const double q = mandel_q(cs_series(canonical, Complex(z, 0.0)));
    CHECK(std::abs(q) <= 1e-10);  // Poissonian
  }

  // vacuum: 0 by convention, with a note
  std::string note;
  CHECK(mandel_q(cs_series(canonical, Complex(0.0, 0.0)), &note) == 0.0);
  CHECK(note.find("vacuum") != std::string::npos);

  // two-level state: Q = -p1 exactly
  StateOptions two_level;
  two_level.dim = 2;
  two_level.force = true;
  const CoherentState qubit =
      cs_series(dual_of(RhoFamily::make("kps-e")), Complex(0.05, 0.0), two_level);
  const double p1 = std::norm(qubit.vector().amp(1));
  const double q2 = mandel_q(qubit);
  CHECK(q2 < 0.0);
  CHECK(q2 == doctest::Approx(-p1).epsilon(1e-12));

  // (n!)^2 family is sub-Poissonian; direct summation oracle
  const CoherentState sub = cs_series(RhoFamily::make("kps-e"), Complex(1.0, 0.0));
  double norm_sum = 0.0;
  double mean = 0.0;
  double second = 0.0;
  double factorial = 1.0;
  for (int n = 0; n < sub.dim(); ++n) {
    if (n > 0) factorial *= n;
    const double w = 1.0 / (factorial * factorial);
    norm_sum += w;
    mean += n * w;
    second += static_cast<double>(n) * n * w;
  }
  mean /= norm_sum;
  second /= norm_sum;
  const double expected = (second - mean * mean) / mean - 1.0;
  const double q = mandel_q(sub);
  CHECK(q < 0.0);
  CHECK(q == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("moment condition checks") {
  // canonical: integral x^n e^{-x} = n!
  const VerificationReport canonical =
      moment_check(RhoFamily::make("canonical"), std::nullopt, 15, 1e-8);
  CHECK(canonical.passed);
  CHECK(canonical.residual <= 1e-8);

  // single pinned value: integral x^5 e^{-x} = 120
  const QuadratureResult direct = integrate_exponential(
      [](double x) { return std::pow(x, 5) * std::exp(-x); }, 1e-9);
  CHECK(direct.converged);
  CHECK(direct.value == doctest::Approx(120.0).epsilon(1e-8));

  // compact weights against the analytic antiderivative oracles
  const VerificationReport da =
      moment_check(RhoFamily::make("kps-da"), std::nullopt, 15, 1e-8);
  CHECK(da.passed);
  const QuadratureResult da3 = integrate_adaptive(
      [](double x) { return std::pow(x, 3) * 2.0 * x; }, 0.0, 1.0, 1e-10);
  CHECK(da3.value == doctest::Approx(2.0 / 5.0).epsilon(1e-10));  // 2/(n+2)

  const VerificationReport db =
      moment_check(RhoFamily::make("kps-db"), std::nullopt, 15, 1e-8);
  CHECK(db.passed);
  const QuadratureResult db2 = integrate_adaptive(
      [](double x) { return std::pow(x, 2) * 6.0 * x * (1.0 - x); }, 0.0, 1.0,
      1e-10);
  CHECK(db2.value == doctest::Approx(0.3).epsilon(1e-10));  // 6/((n+2)(n+3))

  // families without a weight are inconclusive, which is not a failure
  const VerificationReport none =
      moment_check(RhoFamily::make("kps-e"), std::nullopt, 15, 1e-8);
  CHECK(none.passed);
  CHECK(none.notes.find("inconclusive") != std::string::npos);

  // a user-supplied weight: x^n moments of 1/(2 sqrt(x)) are 1/(2n+1); the
  // endpoint singularity defeats the panel rule and reports inconclusive
  const RhoFamily stieltjes = RhoFamily::from_table({1.0, 1.0 / 3.0, 0.2});
  const WeightSpec singular{"1/(2 sqrt(x)) on [0, 1]", 1.0,
                            [](double x) { return 0.5 / std::sqrt(x); },
                            WeightSpec::Decay::CompactPolynomial};
  const VerificationReport rough = moment_check(stieltjes, singular, 2, 1e-10);
  CHECK(rough.notes.find("inconclusive") != std::string::npos);

  CHECK_THROWS_AS(moment_check(RhoFamily::make("canonical"), std::nullopt, 21, 1e-8),
                  Error);
}

TEST_CASE("expectation values") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  const CoherentState three{
      canonical, Complex(0.0, 0.0), FockVector::basis(6, 3), 0.0, Method::Series};
  CHECK(expectation(three, make_number(6)).real() == doctest::Approx(3.0));
  CHECK(expectation(three, FockOperator::identity(6)).real() ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(expectation(three, make_number(7)), Error);

  // <A^dag A> = |z|^2 for every family, cross-checked by direct summation
  for (const RhoFamily& family : roster()) {
    if (family.id() == "ll-paper" && family.base_offset() >= 1) continue;
    const Complex z = label_grid(family)[2];
    const CoherentState state = cs_series(family, z);
    const FockOperator h = hamiltonian(family, state.dim());
    const double value = expectation(state, h).real();
    INFO("family ", family.id());
    CHECK(std::abs(value - std::norm(z)) <= 1e-8);
    double direct = 0.0;
    for (int n = 0; n < state.dim(); ++n)
      direct += family.e(n) * std::norm(state.vector().amp(n));
    CHECK(value == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("verification suites") {
  const RhoFamily canonical = RhoFamily::make("canonical");
  const SuiteConfig config;

  const auto all = run_suite(canonical, "all", config);
  CHECK(all.size() > 50);
  for (const VerificationReport& report : all) {
    INFO(report.check_id, " residual ", report.residual);
    CHECK(report.passed);
  }
  // canonical order
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].check_id <= all[i].check_id);

  // single suites run and pass for a deformed family
  const RhoFamily bg = RhoFamily::make("bg", {{"kappa", 1.5}});
  for (const char* suite : {"eigen", "routes", "dual", "algebra", "gk"}) {
    const auto reports = run_suite(bg, suite, config);
    CHECK_FALSE(reports.empty());
    for (const VerificationReport& report : reports) {
      INFO(suite, ": ", report.check_id, " residual ", report.residual);
      CHECK(report.passed);
    }
  }

  // bitwise determinism of the serialized reports
  const std::string first = reports_to_json(run_suite(bg, "all", config));
  const std::string second = reports_to_json(run_suite(bg, "all", config));
  CHECK(first == second);

  CHECK_THROWS_AS(run_suite(canonical, "bogus", config), Error);
}
