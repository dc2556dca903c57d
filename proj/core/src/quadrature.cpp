#include "nlcs/quadrature.hpp"

#include <array>
#include <cmath>

namespace nlcs {

namespace {

constexpr int kNodes = 16;

struct Rule {
  std::array<double, kNodes> x;  // nodes on [-1, 1]
  std::array<double, kNodes> w;
};

/// Legendre P_16 nodes by Newton iteration on the three-term recurrence.
Rule make_rule() {
  Rule rule{};
  const int n = kNodes;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(i)] = x;
    rule.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double composite(const std::function<double(double)>& f, double a, double b,
                 int panels) {
  const Rule& r = rule();
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double panel_sum = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      panel_sum += r.w[static_cast<std::size_t>(i)] *
                   f(mid + 0.5 * h * r.x[static_cast<std::size_t>(i)]);
    }
    sum += 0.5 * h * panel_sum;
  }
  return sum;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    int max_doublings) {
  int panels = 1;
  double prev = composite(f, a, b, panels);
  for (int step = 0; step < max_doublings; ++step) {
    panels *= 2;
    const double next = composite(f, a, b, panels);
    const double scale = std::max(std::abs(next), 1e-300);
    if (std::abs(next - prev) <= rel_tol * scale)
      return {next, true, panels};
    prev = next;
  }
  return {prev, false, panels};
}

QuadratureResult integrate_exponential(const std::function<double(double)>& f,
                                       double rel_tol, double first_segment,
                                       int max_segments) {
  double lo = 0.0;
  double hi = first_segment;
  double total = 0.0;
  int panels = 0;
  for (int seg = 0; seg < max_segments; ++seg) {
    const QuadratureResult part = integrate_adaptive(f, lo, hi, rel_tol / 10.0);
    if (!part.converged) return {total + part.value, false, part.panels};
    total += part.value;
    panels = part.panels;
    if (std::abs(part.value) <= rel_tol / 10.0 * std::max(std::abs(total), 1e-300))
      return {total, true, panels};
    lo = hi;
    hi *= 2.0;
  }
  return {total, false, panels};
}

}  // namespace nlcs
