#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace rlc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;  // false when some panel hit the depth limit
};

namespace detail {

struct SimpsonPanel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double simpson_refine(F& f, const SimpsonPanel& p, double eps, int depth, QuadratureResult& r) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  r.evaluations += 2;
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    if (depth <= 0 && std::abs(delta) > 15.0 * eps) r.converged = false;
    r.error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, eps / 2.0, depth - 1, r) +
         simpson_refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, eps / 2.0, depth - 1, r);
}

}  // namespace detail

/// Adaptive Simpson with interval bisection. The absolute tolerance is
/// rel_tol times a coarse composite-Simpson estimate of the integral, split
/// evenly over `panels` starting panels.
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double rel_tol = 1e-6, int max_depth = 48,
                                  int panels = 16) {
  QuadratureResult r;
  if (!(b > a)) return r;
  const double h = (b - a) / panels;
  std::vector<double> xs(2 * static_cast<std::size_t>(panels) + 1);
  std::vector<double> fx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = i + 1 == xs.size() ? b : a + 0.5 * h * static_cast<double>(i);
    fx[i] = f(xs[i]);
  }
  r.evaluations = xs.size();
  double coarse = 0.0;
  for (int p = 0; p < panels; ++p) {
    const std::size_t i = 2 * static_cast<std::size_t>(p);
    coarse += detail::simpson(xs[i], xs[i + 2], fx[i], fx[i + 1], fx[i + 2]);
  }
  const double eps = rel_tol * std::abs(coarse) / panels;
  for (int p = 0; p < panels; ++p) {
    const std::size_t i = 2 * static_cast<std::size_t>(p);
    const detail::SimpsonPanel panel{xs[i], xs[i + 1], xs[i + 2], fx[i], fx[i + 1], fx[i + 2],
                                     detail::simpson(xs[i], xs[i + 2], fx[i], fx[i + 1], fx[i + 2])};
    r.value += detail::simpson_refine(f, panel, eps, max_depth, r);
  }
  return r;
}

}  // namespace rlc
