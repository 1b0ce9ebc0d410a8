#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rlc/error.hpp"
#include "rlc/quadrature.hpp"

namespace rlc {

struct ThresholdQuery {
  double n = 0;
  double delta = 0;
  std::uint32_t k = 0;
  std::optional<double> m;
  std::optional<double> g;
};

struct GeneralThreshold {
  double m_growth = 0;  // n^{1/k^2} * delta^{1/k}
  double m_floor = 0;   // 3 k^2 delta
};

struct HFreeThreshold {
  double upper_growth = 0;  // n^{2/(k(g+1))} * delta^{2g/(k(g+1))}
  double lower_growth = 0;  // n^{1/(k(g+1))} * delta^{g/(k(g+1))}
  double m_floor = 0;
};

namespace detail {

inline void check_query(const ThresholdQuery& q) {
  detail::require(q.n >= 1, "n must be >= 1");
  detail::require(q.delta >= 1 && q.delta < q.n, "delta must satisfy 1 <= delta < n");
  detail::require(q.k >= 1, "k must be >= 1");
}

}  // namespace detail

inline GeneralThreshold threshold_general(const ThresholdQuery& q) {
  detail::check_query(q);
  const double k = q.k;
  return {std::exp(std::log(q.n) / (k * k) + std::log(q.delta) / k), 3.0 * k * k * q.delta};
}

inline HFreeThreshold threshold_hfree(const ThresholdQuery& q) {
  detail::check_query(q);
  detail::require(q.g.has_value() && *q.g >= 1, "g must be >= 1");
  const double k = q.k;
  const double g = *q.g;
  const double lower_log = (std::log(q.n) + g * std::log(q.delta)) / (k * (g + 1));
  return {std::exp(2 * lower_log), std::exp(lower_log), 3.0 * k * k * q.delta};
}

/// Size cap on dangerous components that holds a.a.s.: 20 log n.
inline double component_order_cap(double n) { return 20.0 * std::log(n); }

/// n (e delta)^a (k^2/m)^a, the union bound on a connected dangerous
/// component of order a. Evaluated in log space.
inline double component_tail_bound(double n, double delta, double k, double m, double a) {
  detail::require(m >= 1, "m must be >= 1");
  detail::require(a >= 0, "a must be >= 0");
  if (a == 0) return n;
  return std::exp(std::log(n) + a * (1.0 + std::log(delta) + 2.0 * std::log(k) - std::log(m)));
}

struct GadgetProbability {
  using Real = boost::multiprecision::cpp_bin_float_100;
  using Rational = boost::multiprecision::cpp_rational;

  std::uint64_t copies = 0;
  boost::multiprecision::cpp_int subsets;  // C(m, k)
  Real q_copy = 0;
  Real p_bad_exists = 0;
  Real colourable_upper = 1;
  // Present when the value was computed in exact rational arithmetic.
  std::optional<Rational> exact_q_copy;
  std::optional<Rational> exact_p_bad_exists;
  std::optional<Rational> exact_colourable_upper;

  bool exact() const noexcept { return exact_q_copy.has_value(); }
  double q() const { return static_cast<double>(q_copy); }
  double p_bad() const { return static_cast<double>(p_bad_exists); }
  double colourable() const { return static_cast<double>(colourable_upper); }
};

namespace detail {

inline boost::multiprecision::cpp_int binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  boost::multiprecision::cpp_int c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= m - k + i;
    c /= i;
  }
  return c;
}

template <class T>
T power(T base, std::uint64_t e) {
  T out = 1;
  while (e != 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return out;
}

}  // namespace detail

/// Probability that a copy of the d-blow-up is bad, that some copy among
/// floor(n/delta) is bad, and the resulting upper bound on P(colourable).
/// Exact rationals are used while C(m,k) <= 10^6 and the result stays below
/// `max_exact_bits` bits of denominator; otherwise 100-digit binary floats.
inline GadgetProbability gadget_probability(std::uint64_t n, std::uint64_t delta, std::uint64_t k, std::uint64_t m,
                                            std::uint64_t d, std::uint64_t order_g0,
                                            std::uint64_t max_exact_bits = std::uint64_t{1} << 18) {
  using Real = GadgetProbability::Real;
  using Rational = GadgetProbability::Rational;
  detail::require(k >= 1, "k must be >= 1");
  detail::require(k <= m, "k must not exceed m");
  detail::require(delta >= 1, "delta must be >= 1");
  GadgetProbability out;
  out.copies = n / delta;
  detail::require(out.copies >= 1, "need at least one copy (n >= delta)");
  out.subsets = detail::binomial(m, k);

  const double bits = std::log2(static_cast<double>(out.subsets)) * static_cast<double>(d) *
                      static_cast<double>(order_g0) * static_cast<double>(out.copies);
  if (out.subsets <= 1000000 && bits <= static_cast<double>(max_exact_bits)) {
    const Rational miss = detail::power(Rational(1) - Rational(1, out.subsets), d);
    const Rational q = detail::power(Rational(1) - miss, order_g0);
    const Rational col = detail::power(Rational(1) - q, out.copies);
    out.exact_q_copy = q;
    out.exact_colourable_upper = col;
    out.exact_p_bad_exists = Rational(1) - col;
    auto to_real = [](const Rational& x) {
      return Real(boost::multiprecision::numerator(x)) / Real(boost::multiprecision::denominator(x));
    };
    out.q_copy = to_real(q);
    out.colourable_upper = to_real(col);
    out.p_bad_exists = to_real(*out.exact_p_bad_exists);
    return out;
  }
  const Real p = Real(1) / Real(out.subsets);
  const Real miss = boost::multiprecision::exp(Real(d) * boost::math::log1p(-p));
  out.q_copy = boost::multiprecision::pow(Real(1) - miss, Real(order_g0));
  const Real log_col = Real(out.copies) * boost::math::log1p(-out.q_copy);
  out.colourable_upper = boost::multiprecision::exp(log_col);
  out.p_bad_exists = -boost::math::expm1(log_col);
  return out;
}

struct Claim2Ratio {
  double exact_ratio = 0;  // f(i+1)/f(i)
  double upper_bound = 0;  // e^{k+1} k^k delta (i+1)^k / m^{k/2}
  double log_exact = 0;
  double log_upper = 0;
  bool within_upper = false;
};

/// log f(i) with f(i) = n (e delta)^{i-1} (k i)^{k i} m^{-i k/2}.
inline double claim2_log_term(double n, double delta, double k, double m, double i) {
  return std::log(n) + (i - 1) * (1.0 + std::log(delta)) + k * i * std::log(k * i) - 0.5 * i * k * std::log(m);
}

inline Claim2Ratio claim2_ratio(double n, double delta, double k, double m, double i) {
  detail::require(i >= 1, "i must be >= 1");
  detail::require(k >= 1 && m >= 1 && delta >= 1 && n >= 1, "n, delta, k, m must be >= 1");
  (void)n;  // cancels in the ratio
  Claim2Ratio r;
  // e delta k^k (i+1)^k ((i+1)/i)^{k i} / m^{k/2}
  r.log_exact = 1.0 + std::log(delta) + k * std::log(k) + k * std::log(i + 1) + k * i * std::log1p(1.0 / i) -
                0.5 * k * std::log(m);
  r.log_upper = (k + 1) + k * std::log(k) + std::log(delta) + k * std::log(i + 1) - 0.5 * k * std::log(m);
  r.exact_ratio = std::exp(r.log_exact);
  r.upper_bound = std::exp(r.log_upper);
  r.within_upper = r.log_exact <= r.log_upper;
  return r;
}

struct IntegralQuery {
  double s = 2;
  double n = 2;
  double alpha = 0.5;
  double beta = 1;
};

struct IntegralCheck {
  double quadrature_value = 0;
  double closed_form = 0;
  double gamma_s = 0;  // 1 - alpha - beta/log s
  bool holds = false;
  QuadratureResult quadrature;
};

/// Integral of x^{-alpha} (log x)^{-beta} over [s, n] by adaptive Simpson
/// against (1 - alpha - beta/log s)^{-1} n^{1-alpha} (log n)^{-beta}. The
/// quadrature runs in t = log x, where the integrand e^{(1-alpha)t} t^{-beta}
/// is smooth over the many decades of x.
inline IntegralCheck integral_bound_check(const IntegralQuery& q, double rel_tol = 1e-6) {
  detail::require(q.s >= 2 && q.n >= q.s, "need n >= s >= 2");
  detail::require(q.alpha > 0 && q.alpha < 1, "alpha must lie in (0,1)");
  detail::require(q.beta > 0, "beta must be > 0");
  IntegralCheck r;
  r.gamma_s = 1.0 - q.alpha - q.beta / std::log(q.s);
  if (!(r.gamma_s > 0)) throw InvalidArgument("bound inapplicable: 1 - alpha - beta/log s <= 0");
  const double ln = std::log(q.n);
  r.closed_form = std::exp((1.0 - q.alpha) * ln - q.beta * std::log(ln)) / r.gamma_s;
  const double a = q.alpha, b = q.beta;
  r.quadrature = adaptive_simpson([a, b](double t) { return std::exp((1.0 - a) * t - b * std::log(t)); },
                                  std::log(q.s), ln, rel_tol);
  r.quadrature_value = r.quadrature.value;
  r.holds = r.quadrature_value <= r.closed_form;
  return r;
}

}  // namespace rlc
