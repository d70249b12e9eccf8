#include "oscint/methods.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

using quad = __float128;

constexpr double kUpperVLimit = 2.0 * std::numbers::pi * 0.999;

inline quad q(Rational r) { return static_cast<quad>(r.num) / static_cast<quad>(r.den); }

// The four linear dependencies of b0..b3 on b4 that hold tenth algebraic order.
constexpr Rational kDepConst[4] = {
    {-12629, 3024}, {20483, 4032}, {-3937, 2016}, {17671, 12096}};
constexpr std::int64_t kDepSlope[4] = {70, -56, 28, -8};

// Taylor coefficients (even powers v^0..v^10) of the phase-fitted b4 about
// v = 0, exact rationals.  The direct closed form is 0/0 there; below the
// switch point it loses more digits to cancellation than the truncation of
// this series costs.
constexpr Rational kB4Series[6] = {
    {45767, 725760},
    {58061, 31933440},
    {2399921, 261534873600},
    {-602311, 298896998400},
    {-1067953, 7904165068800},
    {-29376529643, 5109094217170944000},
};

template <typename Real>
Real b4_series_eval(Real v) {
  const Real v2 = v * v;
  Real acc = static_cast<Real>(kB4Series[5].num) / static_cast<Real>(kB4Series[5].den);
  for (int i = 4; i >= 0; --i) {
    acc = static_cast<Real>(kB4Series[i].num) / static_cast<Real>(kB4Series[i].den) + v2 * acc;
  }
  return acc;
}

// Closed form b4 = -C/(24192 D) with C the cosine polynomial and
// D = v^2 (cos v - 1)^4.  Extended precision: C cancels down to O(v^10)
// while its terms stay O(10^4), so double internals would be hollowed out
// for moderate v.
quad b4_direct_eval(quad v) {
  const quad s = sinq(v / 2);
  const quad w = 2 * s * s;  // 1 - cos v, no cancellation
  const quad c = 1 - w;
  const quad v2 = v * v;
  const quad C = 24192 * c * c * c * c + (17671 * v2 - 24192) * c * c * c -
                 (12096 + 11811 * v2) * c * c + (15120 + 2109 * v2) * c -
                 409 * v2 - 3024;
  const quad D = v2 * w * w * w * w;
  return -C / (24192 * D);
}

quad b4_quad(quad v) {
  return v < static_cast<quad>(kB4SeriesSwitch) ? b4_series_eval<quad>(v) : b4_direct_eval(v);
}

void check_b4_domain(double v, bool allow_zero = false) {
  if (!(v > 0.0) && !(allow_zero && v == 0.0)) {
    throw DomainError("phase-fitted b4: v = w*h must be positive");
  }
  if (!(v < kUpperVLimit)) {
    throw DomainError("phase-fitted b4: v = w*h too close to 2*pi; reduce the step size");
  }
}

std::array<quad, 5> b_quad(const MethodSpec& m, quad v) {
  std::array<quad, 5> b{};
  switch (m.kind) {
    case BProviderKind::Constant:
      for (int j = 0; j <= m.half_steps; ++j) b[j] = q(m.exact_b[j]);
      break;
    case BProviderKind::PhaseFitted: {
      check_b4_domain(static_cast<double>(v), /*allow_zero=*/true);
      const quad b4 = b4_quad(v);
      for (int j = 0; j < 4; ++j) b[j] = kDepSlope[j] * b4 + q(kDepConst[j]);
      b[4] = b4;
      break;
    }
    case BProviderKind::Custom: {
      const auto bd = m.custom_b(static_cast<double>(v));
      for (int j = 0; j <= m.half_steps; ++j) b[j] = bd[j];
      break;
    }
  }
  return b;
}

struct PhaseLagSample {
  double value;
  double noise;  // evaluation noise floor of the cancelled numerator
};

PhaseLagSample phase_lag_sample(const MethodSpec& m, double v) {
  const quad vq = v;
  const auto b = b_quad(m, vq);
  const int k = m.half_steps;

  quad numer = 0, denom = 0, magnitude = 0;
  for (int j = k; j >= 1; --j) {
    const quad Aj = static_cast<quad>(m.a[j]) + vq * vq * b[j];
    const quad term = 2 * Aj * cosq(j * vq);
    numer += term;
    magnitude = std::max(magnitude, fabsq(term));
    denom += 2 * j * j * Aj;
  }
  const quad A0 = static_cast<quad>(m.a[0]) + vq * vq * b[0];
  numer += A0;
  magnitude = std::max(magnitude, fabsq(A0));

  if (fabsq(denom) < static_cast<quad>(1e-300)) {
    throw DegenerateDenominator("phase lag: characteristic denominator vanished");
  }
  const double eps = (m.kind == BProviderKind::Custom) ? 2.22e-16 : 1.93e-34;
  return {static_cast<double>(numer / denom),
          static_cast<double>(magnitude / fabsq(denom)) * eps * 8};
}

}  // namespace

std::array<double, 5> MethodSpec::b(double v) const {
  const auto bq = b_quad(*this, static_cast<quad>(v));
  std::array<double, 5> out{};
  for (int j = 0; j <= half_steps; ++j) out[j] = static_cast<double>(bq[j]);
  return out;
}

MethodSpec fixed_method() {
  MethodSpec m;
  m.name = "fixed";
  m.half_steps = 4;
  m.a = {0, -1, 2, -2, 1};
  m.kind = BProviderKind::Constant;
  m.exact_b = fixed_b_rationals();
  return m;
}

MethodSpec phase_fitted_method() {
  MethodSpec m;
  m.name = "phase-fitted";
  m.half_steps = 4;
  m.a = {0, -1, 2, -2, 1};
  m.kind = BProviderKind::PhaseFitted;
  return m;
}

MethodSpec numerov_method() {
  MethodSpec m;
  m.name = "numerov";
  m.half_steps = 1;
  m.a = {-2, 1, 0, 0, 0};
  m.kind = BProviderKind::Constant;
  m.exact_b = {Rational{5, 6}, Rational{1, 12}};
  return m;
}

std::array<Rational, 5> fixed_b_rationals() {
  return {Rational{17273, 72576}, Rational{280997, 181440}, Rational{-33961, 181440},
          Rational{173531, 181440}, Rational{45767, 725760}};
}

BCoefficients fixed_b_coefficients() {
  const auto r = fixed_b_rationals();
  return {r[0].to_double(), r[1].to_double(), r[2].to_double(), r[3].to_double(),
          r[4].to_double()};
}

BCoefficients dependent_b_from_b4(double b4) {
  if (!std::isfinite(b4)) throw std::invalid_argument("dependent_b_from_b4: b4 not finite");
  BCoefficients b;
  b.b0 = 70.0 * b4 + kDepConst[0].to_double();
  b.b1 = -56.0 * b4 + kDepConst[1].to_double();
  b.b2 = 28.0 * b4 + kDepConst[2].to_double();
  b.b3 = -8.0 * b4 + kDepConst[3].to_double();
  b.b4 = b4;
  return b;
}

double phase_fitted_v_limit() { return kUpperVLimit; }

double phase_fitted_b4(double v) {
  check_b4_domain(v);
  if (v < kB4SeriesSwitch) return b4_series_eval<double>(v);
  return static_cast<double>(b4_direct_eval(static_cast<quad>(v)));
}

double phase_fitted_b4_series(double v) {
  if (!(v >= 0.0)) throw DomainError("phase-fitted b4 series: v must be nonnegative");
  return b4_series_eval<double>(v);
}

double phase_fitted_b4_direct(double v) {
  check_b4_domain(v);
  return static_cast<double>(b4_direct_eval(static_cast<quad>(v)));
}

StabilityPolys stability_polys(const MethodSpec& method, double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("stability_polys: v must be nonnegative");
  const auto b = method.b(v);
  StabilityPolys p;
  p.half_steps = method.half_steps;
  for (int j = 0; j <= method.half_steps; ++j) p.A[j] = method.a[j] + v * v * b[j];
  return p;
}

double phase_lag_value(const MethodSpec& method, double v) {
  if (!(v > 0.0)) throw std::invalid_argument("phase_lag_value: v must be positive");
  return phase_lag_sample(method, v).value;
}

PhaseLagReport estimate_phase_lag_order(const MethodSpec& method) {
  constexpr int n = 20;
  constexpr double lo = 1e-2, hi = 1e-1;

  std::vector<double> logv(n), logpl(n);
  double sign_sum = 0;
  bool all_zero = true;
  for (int i = 0; i < n; ++i) {
    const double v = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    const auto s = phase_lag_sample(method, v);
    // "zero" means indistinguishable from the cancellation noise of the
    // evaluation itself; the absolute 1e-13 cap alone cannot separate a
    // phase-fitted method from a high-order one on this window.
    if (std::fabs(s.value) > 1e-13 || std::fabs(s.value) > 64.0 * s.noise) all_zero = false;
    logv[i] = std::log(v);
    logpl[i] = std::log(std::max(std::fabs(s.value), 1e-320));
    sign_sum += (s.value > 0) - (s.value < 0);
  }
  if (all_zero) {
    throw IdenticallyZero("phase lag vanishes over the whole window: infinite order");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += logv[i];
    sy += logpl[i];
    sxx += logv[i] * logv[i];
    sxy += logv[i] * logpl[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;

  PhaseLagReport rep;
  rep.order_estimate = slope - 2.0;
  // PL = -c v^(q+2): the fitted magnitude is |c|, the sign comes from the samples.
  rep.constant_estimate = (sign_sum >= 0 ? -1.0 : 1.0) * std::exp(intercept);
  rep.fit_residual = 0;
  for (int i = 0; i < n; ++i) {
    rep.fit_residual =
        std::max(rep.fit_residual, std::fabs(logpl[i] - (slope * logv[i] + intercept)));
  }
  return rep;
}

int algebraic_order(const MethodSpec& method, double at_v) {
  const auto b = method.b(at_v);
  const int k = method.half_steps;

  // L applied to x^p at x = 0, h = 1 over nodes i = -k..k:
  //   L_p = sum_i a_i i^p - p(p-1) sum_i b_i i^(p-2)
  auto l_vanishes = [&](int p) {
    double sum = 0, scale = 0;
    for (int i = -k; i <= k; ++i) {
      const double ai = method.a[std::abs(i)];
      const double bi = b[std::abs(i)];
      const double ip = (p == 0) ? 1.0 : std::pow(static_cast<double>(i), p);
      double term = ai * ip;
      sum += term;
      scale = std::max(scale, std::fabs(term));
      if (p >= 2) {
        const double ipm2 = (p == 2) ? 1.0 : std::pow(static_cast<double>(i), p - 2);
        term = static_cast<double>(p) * (p - 1) * bi * ipm2;
        sum -= term;
        scale = std::max(scale, std::fabs(term));
      }
    }
    return std::fabs(sum) < 1e-9 * std::max(scale, 1.0);
  };

  int p = 0;
  while (p <= 40 && l_vanishes(p)) ++p;
  return p - 2;  // L vanished through x^(p-1) = x^(order+1)
}

}  // namespace oscint
