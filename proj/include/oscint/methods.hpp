#ifndef OSCINT_METHODS_HPP
#define OSCINT_METHODS_HPP

#include <array>
#include <functional>
#include <string>

#include "oscint/rational.hpp"

namespace oscint {

// Weights of the h^2*f terms of a symmetric eight-step method,
// b_i = b_{-i}.  Second-order consistency fixes b0 + 2(b1+b2+b3+b4) = 5.
struct BCoefficients {
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;

  double full_sum() const { return b0 + 2.0 * (b1 + b2 + b3 + b4); }
  std::array<double, 5> as_array() const { return {b0, b1, b2, b3, b4}; }
};

// Solution-value weights of the eight-step family.  a4 multiplies the
// implicit y4 + y-4 pair; a0 is the (vanishing) center weight.
struct ACoefficients {
  double a0 = 0.0;
  double a1 = -1.0;
  double a2 = 2.0;
  double a3 = -2.0;
  double a4 = 1.0;

  double full_sum() const { return a0 + 2.0 * (a1 + a2 + a3 + a4); }
  std::array<double, 5> as_array() const { return {a0, a1, a2, a3, a4}; }
};

// Characteristic-equation coefficients A_j(v) = a_j + v^2 b_j of a
// symmetric 2k-step method applied to y'' = -w^2 y.  Entries above
// half_steps are zero.
struct StabilityPolys {
  int half_steps = 4;
  std::array<double, 5> A{};

  double A0() const { return A[0]; }
  double A1() const { return A[1]; }
  double A2() const { return A[2]; }
  double A3() const { return A[3]; }
  double A4() const { return A[4]; }
};

// Result of the log-log phase-lag fit.
struct PhaseLagReport {
  double order_estimate = 0;     // fitted exponent of |PL| minus 2
  double constant_estimate = 0;  // c in PL = -c v^(q+2)
  double fit_residual = 0;       // max |log sample - fitted line|
};

enum class BProviderKind {
  Constant,     // fixed rational weights
  PhaseFitted,  // b4(v) from the closed form, b0..b3 via the linear dependencies
  Custom        // caller-supplied b(v), double precision only
};

// A symmetric 2k-step method (k <= 4).  a holds a_0..a_k with a_k = 1;
// the b weights come from exact rationals, the phase-fitted closed form,
// or a plug-in callback.
struct MethodSpec {
  std::string name;
  int half_steps = 4;
  int stages = 1;
  std::array<double, 5> a{};
  BProviderKind kind = BProviderKind::Constant;
  std::array<Rational, 5> exact_b{};
  std::function<std::array<double, 5>(double)> custom_b;
  bool custom_frequency_dependent = false;

  bool frequency_dependent() const {
    if (kind == BProviderKind::PhaseFitted) return true;
    if (kind == BProviderKind::Custom) return custom_frequency_dependent;
    return false;
  }

  // b_0..b_k at the given v = w*h.  Throws DomainError outside the
  // coefficient domain of a phase-fitted method.
  std::array<double, 5> b(double v) const;
};

MethodSpec fixed_method();        // maximum algebraic order (ten), constant weights
MethodSpec phase_fitted_method(); // phase lag nullified at v = w*h
MethodSpec numerov_method();      // classical two-step baseline

// Tenth-algebraic-order coefficient set, evaluated as rationals.
BCoefficients fixed_b_coefficients();
std::array<Rational, 5> fixed_b_rationals();

// b0..b3 from the four linear dependencies on b4.
BCoefficients dependent_b_from_b4(double b4);

// Frequency-dependent b4 that nullifies the phase lag at v.  Valid for
// 0 < v < 2*pi*0.999; the closed form is 0/0 at v = 0 and blows up at
// v = 2*pi, so small v switches to an embedded Taylor series.
double phase_fitted_b4(double v);

// The two branches, exposed for cross-checking.  The series branch is
// defined at v = 0 (limit 45767/725760); the direct branch evaluates the
// closed form with extended-precision internals.
double phase_fitted_b4_series(double v);
double phase_fitted_b4_direct(double v);

inline constexpr double kB4SeriesSwitch = 0.25;
double phase_fitted_v_limit();  // 2*pi*0.999

StabilityPolys stability_polys(const MethodSpec& method, double v);

// The phase-lag expression N(v)/M(v): 2*sum_j A_j(v) cos(jv) + A_0(v) over
// sum_j 2 j^2 A_j(v).  Equals -c v^(q+2) + O(v^(q+4)) for a method of
// phase-lag order q.  Evaluated with extended-precision internals.
double phase_lag_value(const MethodSpec& method, double v);

// Least-squares fit of log|PL| against log v over v in [1e-2, 1e-1]
// (20 log-spaced points).  Throws IdenticallyZero when every sample sits
// at the evaluation noise floor (infinite phase-lag order).
PhaseLagReport estimate_phase_lag_order(const MethodSpec& method);

// Largest p such that the associated operator L annihilates all monomials
// x^0..x^(p+1).  at_v selects the coefficient set of a frequency-dependent
// method (0 = series limit).
int algebraic_order(const MethodSpec& method, double at_v = 0.0);

} // namespace oscint

#endif
