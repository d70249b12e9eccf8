#include "oscint/problems.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "oscint/errors.hpp"

namespace oscint {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLongInterval = 1000.0 * kPi;
}  // namespace

IvpProblem franco_palacios() {
  constexpr double eps = 0.001;
  constexpr double psi = 0.01;
  IvpProblem p;
  p.name = "franco-palacios";
  p.dimension = 2;
  p.x_start = 0;
  p.x_end = kLongInterval;
  p.y0 = {1.0, 0.0};
  p.y0_prime = {0.0, 1.0};
  p.rhs = [](double x, const Vec& y) -> Vec {
    return {-y[0] + eps * std::cos(psi * x), -y[1] + eps * std::sin(psi * x)};
  };
  p.exact = [](double x) -> Vec {
    constexpr double d = 1.0 - psi * psi;
    return {(1.0 - eps - psi * psi) / d * std::cos(x) + eps / d * std::cos(psi * x),
            (1.0 - eps * psi - psi * psi) / d * std::sin(x) + eps / d * std::sin(psi * x)};
  };
  p.frequency = [](double, const Vec&) { return 1.0; };
  p.linear_in_y = true;
  p.lambda_of_x = [](double) { return -1.0; };
  return p;
}

IvpProblem inhomogeneous() {
  IvpProblem p;
  p.name = "inhomogeneous";
  p.dimension = 1;
  p.x_start = 0;
  p.x_end = kLongInterval;
  p.y0 = {1.0};
  p.y0_prime = {11.0};
  p.rhs = [](double t, const Vec& y) -> Vec { return {-100.0 * y[0] + 99.0 * std::sin(t)}; };
  p.exact = [](double t) -> Vec {
    return {std::sin(t) + std::sin(10.0 * t) + std::cos(10.0 * t)};
  };
  p.frequency = [](double, const Vec&) { return 10.0; };
  p.linear_in_y = true;
  p.lambda_of_x = [](double) { return -100.0; };
  return p;
}

IvpProblem two_body() {
  IvpProblem p;
  p.name = "two-body";
  p.dimension = 2;
  p.x_start = 0;
  p.x_end = kLongInterval;
  p.y0 = {1.0, 0.0};
  p.y0_prime = {0.0, 1.0};
  p.rhs = [](double, const Vec& y) -> Vec {
    const double r2 = y[0] * y[0] + y[1] * y[1];
    const double r3 = r2 * std::sqrt(r2);
    return {-y[0] / r3, -y[1] / r3};
  };
  p.exact = [](double t) -> Vec { return {std::cos(t), std::sin(t)}; };
  p.frequency = [](double, const Vec& y) {
    return std::pow(y[0] * y[0] + y[1] * y[1], -0.75);
  };
  return p;
}

IvpProblem duffing() {
  IvpProblem p;
  p.name = "duffing";
  p.dimension = 1;
  p.x_start = 0;
  p.x_end = kLongInterval;
  p.y0 = {0.200426728067};
  p.y0_prime = {0.0};
  p.rhs = [](double t, const Vec& y) -> Vec {
    return {-y[0] - y[0] * y[0] * y[0] + 0.002 * std::cos(1.01 * t)};
  };
  // four-term reference series; its own truncation floor is ~1e-10
  p.exact = [](double t) -> Vec {
    return {0.200179477536 * std::cos(1.01 * t) + 2.46946143e-4 * std::cos(3.03 * t) +
            3.04014e-7 * std::cos(5.05 * t) + 3.74e-10 * std::cos(7.07 * t)};
  };
  p.frequency = [](double, const Vec&) { return 1.0; };
  return p;
}

double woods_saxon(double x, const WoodsSaxonParams& params) {
  const double t = (x - params.x0) / params.a;
  if (t <= 0) {
    const double q = std::exp(t);
    const double den = 1.0 + q;
    return params.u0 / den + params.u1 * q / (den * den);
  }
  // reciprocal form for x far beyond the well radius: V -> 0 instead of inf/inf
  const double e = std::exp(-t);
  const double den = 1.0 + e;
  return params.u0 * e / den + params.u1 * e / (den * den);
}

std::vector<ResonanceCase> resonance_cases() {
  return {{989.701916, 0}, {341.495874, 0}, {163.215341, 0}};
}

IvpProblem schrodinger_problem(const ResonanceCase& rc) {
  if (!(rc.energy > 50.0)) {
    throw std::invalid_argument("schrodinger_problem: need E > 50 for the Ixaru-Rizea rule");
  }
  const double energy = rc.energy;
  IvpProblem p;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "schrodinger-%d", static_cast<int>(energy));
  p.name = buf;
  p.dimension = 1;
  p.x_start = 0;
  p.x_end = 15;
  p.y0 = {0.0};
  p.y0_prime = {1.0};  // any nonzero slope: phase shift is scale invariant
  p.rhs = [energy](double x, const Vec& y) -> Vec {
    return {(woods_saxon(x) - energy) * y[0]};
  };
  // Ixaru-Rizea frequency rule; x <= 6.5 belongs to the well branch
  p.frequency = [energy](double x, const Vec&) {
    return x <= 6.5 ? std::sqrt(energy - 50.0) : std::sqrt(energy);
  };
  p.linear_in_y = true;
  p.lambda_of_x = [energy](double x) { return woods_saxon(x) - energy; };
  p.scale_free_start = true;
  return p;
}

PhaseShiftResult phase_shift(const Trajectory& traj, const ResonanceCase& rc,
                             long i, long j) {
  if (!(i < j)) throw std::invalid_argument("phase_shift: need i < j");
  if (j >= traj.n_points()) throw std::invalid_argument("phase_shift: j out of range");
  const double xi = traj.x(i);
  const double xj = traj.x(j);
  if (xi < 10.0) {
    throw std::invalid_argument("phase_shift: samples must lie in the asymptotic region");
  }

  const double k = rc.k();
  const double yi = traj.y(i)[0];
  const double yj = traj.y(j)[0];
  // l = 0 free solutions: S(x) = k x j0(k x) = sin(k x),
  //                       C(x) = k x n0(k x) = -cos(k x)
  const double Si = std::sin(k * xi), Sj = std::sin(k * xj);
  const double Ci = -std::cos(k * xi), Cj = -std::cos(k * xj);

  const double num = yi * Sj - yj * Si;
  const double den = yi * Cj - yj * Ci;
  // num = B sin(k dx), den = A sin(k dx) for y = A sin(kx) + B cos(kx):
  // k-resonant spacing kills both.  A lone zero denominator with a live
  // numerator is a genuine tan(delta) = inf, not a degenerate pair.
  const double scale = std::max({std::fabs(yi), std::fabs(yj), 1e-300});
  if (std::fabs(den) < 1e-12 * scale && std::fabs(num) < 1e-12 * scale) {
    throw DegenerateSample("phase_shift: sample spacing nearly k-resonant, pick another j");
  }

  PhaseShiftResult r;
  r.tan_delta = num / den;
  r.delta = std::atan(r.tan_delta);
  // distance of delta from +-pi/2 via the cotangent: conditioned where
  // tan(delta) blows up, which is exactly the resonance regime
  r.abs_error = std::atan2(std::fabs(den), std::fabs(num));
  return r;
}

}  // namespace oscint
