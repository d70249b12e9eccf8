#ifndef OSCINT_INTEGRATOR_HPP
#define OSCINT_INTEGRATOR_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oscint/methods.hpp"

namespace oscint {

using Vec = std::vector<double>;

// A second-order IVP y'' = f(x, y) on [x_start, x_end].
struct IvpProblem {
  std::string name;
  int dimension = 1;
  double x_start = 0;
  double x_end = 1;
  Vec y0;
  Vec y0_prime;
  std::function<Vec(double, const Vec&)> rhs;
  std::function<Vec(double)> exact;                     // null when unknown
  std::function<double(double, const Vec&)> frequency;  // w >= 0 estimate
  // When set, rhs = lambda(x)*y + g(x) componentwise and the corrector is
  // solved in closed form.
  bool linear_in_y = false;
  std::function<double(double)> lambda_of_x;
  // Linear homogeneous with y(x_start) = 0: the solution scale is free and
  // the starting window is normalized so the second value equals h.
  bool scale_free_start = false;
};

struct StepRecord {
  Vec y;
  Vec f;
};

// Sliding window of the last 2k grid records, oldest first.  Abscissas are
// derived from the grid origin so they can never drift.
struct StepState {
  double x_origin = 0;
  long base_index = 0;  // grid index of window[0]
  double h = 0;
  std::vector<StepRecord> window;

  double x(int i) const { return x_origin + static_cast<double>(base_index + i) * h; }
  double x_next() const {
    return x_origin + static_cast<double>(base_index + static_cast<long>(window.size())) * h;
  }
};

// Uniform-grid samples of one integration.
struct Trajectory {
  std::string method_name;
  double x_start = 0;
  double h = 0;
  int dimension = 1;
  std::vector<double> samples;  // (n_steps+1) x dimension, row-major

  long n_points() const { return static_cast<long>(samples.size()) / dimension; }
  double x(long i) const { return x_start + static_cast<double>(i) * h; }
  std::span<const double> y(long i) const {
    return {samples.data() + i * dimension, static_cast<size_t>(dimension)};
  }
  std::span<double> y(long i) {
    return {samples.data() + i * dimension, static_cast<size_t>(dimension)};
  }
};

struct ImplicitStats {
  int iterations = 0;
  bool linear_solve = false;
};

// First n_points grid records.  Uses the exact solution when available,
// otherwise a one-step Gauss-Legendre reference integration (order ten,
// 100 substeps per grid interval) from the (y, y') initial data.
StepState bootstrap_start(const IvpProblem& problem, double h, int n_points = 8);

// One step of the symmetric 2k-step formula: assembles the explicit part,
// solves the implicit corrector for the new value, slides the window.
// Frequency-dependent coefficients are refreshed from w at the newest
// record's state and the new abscissa.
StepState advance(const MethodSpec& method, const StepState& state, const IvpProblem& problem);

// Solve y4 = explicit_part + h^2*b4*f(x4, y4): componentwise closed form on
// linear problems, damped-free fixed-point iteration otherwise.
Vec solve_implicit(const Vec& explicit_part, double x4, double h, double b4,
                   const IvpProblem& problem, const Vec& predictor,
                   ImplicitStats* stats = nullptr);

// Numerov step: y_{n+1} - 2 y_n + y_{n-1} = h^2 (f_{n+1} + 10 f_n + f_{n-1}) / 12,
// same corrector contract with b4 -> 1/12.  The window holds two records.
StepState numerov_advance(const StepState& state, const IvpProblem& problem);

// h = (x_end - x_start)/n_steps; bootstrap, march to x_end, keep every sample.
Trajectory integrate(const MethodSpec& method, const IvpProblem& problem, long n_steps);

} // namespace oscint

#endif
