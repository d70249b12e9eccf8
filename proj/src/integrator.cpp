#include "oscint/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

// 5-stage Gauss-Legendre collocation (order ten), used only to manufacture
// starting values when no closed-form solution is available.
constexpr int kGlStages = 5;
constexpr double kGlC[kGlStages] = {
    0.046910077030668003601186560850303517437, 0.23076534494715845448184278964989559752,
    0.5, 0.76923465505284154551815721035010440248, 0.95308992296933199639881343914969648256};
constexpr double kGlB[kGlStages] = {
    0.11846344252809454375713202035995868132, 0.23931433524968323402064575741781909646,
    0.28444444444444444444444444444444444444, 0.23931433524968323402064575741781909646,
    0.11846344252809454375713202035995868132};
constexpr double kGlA[kGlStages][kGlStages] = {
    {0.059231721264047271878566010179979340661, -0.019570364359076037492643214050884060018,
     0.011254400818642955552716244215090748773, -0.0055937936608121848768177219644759282155,
     0.0015881129678659985393652424705934162371},
    {0.12815100567004528349616684832951382219, 0.11965716762484161701032287870890954823,
     -0.02459211461964220038931825168600401663, 0.010318280670683357408953945056355839486,
     -0.0027689943987696030442826307588795957613},
    {0.11377628800422460252874127381536557686, 0.26000465168064151859240589518757397939,
     0.14222222222222222222222222222222222222, -0.020690316430958284571760137769754882933,
     0.0046871545238699412283907465445931044619},
    {0.12123243692686414680141465111883827708, 0.22899605457899987661169181236146325697,
     0.30903655906408664483376269613044846107, 0.11965716762484161701032287870890954823,
     -0.0096875631419507397390348279695551408715},
    {0.11687532956022854521776677788936526508, 0.24490812891049541889746347938229502467,
     0.27319004362580148889172820022935369567, 0.25888469960875927151328897146870315647,
     0.059231721264047271878566010179979340661}};

constexpr int kBootstrapSubsteps = 100;

double inf_norm(const Vec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// One implicit Gauss-Legendre step of the first-order system
// z = (y, y'), z' = (y', f(x, y)).  Stage equations solved by fixed-point
// iteration; the substeps are tiny so it contracts fast.
void gl_step(const IvpProblem& problem, double x, double hs, Vec& z) {
  const int d = problem.dimension;
  const int n = 2 * d;

  auto eval = [&](double xs, const Vec& zs, Vec& out) {
    Vec y(zs.begin(), zs.begin() + d);
    const Vec f = problem.rhs(xs, y);
    for (int c = 0; c < d; ++c) {
      out[c] = zs[d + c];
      out[d + c] = f[c];
    }
  };

  std::array<Vec, kGlStages> k;
  Vec k0(n);
  eval(x, z, k0);
  for (int s = 0; s < kGlStages; ++s) k[s] = k0;

  Vec zs(n);
  std::array<Vec, kGlStages> knew;
  for (int s = 0; s < kGlStages; ++s) knew[s].resize(n);

  for (int iter = 0; iter < 50; ++iter) {
    double change = 0, scale = 0;
    for (int s = 0; s < kGlStages; ++s) {
      for (int c = 0; c < n; ++c) {
        double acc = z[c];
        for (int m = 0; m < kGlStages; ++m) acc += hs * kGlA[s][m] * k[m][c];
        zs[c] = acc;
      }
      eval(x + kGlC[s] * hs, zs, knew[s]);
      for (int c = 0; c < n; ++c) {
        change = std::max(change, std::fabs(knew[s][c] - k[s][c]));
        scale = std::max(scale, std::fabs(knew[s][c]));
      }
      k[s] = knew[s];
    }
    if (change <= 1e-15 * std::max(1.0, scale)) break;
  }

  for (int c = 0; c < n; ++c) {
    double acc = 0;
    for (int s = 0; s < kGlStages; ++s) acc += kGlB[s] * k[s][c];
    z[c] += hs * acc;
  }
}

// Advance the window by one step of the general symmetric 2k-step formula.
// x_new must be the exact grid abscissa.  b holds b_0..b_k at the step's v.
void step_window(const MethodSpec& method, StepState& state, const IvpProblem& problem,
                 const std::array<double, 5>& b, double x_new) {
  const int k = method.half_steps;
  const double h = state.h;
  const double h2 = h * h;
  const int d = problem.dimension;

  // node j of the formula lives at window[k + j], j = -k..k-1
  const auto& w = state.window;
  Vec expl(d);
  for (int c = 0; c < d; ++c) {
    double acc = -w[0].y[c] - method.a[0] * w[k].y[c];
    double facc = b[0] * w[k].f[c] + b[k] * w[0].f[c];
    for (int j = 1; j < k; ++j) {
      acc -= method.a[j] * (w[k + j].y[c] + w[k - j].y[c]);
      facc += b[j] * (w[k + j].f[c] + w[k - j].f[c]);
    }
    expl[c] = acc + h2 * facc;
  }

  // predictor: reuse the newest f as a stand-in for the unknown one
  Vec predictor(d);
  for (int c = 0; c < d; ++c) predictor[c] = expl[c] + h2 * b[k] * w.back().f[c];

  Vec y_new = solve_implicit(expl, x_new, h, b[k], problem, predictor);
  Vec f_new = problem.rhs(x_new, y_new);

  state.window.erase(state.window.begin());
  state.window.push_back(StepRecord{std::move(y_new), std::move(f_new)});
  state.base_index += 1;
}

double step_v(const MethodSpec& method, const StepState& state, const IvpProblem& problem,
              double x_new) {
  if (!method.frequency_dependent()) return 0.0;
  const double omega = problem.frequency(x_new, state.window.back().y);
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("frequency estimate must be finite and nonnegative");
  }
  return omega * std::fabs(state.h);
}

}  // namespace

StepState bootstrap_start(const IvpProblem& problem, double h, int n_points) {
  if (!(h > 0)) throw std::invalid_argument("bootstrap_start: h must be positive");
  const double length = problem.x_end - problem.x_start;
  if (static_cast<double>(n_points) * h > length * (1 + 1e-12)) {
    throw StepTooLarge("bootstrap_start: starting window exceeds the interval");
  }

  StepState state;
  state.x_origin = problem.x_start;
  state.base_index = 0;
  state.h = h;
  state.window.resize(n_points);

  if (problem.exact) {
    for (int i = 0; i < n_points; ++i) {
      state.window[i].y = problem.exact(state.x(i));
    }
  } else {
    const int d = problem.dimension;
    Vec z(2 * d);
    std::copy(problem.y0.begin(), problem.y0.end(), z.begin());
    std::copy(problem.y0_prime.begin(), problem.y0_prime.end(), z.begin() + d);
    state.window[0].y = problem.y0;
    const double hs = h / kBootstrapSubsteps;
    for (int i = 1; i < n_points; ++i) {
      const double x_base = state.x(i - 1);
      for (int s = 0; s < kBootstrapSubsteps; ++s) gl_step(problem, x_base + s * hs, hs, z);
      state.window[i].y.assign(z.begin(), z.begin() + d);
    }
    if (problem.scale_free_start) {
      // linear homogeneous with y(x0) = 0: pin the second value to h,
      // every other value rescales with it
      const double y1 = state.window[1].y[0];
      if (std::fabs(y1) > 1e-300) {
        const double s = h / y1;
        for (auto& rec : state.window) {
          for (double& c : rec.y) c *= s;
        }
        state.window[1].y[0] = h;
      }
    }
  }
  for (int i = 0; i < n_points; ++i) {
    state.window[i].f = problem.rhs(state.x(i), state.window[i].y);
  }
  return state;
}

Vec solve_implicit(const Vec& explicit_part, double x4, double h, double b4,
                   const IvpProblem& problem, const Vec& predictor, ImplicitStats* stats) {
  const double h2b4 = h * h * b4;
  if (stats) *stats = {};
  if (b4 == 0.0) return explicit_part;

  if (problem.linear_in_y) {
    const double lambda = problem.lambda_of_x(x4);
    const double denom = 1.0 - h2b4 * lambda;
    if (std::fabs(denom) < 1e-12) {
      throw SingularLinearSolve("implicit solve: 1 - h^2 b4 lambda vanished");
    }
    const Vec g = problem.rhs(x4, Vec(problem.dimension, 0.0));
    Vec y(problem.dimension);
    for (int c = 0; c < problem.dimension; ++c) {
      y[c] = (explicit_part[c] + h2b4 * g[c]) / denom;
    }
    if (stats) stats->linear_solve = true;
    return y;
  }

  Vec y = predictor;
  for (int iter = 1; iter <= 50; ++iter) {
    const Vec f = problem.rhs(x4, y);
    Vec y_next(problem.dimension);
    double change = 0;
    for (int c = 0; c < problem.dimension; ++c) {
      y_next[c] = explicit_part[c] + h2b4 * f[c];
      change = std::max(change, std::fabs(y_next[c] - y[c]));
    }
    y = std::move(y_next);
    if (stats) stats->iterations = iter;
    if (!std::isfinite(change)) break;
    if (change <= 1e-14 * std::max(1.0, inf_norm(y))) return y;
  }
  throw CorrectorDiverged("implicit solve: fixed-point iteration did not converge");
}

StepState advance(const MethodSpec& method, const StepState& state, const IvpProblem& problem) {
  const int k = method.half_steps;
  if (static_cast<int>(state.window.size()) != 2 * k) {
    throw std::invalid_argument("advance: window must hold exactly 2k records");
  }
  StepState next = state;
  const double x_new = next.x_next();
  const auto b = method.b(step_v(method, next, problem, x_new));
  step_window(method, next, problem, b, x_new);
  return next;
}

StepState numerov_advance(const StepState& state, const IvpProblem& problem) {
  return advance(numerov_method(), state, problem);
}

Trajectory integrate(const MethodSpec& method, const IvpProblem& problem, long n_steps) {
  if (n_steps < 8) throw std::invalid_argument("integrate: need at least 8 steps");
  const double h = (problem.x_end - problem.x_start) / static_cast<double>(n_steps);
  const int n_start = 2 * method.half_steps;

  StepState state = bootstrap_start(problem, h, n_start);

  Trajectory traj;
  traj.method_name = method.name;
  traj.x_start = problem.x_start;
  traj.h = h;
  traj.dimension = problem.dimension;
  traj.samples.reserve((n_steps + 1) * problem.dimension);
  for (int i = 0; i < n_start; ++i) {
    traj.samples.insert(traj.samples.end(), state.window[i].y.begin(), state.window[i].y.end());
  }

  // frequency-dependent coefficients: recompute only when v changes
  double cached_v = -1;
  std::array<double, 5> b = method.frequency_dependent() ? std::array<double, 5>{}
                                                         : method.b(0.0);
  for (long i = n_start; i <= n_steps; ++i) {
    const double x_new = problem.x_start + static_cast<double>(i) * h;
    if (method.frequency_dependent()) {
      const double v = step_v(method, state, problem, x_new);
      if (v != cached_v) {
        b = method.b(v);
        cached_v = v;
      }
    }
    step_window(method, state, problem, b, x_new);
    const Vec& y = state.window.back().y;
    traj.samples.insert(traj.samples.end(), y.begin(), y.end());
  }
  return traj;
}

}  // namespace oscint
