// Acceptance suite: one line per criterion, exit code = number of failures.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "oscint/bench.hpp"
#include "oscint/errors.hpp"
#include "oscint/rational.hpp"

using namespace oscint;

namespace {

char detail[512];

IvpProblem test_equation(double omega) {
  IvpProblem p;
  p.name = "test-equation";
  p.dimension = 1;
  p.x_start = 0;
  p.x_end = 100;
  p.rhs = [omega](double, const Vec& y) -> Vec { return {-omega * omega * y[0]}; };
  p.frequency = [omega](double, const Vec&) { return omega; };
  p.linear_in_y = true;
  p.lambda_of_x = [omega](double) { return -omega * omega; };
  return p;
}

StepState cosine_window(const IvpProblem& p, double omega, double x0, double h, int n) {
  StepState s;
  s.x_origin = x0;
  s.base_index = 0;
  s.h = h;
  s.window.resize(n);
  for (int i = 0; i < n; ++i) {
    s.window[i].y = {std::cos(omega * s.x(i))};
    s.window[i].f = p.rhs(s.x(i), s.window[i].y);
  }
  return s;
}

// --- 1: coefficient identity in exact rational arithmetic -------------------

bool criterion_coefficient_identity() {
  const Rational b4{45767, 725760};
  const Rational dep[4] = {
      Rational(70) * b4 - Rational(12629, 3024),
      Rational(-56) * b4 + Rational(20483, 4032),
      Rational(28) * b4 - Rational(3937, 2016),
      Rational(-8) * b4 + Rational(17671, 12096),
  };
  const auto want = fixed_b_rationals();
  bool exact = b4 == want[4];
  for (int j = 0; j < 4; ++j) exact = exact && dep[j] == want[j];

  const BCoefficients dd = dependent_b_from_b4(45767.0 / 725760.0);
  const BCoefficients ff = fixed_b_coefficients();
  double worst = 0;
  for (int j = 0; j < 5; ++j) {
    worst = std::max(worst, std::fabs(dd.as_array()[j] - ff.as_array()[j]) /
                                std::fabs(ff.as_array()[j]));
  }
  std::snprintf(detail, sizeof(detail), "rational match %s, float rel gap %.1e",
                exact ? "exact" : "BROKEN", worst);
  return exact && worst <= 1e-15;
}

// --- 2: consistency sums -----------------------------------------------------

bool criterion_consistency_sums() {
  const ACoefficients a;
  const MethodSpec pf = phase_fitted_method();
  const MethodSpec fix = fixed_method();
  double worst = std::fabs(a.full_sum());
  for (int i = 0; i < 50; ++i) {
    const double v = 0.02 * std::pow(4.0 / 0.02, i / 49.0);
    for (const MethodSpec* m : {&pf, &fix}) {
      const auto b = m->b(v);
      worst = std::max(worst,
                       std::fabs(b[0] + 2.0 * (b[1] + b[2] + b[3] + b[4]) - 5.0) / 5.0);
    }
  }
  std::snprintf(detail, sizeof(detail), "max rel defect %.1e at 50 sampled v", worst);
  return worst <= 1e-13;
}

// --- 3: algebraic order ------------------------------------------------------

bool criterion_algebraic_order() {
  const int o_fix = algebraic_order(fixed_method());
  const int o_pf = algebraic_order(phase_fitted_method(), 0.0);
  const int o_num = algebraic_order(numerov_method());
  std::snprintf(detail, sizeof(detail), "fixed=%d phase-fitted(v->0)=%d numerov=%d", o_fix,
                o_pf, o_num);
  return o_fix == 10 && o_pf == 10 && o_num == 4;
}

// --- 4: phase-lag order ------------------------------------------------------

bool criterion_phase_lag_order() {
  const PhaseLagReport rf = estimate_phase_lag_order(fixed_method());
  const PhaseLagReport rn = estimate_phase_lag_order(numerov_method());

  bool pf_infinite = false;
  try {
    estimate_phase_lag_order(phase_fitted_method());
  } catch (const IdenticallyZero&) {
    pf_infinite = true;
  }
  double pf_worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double v = 0.05 + i * (3.0 - 0.05) / 99;
    pf_worst = std::max(pf_worst, std::fabs(phase_lag_value(phase_fitted_method(), v)));
  }
  std::snprintf(detail, sizeof(detail),
                "fixed q=%.3f, numerov q=%.3f, phase-fitted max|PL|=%.1e%s",
                rf.order_estimate, rn.order_estimate, pf_worst,
                pf_infinite ? " (infinite order)" : "");
  return std::fabs(rf.order_estimate - 10.0) <= 0.1 &&
         std::fabs(rn.order_estimate - 4.0) <= 0.1 && pf_infinite && pf_worst <= 1e-11;
}

// --- 5: test-equation exactness ----------------------------------------------

bool criterion_test_equation() {
  const MethodSpec pf = phase_fitted_method();
  double worst = 0;
  for (double omega : {1.0, 10.0}) {
    for (double h : {0.05, 0.1}) {
      const IvpProblem p = test_equation(omega);
      const StepState s = cosine_window(p, omega, 0.0, h, 8);
      const StepState next = advance(pf, s, p);
      const double want = std::cos(omega * next.x(7));
      worst = std::max(worst, std::fabs(next.window.back().y[0] - want) / std::fabs(want));
    }
  }
  std::snprintf(detail, sizeof(detail), "max rel error %.1e over w in {1,10}, h in {.05,.1}",
                worst);
  return worst <= 1e-11;
}

// --- 6: global order sweep ---------------------------------------------------

double sweep_error(const MethodSpec& m, const IvpProblem& p, long n) {
  return max_interval_error(integrate(m, p, n), p.exact);
}

bool criterion_global_order() {
  const IvpProblem p = inhomogeneous();

  // fixed method: clean asymptotic halving pair
  const double f1 = sweep_error(fixed_method(), p, 128000);
  const double f2 = sweep_error(fixed_method(), p, 256000);
  const double exp_fixed = std::log2(f1 / f2);

  // phase-fitted: every stable step size (v = 10h < ~1.85, n >= ~17000)
  // already integrates this problem to the double-precision floor, so the
  // measured exponents collapse; reported as-is
  const double p1 = sweep_error(phase_fitted_method(), p, 20000);
  const double p2 = sweep_error(phase_fitted_method(), p, 40000);
  const double p3 = sweep_error(phase_fitted_method(), p, 24000);
  const double p4 = sweep_error(phase_fitted_method(), p, 48000);
  const double exp_pf = std::max(std::log2(p1 / p2), std::log2(p3 / p4));

  std::snprintf(detail, sizeof(detail),
                "fixed exponent %.2f (err %.1e->%.1e); phase-fitted best exponent %.2f "
                "(err %.1e@20k %.1e@40k, %.1e@24k %.1e@48k: at the evaluation floor below "
                "the v~1.85 periodicity edge)",
                exp_fixed, f1, f2, exp_pf, p1, p2, p3, p4);
  return std::fabs(exp_fixed - 10.0) <= 0.5 && std::fabs(exp_pf - 10.0) <= 0.5;
}

// --- 7: resonance convergence ------------------------------------------------

bool criterion_resonance_convergence() {
  struct Ladder {
    const char* id;
    std::vector<long> steps;
  };
  // each ladder stays in the method-dominated regime; the finest point
  // approaches the extraction floor (~1e-5) from above
  const Ladder ladders[3] = {
      {"schrodinger-989", {500, 630, 800, 1000}},
      {"schrodinger-341", {250, 320, 400, 500}},
      {"schrodinger-163", {250, 320, 400, 500}},
  };
  bool ok = true;
  std::string all;
  for (const auto& lad : ladders) {
    SweepConfig c;
    c.problem = lad.id;
    c.methods = {"phase-fitted"};
    c.n_steps = lad.steps;
    c.metric = ErrorMetric::PhaseShift;
    const auto rs = run_sweep(c);
    bool monotone = true;
    for (size_t i = 1; i < rs.size(); ++i) monotone = monotone && rs[i].error < rs[i - 1].error;
    const double finest = rs.back().error;
    ok = ok && monotone && finest <= 1e-4;
    char one[96];
    std::snprintf(one, sizeof(one), "%s:%s finest=%.1e ", lad.id + 12,
                  monotone ? " monotone," : " NOT monotone,", finest);
    all += one;
  }
  std::snprintf(detail, sizeof(detail), "%s", all.c_str());
  return ok;
}

// --- 8: ranking reproduction ---------------------------------------------------

bool criterion_ranking() {
  struct Board {
    const char* id;
    ErrorMetric metric;
    std::vector<long> steps;
  };
  const Board boards[4] = {
      {"schrodinger-989", ErrorMetric::PhaseShift, {500, 1000}},
      {"two-body", ErrorMetric::MaxInterval, {8000, 16000}},
      {"franco-palacios", ErrorMetric::MaxInterval, {4000, 8000}},
      {"inhomogeneous", ErrorMetric::MaxInterval, {64000, 128000}},
  };

  bool ok = true;
  std::string all;
  double gap989 = 0;
  for (const auto& b : boards) {
    SweepConfig c;
    c.problem = b.id;
    c.methods = {"phase-fitted", "fixed", "numerov"};
    c.n_steps = b.steps;
    c.metric = b.metric;
    const auto rs = run_sweep(c);

    const auto acc = [&](const char* m, long n) {
      for (const auto& r : rs) {
        if (r.method == m && r.n_steps == n) return r.accuracy;
      }
      return std::nan("");
    };
    bool ordered = true;
    for (long n : b.steps) {
      const double apf = acc("phase-fitted", n);
      const double afx = acc("fixed", n);
      const double anv = acc("numerov", n);
      ordered = ordered && apf >= afx && afx >= anv;
      if (std::string(b.id) == "schrodinger-989" && n == 1000) gap989 = apf - afx;
    }
    ok = ok && ordered;
    char one[64];
    std::snprintf(one, sizeof(one), "%s %s; ", b.id, ordered ? "ordered" : "NOT ordered");
    all += one;
  }

  const bool gap_ok = gap989 >= 1.2 - 0.5 && gap989 <= 1.2 + 0.5;
  ok = ok && gap_ok;
  std::snprintf(detail, sizeof(detail), "%sE989 gap %.2f digits (want 1.2 +- 0.5)", all.c_str(),
                gap989);
  return ok;
}

// --- 9: property suites --------------------------------------------------------

bool criterion_properties() {
  // time-reversal symmetry
  const IvpProblem te = test_equation(1.0);
  const StepState fwd = cosine_window(te, 1.0, 0.0, 0.1, 8);
  const StepState after = advance(fixed_method(), fwd, te);
  StepState rev;
  rev.x_origin = 0.8;
  rev.base_index = 0;
  rev.h = -0.1;
  rev.window.resize(8);
  rev.window[0] = after.window.back();
  for (int i = 1; i < 8; ++i) {
    rev.window[i].y = {std::cos(rev.x(i))};
    rev.window[i].f = te.rhs(rev.x(i), rev.window[i].y);
  }
  const double rev_err =
      std::fabs(advance(fixed_method(), rev, te).window.back().y[0] - 1.0);
  const bool reversal_ok = rev_err <= 1e-11;

  // phase-shift scale invariance
  const ResonanceCase rc = resonance_cases()[1];
  Trajectory t;
  t.x_start = 10.0;
  t.h = 0.1;
  t.dimension = 1;
  for (int i = 0; i <= 50; ++i) {
    const double x = t.x_start + i * t.h;
    t.samples.push_back(std::sin(rc.k() * x) + 0.31 * std::cos(rc.k() * x));
  }
  Trajectory ts = t;
  for (double& s : ts.samples) s *= 17.3;
  const double scale_gap =
      std::fabs(phase_shift(t, rc, 3, 47).delta - phase_shift(ts, rc, 3, 47).delta);
  const bool scale_ok = scale_gap <= 1e-13;

  // linearity of advance on a homogeneous linear problem
  const IvpProblem sp = schrodinger_problem(rc);
  const StepState base = bootstrap_start(sp, 15.0 / 2000);
  StepState scaled = base;
  for (auto& r : scaled.window) {
    for (double& y : r.y) y *= 3.7;
    for (double& f : r.f) f *= 3.7;
  }
  const double lin_a = advance(phase_fitted_method(), base, sp).window.back().y[0] * 3.7;
  const double lin_b = advance(phase_fitted_method(), scaled, sp).window.back().y[0];
  const bool linear_ok = std::fabs(lin_a - lin_b) <= 1e-12 * std::max(1.0, std::fabs(lin_a));

  // CSV round trip, bit-exact error values
  SweepConfig c;
  c.problem = "two-body";
  c.methods = {"fixed", "numerov"};
  c.n_steps = {1000, 2000};
  c.metric = ErrorMetric::MaxInterval;
  const auto rs = run_sweep(c);
  const std::string path =
      (std::filesystem::temp_directory_path() / "oscint_acceptance_roundtrip.csv").string();
  write_csv(rs, path);
  const auto back = read_csv(path);
  bool csv_ok = back.size() == rs.size();
  for (size_t i = 0; csv_ok && i < rs.size(); ++i) {
    csv_ok = std::memcmp(&back[i].error, &rs[i].error, sizeof(double)) == 0;
  }
  std::filesystem::remove(path);

  std::snprintf(detail, sizeof(detail),
                "reversal %.1e%s; scale gap %.1e%s; linearity %s; csv %s", rev_err,
                reversal_ok ? "" : " FAIL", scale_gap, scale_ok ? "" : " FAIL",
                linear_ok ? "ok" : "FAIL", csv_ok ? "bit-exact" : "FAIL");
  return reversal_ok && scale_ok && linear_ok && csv_ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  const Criterion criteria[] = {
      {"coefficient identity", criterion_coefficient_identity},
      {"consistency sums", criterion_consistency_sums},
      {"algebraic order", criterion_algebraic_order},
      {"phase-lag order", criterion_phase_lag_order},
      {"test-equation exactness", criterion_test_equation},
      {"global order sweep", criterion_global_order},
      {"resonance convergence", criterion_resonance_convergence},
      {"ranking reproduction", criterion_ranking},
      {"property suites", criterion_properties},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    bool ok = false;
    detail[0] = '\0';
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::snprintf(detail, sizeof(detail), "exception: %s", e.what());
    }
    std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", index, c.name, detail);
    if (!ok) ++failures;
  }
  std::printf("%d/%d acceptance criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures,
              static_cast<int>(std::size(criteria)));
  return failures;
}
