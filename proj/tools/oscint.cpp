#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oscint/bench.hpp"
#include "oscint/errors.hpp"

using namespace oscint;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line without '=': " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

int run_list() {
  std::printf("methods:\n");
  for (const auto& id : method_ids()) {
    const MethodSpec m = make_method(id);
    std::printf("  %-14s %d-step, %d stage%s%s\n", id.c_str(), 2 * m.half_steps, m.stages,
                m.stages == 1 ? "" : "s",
                m.frequency_dependent() ? ", frequency-dependent coefficients" : "");
  }
  std::printf("problems:\n");
  for (const auto& id : problem_ids()) {
    const IvpProblem p = make_problem(id);
    std::printf("  %-16s dim %d on [%g, %g]%s\n", id.c_str(), p.dimension, p.x_start, p.x_end,
                p.exact ? ", closed-form solution" : ", phase-shift target");
  }
  return 0;
}

int run_verify() {
  int bad = 0;
  const auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::printf("%-34s %s  %s\n", name, ok ? "ok  " : "FAIL", detail.c_str());
    if (!ok) ++bad;
  };
  char buf[160];

  {
    const BCoefficients dep = dependent_b_from_b4(45767.0 / 725760.0);
    const BCoefficients fix = fixed_b_coefficients();
    double worst = 0;
    for (int j = 0; j < 5; ++j) {
      worst = std::max(worst, std::fabs(dep.as_array()[j] - fix.as_array()[j]) /
                                  std::fabs(fix.as_array()[j]));
    }
    std::snprintf(buf, sizeof(buf), "max rel gap %.2e", worst);
    report("coefficient dependencies", worst <= 1e-15, buf);
  }
  {
    const MethodSpec pf = phase_fitted_method();
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const double v = 0.02 * std::pow(200.0, i / 49.0);
      const auto b = pf.b(v);
      worst = std::max(worst, std::fabs(b[0] + 2 * (b[1] + b[2] + b[3] + b[4]) - 5.0) / 5.0);
    }
    std::snprintf(buf, sizeof(buf), "max rel defect %.2e over 50 v", worst);
    report("consistency sum b = 5", worst <= 1e-13, buf);
  }
  {
    const int o_fix = algebraic_order(fixed_method());
    const int o_pf = algebraic_order(phase_fitted_method(), 0.0);
    const int o_num = algebraic_order(numerov_method());
    std::snprintf(buf, sizeof(buf), "fixed=%d phase-fitted(v->0)=%d numerov=%d", o_fix, o_pf,
                  o_num);
    report("algebraic order", o_fix == 10 && o_pf == 10 && o_num == 4, buf);
  }
  {
    const PhaseLagReport rf = estimate_phase_lag_order(fixed_method());
    const PhaseLagReport rn = estimate_phase_lag_order(numerov_method());
    std::snprintf(buf, sizeof(buf), "fixed q=%.3f (c=%.3e), numerov q=%.3f (c=%.3e)",
                  rf.order_estimate, rf.constant_estimate, rn.order_estimate,
                  rn.constant_estimate);
    report("phase-lag order fit",
           std::fabs(rf.order_estimate - 10) <= 0.1 && std::fabs(rn.order_estimate - 4) <= 0.1,
           buf);
  }
  {
    bool infinite = false;
    double worst = 0;
    try {
      estimate_phase_lag_order(phase_fitted_method());
    } catch (const IdenticallyZero&) {
      infinite = true;
    }
    for (int i = 0; i < 100; ++i) {
      const double v = 0.05 + i * (3.0 - 0.05) / 99;
      worst = std::max(worst, std::fabs(phase_lag_value(phase_fitted_method(), v)));
    }
    std::snprintf(buf, sizeof(buf), "%s, max |PL| = %.2e on [0.05, 3]",
                  infinite ? "infinite order" : "order finite?!", worst);
    report("phase-fitted nullification", infinite && worst <= 1e-11, buf);
  }
  {
    double worst = 0;
    for (int i = 0; i <= 60; ++i) {
      const double v = 0.125 + i * (0.5 - 0.125) / 60;
      worst = std::max(worst, std::fabs(phase_fitted_b4_series(v) - phase_fitted_b4_direct(v)) /
                                  std::fabs(phase_fitted_b4_direct(v)));
    }
    std::snprintf(buf, sizeof(buf), "max rel gap %.2e on [0.125, 0.5]", worst);
    report("series/direct branch agreement", worst <= 1e-10, buf);
  }
  std::printf(bad == 0 ? "verification passed\n" : "verification FAILED (%d checks)\n", bad);
  return bad == 0 ? 0 : 1;
}

int run_sweep_cmd(SweepConfig cfg) {
  const auto results = run_sweep(cfg);
  if (!cfg.out_path.empty()) write_csv(results, cfg.out_path);
  int failures = 0;
  for (const auto& r : results) {
    if (r.failed()) {
      ++failures;
      std::printf("%-14s n=%-8ld FAILED: %s\n", r.method.c_str(), r.n_steps, r.note.c_str());
    } else {
      std::printf("%-14s n=%-8ld error=%-12.5e accuracy=%6.3f  %.3fs\n", r.method.c_str(),
                  r.n_steps, r.error, r.accuracy, r.wall_seconds);
    }
  }
  if (!cfg.out_path.empty()) std::printf("wrote %s\n", cfg.out_path.c_str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimized symmetric eight-step methods for oscillatory IVPs"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "enumerate registered methods and problems");
  auto* verify_cmd =
      app.add_subcommand("verify", "run the phase-lag and algebraic-order checks");

  auto* sweep_cmd = app.add_subcommand("sweep", "method x step-count efficiency sweep");
  std::string problem, methods_csv, steps_csv, metric_name_s, out_path, config_path;
  sweep_cmd->add_option("--problem", problem, "problem id (see `oscint list`)");
  sweep_cmd->add_option("--methods", methods_csv, "comma-separated method ids");
  sweep_cmd->add_option("--steps", steps_csv, "comma-separated step counts, increasing");
  sweep_cmd->add_option("--metric", metric_name_s, "max | endpoint | phase-shift");
  sweep_cmd->add_option("--out", out_path, "output CSV path");
  sweep_cmd->add_option("--config", config_path, "key=value file supplying any of the above");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) return run_list();
    if (verify_cmd->parsed()) return run_verify();

    if (!config_path.empty()) {
      const auto kv = load_config_file(config_path);
      const auto take = [&](const std::string& key, std::string& slot) {
        if (slot.empty() && kv.count(key)) slot = kv.at(key);
      };
      take("problem", problem);
      take("methods", methods_csv);
      take("steps", steps_csv);
      take("metric", metric_name_s);
      take("out", out_path);
    }
    if (problem.empty() || methods_csv.empty() || steps_csv.empty() || metric_name_s.empty()) {
      std::fprintf(stderr, "sweep needs --problem, --methods, --steps and --metric "
                           "(flags or --config file)\n");
      return 2;
    }

    SweepConfig cfg;
    cfg.problem = problem;
    cfg.methods = split(methods_csv, ',');
    for (const auto& s : split(steps_csv, ',')) cfg.n_steps.push_back(std::stol(s));
    cfg.metric = parse_metric(metric_name_s);
    cfg.out_path = out_path;
    return run_sweep_cmd(cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
