#include "oscint/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

std::map<std::string, MethodSpec>& custom_methods() {
  static std::map<std::string, MethodSpec> reg;
  return reg;
}

double clamp_error(double e) { return std::max(e, 1e-15); }  // double-precision floor

double vec_norm_diff(std::span<const double> a, const Vec& b) {
  double s = 0;
  for (size_t c = 0; c < a.size(); ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

double max_interval_error(const Trajectory& traj, const std::function<Vec(double)>& exact) {
  double worst = 0;
  for (long i = 0; i < traj.n_points(); ++i) {
    worst = std::max(worst, vec_norm_diff(traj.y(i), exact(traj.x(i))));
  }
  return worst;
}

double endpoint_error(const Trajectory& traj, const std::function<Vec(double)>& exact) {
  const long last = traj.n_points() - 1;
  return vec_norm_diff(traj.y(last), exact(traj.x(last)));
}

double resonance_error(const Trajectory& traj, const ResonanceCase& rc) {
  const long n = traj.n_points() - 1;
  const long i = std::lround((14.0 - traj.x_start) / traj.h);
  for (long j = n; j > i; --j) {
    try {
      return phase_shift(traj, rc, i, j).abs_error;
    } catch (const DegenerateSample&) {
      continue;  // nearly k-resonant spacing, slide the outer sample inward
    }
  }
  throw DegenerateSample("resonance_error: no usable asymptotic sample pair");
}

std::vector<std::string> method_ids() {
  std::vector<std::string> ids = {"phase-fitted", "fixed", "numerov"};
  for (const auto& [name, m] : custom_methods()) ids.push_back(name);
  return ids;
}

std::vector<std::string> problem_ids() {
  return {"franco-palacios", "inhomogeneous", "two-body", "duffing",
          "schrodinger-989", "schrodinger-341", "schrodinger-163"};
}

MethodSpec make_method(const std::string& id) {
  if (id == "phase-fitted") return phase_fitted_method();
  if (id == "fixed") return fixed_method();
  if (id == "numerov") return numerov_method();
  const auto it = custom_methods().find(id);
  if (it != custom_methods().end()) return it->second;
  throw std::invalid_argument("unknown method id: " + id);
}

IvpProblem make_problem(const std::string& id) {
  if (id == "franco-palacios") return franco_palacios();
  if (id == "inhomogeneous") return inhomogeneous();
  if (id == "two-body") return two_body();
  if (id == "duffing") return duffing();
  if (id == "schrodinger-989") return schrodinger_problem(resonance_cases()[0]);
  if (id == "schrodinger-341") return schrodinger_problem(resonance_cases()[1]);
  if (id == "schrodinger-163") return schrodinger_problem(resonance_cases()[2]);
  throw std::invalid_argument("unknown problem id: " + id);
}

void register_method(const MethodSpec& method) {
  if (method.name.empty()) throw std::invalid_argument("register_method: empty name");
  custom_methods()[method.name] = method;
}

bool problem_has_exact(const std::string& id) {
  return static_cast<bool>(make_problem(id).exact);
}

const char* metric_name(ErrorMetric metric) {
  switch (metric) {
    case ErrorMetric::MaxInterval: return "max";
    case ErrorMetric::Endpoint: return "endpoint";
    case ErrorMetric::PhaseShift: return "phase-shift";
  }
  return "?";
}

ErrorMetric parse_metric(const std::string& name) {
  if (name == "max") return ErrorMetric::MaxInterval;
  if (name == "endpoint") return ErrorMetric::Endpoint;
  if (name == "phase-shift") return ErrorMetric::PhaseShift;
  throw std::invalid_argument("unknown metric: " + name + " (max|endpoint|phase-shift)");
}

namespace {

void validate(const SweepConfig& config) {
  if (config.n_steps.size() < 2) {
    throw std::invalid_argument("sweep: need at least two step counts");
  }
  for (size_t i = 1; i < config.n_steps.size(); ++i) {
    if (config.n_steps[i] <= config.n_steps[i - 1]) {
      throw std::invalid_argument("sweep: step counts must be strictly increasing");
    }
  }
  if (config.methods.empty()) throw std::invalid_argument("sweep: no methods given");
  const IvpProblem probe = make_problem(config.problem);
  if (config.metric == ErrorMetric::PhaseShift) {
    if (config.problem.rfind("schrodinger-", 0) != 0) {
      throw std::invalid_argument("sweep: phase-shift metric needs a schrodinger problem");
    }
  } else if (!probe.exact) {
    throw std::invalid_argument("sweep: metric '" + std::string(metric_name(config.metric)) +
                                "' needs a problem with a known solution");
  }
  for (const auto& id : config.methods) make_method(id);
}

ResonanceCase case_for(const std::string& problem_id) {
  for (const auto& rc : resonance_cases()) {
    if (problem_id == "schrodinger-" + std::to_string(static_cast<int>(rc.energy))) return rc;
  }
  throw std::invalid_argument("no resonance case for " + problem_id);
}

}  // namespace

std::vector<RunResult> run_sweep(const SweepConfig& config) {
  validate(config);
  const IvpProblem problem = make_problem(config.problem);

  std::vector<RunResult> results;
  for (const auto& method_id : config.methods) {
    const MethodSpec method = make_method(method_id);
    for (long n : config.n_steps) {
      RunResult r;
      r.method = method_id;
      r.problem = config.problem;
      r.n_steps = n;
      r.stages = method.stages;
      r.work = n * method.stages;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Trajectory traj = integrate(method, problem, n);
        switch (config.metric) {
          case ErrorMetric::MaxInterval:
            r.error = max_interval_error(traj, problem.exact);
            break;
          case ErrorMetric::Endpoint:
            r.error = endpoint_error(traj, problem.exact);
            break;
          case ErrorMetric::PhaseShift:
            r.error = resonance_error(traj, case_for(config.problem));
            break;
        }
        if (!std::isfinite(r.error)) {
          throw std::runtime_error("non-finite error (step size outside the stability range)");
        }
        r.error = clamp_error(r.error);
        r.accuracy = -std::log10(r.error);
      } catch (const std::exception& e) {
        r.error = std::nan("");
        r.accuracy = std::nan("");
        std::string why = e.what();
        std::replace(why.begin(), why.end(), ',', ';');
        r.note = why;
      }
      r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      results.push_back(std::move(r));
    }
  }
  std::stable_sort(results.begin(), results.end(), [](const RunResult& a, const RunResult& b) {
    return a.method != b.method ? a.method < b.method : a.n_steps < b.n_steps;
  });
  return results;
}

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void write_csv(const std::vector<RunResult>& results, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF endings everywhere
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << "method,problem,n_steps,stages,work,log10_work,error,accuracy,wall_seconds\n";
  for (const auto& r : results) {
    out << r.method << ',' << r.problem << ',' << r.n_steps << ',' << r.stages << ','
        << r.work << ',' << fmt17(std::log10(static_cast<double>(r.work))) << ','
        << fmt17(r.error) << ',' << fmt17(r.accuracy) << ',' << fmt17(r.wall_seconds);
    if (r.failed()) out << ',' << r.note;
    out << '\n';
  }
  if (!out.good()) throw std::runtime_error("write_csv: write failed for " + path);
}

std::vector<RunResult> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);

  std::vector<RunResult> results;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 9) throw std::runtime_error("read_csv: short row in " + path);
    RunResult r;
    r.method = fields[0];
    r.problem = fields[1];
    r.n_steps = std::stol(fields[2]);
    r.stages = std::stoi(fields[3]);
    r.work = std::stol(fields[4]);
    r.error = std::strtod(fields[6].c_str(), nullptr);
    r.accuracy = std::strtod(fields[7].c_str(), nullptr);
    r.wall_seconds = std::strtod(fields[8].c_str(), nullptr);
    if (fields.size() > 9) r.note = fields[9];
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace oscint
