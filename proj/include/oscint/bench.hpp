#ifndef OSCINT_BENCH_HPP
#define OSCINT_BENCH_HPP

#include <string>
#include <vector>

#include "oscint/integrator.hpp"
#include "oscint/problems.hpp"

namespace oscint {

enum class ErrorMetric { MaxInterval, Endpoint, PhaseShift };

struct SweepConfig {
  std::string problem;
  std::vector<std::string> methods;
  std::vector<long> n_steps;  // strictly increasing, at least two values
  ErrorMetric metric = ErrorMetric::MaxInterval;
  std::string out_path;
};

struct RunResult {
  std::string method;
  std::string problem;
  long n_steps = 0;
  int stages = 1;
  long work = 0;  // n_steps * stages
  double error = 0;
  double accuracy = 0;  // -log10(error), capped at 15
  double wall_seconds = 0;
  std::string note;  // failure reason; empty on success

  bool failed() const { return !note.empty(); }
};

// max over grid points of ||y_numeric - y_exact||_2.
double max_interval_error(const Trajectory& traj,
                          const std::function<Vec(double)>& exact);
double endpoint_error(const Trajectory& traj,
                      const std::function<Vec(double)>& exact);

// Branch-normalized |delta - pi/2| from the grid point nearest x = 14 and
// the last grid point, retrying inward when the sample pair degenerates.
double resonance_error(const Trajectory& traj, const ResonanceCase& rc);

// One run per (method, n_steps), in deterministic (method, n_steps) order.
// Per-run failures become rows with a note, never abort the sweep.
std::vector<RunResult> run_sweep(const SweepConfig& config);

void write_csv(const std::vector<RunResult>& results, const std::string& path);
std::vector<RunResult> read_csv(const std::string& path);

// Registries; sweep configs refer to these ids.  register_method is the
// plug-in hook for coefficient sets not bundled here.
std::vector<std::string> method_ids();
std::vector<std::string> problem_ids();
MethodSpec make_method(const std::string& id);
IvpProblem make_problem(const std::string& id);
void register_method(const MethodSpec& method);
bool problem_has_exact(const std::string& id);

const char* metric_name(ErrorMetric metric);
ErrorMetric parse_metric(const std::string& name);  // "max" | "endpoint" | "phase-shift"

} // namespace oscint

#endif
