#ifndef OSCINT_PROBLEMS_HPP
#define OSCINT_PROBLEMS_HPP

#include <cmath>
#include <vector>

#include "oscint/integrator.hpp"

namespace oscint {

struct WoodsSaxonParams {
  double u0 = -50.0;      // well depth
  double a = 0.6;         // diffuseness
  double x0 = 7.0;        // radius
  double u1 = 250.0 / 3;  // -u0/a

  double u1_from_definition() const { return -u0 / a; }
};

// One resonance energy of the scattering problem; l = 0 throughout.
struct ResonanceCase {
  double energy = 0;
  int l = 0;

  double k() const { return std::sqrt(energy); }
};

struct PhaseShiftResult {
  double delta = 0;      // arctangent branch, (-pi/2, pi/2]
  double tan_delta = 0;
  double abs_error = 0;  // branch-normalized distance of delta from +-pi/2
};

// The five benchmark problems.
IvpProblem franco_palacios();  // u'' + u = eps cos(psi x), v'' + v = eps sin(psi x)
IvpProblem inhomogeneous();    // y'' = -100 y + 99 sin t
IvpProblem two_body();         // planar Kepler orbit on the unit circle
IvpProblem duffing();          // y'' = -y - y^3 + 0.002 cos(1.01 t)
IvpProblem schrodinger_problem(const ResonanceCase& rc);  // radial equation, Woods-Saxon well

std::vector<ResonanceCase> resonance_cases();  // the three tabulated energies

double woods_saxon(double x, const WoodsSaxonParams& params = {});

// Scattering phase shift from two asymptotic-region samples i < j of a
// radial trajectory (Eq. with S = sin(kx), C = -cos(kx) for l = 0).
// delta = pi/2 signals a resonance; abs_error measures the cotangent
// distance from it, which stays well-conditioned as tan(delta) -> inf.
PhaseShiftResult phase_shift(const Trajectory& traj, const ResonanceCase& rc,
                             long i, long j);

} // namespace oscint

#endif
