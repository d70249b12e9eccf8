#ifndef OSCINT_ERRORS_HPP
#define OSCINT_ERRORS_HPP

#include <stdexcept>

namespace oscint {

// Step size incompatible with the method's coefficient domain (v = w*h out of range).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Phase-lag denominator vanished at the requested v.
class DegenerateDenominator : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Phase lag is zero to within evaluation noise over the whole fit window
// (the expected outcome for a phase-fitted method: infinite order).
class IdenticallyZero : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Starting window does not fit inside the integration interval.
class StepTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fixed-point corrector failed to meet tolerance within the iteration cap.
class CorrectorDiverged : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Closed-form linear corrector has a (near-)zero denominator.
class SingularLinearSolve : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Phase-shift sample pair is nearly k-resonant; retry with another grid point.
class DegenerateSample : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace oscint

#endif
