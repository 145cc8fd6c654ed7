#pragma once

#include <stdexcept>

namespace labormkt {

// Argument outside the model's domain (negative tightness, theta at or past
// the recruiting boundary, unemployment rate outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A root finder could not bracket a sign change or an optimum does not exist
// in the admissible range.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calibration targets cannot be inverted into a valid parameter block.
class InfeasibleTargets : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace labormkt
