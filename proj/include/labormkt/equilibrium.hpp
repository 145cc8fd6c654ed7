#pragma once

#include "labormkt/model.hpp"

namespace labormkt {

// Bracketing and stopping rules for the tightness solvers.
struct SolverSettings {
    double theta_lo = 1e-9;               // lower end of the bracket
    double theta_hi_fraction = 1.0 - 1e-9; // upper end, as a fraction of theta_tau
    double tolerance = 1e-12;             // relative theta tolerance
    int max_iterations = 200;

    void validate(double theta_tau) const;
};

// The unique tightness where labor supply meets labor demand. Log excess
// supply is strictly increasing in theta, so plain bisection on [theta_lo,
// theta_hi] is safe; a missing sign change raises SolverError with the
// endpoint gaps.
double solve_tightness(const ModelParameters& p, const SolverSettings& s = {});

// All market quantities implied by a tightness value, with employment read
// off the balanced-flow (supply) side. theta must be in (0, theta_tau).
MarketOutcome market_outcome_at(const ModelParameters& p, double theta);

// market_outcome_at evaluated at the solved equilibrium tightness.
MarketOutcome equilibrium_outcome(const ModelParameters& p, const SolverSettings& s = {});

// The productivity that places the equilibrium at target_theta, in closed
// form: a^gamma = (1+tau)^(1-alpha) * omega * Ls^alpha / ((1-alpha) * H^beta).
double invert_productivity(const ModelParameters& p, double target_theta);

} // namespace labormkt
