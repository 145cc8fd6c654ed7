#pragma once

#include "labormkt/model.hpp"

namespace labormkt {

// Wage norm: omega * a^(1-gamma) * H^(-beta). H is the total labor force,
// including any migrants, so the beta channel sees arrivals.
double wage_norm(const ModelParameters& p);

// Employment level consistent with balanced flows: H * f(theta)/(lambda + f(theta)).
// Strictly increasing in theta and linear in H.
double labor_supply(const ModelParameters& p, double theta);

// Profit-maximizing employment at a given tightness:
//   [ (1-alpha) * a^gamma * H^beta / ((1+tau)^(1-alpha) * omega) ]^(1/alpha).
// Strictly decreasing in theta (job rationing). Requires alpha > 0; the
// constant-returns case is handled by dmp_tightness instead.
double labor_demand(const ModelParameters& p, double theta);

// Producers implied by the firm's first-order condition at an explicit wage:
//   [ (1-alpha)*a / ((1+tau(theta)) * w) ]^(1/alpha).
// Satisfies labor_demand = (1+tau) * producers when w is the wage norm.
double producers_from_focs(const ModelParameters& p, double theta, double wage);

// Tightness in the constant-returns (alpha = 0) market, where the demand side
// collapses to (1+tau(theta)) * w = a. The root is unique because tau rises
// from 0 to infinity on (0, theta_tau). Independent of H. Throws SolverError
// when the wage norm is at or above productivity (no profitable hiring).
double dmp_tightness(const ModelParameters& p);

} // namespace labormkt
