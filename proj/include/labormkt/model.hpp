#pragma once

#include "labormkt/errors.hpp"

namespace labormkt {

// Structural parameters and exogenous state of the matching market.
// All rates are quarterly. Defaults are the rounded values of the printed
// calibration table; calibrate() produces the unrounded block.
struct ModelParameters {
    double alpha = 0.35;    // decreasing returns to labor, in [0,1); 0 selects the constant-returns (DMP) mode
    double eta = 0.48;      // matching elasticity w.r.t. unemployment, in (0,1)
    double mu = 2.16;       // matching efficacy, per quarter
    double kappa = 1.0;     // recruiters per vacancy
    double lambda = 0.097;  // job-separation rate, per quarter
    double gamma = 0.3;     // wage rigidity w.r.t. productivity, in (0,1]
    double beta = 0.0;      // wage flexibility w.r.t. labor force, in [0, alpha]
    double omega = 0.64;    // wage-norm level
    double a = 1.0;         // labor productivity
    double H = 1.0;         // labor-force size

    // Throws std::invalid_argument when an invariant is violated. Operations
    // assume a validated block and do not re-check.
    void validate() const;

    // Constant returns to labor: labor demand is degenerate and tightness is
    // pinned by dmp_tightness() instead of the supply-demand intersection.
    bool constant_returns() const { return alpha == 0.0; }
};

// Everything implied by one tightness value.
struct MarketOutcome {
    double theta; // labor-market tightness V/U
    double f;     // job-finding rate, per quarter
    double q;     // vacancy-filling rate, per quarter
    double u;     // unemployment rate
    double l;     // employment rate, 1 - u
    double tau;   // recruiter-producer ratio R/P
    double L;     // employment level
    double P;     // producers, L/(1+tau)
    double R;     // recruiters, L - P
    double v;     // vacancy rate, theta * u
    double w;     // real wage
    double pi;    // aggregate real profits
};

// Rate at which an unemployed worker finds a job: mu * theta^(1-eta).
// Zero at theta = 0; strictly increasing.
double job_finding_rate(const ModelParameters& p, double theta);

// Rate at which a vacancy is filled: mu * theta^(-eta).
// Diverges as theta -> 0+, so theta must be strictly positive.
double vacancy_filling_rate(const ModelParameters& p, double theta);

// Unemployment rate under balanced flows: lambda / (lambda + f(theta)).
double unemployment_rate(const ModelParameters& p, double theta);

// Share of each firm's workforce tied up in recruiting:
// lambda*kappa / (q(theta) - lambda*kappa). Defined on [0, theta_tau) where
// q(theta_tau) = lambda*kappa; diverges at the boundary.
double recruiter_producer_ratio(const ModelParameters& p, double theta);

// The tightness theta_tau at which every worker would be a recruiter:
// (mu / (lambda*kappa))^(1/eta).
double tightness_upper_bound(const ModelParameters& p);

// Vacancy rate consistent with a given unemployment rate along balanced
// flows: ((lambda/mu) * (1-u) / u^eta)^(1/(1-eta)).
double beveridge_vacancy(const ModelParameters& p, double u);

// Elasticity of the vacancy-unemployment locus at unemployment rate u:
// (eta + u/(1-u)) / (1 - eta).
double beveridge_elasticity(double eta, double u);

} // namespace labormkt
