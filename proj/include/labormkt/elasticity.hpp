#pragma once

#include "labormkt/equilibrium.hpp"
#include "labormkt/model.hpp"

namespace labormkt {

// Point elasticities of the equilibrium at a given tightness. semi_u_* are
// semi-elasticities du/dln(.), in unemployment-rate units (fractions).
struct ElasticityReport {
    double eps_s_theta; // labor supply w.r.t. tightness, (1-eta)*u
    double eps_d_theta; // labor demand w.r.t. tightness, -((1-alpha)/alpha)*eta*tau

    double eps_theta_H; // tightness w.r.t. labor force
    double eps_f_H;     // job-finding rate w.r.t. labor force
    double eps_l_H;     // employment rate w.r.t. labor force
    double semi_u_H;    // du/dlnH

    double eps_theta_a; // tightness w.r.t. productivity
    double eps_f_a;     // job-finding rate w.r.t. productivity
    double eps_l_a;     // employment rate w.r.t. productivity
    double eps_q_a;     // vacancy-filling rate w.r.t. productivity
    double eps_tau_a;   // recruiter-producer ratio w.r.t. productivity
    double semi_u_a;    // du/dlna

    double unemployed_per_100_arrivals;   // 100 * du/dlnH
    double public_employment_multiplier;  // 1 / (1 - eps_d/eps_s)
};

// Labor-force block of the report.
struct MigrationElasticities {
    double eps_theta_H;
    double eps_f_H;
    double eps_l_H;
    double semi_u_H;
};

// Productivity block of the report.
struct ProductivityElasticities {
    double eps_theta_a;
    double eps_f_a;
    double eps_l_a;
    double eps_q_a;
    double eps_tau_a;
    double semi_u_a;
};

// Elasticities of supply and demand with respect to tightness.
// eps_s > 0 and eps_d < 0 whenever 0 < theta < theta_tau and alpha > 0.
void supply_demand_elasticities(const ModelParameters& p, double theta,
                                double& eps_s, double& eps_d);

// How the equilibrium reacts to a labor-force change. The wage response
// scales every entry by the common factor (1 - beta/alpha): the factor
// multiplies a beta-independent base, so the muting is exact.
MigrationElasticities migration_elasticities(const ModelParameters& p, double theta);

// Local workers pushed into unemployment per 100 arrivals: 100 * du/dlnH.
double migration_induced_unemployment(const ModelParameters& p, double theta);

// How the equilibrium reacts to a productivity change.
ProductivityElasticities productivity_elasticities(const ModelParameters& p, double theta);

// 1 / (1 - eps_d/eps_s): equals -eps_l_H when beta = 0. Tends to 1 as
// theta -> 0 and to 0 as theta -> theta_tau.
double public_employment_multiplier(const ModelParameters& p, double theta);

// Full report at one tightness.
ElasticityReport elasticity_report(const ModelParameters& p, double theta);

// Largest relative gaps between the analytic elasticities and central finite
// differences of the re-solved equilibrium map.
struct ElasticityCheck {
    double dev_eps_theta_H;
    double dev_eps_l_H;
    double dev_semi_u_H;
    double dev_eps_theta_a;
    double dev_eps_l_a;
    double max_rel_deviation;
};

// Places the equilibrium at theta (by inverting productivity), perturbs lnH
// and lna by +/- step, re-solves, and compares the finite differences against
// the analytic formulas at the base point.
ElasticityCheck check_elasticities_numerically(const ModelParameters& p, double theta,
                                               double step = 1e-5,
                                               const SolverSettings& s = {});

} // namespace labormkt
