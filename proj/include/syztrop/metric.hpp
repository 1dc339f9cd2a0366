#pragma once

#include <Eigen/Dense>
#include <vector>

#include "syztrop/degeneration.hpp"
#include "syztrop/exactmat.hpp"

namespace syztrop {

/// Rescaled flat potential per fiber: y^T beta_prime(t)^{-1} y.
double cubic_potential(const DegenerationData& D, double t, const Eigen::VectorXd& y);

/// Limit potential w^T B^{-1} w with exact rational inverse.
double na_potential(const IMat& B, const Eigen::VectorXd& w);

struct PotentialSample {
    double t = 0.0;
    double s = 0.0;
    double phi_rescaled = 0.0;  // cubic_potential(D, t, s w) / s
    double phi_na = 0.0;
    double deviation = 0.0;
    double bound = 0.0;  // C(w)/|log t| from the subleading coefficients
};

struct MetricLimitReport {
    std::vector<PotentialSample> samples;
    bool monotone = false;
    bool bounded = false;
    bool pass = false;
};

/// Convergence of the rescaled fiber potentials to the limit potential along
/// the schedule; exact identity for unit-coefficient monomial data.
MetricLimitReport metric_limit_check(const DegenerationData& D, const Eigen::VectorXd& w,
                                     const std::vector<double>& schedule);

}  // namespace syztrop
