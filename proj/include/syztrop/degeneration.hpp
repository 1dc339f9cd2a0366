#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "syztrop/exactmat.hpp"
#include "syztrop/germ.hpp"

namespace syztrop {

/// Elementary divisors e_1 | e_2 | ... | e_g of the polarization.
struct PolarizationType {
    std::vector<long> diag;

    int dimension() const { return static_cast<int>(diag.size()); }
    bool divisibility_chain_ok() const;
    Eigen::MatrixXd to_eigen() const;
};

/// Validated degeneration datum: polarization type plus the symmetric matrix
/// of germs q_{i,j}. Construct through validate_degeneration.
struct DegenerationData {
    int g = 0;
    PolarizationType E;
    std::vector<std::vector<LaurentGerm>> Q;
    double sample_radius = 0.5;

    const LaurentGerm& q(int i, int j) const { return Q[i][j]; }
};

struct ValidationReport {
    std::vector<std::string> issues;
    std::optional<DegenerationData> data;

    bool ok() const { return issues.empty(); }
};

/// Checks every structural hypothesis (germ symmetry, positive-definite
/// integral valuation matrix, polarization divisibility, positive-definite
/// imaginary periods on the sample schedule) and returns either the datum or
/// the full list of violations.
ValidationReport validate_degeneration(int g, PolarizationType E,
                                       std::vector<std::vector<LaurentGerm>> Q,
                                       double sample_radius = 0.5);

/// B_{i,j} = val_t q_{i,j}; symmetric positive definite for valid data.
IMat b_matrix(const DegenerationData& D);

/// Period data at a fixed real t on the ray.
struct PeriodSample {
    double t = 0.0;
    double s = 0.0;                    // (-log t) / 2 pi
    Eigen::MatrixXcd omega_prime;      // (1 / 2 pi i) log q_{i,j}(t)
    Eigen::MatrixXd beta_prime;        // Im omega_prime
    Eigen::MatrixXd beta;              // E^{-1} beta_prime
};

PeriodSample period_sample(const DegenerationData& D, double t);

/// Cholesky-based positive definiteness with a pivot tolerance.
bool is_positive_definite(const Eigen::MatrixXd& m, double pivot_tol = 1e-10);

/// Default ray sampling schedule t = 10^{-k}, k = 2..8, clipped to (0, radius).
std::vector<double> default_schedule(double radius = 0.5);

}  // namespace syztrop
