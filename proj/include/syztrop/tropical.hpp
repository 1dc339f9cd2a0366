#pragma once

#include <Eigen/Dense>
#include <vector>

#include "syztrop/degeneration.hpp"
#include "syztrop/exactmat.hpp"
#include "syztrop/lattice.hpp"

namespace syztrop {

/// The Gromov-Hausdorff / non-archimedean limit base (R^g/BZ^g, B^{-1}).
struct GHLimitBase {
    IMat B;
    RatMat gram;  // exact B^{-1}

    Eigen::MatrixXd lattice() const { return B.to_eigen(); }
    Eigen::MatrixXd gram_eigen() const { return gram.to_eigen(); }
};

GHLimitBase gh_limit(const DegenerationData& D);

/// Valuation vector of a germ-coordinate point, reduced mod B Z^g.
TorusPoint tropicalize_point(const DegenerationData& D, const std::vector<LaurentGerm>& Z);

/// Sequence of torus points with prescribed log-moduli along a t-schedule.
struct MSSequence {
    Eigen::VectorXd target;                  // c
    std::vector<double> schedule;            // t_k, strictly decreasing to 0
    std::vector<Eigen::VectorXd> log_moduli; // log|Z_i^{(k)}|
    std::vector<LaurentGerm> perturbations;  // empty when unperturbed
    bool valid = false;                      // log|Z_i|/log t_k -> c_i
};

MSSequence sample_ms_sequence(const DegenerationData& D, const Eigen::VectorXd& c,
                              const std::vector<double>& schedule,
                              const std::vector<LaurentGerm>& perturbations = {});

struct ConvergenceReport {
    std::vector<double> distances;  // torus distance to the limit point per k
    double rate = 0.0;              // least-squares slope of log d vs log(1/|log t|)
    double bound_constant = 0.0;    // C in the bound C/|log t_k|
    bool pass = false;
};

/// Verifies that the normalized fiber images of the sequence converge to the
/// class of E c in (R^g/BZ^g, B^{-1}) at rate 1/|log t|.
ConvergenceReport hybrid_convergence(const DegenerationData& D, const MSSequence& seq);

struct LimitConsistencyReport {
    std::vector<double> schedule;
    std::vector<double> lattice_deviation;  // ||(1/s) beta' - B||_inf
    std::vector<double> gram_deviation;     // ||s beta'^{-1} - B^{-1}||_inf
    bool monotone = false;
    bool pass = false;
    double final_tolerance = 1e-6;
};

/// Both fibration limits computed and compared: normalized_base along the
/// schedule against (B, B^{-1}).
LimitConsistencyReport limit_consistency(const DegenerationData& D,
                                         const std::vector<double>& schedule,
                                         double final_tolerance = 1e-6);

}  // namespace syztrop
