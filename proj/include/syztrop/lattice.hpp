#pragma once

#include <Eigen/Dense>
#include <vector>

namespace syztrop {

struct ClosestVector {
    Eigen::VectorXi coeffs;
    double distance = 0.0;
};

/// Nearest lattice point basis * n to target, brute force over a coefficient
/// box around basis^{-1} * target; distance in the metric of `gram`
/// (identity when omitted). Ties go to the lexicographically smallest
/// coefficient vector.
ClosestVector closest_lattice_vector(const Eigen::MatrixXd& basis,
                                     const Eigen::VectorXd& target);
ClosestVector closest_lattice_vector(const Eigen::MatrixXd& basis,
                                     const Eigen::VectorXd& target,
                                     const Eigen::MatrixXd& gram);

/// Point of the real torus R^g / (lattice columns) Z^g with a canonical
/// representative in the fundamental parallelepiped.
struct TorusPoint {
    Eigen::VectorXd coords;
    Eigen::MatrixXd lattice;

    static TorusPoint reduce(const Eigen::MatrixXd& lattice, const Eigen::VectorXd& coords);
};

double torus_distance(const TorusPoint& a, const Eigen::VectorXd& b);
double torus_distance(const TorusPoint& a, const Eigen::VectorXd& b,
                      const Eigen::MatrixXd& gram);
bool torus_points_equal(const TorusPoint& a, const TorusPoint& b, double tol = 1e-9);

}  // namespace syztrop
