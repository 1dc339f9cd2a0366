#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "syztrop/degeneration.hpp"
#include "syztrop/lattice.hpp"

namespace syztrop {

/// Everything the fibration carries at a fixed t: the base lattice, both
/// tropical affine structures, the McLean and Kahler Gram matrices and the
/// normalized (u-coordinate) forms whose limit is (B, B^{-1}).
struct FiberBase {
    double t = 0.0;
    double s = 0.0;
    Eigen::MatrixXd beta_lattice;       // base lattice in y-coordinates
    Eigen::MatrixXd grade_a;            // integral points of nabla_A
    Eigen::MatrixXd grade_b;            // integral points of nabla_B (s * Id)
    Eigen::MatrixXd mclean;             // McLean Gram in y-coordinates
    Eigen::MatrixXd kahler;             // gamma_{i,j}
    Eigen::MatrixXd normalized_lattice; // (1/s) beta_prime, u-coordinates
    Eigen::MatrixXd normalized_gram;    // ((1/s) beta_prime)^{-1}
};

FiberBase fiber_base(const DegenerationData& D, double t);

struct FiberImage {
    TorusPoint raw;         // y-coordinates mod beta lattice
    TorusPoint normalized;  // u-coordinates mod (1/s) beta_prime lattice
};

/// Fiber map at a point of (C*)^g given by its coordinates; depends only on
/// the moduli |Z_i|.
FiberImage fiber_map(const DegenerationData& D, double t,
                     const std::vector<std::complex<double>>& Z);

/// Same map with log|Z_i| supplied directly; avoids overflow for points
/// prescribed by exponents.
FiberImage fiber_map_logabs(const DegenerationData& D, double t,
                            const Eigen::VectorXd& log_abs_Z);

/// (grade_a basis, grade_b basis) of the two affine structures.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> affine_structures(const DegenerationData& D, double t);

Eigen::MatrixXd mclean_gram(const DegenerationData& D, double t);
Eigen::MatrixXd kahler_gram(const DegenerationData& D, double t);

/// (normalized lattice, normalized Gram) in u-coordinates.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> normalized_base(const DegenerationData& D, double t);

}  // namespace syztrop
