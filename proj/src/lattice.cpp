#include "syztrop/lattice.hpp"

#include <cmath>

#include "syztrop/errors.hpp"

namespace syztrop {

namespace {

constexpr double kSingularTol = 1e-12;

ClosestVector cvp_impl(const Eigen::MatrixXd& basis, const Eigen::VectorXd& target,
                       const Eigen::MatrixXd& gram)
{
    const int g = static_cast<int>(basis.rows());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible() || std::abs(lu.determinant()) < kSingularTol)
        throw SingularBasisError("lattice basis is singular");
    Eigen::VectorXd x = lu.solve(target);

    // Coefficient box around the rounded solution; radius grows with how far
    // the fractional solution sits from an integer point.
    int radius = 2 + static_cast<int>(std::ceil((x - x.array().round().matrix()).lpNorm<Eigen::Infinity>()));
    Eigen::VectorXi center(g);
    for (int i = 0; i < g; ++i)
        center(i) = static_cast<int>(std::llround(x(i)));

    ClosestVector best;
    best.coeffs = Eigen::VectorXi::Zero(g);
    best.distance = -1.0;

    Eigen::VectorXi n(g);
    // Odometer in lexicographic order so the first of tied minima wins.
    std::vector<int> digit(g, -radius);
    while (true) {
        for (int i = 0; i < g; ++i)
            n(i) = center(i) + digit[i];
        Eigen::VectorXd diff = target - basis * n.cast<double>();
        double d2 = diff.dot(gram * diff);
        if (best.distance < 0.0 || d2 < best.distance) {
            best.distance = d2;
            best.coeffs = n;
        }
        int pos = g - 1;
        while (pos >= 0 && digit[pos] == radius) {
            digit[pos] = -radius;
            --pos;
        }
        if (pos < 0)
            break;
        ++digit[pos];
    }
    best.distance = std::sqrt(best.distance);
    return best;
}

}  // namespace

ClosestVector closest_lattice_vector(const Eigen::MatrixXd& basis, const Eigen::VectorXd& target)
{
    return cvp_impl(basis, target,
                    Eigen::MatrixXd::Identity(basis.rows(), basis.cols()));
}

ClosestVector closest_lattice_vector(const Eigen::MatrixXd& basis, const Eigen::VectorXd& target,
                                     const Eigen::MatrixXd& gram)
{
    return cvp_impl(basis, target, gram);
}

TorusPoint TorusPoint::reduce(const Eigen::MatrixXd& lattice, const Eigen::VectorXd& coords)
{
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lattice);
    if (!lu.isInvertible())
        throw SingularBasisError("torus lattice is singular");
    Eigen::VectorXd c = lu.solve(coords);
    Eigen::VectorXd frac = c - c.array().floor().matrix();
    TorusPoint p;
    p.lattice = lattice;
    p.coords = lattice * frac;
    return p;
}

double torus_distance(const TorusPoint& a, const Eigen::VectorXd& b)
{
    return closest_lattice_vector(a.lattice, a.coords - b).distance;
}

double torus_distance(const TorusPoint& a, const Eigen::VectorXd& b, const Eigen::MatrixXd& gram)
{
    return closest_lattice_vector(a.lattice, a.coords - b, gram).distance;
}

bool torus_points_equal(const TorusPoint& a, const TorusPoint& b, double tol)
{
    return torus_distance(a, b.coords) <= tol;
}

}  // namespace syztrop
