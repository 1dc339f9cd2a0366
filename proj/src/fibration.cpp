#include "syztrop/fibration.hpp"

#include <cmath>
#include <numbers>

#include "syztrop/errors.hpp"

namespace syztrop {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

FiberBase fiber_base(const DegenerationData& D, double t)
{
    PeriodSample ps = period_sample(D, t);
    Eigen::MatrixXd E = D.E.to_eigen();
    Eigen::MatrixXd Einv = E.inverse();
    Eigen::MatrixXd beta_prime_inv = ps.beta_prime.inverse();

    FiberBase fb;
    fb.t = t;
    fb.s = ps.s;
    fb.beta_lattice = ps.beta;
    fb.grade_a = Einv * ps.beta_prime * Einv;
    fb.grade_b = ps.s * Eigen::MatrixXd::Identity(D.g, D.g);
    // True division (not reciprocal multiply) so unit-monomial data gives the
    // integer lattice bit-exactly.
    fb.mclean = (E * beta_prime_inv * E) / ps.s;
    fb.kahler = E * beta_prime_inv * E;
    fb.normalized_lattice = ps.beta_prime / ps.s;
    fb.normalized_gram = ps.s * beta_prime_inv;
    return fb;
}

FiberImage fiber_map_logabs(const DegenerationData& D, double t, const Eigen::VectorXd& log_abs_Z)
{
    FiberBase fb = fiber_base(D, t);
    const int g = D.g;
    const double log_t = std::log(t);
    Eigen::VectorXd y(g), u(g);
    for (int i = 0; i < g; ++i) {
        double e = static_cast<double>(D.E.diag[i]);
        y(i) = -e / kTwoPi * log_abs_Z(i);
        u(i) = e * log_abs_Z(i) / log_t;
    }
    FiberImage img;
    img.raw = TorusPoint::reduce(fb.beta_lattice, y);
    img.normalized = TorusPoint::reduce(fb.normalized_lattice, u);
    return img;
}

FiberImage fiber_map(const DegenerationData& D, double t,
                     const std::vector<std::complex<double>>& Z)
{
    if (static_cast<int>(Z.size()) != D.g)
        throw DomainError("point has wrong dimension");
    Eigen::VectorXd log_abs(D.g);
    for (int i = 0; i < D.g; ++i) {
        double a = std::abs(Z[i]);
        if (a == 0.0)
            throw DomainError("fiber map requires nonzero coordinates");
        log_abs(i) = std::log(a);
    }
    return fiber_map_logabs(D, t, log_abs);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> affine_structures(const DegenerationData& D, double t)
{
    FiberBase fb = fiber_base(D, t);
    return {fb.grade_a, fb.grade_b};
}

Eigen::MatrixXd mclean_gram(const DegenerationData& D, double t)
{
    return fiber_base(D, t).mclean;
}

Eigen::MatrixXd kahler_gram(const DegenerationData& D, double t)
{
    return fiber_base(D, t).kahler;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> normalized_base(const DegenerationData& D, double t)
{
    FiberBase fb = fiber_base(D, t);
    return {fb.normalized_lattice, fb.normalized_gram};
}

}  // namespace syztrop
