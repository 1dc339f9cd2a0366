#include "syztrop/degeneration.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "syztrop/errors.hpp"

namespace syztrop {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

bool PolarizationType::divisibility_chain_ok() const
{
    for (long e : diag)
        if (e <= 0)
            return false;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        if (diag[i + 1] % diag[i] != 0)
            return false;
    return true;
}

Eigen::MatrixXd PolarizationType::to_eigen() const
{
    const int g = dimension();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g, g);
    for (int i = 0; i < g; ++i)
        m(i, i) = static_cast<double>(diag[i]);
    return m;
}

bool is_positive_definite(const Eigen::MatrixXd& m, double pivot_tol)
{
    // Plain Cholesky with an explicit pivot floor.
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        double d = m(j, j);
        for (int k = 0; k < j; ++k)
            d -= L(j, k) * L(j, k);
        if (d <= pivot_tol)
            return false;
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double v = m(i, j);
            for (int k = 0; k < j; ++k)
                v -= L(i, k) * L(j, k);
            L(i, j) = v / L(j, j);
        }
    }
    return true;
}

std::vector<double> default_schedule(double radius)
{
    std::vector<double> out;
    for (int k = 2; k <= 8; ++k) {
        double t = std::pow(10.0, -k);
        if (t < radius)
            out.push_back(t);
    }
    return out;
}

ValidationReport validate_degeneration(int g, PolarizationType E,
                                       std::vector<std::vector<LaurentGerm>> Q,
                                       double sample_radius)
{
    ValidationReport report;
    auto issue = [&](const std::string& s) { report.issues.push_back(s); };

    if (g <= 0)
        issue("dimension g must be positive");
    if (E.dimension() != g)
        issue("polarization has wrong length");
    else if (!E.divisibility_chain_ok())
        issue("polarization violates e_i | e_{i+1} with e_i > 0");
    if (!(sample_radius > 0.0 && sample_radius < 1.0))
        issue("sample_radius must lie in (0,1)");
    if (static_cast<int>(Q.size()) != g)
        issue("q matrix has wrong number of rows");
    else
        for (int i = 0; i < g; ++i)
            if (static_cast<int>(Q[i].size()) != g)
                issue("q matrix row " + std::to_string(i) + " has wrong length");
    if (!report.ok())
        return report;

    bool vals_ok = true;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (Q[i][j].is_zero()) {
                issue("q[" + std::to_string(i) + "][" + std::to_string(j) + "] is the zero germ");
                vals_ok = false;
            }
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (!(Q[i][j] == Q[j][i]))
                issue("q matrix is not symmetric at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    if (!vals_ok)
        return report;

    IMat B(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            B.at(i, j) = Q[i][j].valuation();
    if (!B.is_symmetric())
        issue("valuation matrix B is not symmetric");
    else if (!B.is_positive_definite())
        issue("valuation matrix B is not positive definite");
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (B.at(i, j) % BigInt(E.diag[i]) != 0)
                issue("e_" + std::to_string(i + 1) + " does not divide B[" + std::to_string(i) +
                      "][" + std::to_string(j) + "]");

    DegenerationData D;
    D.g = g;
    D.E = std::move(E);
    D.Q = std::move(Q);
    D.sample_radius = sample_radius;

    if (report.ok()) {
        for (double t : default_schedule(sample_radius)) {
            try {
                PeriodSample ps = period_sample(D, t);
                (void)ps;
            } catch (const NotPositiveDefiniteError&) {
                std::ostringstream os;
                os << "Im Omega' is not positive definite at t = " << t;
                issue(os.str());
            } catch (const EvaluationZeroError&) {
                std::ostringstream os;
                os << "some q_{i,j} vanishes at t = " << t;
                issue(os.str());
            }
        }
    }

    if (report.ok())
        report.data = std::move(D);
    return report;
}

IMat b_matrix(const DegenerationData& D)
{
    IMat B(D.g);
    for (int i = 0; i < D.g; ++i)
        for (int j = 0; j < D.g; ++j)
            B.at(i, j) = D.q(i, j).valuation();
    return B;
}

PeriodSample period_sample(const DegenerationData& D, double t)
{
    if (!(t > 0.0 && t < D.sample_radius))
        throw DomainError("sample point must lie on the ray inside (0, sample_radius)");
    const int g = D.g;
    PeriodSample ps;
    ps.t = t;
    ps.s = -std::log(t) / kTwoPi;
    ps.omega_prime.resize(g, g);
    ps.beta_prime.resize(g, g);
    const std::complex<double> two_pi_i(0.0, kTwoPi);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            std::complex<double> lg = D.q(i, j).log_ray(t);
            ps.omega_prime(i, j) = lg / two_pi_i;
            ps.beta_prime(i, j) = -lg.real() / kTwoPi;
        }
    if (!is_positive_definite(ps.beta_prime))
        throw NotPositiveDefiniteError("Im Omega' is not positive definite at this t");
    Eigen::MatrixXd Einv = D.E.to_eigen().inverse();
    ps.beta = Einv * ps.beta_prime;
    return ps;
}

}  // namespace syztrop
