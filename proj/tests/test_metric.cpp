#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "syztrop/metric.hpp"
#include "test_util.hpp"

using namespace syztrop;
using namespace syztrop::testutil;

namespace {

const double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> metric_schedule()
{
    std::vector<double> out;
    for (int k = 1; k <= 8; ++k)
        out.push_back(std::pow(10.0, -k));
    return out;
}

}  // namespace

TEST_CASE("cubic potential closed forms")
{
    DegenerationData D = tate();
    Eigen::VectorXd one(1), zero(1);
    one << 1.0;
    zero << 0.0;
    CHECK(cubic_potential(D, std::exp(-kTwoPi), one) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cubic_potential(D, 0.1, zero) == 0.0);

    DegenerationData P = tate_perturbed();
    double s = -std::log(0.1) / kTwoPi;
    double bp = (-std::log(0.1) - std::log(1.1)) / kTwoPi;
    Eigen::VectorXd y(1);
    y << s;
    CHECK(cubic_potential(P, 0.1, y) == doctest::Approx(s * s / bp).epsilon(1e-12));
}

TEST_CASE("non-archimedean potential closed forms")
{
    Eigen::VectorXd w1(1);
    w1 << 1.0;
    CHECK(na_potential(imat({{1}}), w1) == 1.0);
    CHECK(na_potential(imat({{2}}), w1) == 0.5);

    Eigen::VectorXd w2(2);
    w2 << 1.0, 1.0;
    CHECK(na_potential(hexagonal(), w2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("property: potentials are positive definite quadratic forms")
{
    std::mt19937 rng(20240826);
    std::uniform_real_distribution<double> comp(-3.0, 3.0);
    DegenerationData hex = monomial_family(hexagonal());
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd w(2);
        w << comp(rng), comp(rng);
        if (w.norm() < 1e-6)
            continue;
        CHECK(na_potential(hexagonal(), w) > 0.0);
        CHECK(cubic_potential(hex, 0.01, w) > 0.0);
        // Scaling equivariance.
        double lam = comp(rng);
        double lhs = cubic_potential(hex, 0.01, lam * w);
        double rhs = lam * lam * cubic_potential(hex, 0.01, w);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("metric limit is an identity for unit monomial data")
{
    DegenerationData D = tate();
    Eigen::VectorXd w(1);
    w << 1.0;
    MetricLimitReport r = metric_limit_check(D, w, metric_schedule());
    CHECK(r.pass);
    for (const PotentialSample& s : r.samples)
        CHECK(s.deviation <= 1e-12);

    DegenerationData hex = monomial_family(hexagonal());
    std::mt19937 rng(20240827);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd v(2);
        v << comp(rng), comp(rng);
        MetricLimitReport rh = metric_limit_check(hex, v, metric_schedule());
        CHECK(rh.pass);
        for (const PotentialSample& s : rh.samples)
            CHECK(s.deviation <= 1e-12);
    }
}

TEST_CASE("metric limit convergence for perturbed data")
{
    DegenerationData P = tate_perturbed();
    Eigen::VectorXd w(1);
    w << 1.0;
    MetricLimitReport r = metric_limit_check(P, w, metric_schedule());
    CHECK(r.pass);
    CHECK(r.monotone);
    CHECK(r.bounded);

    // Closed form at t = 0.1: s / betaPrime - 1 = ln(0.1)/ln(0.11) - 1.
    double expected = std::log(0.1) / std::log(0.11) - 1.0;
    CHECK(r.samples.front().t == doctest::Approx(0.1));
    CHECK(r.samples.front().deviation == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.samples.front().phi_na == 1.0);
}
