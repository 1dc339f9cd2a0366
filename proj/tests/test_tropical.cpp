#include <doctest.h>

#include <cmath>
#include <random>

#include "syztrop/crystal.hpp"
#include "syztrop/errors.hpp"
#include "syztrop/fibration.hpp"
#include "syztrop/tropical.hpp"
#include "test_util.hpp"

using namespace syztrop;
using namespace syztrop::testutil;

TEST_CASE("GH limit base")
{
    GHLimitBase l1 = gh_limit(tate());
    CHECK(l1.B == imat({{1}}));
    CHECK(l1.gram.at(0, 0) == Rational(1));

    GHLimitBase lh = gh_limit(monomial_family(hexagonal()));
    CHECK(lh.B == hexagonal());
    CHECK(lh.gram.at(0, 0) == Rational(2, 3));
    CHECK(lh.gram.at(0, 1) == Rational(-1, 3));
    CHECK((RatMat(lh.B) * lh.gram) == RatMat::identity(2));
}

TEST_CASE("tropicalization reads valuations mod the B-lattice")
{
    DegenerationData hex = monomial_family(hexagonal());
    std::vector<LaurentGerm> Z = {
        real_germ({{2, 1}, {3, 1}}),
        LaurentGerm::monomial(-1, GaussianRational(3L)),
    };
    TorusPoint p = tropicalize_point(hex, Z);
    Eigen::VectorXd vals(2);
    vals << 2.0, -1.0;
    CHECK(torus_distance(p, vals) <= 1e-9);

    std::vector<LaurentGerm> ones = {LaurentGerm::constant(GaussianRational(1L)),
                                     LaurentGerm::constant(GaussianRational(1L))};
    TorusPoint origin = tropicalize_point(hex, ones);
    CHECK(origin.coords.lpNorm<Eigen::Infinity>() == 0.0);

    CHECK_THROWS_AS(tropicalize_point(hex, {LaurentGerm::zero(), LaurentGerm::zero()}),
                    ZeroGermError);
}

TEST_CASE("property: tropicalization is invariant under period shifts")
{
    DegenerationData hex = monomial_family(hexagonal());
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<long> shift(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<LaurentGerm> Z = {random_germ(rng), random_germ(rng)};
        long m[2] = {shift(rng), shift(rng)};
        std::vector<LaurentGerm> W = Z;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[j] != 0)
                    W[i] = W[i] * hex.q(i, j).pow(m[j]);
        CHECK(torus_points_equal(tropicalize_point(hex, Z), tropicalize_point(hex, W)));
    }
}

TEST_CASE("property: tropicalization is a homomorphism")
{
    DegenerationData hex = monomial_family(hexagonal());
    std::mt19937 rng(20240820);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<LaurentGerm> Z = {random_germ(rng), random_germ(rng)};
        std::vector<LaurentGerm> W = {random_germ(rng), random_germ(rng)};
        std::vector<LaurentGerm> ZW = {Z[0] * W[0], Z[1] * W[1]};
        TorusPoint a = tropicalize_point(hex, Z);
        TorusPoint b = tropicalize_point(hex, W);
        TorusPoint ab = tropicalize_point(hex, ZW);
        TorusPoint sum = TorusPoint::reduce(a.lattice, a.coords + b.coords);
        CHECK(torus_points_equal(ab, sum));
    }
}

TEST_CASE("Morgan-Shalen sequence sampling")
{
    DegenerationData D = tate();
    Eigen::VectorXd c(1);
    c << 0.3;
    std::vector<double> sched = default_schedule();

    MSSequence plain = sample_ms_sequence(D, c, sched);
    CHECK(plain.valid);
    for (size_t k = 0; k < sched.size(); ++k)
        CHECK(plain.log_moduli[k](0) == 0.3 * std::log(sched[k]));

    MSSequence pert = sample_ms_sequence(D, c, sched,
                                         {LaurentGerm::constant(GaussianRational(2L))});
    CHECK(pert.valid);
    for (size_t k = 0; k < sched.size(); ++k) {
        double ratio = pert.log_moduli[k](0) / std::log(sched[k]);
        CHECK(ratio == doctest::Approx(0.3 + std::log(2.0) / std::log(sched[k]))
                           .epsilon(1e-12));
    }

    Eigen::VectorXd zero(1);
    zero << 0.0;
    MSSequence origin = sample_ms_sequence(D, zero, sched,
                                           {LaurentGerm::constant(GaussianRational(1L))});
    for (const auto& la : origin.log_moduli)
        CHECK(la(0) == 0.0);

    // A positive-valuation perturbation shifts the limit: flagged invalid.
    MSSequence shifted = sample_ms_sequence(D, c, sched, {LaurentGerm::t()});
    CHECK_FALSE(shifted.valid);

    CHECK_THROWS_AS(sample_ms_sequence(D, c, {0.01, 0.01}), DomainError);
}

TEST_CASE("hybrid convergence: monomial sequences land exactly")
{
    DegenerationData D = tate();
    Eigen::VectorXd c(1);
    c << 0.3;
    ConvergenceReport r = hybrid_convergence(D, sample_ms_sequence(D, c, default_schedule()));
    for (double d : r.distances)
        CHECK(d == 0.0);
    CHECK(r.pass);
}

TEST_CASE("hybrid convergence: constant perturbation decays at 1/|log t|")
{
    DegenerationData D = tate();
    Eigen::VectorXd c(1);
    c << 0.3;
    std::vector<double> sched = default_schedule();
    ConvergenceReport r = hybrid_convergence(
        D, sample_ms_sequence(D, c, sched, {LaurentGerm::constant(GaussianRational(2L))}));
    for (size_t k = 0; k < sched.size(); ++k) {
        double expected = std::log(2.0) / std::abs(std::log(sched[k]));
        CHECK(std::abs(r.distances[k] - expected) <= 1e-9);
    }
    CHECK(r.rate >= 0.9);
    CHECK(r.rate == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.pass);
}

TEST_CASE("hybrid convergence: lattice targets reduce to the origin")
{
    DegenerationData hex = monomial_family(hexagonal());
    Eigen::VectorXd c(2);
    c << 3.0, 3.0;  // = B * (1,1), so E c lies in B Z^2
    ConvergenceReport r =
        hybrid_convergence(hex, sample_ms_sequence(hex, c, default_schedule()));
    for (double d : r.distances)
        CHECK(d <= 1e-9);
    CHECK(r.pass);
}

TEST_CASE("evaluated germ points converge to their tropicalization")
{
    // Hybrid consistency: fiber images of Z(t_k) approach trop(Z).
    DegenerationData hex = monomial_family(hexagonal());
    std::vector<LaurentGerm> Z = {real_germ({{1, 2}, {2, 1}}), real_germ({{-1, 1}, {0, 3}})};
    TorusPoint limit = tropicalize_point(hex, Z);
    Eigen::MatrixXd gram = gh_limit(hex).gram_eigen();

    double prev = 1e100;
    for (double t : default_schedule()) {
        Eigen::VectorXd la(2);
        for (int i = 0; i < 2; ++i)
            la(i) = Z[i].log_ray(t).real();
        TorusPoint u = fiber_map_logabs(hex, t, la).normalized;
        TorusPoint in_limit = TorusPoint::reduce(limit.lattice, u.coords);
        double d = torus_distance(in_limit, limit.coords, gram);
        CHECK(d <= 3.0 / std::abs(std::log(t)));
        CHECK(d <= prev + 1e-12);
        prev = d;
    }
}

TEST_CASE("limit consistency reports")
{
    DegenerationData hex = monomial_family(hexagonal());
    LimitConsistencyReport rh = limit_consistency(hex, default_schedule());
    CHECK(rh.pass);
    CHECK(rh.monotone);
    for (double d : rh.lattice_deviation)
        CHECK(d == 0.0);
    for (double d : rh.gram_deviation)
        CHECK(d <= 1e-12);

    DegenerationData P = tate_perturbed();
    LimitConsistencyReport rp = limit_consistency(P, default_schedule());
    CHECK(rp.pass);
    // Closed form at t = 10^{-3}: ln(1.001) / (3 ln 10).
    double expected = std::log1p(1e-3) / (3.0 * std::log(10.0));
    CHECK(rp.lattice_deviation[1] == doctest::Approx(expected).epsilon(1e-10));

    // Coefficient 2 monomial: deviation ln2/(k ln 10), too large to pass the
    // final tolerance but exactly on the closed form.
    DegenerationData C2 = must_validate(
        1, {1}, {{LaurentGerm::monomial(1, GaussianRational(2L))}});
    LimitConsistencyReport rc = limit_consistency(C2, default_schedule());
    CHECK_FALSE(rc.pass);
    for (size_t k = 0; k < rc.schedule.size(); ++k) {
        double want = std::log(2.0) / ((k + 2.0) * std::log(10.0));
        CHECK(rc.lattice_deviation[k] == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(rc.monotone);
}
