#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "syztrop/errors.hpp"
#include "syztrop/germ.hpp"
#include "test_util.hpp"

using namespace syztrop;
using namespace syztrop::testutil;

TEST_CASE("valuation reads the lowest exponent")
{
    CHECK(real_germ({{3, 1}, {5, 2}}).valuation() == 3);
    CHECK(real_germ({{-1, 1}, {0, 1}}).valuation() == -1);
    CHECK(LaurentGerm::constant(GaussianRational(7L)).valuation() == 0);
    CHECK_THROWS_AS(LaurentGerm::zero().valuation(), ZeroGermError);
}

TEST_CASE("canonical term storage drops zeros and merges exponents")
{
    LaurentGerm f;
    f.add_term(2, GaussianRational(3L));
    f.add_term(2, GaussianRational(-3L));
    CHECK(f.is_zero());
    f.add_term(1, GaussianRational(0L));
    CHECK(f.is_zero());
    f.add_term(0, GaussianRational(Rational(1, 2)));
    f.add_term(0, GaussianRational(Rational(1, 2)));
    CHECK(f == LaurentGerm::constant(GaussianRational(1L)));
}

TEST_CASE("evaluation on the punctured disk")
{
    LaurentGerm f = real_germ({{-1, 1}, {0, 1}});
    CHECK(f.eval({0.5, 0.0}).real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(f.eval({0.5, 0.0}).imag() == doctest::Approx(0.0));

    LaurentGerm id = LaurentGerm::t();
    std::complex<double> ti(0.0, 0.1);
    CHECK(std::abs(id.eval(ti) - ti) == doctest::Approx(0.0));

    LaurentGerm g = real_germ({{2, 1}, {3, 1}});  // t^2 (1 + t)
    CHECK(g.eval({0.1, 0.0}).real() == doctest::Approx(0.011).epsilon(1e-14));

    CHECK_THROWS_AS(f.eval({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(f.eval({1.0, 0.0}), DomainError);
    CHECK(LaurentGerm::zero().eval({0.3, 0.0}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("product, sum and power oracles")
{
    LaurentGerm t = LaurentGerm::t();
    CHECK(t * real_germ({{-1, 1}, {0, 1}}) == real_germ({{0, 1}, {1, 1}}));
    CHECK(real_germ({{0, 1}, {1, 1}}) * real_germ({{0, 1}, {1, -1}}) ==
          real_germ({{0, 1}, {2, -1}}));
    CHECK(real_germ({{2, 1}, {3, 2}}).pow(2) == real_germ({{4, 1}, {5, 4}, {6, 4}}));
    CHECK((LaurentGerm::zero() * t).is_zero());
    CHECK((t - t).is_zero());
}

TEST_CASE("negative powers are exact for monomials only")
{
    LaurentGerm m = LaurentGerm::monomial(3, GaussianRational(Rational(2, 5)));
    LaurentGerm one = LaurentGerm::constant(GaussianRational(1L));
    CHECK(m.pow(-1) * m == one);
    CHECK(m.pow(-2) == LaurentGerm::monomial(-6, GaussianRational(Rational(25, 4))));
    CHECK_THROWS_AS(real_germ({{0, 1}, {1, 1}}).pow(-1), DomainError);
}

TEST_CASE("exact division")
{
    LaurentGerm a = real_germ({{0, 1}, {2, -1}});  // 1 - t^2
    LaurentGerm b = real_germ({{0, 1}, {1, 1}});   // 1 + t
    CHECK(a.divide_exact(b) == real_germ({{0, 1}, {1, -1}}));
    CHECK_THROWS_AS(b.divide_exact(a), DomainError);
    CHECK_THROWS_AS(a.divide_exact(LaurentGerm::zero()), ZeroGermError);
    CHECK(LaurentGerm::zero().divide_exact(b).is_zero());
}

TEST_CASE("ray logarithm oracles")
{
    LaurentGerm t = LaurentGerm::t();
    std::complex<double> l = t.log_ray(0.1);
    CHECK(l.real() == doctest::Approx(std::log(0.1)).epsilon(1e-14));
    CHECK(l.imag() == doctest::Approx(0.0));

    LaurentGerm one = LaurentGerm::constant(GaussianRational(1L));
    CHECK(std::abs(one.log_ray(0.3)) == doctest::Approx(0.0));

    LaurentGerm t2 = LaurentGerm::monomial(2, GaussianRational(1L));
    CHECK(t2.log_ray(0.1).real() == doctest::Approx(2.0 * std::log(0.1)).epsilon(1e-14));

    // t - 1/2 vanishes at t = 0.5 exactly.
    LaurentGerm v;
    v.add_term(0, GaussianRational(Rational(-1, 2)));
    v.add_term(1, GaussianRational(1L));
    CHECK_THROWS_AS(v.log_ray(0.5), EvaluationZeroError);
    CHECK_THROWS_AS(LaurentGerm::zero().log_ray(0.5), ZeroGermError);
    CHECK_THROWS_AS(t.log_ray(1.5), DomainError);
}

TEST_CASE("property: valuation is additive under products")
{
    std::mt19937 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        LaurentGerm f = random_germ(rng);
        LaurentGerm g = random_germ(rng);
        CHECK((f * g).valuation() == f.valuation() + g.valuation());
    }
}

TEST_CASE("property: evaluation is multiplicative")
{
    std::mt19937 rng(20240812);
    std::uniform_real_distribution<double> tdist(0.05, 0.9);
    for (int i = 0; i < 300; ++i) {
        LaurentGerm f = random_germ(rng);
        LaurentGerm g = random_germ(rng);
        std::complex<double> t(tdist(rng), 0.0);
        std::complex<double> lhs = (f * g).eval(t);
        std::complex<double> rhs = f.eval(t) * g.eval(t);
        double scale = std::max(1.0, std::abs(rhs));
        CHECK(std::abs(lhs - rhs) / scale <= 1e-12);
    }
}

TEST_CASE("property: exp inverts the ray logarithm")
{
    std::mt19937 rng(20240813);
    std::uniform_real_distribution<double> tdist(0.05, 0.9);
    for (int i = 0; i < 300; ++i) {
        LaurentGerm f = random_germ(rng);
        double t = tdist(rng);
        std::complex<double> value = f.eval({t, 0.0});
        if (std::abs(value) < 1e-9)
            continue;  // near-vanishing sample, log ill-conditioned
        std::complex<double> back = std::exp(f.log_ray(t));
        CHECK(std::abs(back - value) / std::abs(value) <= 1e-12);
    }
}

TEST_CASE("Re(log)/ln t recovers the valuation along the ray")
{
    // Exact for positive unit monomials at every t.
    LaurentGerm t3 = LaurentGerm::monomial(3, GaussianRational(1L));
    for (int k = 2; k <= 8; ++k) {
        double t = std::pow(10.0, -k);
        CHECK(t3.log_ray(t).real() / std::log(t) == 3.0);
    }
    // Strictly decreasing deviation for a non-monomial germ.
    LaurentGerm f = real_germ({{2, 1}, {3, 1}});  // t^2 (1 + t), val 2
    double prev = 1e100;
    for (int k = 2; k <= 8; ++k) {
        double t = std::pow(10.0, -k);
        double dev = std::abs(f.log_ray(t).real() / std::log(t) - 2.0);
        CHECK(dev < prev);
        prev = dev;
    }
}

TEST_CASE("Gaussian rational arithmetic and text form")
{
    GaussianRational z(Rational(1, 2), Rational(1, 3));
    GaussianRational w = z * z.inverse();
    CHECK(w == GaussianRational(1L));

    CHECK(parse_gaussian_rational("1/2+1/3 i") == z);
    CHECK(parse_gaussian_rational(" 1/2 + 1/3i ") == z);
    CHECK(parse_gaussian_rational("-2") == GaussianRational(-2L));
    CHECK(parse_gaussian_rational("3/4") == GaussianRational(Rational(3, 4)));
    CHECK(parse_gaussian_rational("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian_rational("1-1/2 i") ==
          GaussianRational(Rational(1), Rational(-1, 2)));
    CHECK_THROWS_AS(parse_gaussian_rational(""), ParseError);
    CHECK_THROWS_AS(parse_gaussian_rational("1/2+"), ParseError);
    CHECK_THROWS_AS(parse_gaussian_rational("i+1"), ParseError);

    std::mt19937 rng(20240814);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (int i = 0; i < 200; ++i) {
        GaussianRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(parse_gaussian_rational(format_gaussian_rational(c)) == c);
    }
}
