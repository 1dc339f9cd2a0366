#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace syztrop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Element of Q(i): a/b + (c/d)i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// Text form used in config files, e.g. "1/2+1/3 i" (spaces optional).
GaussianRational parse_gaussian_rational(const std::string& text);
std::string format_gaussian_rational(const GaussianRational& c);

/// Finite Laurent polynomial in t over Q(i). The zero germ is the empty
/// term map; a valuation is only defined for nonzero germs.
class LaurentGerm {
public:
    LaurentGerm() = default;

    static LaurentGerm zero() { return LaurentGerm(); }
    static LaurentGerm constant(GaussianRational c);
    /// c * t^n
    static LaurentGerm monomial(long exponent, GaussianRational c);
    static LaurentGerm t() { return monomial(1, GaussianRational(1L)); }

    void add_term(long exponent, const GaussianRational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Lowest exponent with nonzero coefficient. Throws ZeroGermError on the zero germ.
    long valuation() const;
    const GaussianRational& leading_coefficient() const;

    /// Exact polynomial evaluation in double precision, Horner in ascending
    /// exponent after factoring out t^val. Requires 0 < |t| < 1.
    std::complex<double> eval(std::complex<double> t) const;

    /// log of eval(t) for real t in (0,1), branch fixed by continuity along the
    /// positive-real ray; exact ln c + n ln t for positive real monomials c*t^n.
    std::complex<double> log_ray(double t) const;

    LaurentGerm operator+(const LaurentGerm& o) const;
    LaurentGerm operator-(const LaurentGerm& o) const;
    LaurentGerm operator-() const;
    LaurentGerm operator*(const LaurentGerm& o) const;
    /// Integer power. Negative exponents are exact only for monomials and
    /// throw DomainError otherwise.
    LaurentGerm pow(long n) const;

    /// Exact quotient when o divides *this as a Laurent polynomial; throws
    /// DomainError when the division leaves a remainder.
    LaurentGerm divide_exact(const LaurentGerm& o) const;

    bool operator==(const LaurentGerm& o) const { return terms_ == o.terms_; }

    const std::map<long, GaussianRational>& terms() const { return terms_; }

private:
    std::map<long, GaussianRational> terms_;  // exponent -> nonzero coefficient
};

}  // namespace syztrop
