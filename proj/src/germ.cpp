#include "syztrop/germ.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "syztrop/errors.hpp"

namespace syztrop {

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero Gaussian rational");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

namespace {

std::string strip_spaces(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

// Reads a signed rational "[-]a[/b]" starting at pos; advances pos.
Rational read_rational(const std::string& s, size_t& pos)
{
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        ++pos;
        if (s[start] == '+')
            start = pos;  // big-rational parser rejects an explicit plus sign
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == digits)
        throw ParseError("expected rational number in '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == den)
            throw ParseError("expected denominator in '" + s + "'");
    }
    return Rational(s.substr(start, pos - start));
}

std::string format_rational(const Rational& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

GaussianRational parse_gaussian_rational(const std::string& text)
{
    std::string s = strip_spaces(text);
    if (s.empty())
        throw ParseError("empty coefficient");
    size_t pos = 0;
    Rational first = read_rational(s, pos);
    if (pos == s.size())
        return GaussianRational(first);
    if (s[pos] == 'i' && pos + 1 == s.size())
        return GaussianRational(Rational(0), first);
    if (s[pos] != '+' && s[pos] != '-')
        throw ParseError("malformed coefficient '" + text + "'");
    Rational second = read_rational(s, pos);
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw ParseError("malformed coefficient '" + text + "'");
    return GaussianRational(first, second);
}

std::string format_gaussian_rational(const GaussianRational& c)
{
    if (c.im == 0)
        return format_rational(c.re);
    std::string im_part = format_rational(c.im) + " i";
    if (c.re == 0)
        return im_part;
    if (c.im > 0)
        return format_rational(c.re) + "+" + im_part;
    return format_rational(c.re) + im_part;  // sign carried by the imaginary part
}

LaurentGerm LaurentGerm::constant(GaussianRational c)
{
    return monomial(0, std::move(c));
}

LaurentGerm LaurentGerm::monomial(long exponent, GaussianRational c)
{
    LaurentGerm f;
    f.add_term(exponent, c);
    return f;
}

void LaurentGerm::add_term(long exponent, const GaussianRational& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

long LaurentGerm::valuation() const
{
    if (terms_.empty())
        throw ZeroGermError("valuation of the zero germ");
    return terms_.begin()->first;
}

const GaussianRational& LaurentGerm::leading_coefficient() const
{
    if (terms_.empty())
        throw ZeroGermError("leading coefficient of the zero germ");
    return terms_.begin()->second;
}

std::complex<double> LaurentGerm::eval(std::complex<double> t) const
{
    if (t == std::complex<double>(0.0, 0.0) || std::abs(t) >= 1.0)
        throw DomainError("germ evaluation requires 0 < |t| < 1");
    if (terms_.empty())
        return {0.0, 0.0};
    long val = terms_.begin()->first;
    // Horner over t^(k - val), descending exponents.
    std::complex<double> acc(0.0, 0.0);
    long prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long rel = it->first - val;
        if (prev >= 0)
            for (long k = rel; k < prev; ++k)
                acc *= t;
        acc += it->second.to_complex();
        prev = rel;
    }
    for (long k = 0; k < prev; ++k)
        acc *= t;
    return acc * std::pow(t, static_cast<double>(val));
}

std::complex<double> LaurentGerm::log_ray(double t) const
{
    if (terms_.empty())
        throw ZeroGermError("log of the zero germ");
    if (!(t > 0.0 && t < 1.0))
        throw DomainError("log_ray requires real t in (0,1)");
    std::complex<double> value = eval(std::complex<double>(t, 0.0));
    if (value == std::complex<double>(0.0, 0.0))
        throw EvaluationZeroError("germ vanishes at sample point");
    long n = valuation();
    std::complex<double> lead = leading_coefficient().to_complex();
    // f(t) = lead * t^n * u(t) with u -> 1 along the ray; principal log of
    // each factor is the continuous branch near 0.
    std::complex<double> unit = value / (lead * std::pow(t, static_cast<double>(n)));
    return std::log(lead) + static_cast<double>(n) * std::log(t) + std::log(unit);
}

LaurentGerm LaurentGerm::operator+(const LaurentGerm& o) const
{
    LaurentGerm out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

LaurentGerm LaurentGerm::operator-() const
{
    LaurentGerm out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

LaurentGerm LaurentGerm::operator-(const LaurentGerm& o) const
{
    return *this + (-o);
}

LaurentGerm LaurentGerm::operator*(const LaurentGerm& o) const
{
    LaurentGerm out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentGerm LaurentGerm::pow(long n) const
{
    if (n < 0) {
        if (!is_monomial())
            throw DomainError("negative germ powers are exact only for monomials");
        const auto& [e, c] = *terms_.begin();
        LaurentGerm inv = monomial(-e, c.inverse());
        return inv.pow(-n);
    }
    LaurentGerm result = constant(GaussianRational(1L));
    LaurentGerm base = *this;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

LaurentGerm LaurentGerm::divide_exact(const LaurentGerm& o) const
{
    if (o.is_zero())
        throw ZeroGermError("division by the zero germ");
    if (is_zero())
        return zero();
    LaurentGerm rem = *this;
    LaurentGerm quot;
    long dval = o.valuation();
    GaussianRational dlead_inv = o.leading_coefficient().inverse();
    long top = rem.terms_.rbegin()->first;
    long steps = top - rem.valuation() + 1;
    while (!rem.is_zero() && steps-- > 0) {
        LaurentGerm q = monomial(rem.valuation() - dval,
                                 rem.leading_coefficient() * dlead_inv);
        quot = quot + q;
        rem = rem - q * o;
    }
    if (!rem.is_zero())
        throw DomainError("germ division is not exact");
    return quot;
}

}  // namespace syztrop
