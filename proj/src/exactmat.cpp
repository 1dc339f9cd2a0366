#include "syztrop/exactmat.hpp"

#include <algorithm>

#include "syztrop/errors.hpp"

namespace syztrop {

IMat IMat::identity(int n)
{
    IMat m(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const
{
    IMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

IMat IMat::operator-() const
{
    IMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.at(i, j) = -at(i, j);
    return out;
}

IMat IMat::transpose() const
{
    IMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool IMat::is_symmetric() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool IMat::is_identity() const
{
    return *this == identity(n_);
}

std::vector<BigInt> IMat::apply(const std::vector<BigInt>& v) const
{
    std::vector<BigInt> out(n_, BigInt(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Determinant of the leading k x k block via exact fraction-free elimination.
BigInt leading_minor(const IMat& m, int k)
{
    RatMat a(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a.at(i, j) = Rational(m.at(i, j));
    Rational det(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return BigInt(0);
        if (pivot != col) {
            for (int j = 0; j < k; ++j)
                std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < k; ++r) {
            if (a.at(r, col) == 0)
                continue;
            Rational f = a.at(r, col) / a.at(col, col);
            for (int j = col; j < k; ++j)
                a.at(r, j) -= f * a.at(col, j);
        }
    }
    return numerator(det) / denominator(det);  // integral for integer input
}

}  // namespace

BigInt IMat::determinant() const
{
    return leading_minor(*this, n_);
}

std::vector<BigInt> IMat::leading_principal_minors() const
{
    std::vector<BigInt> out;
    out.reserve(n_);
    for (int k = 1; k <= n_; ++k)
        out.push_back(leading_minor(*this, k));
    return out;
}

bool IMat::is_positive_definite() const
{
    if (!is_symmetric())
        return false;
    for (const BigInt& m : leading_principal_minors())
        if (m <= 0)
            return false;
    return true;
}

IMat IMat::unimodular_inverse() const
{
    BigInt det = determinant();
    if (det != 1 && det != -1)
        throw SingularBasisError("matrix is not unimodular");
    RatMat inv = RatMat(*this).inverse();
    IMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Rational& q = inv.at(i, j);
            out.at(i, j) = numerator(q) / denominator(q);
        }
    return out;
}

Eigen::MatrixXd IMat::to_eigen() const
{
    Eigen::MatrixXd out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) = at(i, j).convert_to<double>();
    return out;
}

RatMat::RatMat(const IMat& m) : n_(m.size()), data_(static_cast<size_t>(n_) * n_)
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            at(i, j) = Rational(m.at(i, j));
}

RatMat RatMat::identity(int n)
{
    RatMat m(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const
{
    RatMat out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

RatMat RatMat::inverse() const
{
    RatMat a = *this;
    RatMat inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw SingularBasisError("singular rational matrix");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (int j = 0; j < n_; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a.at(r, col) == 0)
                continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Eigen::MatrixXd RatMat::to_eigen() const
{
    Eigen::MatrixXd out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) = to_double(at(i, j));
    return out;
}

namespace {

BigInt abs_big(const BigInt& x)
{
    return x < 0 ? BigInt(-x) : x;
}

}  // namespace

SmithForm smith_normal_form(const IMat& A)
{
    int n = A.size();
    IMat D = A;
    IMat U = IMat::identity(n);
    IMat V = IMat::identity(n);

    auto swap_rows = [&](int a, int b) {
        for (int j = 0; j < n; ++j) {
            std::swap(D.at(a, j), D.at(b, j));
            std::swap(U.at(a, j), U.at(b, j));
        }
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < n; ++i) {
            std::swap(D.at(i, a), D.at(i, b));
            std::swap(V.at(i, a), V.at(i, b));
        }
    };
    auto add_row = [&](int dst, int src, const BigInt& f) {
        for (int j = 0; j < n; ++j) {
            D.at(dst, j) += f * D.at(src, j);
            U.at(dst, j) += f * U.at(src, j);
        }
    };
    auto add_col = [&](int dst, int src, const BigInt& f) {
        for (int i = 0; i < n; ++i) {
            D.at(i, dst) += f * D.at(i, src);
            V.at(i, dst) += f * V.at(i, src);
        }
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < n; ++j) {
            D.at(r, j) = -D.at(r, j);
            U.at(r, j) = -U.at(r, j);
        }
    };

    for (int k = 0; k < n; ++k) {
        // Move a smallest nonzero entry of the trailing block to (k,k).
        while (true) {
            int pi = -1, pj = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (D.at(i, j) != 0 &&
                        (pi < 0 || abs_big(D.at(i, j)) < abs_big(D.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                break;  // trailing block is zero
            if (pi != k)
                swap_rows(pi, k);
            if (pj != k)
                swap_cols(pj, k);
            if (D.at(k, k) < 0)
                negate_row(k);

            bool reduced = true;
            for (int i = k + 1; i < n; ++i)
                if (D.at(i, k) != 0) {
                    add_row(i, k, -(D.at(i, k) / D.at(k, k)));
                    if (D.at(i, k) != 0)
                        reduced = false;
                }
            for (int j = k + 1; j < n; ++j)
                if (D.at(k, j) != 0) {
                    add_col(j, k, -(D.at(k, j) / D.at(k, k)));
                    if (D.at(k, j) != 0)
                        reduced = false;
                }
            if (!reduced)
                continue;

            // Pivot must divide the whole trailing block for invariant factors.
            bool divides = true;
            for (int i = k + 1; i < n && divides; ++i)
                for (int j = k + 1; j < n && divides; ++j)
                    if (D.at(i, j) % D.at(k, k) != 0) {
                        add_row(k, i, BigInt(1));
                        divides = false;
                    }
            if (divides)
                break;
        }
    }

    SmithForm out;
    out.U = U;
    out.V = V;
    out.factors.reserve(n);
    for (int k = 0; k < n; ++k)
        out.factors.push_back(D.at(k, k));
    return out;
}

}  // namespace syztrop
