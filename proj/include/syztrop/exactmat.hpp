#pragma once

#include <Eigen/Dense>
#include <vector>

#include "syztrop/germ.hpp"  // BigInt, Rational

namespace syztrop {

/// Dense square matrix over the big integers, row-major.
class IMat {
public:
    IMat() : n_(0) {}
    explicit IMat(int n) : n_(n), data_(static_cast<size_t>(n) * n, BigInt(0)) {}

    static IMat identity(int n);

    int size() const { return n_; }
    BigInt& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    IMat operator*(const IMat& o) const;
    IMat operator-() const;
    IMat transpose() const;
    bool operator==(const IMat& o) const { return n_ == o.n_ && data_ == o.data_; }
    bool operator<(const IMat& o) const { return data_ < o.data_; }

    bool is_symmetric() const;
    bool is_identity() const;

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

    BigInt determinant() const;
    /// Determinants of the leading principal k x k submatrices, k = 1..n.
    std::vector<BigInt> leading_principal_minors() const;
    bool is_positive_definite() const;

    /// Exact inverse; requires |det| = 1 so the inverse is integral.
    IMat unimodular_inverse() const;

    Eigen::MatrixXd to_eigen() const;

private:
    int n_;
    std::vector<BigInt> data_;
};

/// Dense square matrix over the rationals.
class RatMat {
public:
    RatMat() : n_(0) {}
    explicit RatMat(int n) : n_(n), data_(static_cast<size_t>(n) * n, Rational(0)) {}
    explicit RatMat(const IMat& m);

    static RatMat identity(int n);

    int size() const { return n_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    RatMat operator*(const RatMat& o) const;
    bool operator==(const RatMat& o) const { return n_ == o.n_ && data_ == o.data_; }

    /// Exact inverse via Gauss-Jordan; throws SingularBasisError when singular.
    RatMat inverse() const;

    Eigen::MatrixXd to_eigen() const;

private:
    int n_;
    std::vector<Rational> data_;
};

/// Smith normal form D = U * A * V with U, V unimodular and the diagonal
/// invariant factors d_1 | d_2 | ... (nonnegative).
struct SmithForm {
    IMat U;
    IMat V;
    std::vector<BigInt> factors;
};

SmithForm smith_normal_form(const IMat& A);

}  // namespace syztrop
