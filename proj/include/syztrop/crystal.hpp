#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "syztrop/degeneration.hpp"
#include "syztrop/exactmat.hpp"
#include "syztrop/lattice.hpp"

namespace syztrop {

/// GL(g,Z) matrices M with M^T B^{-1} M = B^{-1}; finite for B positive
/// definite.
struct PointGroup {
    IMat B;
    std::vector<IMat> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const IMat& M) const;
};

/// All integer N with N^T B N = B (the form automorphisms). Column-by-column
/// backtracking with inner-product pruning, short vectors bounded through the
/// least eigenvalue of B.
std::vector<IMat> form_automorphisms(const IMat& B);

/// Test oracle: full enumeration over the entry box, no pruning.
std::vector<IMat> form_automorphisms_bruteforce(const IMat& B);

/// The isometry group of the form B^{-1}, i.e. form_automorphisms mapped
/// through N -> N^{-T}.
PointGroup point_group(const IMat& B);

bool is_form_isometry(const IMat& B, const IMat& M);

/// Z^g / B Z^g through the Smith normal form of B.
class TranslationQuotient {
public:
    explicit TranslationQuotient(const IMat& B);

    const IMat& b() const { return B_; }
    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    const BigInt& order() const { return order_; }

    /// Canonical representative of v mod B Z^g.
    std::vector<BigInt> reduce(const std::vector<BigInt>& v) const;
    bool in_lattice(const std::vector<BigInt>& v) const;
    /// Integer m with B m = v; only valid when in_lattice(v).
    std::vector<BigInt> lattice_coefficients(const std::vector<BigInt>& v) const;

    /// All canonical representatives; throws SizeError above the cap.
    std::vector<std::vector<BigInt>> representatives(const BigInt& cap = BigInt(1000000)) const;

private:
    IMat B_;
    IMat U_;
    IMat Uinv_;
    std::vector<BigInt> factors_;
    BigInt order_;
};

TranslationQuotient smith_quotient(const IMat& B);

struct CrystalElement {
    IMat M;
    std::vector<BigInt> v;  // canonical representative mod B Z^g

    bool operator==(const CrystalElement& o) const { return M == o.M && v == o.v; }
};

/// (GL(g,Z) cap O(g,B^{-1})) semidirect Z^g/BZ^g with the affine action
/// x -> M x + v on R^g/BZ^g.
class CrystalGroup {
public:
    CrystalGroup(PointGroup point, TranslationQuotient trans, const BigInt& cap);

    const PointGroup& point() const { return point_; }
    const TranslationQuotient& translations() const { return trans_; }
    const std::vector<CrystalElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    CrystalElement product(const CrystalElement& a, const CrystalElement& b) const;
    CrystalElement inverse(const CrystalElement& a) const;
    CrystalElement identity() const;

    TorusPoint act(const CrystalElement& e, const TorusPoint& x) const;

private:
    PointGroup point_;
    TranslationQuotient trans_;
    std::vector<CrystalElement> elements_;
};

CrystalGroup crystal_group(const IMat& B, const BigInt& cap = BigInt(1000000));

/// Polarized automorphism lift z -> tau(t) * z^M.
struct AutomorphismDescriptor {
    IMat M;
    std::vector<LaurentGerm> tau;
};

/// Composition matching composition of the lifts:
/// (M,tau)*(M',tau') = (M M', tau_i * prod_j tau'_j ^ M_{i,j}).
AutomorphismDescriptor compose(const AutomorphismDescriptor& a, const AutomorphismDescriptor& b);

struct ProjectedAutomorphism {
    CrystalElement element;
    std::vector<BigInt> val_vector;  // unreduced valuations of tau
    bool in_kernel = false;
};

/// p(f) = (M, val tau mod B Z^g); throws NotIsometryError when M fails the
/// form equation.
ProjectedAutomorphism project_automorphism(const DegenerationData& D,
                                           const AutomorphismDescriptor& a);

/// For kernel descriptors (M = Id, val tau in B Z^g) recovers the valuation-0
/// germ vector tau_i / prod_j q_{i,j}^{m_j}; nullopt when the exact division
/// fails.
std::optional<std::vector<LaurentGerm>> kernel_witness(const DegenerationData& D,
                                                       const AutomorphismDescriptor& a);

/// Affine map u -> linear * u + translation on the normalized base at level t.
struct FiberAction {
    Eigen::MatrixXd linear;       // E M E^{-1} in u-coordinates
    Eigen::VectorXd translation;  // e_i log|tau_i(t)| / log t
    Eigen::MatrixXd lattice;      // normalized lattice at t
};

FiberAction fiberwise_action(const DegenerationData& D, const AutomorphismDescriptor& a, double t);

struct EquivarianceReport {
    std::vector<double> distances;
    double max_distance = 0.0;
    bool pass = false;
};

/// Compares the descriptor applied upstairs with the fiberwise action applied
/// downstairs over sample points given by log|Z_i|.
EquivarianceReport equivariance_check(const DegenerationData& D, const AutomorphismDescriptor& a,
                                      double t, const std::vector<Eigen::VectorXd>& samples_logabs,
                                      double tol = 1e-9);

/// Section of p for the monomial family X_B: tau_i = t^{v_i}.
AutomorphismDescriptor split_section(const IMat& B, const CrystalElement& e);

}  // namespace syztrop
