#include "syztrop/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syztrop/errors.hpp"
#include "syztrop/fibration.hpp"

namespace syztrop {

namespace {

// Safe per-entry bound for integer vectors m with m^T B m = norm:
// lambda_min(B) |m|^2 <= norm.
long entry_bound(const IMat& B, const BigInt& norm)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.to_eigen());
    double lmin = es.eigenvalues().minCoeff();
    if (lmin <= 0.0)
        throw NotPositiveDefiniteError("form matrix is not positive definite");
    double bound = std::sqrt(norm.convert_to<double>() / (lmin * (1.0 - 1e-9)));
    return static_cast<long>(std::floor(bound + 1e-9));
}

BigInt form_value(const IMat& B, const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    const int g = B.size();
    BigInt out = 0;
    for (int i = 0; i < g; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < g; ++j)
            out += a[i] * B.at(i, j) * b[j];
    }
    return out;
}

// Integer vectors m with m^T B m == norm, |m_i| <= bound.
std::vector<std::vector<BigInt>> short_vectors(const IMat& B, const BigInt& norm)
{
    const int g = B.size();
    const long bound = entry_bound(B, norm);
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> m(g, BigInt(0));
    std::vector<long> digit(g, -bound);
    while (true) {
        for (int i = 0; i < g; ++i)
            m[i] = digit[i];
        if (form_value(B, m, m) == norm)
            out.push_back(m);
        int pos = g - 1;
        while (pos >= 0 && digit[pos] == bound) {
            digit[pos] = -bound;
            --pos;
        }
        if (pos < 0)
            break;
        ++digit[pos];
    }
    return out;
}

void columns_to_matrix(const std::vector<std::vector<BigInt>>& cols, IMat& out)
{
    const int g = out.size();
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i)
            out.at(i, j) = cols[j][i];
}

}  // namespace

std::vector<IMat> form_automorphisms(const IMat& B)
{
    if (!B.is_positive_definite())
        throw NotPositiveDefiniteError("form matrix is not positive definite");
    const int g = B.size();

    // Candidate j-th columns all carry the diagonal norm B_{j,j}.
    std::vector<std::vector<std::vector<BigInt>>> candidates(g);
    for (int j = 0; j < g; ++j)
        candidates[j] = short_vectors(B, B.at(j, j));

    std::vector<IMat> found;
    std::vector<std::vector<BigInt>> chosen(g);
    auto backtrack = [&](auto&& self, int j) -> void {
        if (j == g) {
            IMat N(g);
            columns_to_matrix(chosen, N);
            found.push_back(N);
            return;
        }
        for (const auto& cand : candidates[j]) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (form_value(B, chosen[i], cand) != B.at(i, j))
                    ok = false;
            if (!ok)
                continue;
            chosen[j] = cand;
            self(self, j + 1);
        }
    };
    backtrack(backtrack, 0);

    std::sort(found.begin(), found.end());
    return found;
}

std::vector<IMat> form_automorphisms_bruteforce(const IMat& B)
{
    const int g = B.size();
    std::vector<long> bounds(g);
    for (int j = 0; j < g; ++j)
        bounds[j] = entry_bound(B, B.at(j, j));

    std::vector<IMat> found;
    const int cells = g * g;
    std::vector<long> digit(cells);
    for (int c = 0; c < cells; ++c)
        digit[c] = -bounds[c % g];  // c = i * g + j, bound depends on column j
    IMat Bt = B;  // symmetric
    while (true) {
        IMat N(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                N.at(i, j) = digit[i * g + j];
        if (N.transpose() * B * N == Bt)
            found.push_back(N);
        int pos = cells - 1;
        while (pos >= 0 && digit[pos] == bounds[pos % g]) {
            digit[pos] = -bounds[pos % g];
            --pos;
        }
        if (pos < 0)
            break;
        ++digit[pos];
    }
    std::sort(found.begin(), found.end());
    return found;
}

PointGroup point_group(const IMat& B)
{
    PointGroup pg;
    pg.B = B;
    for (const IMat& N : form_automorphisms(B))
        pg.elements.push_back(N.unimodular_inverse().transpose());
    std::sort(pg.elements.begin(), pg.elements.end());
    return pg;
}

bool PointGroup::contains(const IMat& M) const
{
    return std::binary_search(elements.begin(), elements.end(), M,
                              [](const IMat& a, const IMat& b) { return a < b; });
}

bool is_form_isometry(const IMat& B, const IMat& M)
{
    BigInt det = M.determinant();
    if (det != 1 && det != -1)
        return false;
    RatMat Binv = RatMat(B).inverse();
    RatMat Mr(M);
    RatMat Mt(M.transpose());
    return Mt * Binv * Mr == Binv;
}

TranslationQuotient::TranslationQuotient(const IMat& B) : B_(B)
{
    SmithForm snf = smith_normal_form(B);
    U_ = snf.U;
    Uinv_ = snf.U.unimodular_inverse();
    factors_ = snf.factors;
    order_ = 1;
    for (const BigInt& d : factors_)
        order_ *= d;
}

std::vector<BigInt> TranslationQuotient::reduce(const std::vector<BigInt>& v) const
{
    // B Z^g = U^{-1} D Z^g, so reduce U v digit-wise mod the invariant factors.
    std::vector<BigInt> w = U_.apply(v);
    for (size_t i = 0; i < w.size(); ++i) {
        BigInt d = factors_[i];
        w[i] = ((w[i] % d) + d) % d;
    }
    return Uinv_.apply(w);
}

bool TranslationQuotient::in_lattice(const std::vector<BigInt>& v) const
{
    std::vector<BigInt> w = U_.apply(v);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] % factors_[i] != 0)
            return false;
    return true;
}

std::vector<BigInt> TranslationQuotient::lattice_coefficients(const std::vector<BigInt>& v) const
{
    if (!in_lattice(v))
        throw RepresentativeError("vector is not in B Z^g");
    RatMat Binv = RatMat(B_).inverse();
    const int g = B_.size();
    std::vector<BigInt> m(g);
    for (int i = 0; i < g; ++i) {
        Rational acc(0);
        for (int j = 0; j < g; ++j)
            acc += Binv.at(i, j) * Rational(v[j]);
        m[i] = numerator(acc) / denominator(acc);
    }
    return m;
}

std::vector<std::vector<BigInt>> TranslationQuotient::representatives(const BigInt& cap) const
{
    if (order_ > cap)
        throw SizeError("translation quotient exceeds enumeration cap");
    const int g = B_.size();
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> digit(g, BigInt(0));
    while (true) {
        out.push_back(reduce(Uinv_.apply(digit)));
        int pos = g - 1;
        while (pos >= 0 && digit[pos] + 1 == factors_[pos]) {
            digit[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++digit[pos];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TranslationQuotient smith_quotient(const IMat& B)
{
    return TranslationQuotient(B);
}

CrystalGroup::CrystalGroup(PointGroup point, TranslationQuotient trans, const BigInt& cap)
    : point_(std::move(point)), trans_(std::move(trans))
{
    BigInt total = BigInt(point_.order()) * trans_.order();
    if (total > cap)
        throw SizeError("crystal group exceeds enumeration cap");
    auto reps = trans_.representatives(cap);
    for (const IMat& M : point_.elements)
        for (const auto& v : reps)
            elements_.push_back(CrystalElement{M, v});
}

CrystalElement CrystalGroup::product(const CrystalElement& a, const CrystalElement& b) const
{
    std::vector<BigInt> v = a.M.apply(b.v);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] += a.v[i];
    return CrystalElement{a.M * b.M, trans_.reduce(v)};
}

CrystalElement CrystalGroup::inverse(const CrystalElement& a) const
{
    IMat Minv = a.M.unimodular_inverse();
    std::vector<BigInt> v = Minv.apply(a.v);
    for (auto& x : v)
        x = -x;
    return CrystalElement{Minv, trans_.reduce(v)};
}

CrystalElement CrystalGroup::identity() const
{
    const int g = point_.B.size();
    return CrystalElement{IMat::identity(g), std::vector<BigInt>(g, BigInt(0))};
}

TorusPoint CrystalGroup::act(const CrystalElement& e, const TorusPoint& x) const
{
    const int g = point_.B.size();
    Eigen::VectorXd out = e.M.to_eigen() * x.coords;
    for (int i = 0; i < g; ++i)
        out(i) += e.v[i].convert_to<double>();
    return TorusPoint::reduce(x.lattice, out);
}

CrystalGroup crystal_group(const IMat& B, const BigInt& cap)
{
    return CrystalGroup(point_group(B), TranslationQuotient(B), cap);
}

AutomorphismDescriptor compose(const AutomorphismDescriptor& a, const AutomorphismDescriptor& b)
{
    const int g = a.M.size();
    AutomorphismDescriptor out;
    out.M = a.M * b.M;
    out.tau.reserve(g);
    for (int i = 0; i < g; ++i) {
        LaurentGerm acc = a.tau[i];
        for (int j = 0; j < g; ++j) {
            long e = a.M.at(i, j).convert_to<long>();
            if (e != 0)
                acc = acc * b.tau[j].pow(e);
        }
        out.tau.push_back(std::move(acc));
    }
    return out;
}

ProjectedAutomorphism project_automorphism(const DegenerationData& D,
                                           const AutomorphismDescriptor& a)
{
    IMat B = b_matrix(D);
    if (!is_form_isometry(B, a.M))
        throw NotIsometryError("descriptor matrix does not preserve the form B^{-1}");
    const int g = D.g;
    ProjectedAutomorphism out;
    out.val_vector.reserve(g);
    for (int i = 0; i < g; ++i)
        out.val_vector.push_back(BigInt(a.tau[i].valuation()));
    TranslationQuotient tq(B);
    out.element = CrystalElement{a.M, tq.reduce(out.val_vector)};
    out.in_kernel = a.M.is_identity() && tq.in_lattice(out.val_vector);
    return out;
}

std::optional<std::vector<LaurentGerm>> kernel_witness(const DegenerationData& D,
                                                       const AutomorphismDescriptor& a)
{
    IMat B = b_matrix(D);
    TranslationQuotient tq(B);
    const int g = D.g;
    std::vector<BigInt> vals(g);
    for (int i = 0; i < g; ++i)
        vals[i] = BigInt(a.tau[i].valuation());
    if (!a.M.is_identity() || !tq.in_lattice(vals))
        return std::nullopt;
    std::vector<BigInt> m = tq.lattice_coefficients(vals);

    std::vector<LaurentGerm> out;
    out.reserve(g);
    for (int i = 0; i < g; ++i) {
        // tau_i / prod_j q_{i,j}^{m_j}, clearing negative powers first.
        LaurentGerm numer = a.tau[i];
        LaurentGerm denom = LaurentGerm::constant(GaussianRational(1L));
        for (int j = 0; j < g; ++j) {
            long mj = m[j].convert_to<long>();
            if (mj > 0)
                denom = denom * D.q(i, j).pow(mj);
            else if (mj < 0)
                numer = numer * D.q(i, j).pow(-mj);
        }
        try {
            LaurentGerm w = numer.divide_exact(denom);
            if (w.is_zero() || w.valuation() != 0)
                return std::nullopt;
            out.push_back(std::move(w));
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }
    return out;
}

FiberAction fiberwise_action(const DegenerationData& D, const AutomorphismDescriptor& a, double t)
{
    IMat B = b_matrix(D);
    if (!is_form_isometry(B, a.M))
        throw NotIsometryError("descriptor matrix does not preserve the form B^{-1}");
    const int g = D.g;
    FiberAction act;
    Eigen::MatrixXd E = D.E.to_eigen();
    act.linear = E * a.M.to_eigen() * E.inverse();
    act.translation.resize(g);
    const double log_t = std::log(t);
    for (int i = 0; i < g; ++i) {
        std::complex<double> v = a.tau[i].eval(std::complex<double>(t, 0.0));
        if (v == std::complex<double>(0.0, 0.0))
            throw EvaluationZeroError("tau vanishes at sample point");
        act.translation(i) = static_cast<double>(D.E.diag[i]) * std::log(std::abs(v)) / log_t;
    }
    act.lattice = normalized_base(D, t).first;
    return act;
}

EquivarianceReport equivariance_check(const DegenerationData& D, const AutomorphismDescriptor& a,
                                      double t, const std::vector<Eigen::VectorXd>& samples_logabs,
                                      double tol)
{
    const int g = D.g;
    FiberAction act = fiberwise_action(D, a, t);
    Eigen::MatrixXd Md = a.M.to_eigen();
    Eigen::VectorXd log_tau(g);
    for (int i = 0; i < g; ++i)
        log_tau(i) = std::log(std::abs(a.tau[i].eval(std::complex<double>(t, 0.0))));

    EquivarianceReport report;
    for (const Eigen::VectorXd& logabs : samples_logabs) {
        Eigen::VectorXd image_logabs = log_tau + Md * logabs;
        TorusPoint upstairs = fiber_map_logabs(D, t, image_logabs).normalized;
        TorusPoint base = fiber_map_logabs(D, t, logabs).normalized;
        Eigen::VectorXd downstairs = act.linear * base.coords + act.translation;
        double d = torus_distance(upstairs, downstairs);
        report.distances.push_back(d);
        report.max_distance = std::max(report.max_distance, d);
    }
    report.pass = report.max_distance <= tol;
    return report;
}

AutomorphismDescriptor split_section(const IMat& B, const CrystalElement& e)
{
    const int g = B.size();
    if (static_cast<int>(e.v.size()) != g)
        throw RepresentativeError("crystal element has no stored representative");
    AutomorphismDescriptor a;
    a.M = e.M;
    a.tau.reserve(g);
    for (int i = 0; i < g; ++i)
        a.tau.push_back(LaurentGerm::monomial(e.v[i].convert_to<long>(), GaussianRational(1L)));
    return a;
}

}  // namespace syztrop
