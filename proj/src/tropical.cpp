#include "syztrop/tropical.hpp"

#include <cmath>
#include <limits>

#include "syztrop/crystal.hpp"
#include "syztrop/errors.hpp"
#include "syztrop/fibration.hpp"

namespace syztrop {

GHLimitBase gh_limit(const DegenerationData& D)
{
    GHLimitBase out;
    out.B = b_matrix(D);
    out.gram = RatMat(out.B).inverse();
    return out;
}

TorusPoint tropicalize_point(const DegenerationData& D, const std::vector<LaurentGerm>& Z)
{
    if (static_cast<int>(Z.size()) != D.g)
        throw DomainError("point has wrong dimension");
    IMat B = b_matrix(D);
    TranslationQuotient tq(B);
    std::vector<BigInt> vals(D.g);
    for (int i = 0; i < D.g; ++i)
        vals[i] = BigInt(Z[i].valuation());
    std::vector<BigInt> rep = tq.reduce(vals);

    TorusPoint p;
    p.lattice = B.to_eigen();
    p.coords.resize(D.g);
    for (int i = 0; i < D.g; ++i)
        p.coords(i) = rep[i].convert_to<double>();
    return p;
}

MSSequence sample_ms_sequence(const DegenerationData& D, const Eigen::VectorXd& c,
                              const std::vector<double>& schedule,
                              const std::vector<LaurentGerm>& perturbations)
{
    const int g = D.g;
    if (c.size() != g)
        throw DomainError("target vector has wrong dimension");
    if (!perturbations.empty() && static_cast<int>(perturbations.size()) != g)
        throw DomainError("perturbation vector has wrong dimension");
    for (size_t k = 0; k + 1 < schedule.size(); ++k)
        if (!(schedule[k] > schedule[k + 1]))
            throw DomainError("schedule must be strictly decreasing");

    MSSequence seq;
    seq.target = c;
    seq.schedule = schedule;
    seq.perturbations = perturbations;
    for (double t : schedule) {
        Eigen::VectorXd logabs(g);
        double log_t = std::log(t);
        for (int i = 0; i < g; ++i) {
            logabs(i) = c(i) * log_t;
            if (!perturbations.empty())
                logabs(i) += std::log(std::abs(perturbations[i].eval({t, 0.0})));
        }
        seq.log_moduli.push_back(logabs);
    }
    // The limit of log|Z_i|/log t shifts by the perturbation valuation; the
    // sequence targets c only when every perturbation is a unit germ.
    seq.valid = true;
    for (const LaurentGerm& p : perturbations)
        if (p.is_zero() || p.valuation() != 0)
            seq.valid = false;
    return seq;
}

namespace {

// |log|p(t)|| <= |log|lead|| + |log(1 - rho)| with rho bounding the non-lead
// tail at the largest scheduled t.
double perturbation_bound(const std::vector<LaurentGerm>& perturbations,
                          const PolarizationType& E, double t_max)
{
    if (perturbations.empty())
        return 0.0;
    double C = 0.0;
    for (size_t i = 0; i < perturbations.size(); ++i) {
        const LaurentGerm& p = perturbations[i];
        long val = p.valuation();
        double lead = std::abs(p.leading_coefficient().to_complex());
        double rho = 0.0;
        for (const auto& [e, coeff] : p.terms())
            if (e != val)
                rho += std::abs(coeff.to_complex()) / lead * std::pow(t_max, double(e - val));
        double c_i = std::abs(std::log(lead));
        if (rho < 1.0)
            c_i += -std::log1p(-rho);
        else
            c_i += 1e9;  // tail dominates; bound is vacuous
        C = std::max(C, static_cast<double>(E.diag[i]) * c_i);
    }
    return C;
}

double fit_rate(const std::vector<double>& schedule, const std::vector<double>& distances)
{
    // Slope of log d vs log(1/|log t|), over the nonzero distances.
    std::vector<double> xs, ys;
    for (size_t k = 0; k < distances.size(); ++k)
        if (distances[k] > 1e-14) {
            xs.push_back(std::log(1.0 / std::abs(std::log(schedule[k]))));
            ys.push_back(std::log(distances[k]));
        }
    if (xs.size() < 2)
        return std::numeric_limits<double>::infinity();
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return den == 0 ? std::numeric_limits<double>::infinity() : num / den;
}

}  // namespace

ConvergenceReport hybrid_convergence(const DegenerationData& D, const MSSequence& seq)
{
    const int g = D.g;
    GHLimitBase limit = gh_limit(D);
    Eigen::MatrixXd gram = limit.gram_eigen();

    Eigen::VectorXd Ec(g);
    for (int i = 0; i < g; ++i)
        Ec(i) = static_cast<double>(D.E.diag[i]) * seq.target(i);
    TorusPoint limit_point = TorusPoint::reduce(limit.lattice(), Ec);

    ConvergenceReport report;
    report.bound_constant =
        perturbation_bound(seq.perturbations, D.E,
                           seq.schedule.empty() ? 0.0 : seq.schedule.front());
    bool bounded = true;
    for (size_t k = 0; k < seq.schedule.size(); ++k) {
        double t = seq.schedule[k];
        TorusPoint u = fiber_map_logabs(D, t, seq.log_moduli[k]).normalized;
        // Distance measured in the fixed limit torus so rates are comparable.
        TorusPoint u_in_limit = TorusPoint::reduce(limit.lattice(), u.coords);
        double d = torus_distance(u_in_limit, limit_point.coords, gram);
        report.distances.push_back(d);
        if (d > report.bound_constant / std::abs(std::log(t)) + 1e-9)
            bounded = false;
    }
    report.rate = fit_rate(seq.schedule, report.distances);
    report.pass = bounded && report.rate >= 0.9;
    return report;
}

LimitConsistencyReport limit_consistency(const DegenerationData& D,
                                         const std::vector<double>& schedule,
                                         double final_tolerance)
{
    GHLimitBase limit = gh_limit(D);
    Eigen::MatrixXd Bd = limit.lattice();
    Eigen::MatrixXd Binv = limit.gram_eigen();

    LimitConsistencyReport report;
    report.schedule = schedule;
    report.final_tolerance = final_tolerance;
    for (double t : schedule) {
        auto [lattice, gram] = normalized_base(D, t);
        report.lattice_deviation.push_back((lattice - Bd).lpNorm<Eigen::Infinity>());
        report.gram_deviation.push_back((gram - Binv).lpNorm<Eigen::Infinity>());
    }
    report.monotone = true;
    const double slack = 1e-12;  // float roundoff for exactly-monomial data
    for (size_t k = 0; k + 1 < schedule.size(); ++k) {
        if (report.lattice_deviation[k + 1] > report.lattice_deviation[k] + slack)
            report.monotone = false;
        if (report.gram_deviation[k + 1] > report.gram_deviation[k] + slack)
            report.monotone = false;
    }
    bool final_ok = report.lattice_deviation.empty() ||
                    (report.lattice_deviation.back() <= final_tolerance &&
                     report.gram_deviation.back() <= final_tolerance);
    report.pass = report.monotone && final_ok;
    return report;
}

}  // namespace syztrop
