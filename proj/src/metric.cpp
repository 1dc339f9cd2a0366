#include "syztrop/metric.hpp"

#include <cmath>

#include "syztrop/tropical.hpp"

namespace syztrop {

double cubic_potential(const DegenerationData& D, double t, const Eigen::VectorXd& y)
{
    PeriodSample ps = period_sample(D, t);
    return y.dot(ps.beta_prime.inverse() * y);
}

double na_potential(const IMat& B, const Eigen::VectorXd& w)
{
    RatMat Binv = RatMat(B).inverse();
    return w.dot(Binv.to_eigen() * w);
}

namespace {

// Entry-wise |(1/s) beta'_{ij} - B_{ij}| <= C_ij / |log t| with C_ij from the
// non-leading germ coefficients of q_{ij}.
double deviation_constant(const DegenerationData& D, double t_max)
{
    double C = 0.0;
    for (int i = 0; i < D.g; ++i)
        for (int j = 0; j < D.g; ++j) {
            const LaurentGerm& q = D.q(i, j);
            long val = q.valuation();
            double lead = std::abs(q.leading_coefficient().to_complex());
            double rho = 0.0;
            for (const auto& [e, coeff] : q.terms())
                if (e != val)
                    rho += std::abs(coeff.to_complex()) / lead * std::pow(t_max, double(e - val));
            double c = std::abs(std::log(lead));
            if (rho < 1.0)
                c += -std::log1p(-rho);
            else
                c += 1e9;
            C = std::max(C, c);
        }
    return C;
}

}  // namespace

MetricLimitReport metric_limit_check(const DegenerationData& D, const Eigen::VectorXd& w,
                                     const std::vector<double>& schedule)
{
    MetricLimitReport report;
    GHLimitBase limit = gh_limit(D);
    Eigen::MatrixXd Binv = limit.gram_eigen();
    const double phi_na = w.dot(Binv * w);
    const double entry_C = deviation_constant(D, schedule.empty() ? 0.0 : schedule.front());

    for (double t : schedule) {
        PeriodSample ps = period_sample(D, t);
        PotentialSample sample;
        sample.t = t;
        sample.s = ps.s;
        sample.phi_rescaled = (ps.s * w).dot(ps.beta_prime.inverse() * (ps.s * w)) / ps.s;
        sample.phi_na = phi_na;
        sample.deviation = std::abs(sample.phi_rescaled - phi_na);
        // |w^T (s beta'^{-1} - B^{-1}) w| with s beta'^{-1} - B^{-1} =
        // -B^{-1} ((1/s) beta' - B) s beta'^{-1}.
        Eigen::MatrixXd s_bpi = ps.s * ps.beta_prime.inverse();
        double op = Binv.lpNorm<Eigen::Infinity>() * s_bpi.lpNorm<Eigen::Infinity>();
        sample.bound = (entry_C / std::abs(std::log(t))) * D.g * op * w.squaredNorm() *
                       (1.0 + 1e-6);
        report.samples.push_back(sample);
    }

    report.monotone = true;
    const double slack = 1e-12;
    for (size_t k = 0; k + 1 < report.samples.size(); ++k)
        if (report.samples[k + 1].deviation > report.samples[k].deviation + slack)
            report.monotone = false;
    report.bounded = true;
    for (const auto& sample : report.samples)
        if (sample.deviation > sample.bound + 1e-12)
            report.bounded = false;
    report.pass = report.monotone && report.bounded;
    return report;
}

}  // namespace syztrop
