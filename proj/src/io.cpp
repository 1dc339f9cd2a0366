#include "syztrop/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "syztrop/errors.hpp"

namespace syztrop {

namespace {

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void append_flat_matrix(std::ostringstream& os, const Json& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            os << "," << fmt_double(x.get<double>());
}

}  // namespace

LaurentGerm germ_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("germ must be an array of [exponent, coefficient] pairs");
    LaurentGerm f;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("germ term must be [exponent, coefficient]");
        long e = term[0].get<long>();
        GaussianRational c;
        if (term[1].is_number_integer())
            c = GaussianRational(term[1].get<long>());
        else if (term[1].is_string())
            c = parse_gaussian_rational(term[1].get<std::string>());
        else
            throw ParseError("germ coefficient must be a string or integer");
        f.add_term(e, c);
    }
    return f;
}

Json germ_to_json(const LaurentGerm& f)
{
    Json out = Json::array();
    for (const auto& [e, c] : f.terms())
        out.push_back(Json::array({e, format_gaussian_rational(c)}));
    return out;
}

ValidationReport degeneration_from_json(const Json& j)
{
    ValidationReport bad;
    try {
        int g = j.at("g").get<int>();
        PolarizationType E;
        for (const auto& e : j.at("polarization"))
            E.diag.push_back(e.get<long>());
        std::vector<std::vector<LaurentGerm>> Q;
        for (const auto& row : j.at("q")) {
            std::vector<LaurentGerm> r;
            for (const auto& entry : row)
                r.push_back(germ_from_json(entry));
            Q.push_back(std::move(r));
        }
        double radius = j.value("sample_radius", 0.5);
        return validate_degeneration(g, std::move(E), std::move(Q), radius);
    } catch (const Json::exception& e) {
        bad.issues.push_back(std::string("config parse error: ") + e.what());
    } catch (const ParseError& e) {
        bad.issues.push_back(std::string("config parse error: ") + e.what());
    }
    return bad;
}

Json degeneration_to_json(const DegenerationData& D)
{
    Json out;
    out["g"] = D.g;
    out["polarization"] = D.E.diag;
    Json q = Json::array();
    for (int i = 0; i < D.g; ++i) {
        Json row = Json::array();
        for (int j = 0; j < D.g; ++j)
            row.push_back(germ_to_json(D.q(i, j)));
        q.push_back(std::move(row));
    }
    out["q"] = std::move(q);
    out["sample_radius"] = D.sample_radius;
    return out;
}

ValidationReport load_degeneration(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        ValidationReport bad;
        bad.issues.push_back("cannot open config file: " + path);
        return bad;
    }
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        ValidationReport bad;
        bad.issues.push_back(std::string("invalid JSON: ") + e.what());
        return bad;
    }
    return degeneration_from_json(j);
}

AutomorphismDescriptor descriptor_from_json(const Json& j)
{
    AutomorphismDescriptor a;
    a.M = imat_from_json(j.at("M"));
    for (const auto& g : j.at("tau"))
        a.tau.push_back(germ_from_json(g));
    if (static_cast<int>(a.tau.size()) != a.M.size())
        throw ParseError("descriptor tau has wrong length");
    for (const auto& g : a.tau)
        if (g.is_zero())
            throw ParseError("descriptor tau entries must be nonzero germs");
    return a;
}

Json descriptor_to_json(const AutomorphismDescriptor& a)
{
    Json out;
    out["M"] = imat_to_json(a.M);
    Json tau = Json::array();
    for (const auto& g : a.tau)
        tau.push_back(germ_to_json(g));
    out["tau"] = std::move(tau);
    return out;
}

Json imat_to_json(const IMat& m)
{
    Json out = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        out.push_back(std::move(row));
    }
    return out;
}

IMat imat_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a nonempty array of rows");
    int n = static_cast<int>(j.size());
    IMat m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw ParseError("matrix must be square");
        for (int k = 0; k < n; ++k)
            m.at(i, k) = BigInt(j[i][k].get<long long>());
    }
    return m;
}

Json bigvec_to_json(const std::vector<BigInt>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x.convert_to<long long>());
    return out;
}

Json crystal_element_to_json(const CrystalElement& e)
{
    Json out;
    out["M"] = imat_to_json(e.M);
    out["v"] = bigvec_to_json(e.v);
    return out;
}

Json validation_report_to_json(const ValidationReport& r)
{
    Json out;
    out["kind"] = "validation";
    out["ok"] = r.ok();
    out["issues"] = r.issues;
    if (r.data)
        out["B"] = imat_to_json(b_matrix(*r.data));
    return out;
}

Json convergence_report_to_json(const ConvergenceReport& r, const std::vector<double>& schedule)
{
    Json out;
    out["kind"] = "hybrid";
    out["schedule"] = schedule;
    out["distances"] = r.distances;
    out["rate"] = r.rate;
    out["bound_constant"] = r.bound_constant;
    out["pass"] = r.pass;
    return out;
}

Json limit_consistency_report_to_json(const LimitConsistencyReport& r)
{
    Json out;
    out["kind"] = "limit";
    out["schedule"] = r.schedule;
    out["lattice_deviation"] = r.lattice_deviation;
    out["gram_deviation"] = r.gram_deviation;
    out["monotone"] = r.monotone;
    out["pass"] = r.pass;
    return out;
}

Json metric_limit_report_to_json(const MetricLimitReport& r)
{
    Json out;
    out["kind"] = "metric";
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json row;
        row["t"] = s.t;
        row["s"] = s.s;
        row["phi_rescaled"] = s.phi_rescaled;
        row["phi_na"] = s.phi_na;
        row["deviation"] = s.deviation;
        row["bound"] = s.bound;
        samples.push_back(std::move(row));
    }
    out["samples"] = std::move(samples);
    out["monotone"] = r.monotone;
    out["pass"] = r.pass;
    return out;
}

std::string report_to_csv(const Json& report)
{
    std::string kind = report.value("kind", "");
    std::ostringstream os;
    if (kind == "hybrid") {
        os << "k,t,distance\n";
        const auto& sched = report.at("schedule");
        const auto& dist = report.at("distances");
        for (size_t k = 0; k < sched.size(); ++k)
            os << (k + 1) << "," << fmt_double(sched[k].get<double>()) << ","
               << fmt_double(dist[k].get<double>()) << "\n";
    } else if (kind == "limit") {
        os << "t,lattice_deviation,gram_deviation\n";
        const auto& sched = report.at("schedule");
        for (size_t k = 0; k < sched.size(); ++k)
            os << fmt_double(sched[k].get<double>()) << ","
               << fmt_double(report.at("lattice_deviation")[k].get<double>()) << ","
               << fmt_double(report.at("gram_deviation")[k].get<double>()) << "\n";
    } else if (kind == "metric") {
        os << "t,s,phi_rescaled,phi_na,deviation\n";
        for (const auto& s : report.at("samples"))
            os << fmt_double(s.at("t").get<double>()) << "," << fmt_double(s.at("s").get<double>())
               << "," << fmt_double(s.at("phi_rescaled").get<double>()) << ","
               << fmt_double(s.at("phi_na").get<double>()) << ","
               << fmt_double(s.at("deviation").get<double>()) << "\n";
    } else if (kind == "fibration") {
        os << "t,s,beta_prime,mclean,normalized_lattice,normalized_gram\n";
        for (const auto& s : report.at("samples")) {
            os << fmt_double(s.at("t").get<double>()) << "," << fmt_double(s.at("s").get<double>());
            append_flat_matrix(os, s.at("beta_prime"));
            append_flat_matrix(os, s.at("mclean"));
            append_flat_matrix(os, s.at("normalized_lattice"));
            append_flat_matrix(os, s.at("normalized_gram"));
            os << "\n";
        }
    } else {
        throw ParseError("report kind '" + kind + "' has no CSV form");
    }
    return os.str();
}

}  // namespace syztrop
