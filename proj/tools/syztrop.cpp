// Command-line front end: config ingestion, subcommand dispatch, JSON/CSV
// report emission. Exit codes: 0 pass, 1 check failure, 2 invalid input.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "syztrop/crystal.hpp"
#include "syztrop/degeneration.hpp"
#include "syztrop/errors.hpp"
#include "syztrop/fibration.hpp"
#include "syztrop/io.hpp"
#include "syztrop/metric.hpp"
#include "syztrop/tropical.hpp"

using namespace syztrop;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void fail_invalid(const std::string& what, const std::vector<std::string>& issues = {})
{
    Json err;
    err["error"] = what;
    if (!issues.empty())
        err["issues"] = issues;
    std::cerr << err.dump(2) << "\n";
}

DegenerationData load_or_throw(const std::string& path)
{
    ValidationReport r = load_degeneration(path);
    if (!r.ok()) {
        fail_invalid("invalid degeneration config", r.issues);
        throw InvalidInput("config rejected");
    }
    return *r.data;
}

std::vector<double> parse_schedule_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size() || !(v > 0.0 && v < 1.0))
            throw InvalidInput("schedule values must be reals in (0,1)");
        out.push_back(v);
    }
    for (size_t k = 0; k + 1 < out.size(); ++k)
        if (!(out[k] > out[k + 1]))
            throw InvalidInput("schedule must be strictly decreasing");
    if (out.empty())
        throw InvalidInput("schedule is empty");
    return out;
}

std::vector<double> resolve_schedule(const DegenerationData& D, const std::string& flag)
{
    if (!flag.empty())
        return parse_schedule_list(flag);
    if (const char* env = std::getenv("SYZ_LAB_SCHEDULE"); env && *env)
        return parse_schedule_list(env);
    std::vector<double> sched = default_schedule(D.sample_radius);
    if (sched.empty())
        throw InvalidInput("sample_radius admits no default schedule points");
    return sched;
}

Eigen::VectorXd parse_vector(const std::string& text)
{
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        vals.push_back(std::stod(item, &used));
        if (used != item.size())
            throw InvalidInput("malformed vector component '" + item + "'");
    }
    Eigen::VectorXd out(static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i)
        out(static_cast<int>(i)) = vals[i];
    return out;
}

// Complex components "a", "a+bi", "bi" (spaces optional), separated by commas.
std::vector<std::complex<double>> parse_point(const std::string& text)
{
    std::vector<std::complex<double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string s;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s.push_back(c);
        if (s.empty())
            throw InvalidInput("empty point component");
        double re = 0.0, im = 0.0;
        size_t used = 0;
        if (s.back() == 'i') {
            std::string body = s.substr(0, s.size() - 1);
            // Split at the last sign that is not a leading sign or exponent sign.
            size_t split = std::string::npos;
            for (size_t p = 1; p < body.size(); ++p)
                if ((body[p] == '+' || body[p] == '-') &&
                    body[p - 1] != 'e' && body[p - 1] != 'E')
                    split = p;
            if (split == std::string::npos) {
                if (body.empty() || body == "+" || body == "-")
                    body += "1";
                im = std::stod(body, &used);
                if (used != body.size())
                    throw InvalidInput("malformed point component '" + item + "'");
            } else {
                re = std::stod(body.substr(0, split), &used);
                if (used != split)
                    throw InvalidInput("malformed point component '" + item + "'");
                std::string imag = body.substr(split);
                if (imag == "+" || imag == "-")
                    imag += "1";
                im = std::stod(imag, &used);
                if (used != imag.size())
                    throw InvalidInput("malformed point component '" + item + "'");
            }
        } else {
            re = std::stod(s, &used);
            if (used != s.size())
                throw InvalidInput("malformed point component '" + item + "'");
        }
        out.emplace_back(re, im);
    }
    return out;
}

// Germ list "[[0,\"2\"]];[[1,\"1\"]]" -- JSON germs separated by semicolons.
std::vector<LaurentGerm> parse_germ_list(const std::string& text)
{
    std::vector<LaurentGerm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        try {
            out.push_back(germ_from_json(Json::parse(item)));
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("malformed germ JSON: ") + e.what());
        }
    }
    return out;
}

Json matrix_to_json(const Eigen::MatrixXd& m)
{
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

Json vector_to_json(const Eigen::VectorXd& v)
{
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

void emit(const Json& report, const std::string& format)
{
    if (format == "csv")
        std::cout << report_to_csv(report);
    else
        std::cout << report.dump(2) << "\n";
}

int run_validate(const std::string& config, bool emit_normalized)
{
    ValidationReport r = load_degeneration(config);
    if (!r.ok()) {
        fail_invalid("invalid degeneration config", r.issues);
        return kExitInvalidInput;
    }
    if (emit_normalized)
        std::cout << degeneration_to_json(*r.data).dump(2) << "\n";
    else
        std::cout << validation_report_to_json(r).dump(2) << "\n";
    return kExitPass;
}

int run_fibration(const std::string& config, const std::string& schedule_flag, double t,
                  const std::string& point, const std::string& format)
{
    DegenerationData D = load_or_throw(config);
    if (t > 0.0) {
        FiberBase fb = fiber_base(D, t);
        Json out;
        out["kind"] = "fiber";
        out["t"] = fb.t;
        out["s"] = fb.s;
        out["beta_lattice"] = matrix_to_json(fb.beta_lattice);
        out["grade_a"] = matrix_to_json(fb.grade_a);
        out["grade_b"] = matrix_to_json(fb.grade_b);
        out["mclean"] = matrix_to_json(fb.mclean);
        out["kahler"] = matrix_to_json(fb.kahler);
        out["normalized_lattice"] = matrix_to_json(fb.normalized_lattice);
        out["normalized_gram"] = matrix_to_json(fb.normalized_gram);
        if (!point.empty()) {
            std::vector<std::complex<double>> Z = parse_point(point);
            if (static_cast<int>(Z.size()) != D.g)
                throw InvalidInput("point has wrong dimension");
            FiberImage img = fiber_map(D, t, Z);
            out["raw_point"] = vector_to_json(img.raw.coords);
            out["normalized_point"] = vector_to_json(img.normalized.coords);
        }
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    // Whole-schedule table.
    Json out;
    out["kind"] = "fibration";
    Json samples = Json::array();
    for (double tt : resolve_schedule(D, schedule_flag)) {
        FiberBase fb = fiber_base(D, tt);
        Json row;
        row["t"] = fb.t;
        row["s"] = fb.s;
        row["beta_prime"] = matrix_to_json(fb.normalized_lattice * fb.s);
        row["mclean"] = matrix_to_json(fb.mclean);
        row["normalized_lattice"] = matrix_to_json(fb.normalized_lattice);
        row["normalized_gram"] = matrix_to_json(fb.normalized_gram);
        samples.push_back(std::move(row));
    }
    out["samples"] = std::move(samples);
    emit(out, format);
    return kExitPass;
}

int run_limit(const std::string& config, const std::string& schedule_flag,
              const std::string& format)
{
    DegenerationData D = load_or_throw(config);
    GHLimitBase limit = gh_limit(D);
    LimitConsistencyReport r = limit_consistency(D, resolve_schedule(D, schedule_flag));
    Json out = limit_consistency_report_to_json(r);
    out["B"] = imat_to_json(limit.B);
    emit(out, format);
    return r.pass ? kExitPass : kExitCheckFailed;
}

int run_autgroup(const std::string& config, bool list_elements)
{
    DegenerationData D = load_or_throw(config);
    for (long e : D.E.diag)
        if (e != 1) {
            std::cerr << "warning: non-principal polarization; the limit-torus group "
                         "uses B = val q verbatim\n";
            break;
        }
    IMat B = b_matrix(D);
    PointGroup pg = point_group(B);
    TranslationQuotient tq(B);
    CrystalGroup group = crystal_group(B);

    Json out;
    out["kind"] = "autgroup";
    out["B"] = imat_to_json(B);
    out["point_order"] = pg.order();
    out["invariant_factors"] = bigvec_to_json(tq.invariant_factors());
    out["translation_order"] = tq.order().convert_to<long long>();
    out["crystal_order"] = group.order();
    if (list_elements) {
        Json elems = Json::array();
        for (const CrystalElement& e : group.elements())
            elems.push_back(crystal_element_to_json(e));
        out["elements"] = std::move(elems);
    }
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int run_project(const std::string& config, const std::string& descriptor_path,
                const std::string& schedule_flag)
{
    DegenerationData D = load_or_throw(config);
    std::ifstream in(descriptor_path);
    if (!in)
        throw InvalidInput("cannot open descriptor file: " + descriptor_path);
    AutomorphismDescriptor a;
    try {
        Json j;
        in >> j;
        a = descriptor_from_json(j);
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed descriptor: ") + e.what());
    } catch (const ParseError& e) {
        throw InvalidInput(std::string("malformed descriptor: ") + e.what());
    }

    ProjectedAutomorphism p;
    try {
        p = project_automorphism(D, a);
    } catch (const NotIsometryError& e) {
        throw InvalidInput(e.what());
    }

    Json out;
    out["kind"] = "projection";
    out["element"] = crystal_element_to_json(p.element);
    out["val_vector"] = bigvec_to_json(p.val_vector);
    out["in_kernel"] = p.in_kernel;

    std::vector<double> schedule = resolve_schedule(D, schedule_flag);
    std::mt19937 rng(20240901);  // fixed seed: reports must be deterministic
    std::uniform_real_distribution<double> la_dist(-5.0, 5.0);
    bool pass = true;
    Json checks = Json::array();
    for (double t : schedule) {
        std::vector<Eigen::VectorXd> samples;
        for (int n = 0; n < 100; ++n) {
            Eigen::VectorXd la(D.g);
            for (int i = 0; i < D.g; ++i)
                la(i) = la_dist(rng);
            samples.push_back(la);
        }
        FiberAction act = fiberwise_action(D, a, t);
        EquivarianceReport r = equivariance_check(D, a, t, samples);
        Json row;
        row["t"] = t;
        row["translation"] = vector_to_json(act.translation);
        row["max_distance"] = r.max_distance;
        row["pass"] = r.pass;
        checks.push_back(std::move(row));
        pass = pass && r.pass;
    }
    out["equivariance"] = std::move(checks);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? kExitPass : kExitCheckFailed;
}

int run_hybrid(const std::string& config, const std::string& schedule_flag,
               const std::string& c_text, const std::string& perturb_text,
               const std::string& format)
{
    DegenerationData D = load_or_throw(config);
    Eigen::VectorXd c = parse_vector(c_text);
    if (c.size() != D.g)
        throw InvalidInput("target vector has wrong dimension");
    std::vector<LaurentGerm> perturbations;
    if (!perturb_text.empty()) {
        perturbations = parse_germ_list(perturb_text);
        if (static_cast<int>(perturbations.size()) != D.g)
            throw InvalidInput("perturbation list has wrong dimension");
    }
    std::vector<double> schedule = resolve_schedule(D, schedule_flag);
    MSSequence seq = sample_ms_sequence(D, c, schedule, perturbations);
    ConvergenceReport r = hybrid_convergence(D, seq);
    Json out = convergence_report_to_json(r, schedule);
    out["sequence_valid"] = seq.valid;
    emit(out, format);
    return (r.pass && seq.valid) ? kExitPass : kExitCheckFailed;
}

int run_metric(const std::string& config, const std::string& schedule_flag,
               const std::string& w_text, const std::string& format)
{
    DegenerationData D = load_or_throw(config);
    Eigen::VectorXd w = parse_vector(w_text);
    if (w.size() != D.g)
        throw InvalidInput("test vector has wrong dimension");
    MetricLimitReport r = metric_limit_check(D, w, resolve_schedule(D, schedule_flag));
    emit(metric_limit_report_to_json(r), format);
    return r.pass ? kExitPass : kExitCheckFailed;
}

int run_export_plot(const std::string& report_path)
{
    std::ifstream in(report_path);
    if (!in)
        throw InvalidInput("cannot open report file: " + report_path);
    Json report;
    try {
        in >> report;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed report JSON: ") + e.what());
    }
    std::cout << report_to_csv(report);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"SYZ fibration and tropical-limit toolkit for degenerating "
                 "polarized abelian varieties"};
    app.require_subcommand(1);

    std::string config, schedule_flag, format = "json";
    std::string point_text, descriptor_path, c_text, perturb_text, w_text, report_path;
    double t_value = 0.0;
    bool emit_normalized = false;
    bool list_elements = false;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("config", config, "degeneration config JSON")->required();
        sub->add_option("--schedule", schedule_flag,
                        "comma-separated t values, strictly decreasing "
                        "(overrides SYZ_LAB_SCHEDULE)");
        if (with_format)
            sub->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "check a degeneration config");
    validate->add_option("config", config, "degeneration config JSON")->required();
    validate->add_flag("--emit-normalized", emit_normalized,
                       "print the normalized config instead of the report");

    CLI::App* fibration =
        app.add_subcommand("fibration", "fiber base data (single t or whole schedule)");
    add_common(fibration);
    fibration->add_option("--t", t_value, "single sample point on the ray");
    fibration->add_option("--point", point_text,
                          "comma-separated complex coordinates, e.g. '0.5,0.1+0.2i'");

    CLI::App* limit = app.add_subcommand("limit", "compare both tropical limits");
    add_common(limit);

    CLI::App* autgroup = app.add_subcommand("autgroup", "limit-torus automorphism groups");
    autgroup->add_option("config", config, "degeneration config JSON")->required();
    autgroup->add_flag("--elements", list_elements, "list all crystal group elements");

    CLI::App* project = app.add_subcommand("project", "project an automorphism descriptor");
    add_common(project, false);
    project->add_option("--descriptor", descriptor_path, "descriptor JSON file")->required();

    CLI::App* hybrid = app.add_subcommand("hybrid", "Morgan-Shalen convergence check");
    add_common(hybrid);
    hybrid->add_option("--c", c_text, "comma-separated target vector")->required();
    hybrid->add_option("--perturb", perturb_text,
                       "semicolon-separated germ JSON perturbations");

    CLI::App* metric = app.add_subcommand("metric", "rescaled potential convergence check");
    add_common(metric);
    metric->add_option("--w", w_text, "comma-separated test vector")->required();

    CLI::App* export_plot = app.add_subcommand("export-plot", "convert a JSON report to CSV");
    export_plot->add_option("report", report_path, "report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalidInput;
    }

    try {
        if (validate->parsed())
            return run_validate(config, emit_normalized);
        if (fibration->parsed())
            return run_fibration(config, schedule_flag, t_value, point_text, format);
        if (limit->parsed())
            return run_limit(config, schedule_flag, format);
        if (autgroup->parsed())
            return run_autgroup(config, list_elements);
        if (project->parsed())
            return run_project(config, descriptor_path, schedule_flag);
        if (hybrid->parsed())
            return run_hybrid(config, schedule_flag, c_text, perturb_text, format);
        if (metric->parsed())
            return run_metric(config, schedule_flag, w_text, format);
        if (export_plot->parsed())
            return run_export_plot(report_path);
    } catch (const InvalidInput& e) {
        fail_invalid(e.what());
        return kExitInvalidInput;
    } catch (const ParseError& e) {
        fail_invalid(e.what());
        return kExitInvalidInput;
    } catch (const DomainError& e) {
        fail_invalid(e.what());
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        fail_invalid(e.what());
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
