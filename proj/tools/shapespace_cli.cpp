// Command-line front end: normalization, inner products, bundle projections,
// path energies, path straightening, the toy-model demos, and the acceptance
// suite. Per-sample data travels as CSV, structured records as JSON; exit
// codes are 0 (success), 1 (validation error), 2 (numerical failure).

#include <cmath>
#include <cstddef>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shapespace/bundles.hpp"
#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"
#include "shapespace/heisenberg.hpp"
#include "shapespace/io.hpp"
#include "shapespace/optimizer.hpp"
#include "shapespace/paths.hpp"
#include "shapespace/sample_shapes.hpp"
#include "shapespace/selftest.hpp"

namespace {

using nlohmann::json;
using namespace shapespace;

constexpr double kPi = 3.14159265358979323846;

// --closed / --open override the closedness sidecar of curve files.
struct ClosednessFlags {
    bool closed = false;
    bool open = false;

    std::optional<bool> value() const {
        if (closed) return true;
        if (open) return false;
        return std::nullopt;
    }
};

void add_closedness_flags(CLI::App* sub, ClosednessFlags& flags) {
    auto* c = sub->add_flag("--closed", flags.closed,
                            "treat input curves as closed");
    auto* o = sub->add_flag("--open", flags.open,
                            "treat input curves as open");
    c->excludes(o);
    o->excludes(c);
}

void print_curve_csv(std::ostream& out, const SampledCurve& curve) {
    out << "x,y\n";
    for (const Vec2& p : curve.points) {
        out << format_double(p.x) << "," << format_double(p.y) << "\n";
    }
}

int report_suite(const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.passed) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed"
              << std::endl;
    return passed == results.size() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// heisenberg verify | heisenberg lift
// ---------------------------------------------------------------------------

struct LiftOptions {
    std::string loop = "circle";
    std::size_t samples = 512;
};

int run_lift(const LiftOptions& opt) {
    std::vector<Vec2> loop(opt.samples + 1);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        const double th = 2.0 * kPi * static_cast<double>(i) /
                          static_cast<double>(opt.samples);
        loop[i] = Vec2{std::cos(th), std::sin(th)};
    }
    loop[opt.samples] = loop[0];

    const HPath lifted = horizontal_lift(loop, 0.0);
    std::cout << "k,x,y,z\n";
    for (std::size_t k = 0; k < lifted.points.size(); ++k) {
        const HPoint& p = lifted.points[k];
        std::cout << k << "," << format_double(p.x) << ","
                  << format_double(p.y) << "," << format_double(p.z) << "\n";
    }

    SampledCurve polygon;
    polygon.closed = true;
    polygon.points.assign(loop.begin(), loop.end() - 1);
    std::cerr << "z displacement " << format_double(lifted.points.back().z)
              << ", polygon area " << format_double(shoelace_area(polygon))
              << std::endl;
    return 0;
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

struct NormalizeOptions {
    std::string input;
    std::string output;
    std::string translation = "none";
    std::string rotation = "none";
    std::string scale = "none";
    ClosednessFlags closedness;
};

int run_normalize(const NormalizeOptions& opt) {
    SampledCurve curve = read_curve_csv(opt.input, opt.closedness.value());
    if (opt.translation == "centroid") curve = center_centroid(curve);
    if (opt.translation == "start") curve = start_to_origin(curve);
    if (opt.rotation == "ellipse") curve = align_ellipse(curve);
    if (opt.rotation == "tangent") curve = align_start_tangent(curve);
    if (opt.scale == "length") curve = scale_length(curve);
    if (opt.scale == "area") curve = scale_area(curve);

    if (opt.output.empty()) {
        print_curve_csv(std::cout, curve);
    } else {
        write_curve_csv(opt.output, curve);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// inner
// ---------------------------------------------------------------------------

struct InnerOptions {
    std::string curve_file;
    std::string field1_file;
    std::string field2_file;  // empty: reuse field1 (squared norm)
    double a = 1.0, b = 1.0;
    ClosednessFlags closedness;
    std::string output;
};

int run_inner(const InnerOptions& opt) {
    const SampledCurve curve =
        read_curve_csv(opt.curve_file, opt.closedness.value());
    const TangentField h1 = read_field_csv(opt.field1_file);
    const TangentField h2 =
        opt.field2_file.empty() ? h1 : read_field_csv(opt.field2_file);
    const ElasticParams params{opt.a, opt.b};
    const double value = elastic_inner(curve, h1, h2, params);

    json report;
    report["a"] = opt.a;
    report["b"] = opt.b;
    report["n"] = curve.size();
    report["closed"] = curve.closed;
    report["value"] = value;
    if (opt.output.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        write_text_file(opt.output, report.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// project
// ---------------------------------------------------------------------------

struct ProjectOptions {
    std::string curve_file;
    std::string field_file;
    std::string bundle;
    double a = 1.0, b = 1.0;
    ClosednessFlags closedness;
    std::string output;  // projected-field CSV (optional)
};

int run_project(const ProjectOptions& opt) {
    const SampledCurve curve =
        read_curve_csv(opt.curve_file, opt.closedness.value());
    const TangentField h = read_field_csv(opt.field_file);
    validate_field(curve, h);
    const ElasticParams params{opt.a, opt.b};
    const FrameData frame = compute_frame(curve);
    const std::size_t n = curve.size();

    VerticalCoefficient m;
    TangentField w;
    double residual = 0.0;
    bool residual_is_reconstruction = true;

    if (opt.bundle == "vertical" || opt.bundle == "horizontal") {
        HorizontalSplit split = horizontal_project(curve, frame, h, params);
        m = std::move(split.m);
        w = std::move(split.w);
    } else if (opt.bundle == "normal") {
        m.resize(n);
        w.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = dot(h[i], frame.tangent[i]);
            w[i] = dot(h[i], frame.normal[i]) * frame.normal[i];
        }
    } else {  // section
        SectionSplit split = section_tangent_project(curve, h);
        m = std::move(split.m);
        w = std::move(split.w);
        residual = split.residual;
        residual_is_reconstruction = false;
    }

    const TangentField vertical = vertical_field(frame, m);
    const double m_sq = elastic_inner(frame, vertical, vertical, params);
    const double w_sq = elastic_inner(frame, w, w, params);
    const double m_norm = std::sqrt(m_sq > 0.0 ? m_sq : 0.0);
    const double w_norm = std::sqrt(w_sq > 0.0 ? w_sq : 0.0);
    const double pairing = elastic_inner(frame, w, vertical, params);
    const double denom = m_norm * w_norm;
    const double orthogonality = denom > 0.0 ? std::abs(pairing) / denom : 0.0;

    if (residual_is_reconstruction) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += norm2(h[i] - vertical[i] - w[i]);
            den += norm2(h[i]);
        }
        residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
    }

    json report;
    report["m_norm"] = m_norm;
    report["w_norm"] = w_norm;
    report["orthogonality"] = orthogonality;
    report["residual"] = residual;
    std::cout << report.dump(2) << std::endl;

    if (!opt.output.empty()) {
        write_field_csv(opt.output, opt.bundle == "vertical" ? vertical : w);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// pathlen
// ---------------------------------------------------------------------------

struct PathlenOptions {
    std::string path_file;
    std::string metric;
    double a = 1.0, b = 1.0;
    std::string output;
};

int run_pathlen(const PathlenOptions& opt) {
    const CurvePath path = read_path_json(opt.path_file);
    const MetricChoice choice{metric_variant_from_name(opt.metric),
                              ElasticParams{opt.a, opt.b}};
    const std::vector<double> squares = path_speed_squares(path, choice);
    const std::size_t k = path.time_steps();

    double energy = 0.0, length = 0.0;
    for (double s : squares) {
        energy += s / (2.0 * static_cast<double>(k));
        length += std::sqrt(s > 0.0 ? s : 0.0) / static_cast<double>(k);
    }

    json report;
    report["metric"] = metric_variant_name(choice.variant);
    report["a"] = opt.a;
    report["b"] = opt.b;
    report["n"] = path.slices.front().size();
    report["k"] = k;
    report["energy"] = energy;
    report["length"] = length;
    report["speed_squares"] = squares;
    if (opt.output.empty()) {
        std::cout << report.dump(2) << std::endl;
    } else {
        write_text_file(opt.output, report.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// geodesic
// ---------------------------------------------------------------------------

struct GeodesicOptions {
    std::string curve0_file;
    std::string curve1_file;
    std::string metric;
    double a = 1.0, b = 1.0;
    std::size_t k = 16;
    OptimizerConfig config;
    ClosednessFlags closedness;
    std::string trace_file;
    std::string output;
};

int run_geodesic(const GeodesicOptions& opt) {
    const SampledCurve f0 =
        read_curve_csv(opt.curve0_file, opt.closedness.value());
    const SampledCurve f1 =
        read_curve_csv(opt.curve1_file, opt.closedness.value());
    const MetricChoice choice{metric_variant_from_name(opt.metric),
                              ElasticParams{opt.a, opt.b}};
    validate_config(opt.config);

    const CurvePath initial = init_path(f0, f1, opt.k);
    const auto [final_path, trace] = straighten(initial, choice, opt.config);

    write_path_json(opt.output, final_path);
    if (!opt.trace_file.empty()) {
        write_trace_csv(opt.trace_file, trace);
    }

    json summary;
    summary["metric"] = metric_variant_name(choice.variant);
    summary["status"] = optimizer_status_name(trace.status);
    summary["message"] = trace.message;
    summary["iterations"] = trace.entries.size();
    summary["initial_energy"] = trace.initial_energy;
    summary["final_energy"] = trace.final_energy;
    summary["path_file"] = opt.output;
    std::cout << summary.dump(2) << std::endl;

    if (trace.status == OptimizerStatus::AbortedNonFinite) {
        std::cerr << "numerical failure: " << trace.message << std::endl;
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metrics, projections, and geodesics for sampled planar "
                 "shapes, plus a three-dimensional toy model of the same "
                 "constructions"};
    app.require_subcommand(1);

    // heisenberg verify | lift
    auto* heis = app.add_subcommand(
        "heisenberg", "toy-model demos: invariant suite and horizontal lift");
    heis->require_subcommand(1);
    auto* verify =
        heis->add_subcommand("verify", "run the toy-model invariant suite");
    LiftOptions lift_opt;
    auto* lift = heis->add_subcommand(
        "lift", "horizontally lift a planar loop and print CSV k,x,y,z");
    lift->add_option("--loop", lift_opt.loop, "loop shape")
        ->check(CLI::IsMember({"circle"}))
        ->capture_default_str();
    lift->add_option("--samples", lift_opt.samples, "number of time steps")
        ->check(CLI::Range(std::size_t(2), std::size_t(10000000)))
        ->capture_default_str();

    // normalize
    NormalizeOptions norm_opt;
    auto* normalize = app.add_subcommand(
        "normalize", "apply translation/rotation/scaling normalizations");
    normalize->add_option("input", norm_opt.input, "curve CSV file")
        ->required()
        ->check(CLI::ExistingFile);
    normalize
        ->add_option("--translation", norm_opt.translation,
                     "translation normalization")
        ->check(CLI::IsMember({"centroid", "start", "none"}))
        ->capture_default_str();
    normalize
        ->add_option("--rotation", norm_opt.rotation,
                     "rotation normalization")
        ->check(CLI::IsMember({"ellipse", "tangent", "none"}))
        ->capture_default_str();
    normalize->add_option("--scale", norm_opt.scale, "scaling normalization")
        ->check(CLI::IsMember({"length", "area", "none"}))
        ->capture_default_str();
    normalize->add_option("--output", norm_opt.output,
                          "output curve CSV (default: print to stdout)");
    add_closedness_flags(normalize, norm_opt.closedness);

    // inner
    InnerOptions inner_opt;
    auto* inner = app.add_subcommand(
        "inner", "elastic inner product of two tangent fields on a curve");
    inner->add_option("curve", inner_opt.curve_file, "curve CSV file")
        ->required()
        ->check(CLI::ExistingFile);
    inner->add_option("field1", inner_opt.field1_file, "tangent field CSV")
        ->required()
        ->check(CLI::ExistingFile);
    inner->add_option("field2", inner_opt.field2_file,
                      "second tangent field CSV (default: field1)")
        ->check(CLI::ExistingFile);
    inner->add_option("--a", inner_opt.a, "stretching weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    inner->add_option("--b", inner_opt.b, "bending weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    inner->add_option("--output", inner_opt.output,
                      "output JSON file (default: print to stdout)");
    add_closedness_flags(inner, inner_opt.closedness);

    // project
    ProjectOptions proj_opt;
    auto* project = app.add_subcommand(
        "project", "split a tangent field against a sub-bundle");
    project->add_option("curve", proj_opt.curve_file, "curve CSV file")
        ->required()
        ->check(CLI::ExistingFile);
    project->add_option("field", proj_opt.field_file, "tangent field CSV")
        ->required()
        ->check(CLI::ExistingFile);
    project->add_option("--bundle", proj_opt.bundle, "target sub-bundle")
        ->required()
        ->check(CLI::IsMember({"vertical", "normal", "horizontal",
                               "section"}));
    project->add_option("--a", proj_opt.a, "stretching weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    project->add_option("--b", proj_opt.b, "bending weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    project->add_option("--output", proj_opt.output,
                        "projected-field CSV output (optional)");
    add_closedness_flags(project, proj_opt.closedness);

    // pathlen
    PathlenOptions pathlen_opt;
    auto* pathlen = app.add_subcommand(
        "pathlen", "energy and length of a path of curves");
    pathlen->add_option("path", pathlen_opt.path_file, "path JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    pathlen->add_option("--metric", pathlen_opt.metric, "metric variant")
        ->required()
        ->check(CLI::IsMember({"ambient", "quotient", "section", "gauge"}));
    pathlen->add_option("--a", pathlen_opt.a, "stretching weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    pathlen->add_option("--b", pathlen_opt.b, "bending weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    pathlen->add_option("--output", pathlen_opt.output,
                        "output JSON file (default: print to stdout)");

    // geodesic
    GeodesicOptions geo_opt;
    auto* geodesic = app.add_subcommand(
        "geodesic", "straighten a path between two curves");
    geodesic->add_option("curve0", geo_opt.curve0_file, "start curve CSV")
        ->required()
        ->check(CLI::ExistingFile);
    geodesic->add_option("curve1", geo_opt.curve1_file, "end curve CSV")
        ->required()
        ->check(CLI::ExistingFile);
    geodesic->add_option("--metric", geo_opt.metric, "metric variant")
        ->required()
        ->check(CLI::IsMember({"ambient", "quotient", "section", "gauge"}));
    geodesic->add_option("--a", geo_opt.a, "stretching weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    geodesic->add_option("--b", geo_opt.b, "bending weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    geodesic->add_option("--k", geo_opt.k, "number of time steps")
        ->check(CLI::Range(std::size_t(2), std::size_t(100000)))
        ->capture_default_str();
    geodesic->add_option("--iters", geo_opt.config.max_iters,
                         "iteration budget")
        ->check(CLI::Range(std::size_t(1), std::size_t(10000000)))
        ->capture_default_str();
    geodesic->add_option("--step", geo_opt.config.initial_step,
                         "initial line-search step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    geodesic->add_option("--grad-tol", geo_opt.config.grad_tol,
                         "gradient-norm stopping tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    geodesic->add_option("--reparam-every", geo_opt.config.reparam_every,
                         "re-project interior slices every n iterations "
                         "(0 = never)")
        ->capture_default_str();
    geodesic->add_option("--trace", geo_opt.trace_file,
                         "optimizer trace CSV output (optional)");
    geodesic->add_option("--output", geo_opt.output, "final path JSON output")
        ->required();
    add_closedness_flags(geodesic, geo_opt.closedness);

    // selftest
    auto* selftest = app.add_subcommand(
        "selftest", "run the full acceptance suite and print a summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) {
            return report_suite(run_heisenberg_suite(&std::cout));
        }
        if (lift->parsed()) return run_lift(lift_opt);
        if (normalize->parsed()) return run_normalize(norm_opt);
        if (inner->parsed()) return run_inner(inner_opt);
        if (project->parsed()) return run_project(proj_opt);
        if (pathlen->parsed()) return run_pathlen(pathlen_opt);
        if (geodesic->parsed()) return run_geodesic(geo_opt);
        if (selftest->parsed()) {
            return report_suite(run_acceptance_suite(&std::cout));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
