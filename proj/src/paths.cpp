#include "shapespace/paths.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapespace {

namespace {

void axpy(TangentField& dst, const TangentField& src, double s) {
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] += src[i] * s;
    }
}

// Pointwise normal part of v together with the adjoints of the projection:
// w_i = (v_i . n_i) n_i.
TangentField normal_part(const FrameData& frame, const TangentField& v) {
    TangentField w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = frame.normal[i] * dot(v[i], frame.normal[i]);
    }
    return w;
}

}  // namespace

void validate_path(const CurvePath& path) {
    if (path.slices.size() < 3) {
        throw std::invalid_argument(
            "path must contain at least two time steps (three slices), got " +
            std::to_string(path.slices.size()) + " slices");
    }
    const std::size_t n = path.slices.front().size();
    const bool closed = path.slices.front().closed;
    for (std::size_t k = 0; k < path.slices.size(); ++k) {
        const SampledCurve& slice = path.slices[k];
        if (slice.size() != n) {
            throw std::invalid_argument(
                "path slice " + std::to_string(k) + " has " +
                std::to_string(slice.size()) + " samples, expected " +
                std::to_string(n));
        }
        if (slice.closed != closed) {
            throw std::invalid_argument(
                "path slice " + std::to_string(k) +
                " disagrees with slice 0 about closedness");
        }
        try {
            validate_curve(slice);
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("path slice " + std::to_string(k) +
                                        ": " + err.what());
        }
    }
}

MetricVariant metric_variant_from_name(const std::string& name) {
    if (name == "ambient") return MetricVariant::Ambient;
    if (name == "quotient") return MetricVariant::QuotientHorizontal;
    if (name == "section") return MetricVariant::SectionArclength;
    if (name == "gauge") return MetricVariant::GaugeNormal;
    throw std::invalid_argument(
        "unknown metric variant '" + name +
        "' (expected ambient, quotient, section, or gauge)");
}

std::string metric_variant_name(MetricVariant variant) {
    switch (variant) {
        case MetricVariant::Ambient: return "ambient";
        case MetricVariant::QuotientHorizontal: return "quotient";
        case MetricVariant::SectionArclength: return "section";
        case MetricVariant::GaugeNormal: return "gauge";
    }
    throw std::invalid_argument("unknown metric variant enumerator");
}

TangentField path_velocity(const CurvePath& path, std::size_t k) {
    if (k + 1 >= path.slices.size()) {
        throw std::invalid_argument(
            "velocity index " + std::to_string(k) + " out of range for " +
            std::to_string(path.time_steps()) + " time steps");
    }
    const double kk = static_cast<double>(path.time_steps());
    const std::size_t n = path.slices[k].size();
    TangentField v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = (path.slices[k + 1].points[i] - path.slices[k].points[i]) * kk;
    }
    return v;
}

std::vector<double> path_speed_squares(const CurvePath& path,
                                       const MetricChoice& choice) {
    validate_path(path);
    validate_params(choice.params);
    const std::size_t steps = path.time_steps();
    std::vector<double> terms(steps, 0.0);

    if (choice.variant == MetricVariant::SectionArclength) {
        // Project every slice onto its arc-length parameterization, then
        // measure the straightened path with the plain metric.
        CurvePath projected;
        projected.slices.reserve(path.slices.size());
        for (const SampledCurve& slice : path.slices) {
            projected.slices.push_back(to_arclength(slice));
        }
        for (std::size_t k = 0; k < steps; ++k) {
            const TangentField w = path_velocity(projected, k);
            terms[k] = elastic_inner(projected.slices[k], w, w, choice.params);
        }
        return terms;
    }

    for (std::size_t k = 0; k < steps; ++k) {
        const SampledCurve& base = path.slices[k];
        const FrameData frame = compute_frame(base);
        const TangentField v = path_velocity(path, k);
        switch (choice.variant) {
            case MetricVariant::Ambient:
                terms[k] = elastic_inner(frame, v, v, choice.params);
                break;
            case MetricVariant::QuotientHorizontal: {
                const HorizontalSplit split =
                    horizontal_project(base, frame, v, choice.params);
                terms[k] = elastic_inner(frame, split.w, split.w, choice.params);
                break;
            }
            case MetricVariant::GaugeNormal:
                terms[k] = gauge_inner(frame, v, v, choice.params);
                break;
            case MetricVariant::SectionArclength:
                break;  // handled above
        }
    }
    return terms;
}

double path_energy(const CurvePath& path, const MetricChoice& choice) {
    const std::vector<double> terms = path_speed_squares(path, choice);
    const double kk = static_cast<double>(path.time_steps());
    double total = 0.0;
    for (double term : terms) total += term;
    return total / (2.0 * kk);
}

double path_length(const CurvePath& path, const MetricChoice& choice) {
    const std::vector<double> terms = path_speed_squares(path, choice);
    const double kk = static_cast<double>(path.time_steps());
    double total = 0.0;
    for (double term : terms) {
        total += std::sqrt(term > 0.0 ? term : 0.0);
    }
    return total / kk;
}

std::vector<TangentField> path_energy_gradient(const CurvePath& path,
                                               const MetricChoice& choice) {
    validate_path(path);
    validate_params(choice.params);
    const std::size_t steps = path.time_steps();
    const std::size_t n = path.slices.front().size();
    const double scale = 1.0 / (2.0 * static_cast<double>(steps));
    std::vector<TangentField> grad(steps + 1, TangentField(n, Vec2{0.0, 0.0}));

    if (choice.variant == MetricVariant::SectionArclength) {
        // Differentiate the straightened energy through the arc-length
        // projection of every slice.
        CurvePath projected;
        projected.slices.reserve(steps + 1);
        std::vector<ArclengthStore> stores(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) {
            projected.slices.push_back(to_arclength(path.slices[k], stores[k]));
        }
        std::vector<TangentField> qbar(steps + 1,
                                       TangentField(n, Vec2{0.0, 0.0}));
        for (std::size_t k = 0; k < steps; ++k) {
            const SampledCurve& base = projected.slices[k];
            const FrameData frame = compute_frame(base);
            const TangentField w = path_velocity(projected, k);
            const TangentField gw =
                elastic_inner_grad_field(frame, w, choice.params);
            const TangentField gp =
                elastic_inner_grad_curve(base, frame, w, w, choice.params);
            axpy(qbar[k], gp, scale);
            axpy(qbar[k], gw, -0.5);
            axpy(qbar[k + 1], gw, 0.5);
        }
        for (std::size_t k = 0; k <= steps; ++k) {
            grad[k] = arclength_pullback(path.slices[k], stores[k], qbar[k]);
        }
        return grad;
    }

    for (std::size_t k = 0; k < steps; ++k) {
        const SampledCurve& base = path.slices[k];
        const FrameData frame = compute_frame(base);
        const TangentField v = path_velocity(path, k);

        switch (choice.variant) {
            case MetricVariant::Ambient: {
                const TangentField gv =
                    elastic_inner_grad_field(frame, v, choice.params);
                const TangentField gp =
                    elastic_inner_grad_curve(base, frame, v, v, choice.params);
                axpy(grad[k], gp, scale);
                axpy(grad[k], gv, -0.5);
                axpy(grad[k + 1], gv, 0.5);
                break;
            }
            case MetricVariant::QuotientHorizontal: {
                // The vertical coefficient minimizes the squared norm, so its
                // sensitivity drops out; only the explicit t-hat dependence of
                // w = v - m t-hat survives alongside the base-point terms.
                const HorizontalSplit split =
                    horizontal_project(base, frame, v, choice.params);
                const TangentField gw =
                    elastic_inner_grad_field(frame, split.w, choice.params);
                const TangentField gp = elastic_inner_grad_curve(
                    base, frame, split.w, split.w, choice.params);
                TangentField tbar(n);
                for (std::size_t i = 0; i < n; ++i) {
                    tbar[i] = gw[i] * (-split.m[i]);
                }
                const TangentField fb = frame_pullback(
                    base, frame, tbar, TangentField(n, Vec2{0.0, 0.0}));
                axpy(grad[k], gp, scale);
                axpy(grad[k], fb, scale);
                axpy(grad[k], gw, -0.5);
                axpy(grad[k + 1], gw, 0.5);
                break;
            }
            case MetricVariant::GaugeNormal: {
                // w = (v . n) n, so cotangents on w split into a part along n
                // (back onto v) and a part onto the normals themselves.
                const TangentField w = normal_part(frame, v);
                const TangentField gw =
                    elastic_inner_grad_field(frame, w, choice.params);
                const TangentField gp =
                    elastic_inner_grad_curve(base, frame, w, w, choice.params);
                TangentField vbar(n);
                TangentField nbar(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const double gwn = dot(gw[i], frame.normal[i]);
                    vbar[i] = frame.normal[i] * gwn;
                    nbar[i] = v[i] * gwn +
                              gw[i] * dot(v[i], frame.normal[i]);
                }
                const TangentField fb = frame_pullback(
                    base, frame, TangentField(n, Vec2{0.0, 0.0}), nbar);
                axpy(grad[k], gp, scale);
                axpy(grad[k], fb, scale);
                axpy(grad[k], vbar, -0.5);
                axpy(grad[k + 1], vbar, 0.5);
                break;
            }
            case MetricVariant::SectionArclength:
                break;  // handled above
        }
    }
    return grad;
}

CurvePath gauge_act_path(const PathGauge& gauge, const CurvePath& path) {
    if (gauge.size() != path.slices.size()) {
        throw std::invalid_argument(
            "gauge has " + std::to_string(gauge.size()) +
            " entries for a path with " + std::to_string(path.slices.size()) +
            " slices");
    }
    CurvePath out;
    out.slices.reserve(path.slices.size());
    for (std::size_t k = 0; k < path.slices.size(); ++k) {
        out.slices.push_back(reparameterize(path.slices[k], gauge[k]));
    }
    return out;
}

QuotientAgreementReport quotient_agreement_report(const CurvePath& path,
                                                  const ElasticParams& p) {
    validate_path(path);
    validate_params(p);
    const std::size_t steps = path.time_steps();
    QuotientAgreementReport report;
    report.horizontal.resize(steps);
    report.gauge.resize(steps);
    report.difference.resize(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const SampledCurve& base = path.slices[k];
        const FrameData frame = compute_frame(base);
        const TangentField v = path_velocity(path, k);
        const HorizontalSplit split = horizontal_project(base, frame, v, p);
        report.horizontal[k] = elastic_inner(frame, split.w, split.w, p);
        report.gauge[k] = gauge_inner(frame, v, v, p);
        report.difference[k] = report.gauge[k] - report.horizontal[k];
    }
    return report;
}

}  // namespace shapespace
