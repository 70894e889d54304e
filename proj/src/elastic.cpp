#include "shapespace/elastic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shapespace {

void validate_params(const ElasticParams& p) {
    if (!(p.a > 0.0) || !(p.b > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b)) {
        throw std::invalid_argument(
            "metric weights a, b must be strictly positive and finite");
    }
}

void validate_field(const SampledCurve& curve, const TangentField& h) {
    if (h.size() != curve.points.size()) {
        throw std::invalid_argument("tangent field has " + std::to_string(h.size()) +
                                    " samples but the curve has " +
                                    std::to_string(curve.points.size()));
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!std::isfinite(h[i].x) || !std::isfinite(h[i].y)) {
            throw std::invalid_argument(
                "tangent field has non-finite components at sample " +
                std::to_string(i));
        }
    }
}

TangentField ds_derivative(const FrameData& frame, const TangentField& h) {
    const std::size_t n = h.size();
    if (n != frame.tangent.size()) {
        throw std::invalid_argument("tangent field size does not match the frame");
    }
    TangentField d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = (h[frame.next[i]] - h[frame.prev[i]]) / frame.span[i];
    }
    return d;
}

TangentField ds_derivative(const SampledCurve& curve, const TangentField& h) {
    validate_field(curve, h);
    return ds_derivative(compute_frame(curve), h);
}

double elastic_inner(const FrameData& frame, const TangentField& h1,
                     const TangentField& h2, const ElasticParams& p) {
    validate_params(p);
    const std::size_t n = frame.tangent.size();
    if (h1.size() != n || h2.size() != n) {
        throw std::invalid_argument("tangent field size does not match the frame");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 d1 = (h1[frame.next[i]] - h1[frame.prev[i]]) / frame.span[i];
        const Vec2 d2 = (h2[frame.next[i]] - h2[frame.prev[i]]) / frame.span[i];
        const double q1t = dot(d1, frame.tangent[i]);
        const double q2t = dot(d2, frame.tangent[i]);
        const double q1n = dot(d1, frame.normal[i]);
        const double q2n = dot(d2, frame.normal[i]);
        sum += (p.a * q1t * q2t + p.b * q1n * q2n) * frame.ds[i];
    }
    return sum;
}

double elastic_inner(const SampledCurve& curve, const TangentField& h1,
                     const TangentField& h2, const ElasticParams& p) {
    validate_field(curve, h1);
    validate_field(curve, h2);
    return elastic_inner(compute_frame(curve), h1, h2, p);
}

TangentField elastic_inner_grad_field(const FrameData& frame,
                                      const TangentField& h,
                                      const ElasticParams& p) {
    const std::size_t n = h.size();
    TangentField hbar(n, Vec2{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 d = (h[frame.next[i]] - h[frame.prev[i]]) / frame.span[i];
        const double qt = dot(d, frame.tangent[i]);
        const double qn = dot(d, frame.normal[i]);
        const Vec2 dbar = frame.tangent[i] * (2.0 * p.a * frame.ds[i] * qt) +
                          frame.normal[i] * (2.0 * p.b * frame.ds[i] * qn);
        const Vec2 w = dbar / frame.span[i];
        hbar[frame.next[i]] += w;
        hbar[frame.prev[i]] -= w;
    }
    return hbar;
}

TangentField frame_pullback(const SampledCurve& curve, const FrameData& frame,
                            const TangentField& tbar_in, const TangentField& nbar_in) {
    const std::size_t n = curve.points.size();
    TangentField pbar(n, Vec2{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        // n-hat = rot90(t-hat), so normal cotangents fold onto the tangent.
        Vec2 tbar = tbar_in[i] + rot90_adjoint(nbar_in[i]);
        // t-hat = u/|u| with u the stencil difference of the points.
        const Vec2 u = curve.points[frame.next[i]] - curve.points[frame.prev[i]];
        const double un = norm(u);
        const Vec2 ubar = (tbar - frame.tangent[i] * dot(tbar, frame.tangent[i])) / un;
        pbar[frame.next[i]] += ubar;
        pbar[frame.prev[i]] -= ubar;
    }
    return pbar;
}

TangentField chord_pullback(const SampledCurve& curve, const FrameData& frame,
                            const std::vector<double>& lbar) {
    const std::size_t n = curve.points.size();
    const std::size_t n_edges = frame.chord.size();
    if (lbar.size() != n_edges) {
        throw std::invalid_argument("chord cotangent size does not match the frame");
    }
    TangentField pbar(n, Vec2{0.0, 0.0});
    for (std::size_t i = 0; i < n_edges; ++i) {
        const Vec2 ehat = (curve.points[(i + 1) % n] - curve.points[i]) / frame.chord[i];
        pbar[(i + 1) % n] += ehat * lbar[i];
        pbar[i] -= ehat * lbar[i];
    }
    return pbar;
}

TangentField elastic_inner_grad_curve(const SampledCurve& curve,
                                      const FrameData& frame,
                                      const TangentField& h1,
                                      const TangentField& h2,
                                      const ElasticParams& p) {
    const std::size_t n = curve.points.size();
    const bool closed = curve.closed;

    TangentField tbar(n), nbar(n);
    std::vector<double> dsbar(n), spanbar(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 d1 = (h1[frame.next[i]] - h1[frame.prev[i]]) / frame.span[i];
        const Vec2 d2 = (h2[frame.next[i]] - h2[frame.prev[i]]) / frame.span[i];
        const double q1t = dot(d1, frame.tangent[i]);
        const double q2t = dot(d2, frame.tangent[i]);
        const double q1n = dot(d1, frame.normal[i]);
        const double q2n = dot(d2, frame.normal[i]);

        dsbar[i] = p.a * q1t * q2t + p.b * q1n * q2n;
        const Vec2 d1bar = (frame.tangent[i] * (p.a * q2t) +
                            frame.normal[i] * (p.b * q2n)) * frame.ds[i];
        const Vec2 d2bar = (frame.tangent[i] * (p.a * q1t) +
                            frame.normal[i] * (p.b * q1n)) * frame.ds[i];
        spanbar[i] = -(dot(d1bar, d1) + dot(d2bar, d2)) / frame.span[i];
        tbar[i] = (d1 * q2t + d2 * q1t) * (p.a * frame.ds[i]);
        nbar[i] = (d1 * q2n + d2 * q1n) * (p.b * frame.ds[i]);
    }

    // Quadrature weights and stencil spans are sums of chord lengths; push
    // their cotangents onto the chords they are built from.
    std::vector<double> lbar(frame.chord.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (closed) {
            const double w = 0.5 * dsbar[i] + spanbar[i];
            lbar[i] += w;
            lbar[(i + n - 1) % n] += w;
        } else if (i == 0) {
            lbar[0] += 0.5 * dsbar[0] + spanbar[0];
        } else if (i == n - 1) {
            lbar[n - 2] += 0.5 * dsbar[n - 1] + spanbar[n - 1];
        } else {
            const double w = 0.5 * dsbar[i] + spanbar[i];
            lbar[i] += w;
            lbar[i - 1] += w;
        }
    }

    TangentField pbar = frame_pullback(curve, frame, tbar, nbar);
    const TangentField cbar = chord_pullback(curve, frame, lbar);
    for (std::size_t i = 0; i < n; ++i) pbar[i] += cbar[i];
    return pbar;
}

}  // namespace shapespace
