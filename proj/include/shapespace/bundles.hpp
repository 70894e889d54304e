#pragma once

#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"

namespace shapespace {

// ============================================================================
// Sub-bundles of the tangent space at a curve and their projections.
//
// Reparameterizations move points along the curve, so the vertical space at F
// is { m t-hat : m scalar field }. Three complements are implemented:
//   - horizontal: the elastic-metric orthogonal complement of the vertical
//     space (exact discrete least squares, see docs/horizontal_projection.md);
//   - pointwise normal: { Phi n-hat }, independent of the metric;
//   - arc-length section tangents: fields whose derivative has no tangential
//     component, defined on arc-length parameterized curves.
// ============================================================================

// The scalar coefficient of a vertical field m t-hat.
using VerticalCoefficient = std::vector<double>;

TangentField vertical_field(const SampledCurve& curve,
                            const VerticalCoefficient& m);
TangentField vertical_field(const FrameData& frame,
                            const VerticalCoefficient& m);

// Pointwise normal component (h . n-hat) n-hat. Idempotent; kills t-hat.
TangentField normal_project(const SampledCurve& curve, const TangentField& h);
TangentField normal_project(const FrameData& frame, const TangentField& h);

struct HorizontalSplit {
    VerticalCoefficient m;  // vertical coefficient, h = m t-hat + w
    TangentField w;         // horizontal part, metric-orthogonal to all m~ t-hat
};

// Splits h into its vertical part and its elastic-metric orthogonal
// complement by solving the normal equations of
//   min_m  || h - m t-hat ||^2_{g^{a,b}}.
// The Gram matrix couples only coefficients two samples apart, so the system
// splits into even/odd chains solved as (cyclic) tridiagonal systems.
// Open curves use m(0) = m(end) = 0, matching reparameterizations of [0,1]
// that fix the endpoints.
HorizontalSplit horizontal_project(const SampledCurve& curve,
                                   const TangentField& h,
                                   const ElasticParams& p);
HorizontalSplit horizontal_project(const SampledCurve& curve,
                                   const FrameData& frame,
                                   const TangentField& h,
                                   const ElasticParams& p);

struct SectionSplit {
    VerticalCoefficient m;
    TangentField w;   // satisfies (D_s w . t-hat) ~ 0
    double residual;  // closed curves: mean tangential derivative removed
                      // before integration (the base-point rotation mode)
};

// On an arc-length parameterized curve (constant chords within 1e-6
// relative), splits h = m t-hat + w with w tangent to the arc-length section:
// m accumulates the tangential derivative of h from m(0) = 0.
SectionSplit section_tangent_project(const SampledCurve& curve,
                                     const TangentField& h);

// Degenerate gauge-invariant product: the elastic inner product of the
// pointwise-normal parts. Zero whenever either argument is vertical.
double gauge_inner(const SampledCurve& curve, const TangentField& h1,
                   const TangentField& h2, const ElasticParams& p);
double gauge_inner(const FrameData& frame, const TangentField& h1,
                   const TangentField& h2, const ElasticParams& p);

}  // namespace shapespace
