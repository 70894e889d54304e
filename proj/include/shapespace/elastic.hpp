#pragma once

#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/vec2.hpp"

namespace shapespace {

// A tangent field attaches one planar vector to each sample of a curve.
using TangentField = std::vector<Vec2>;

// Weights of the first-order curve metric: `a` penalizes tangential
// stretching of the derivative, `b` normal bending. Both strictly positive.
struct ElasticParams {
    double a = 1.0;
    double b = 1.0;
};

void validate_params(const ElasticParams& p);

// Throws std::invalid_argument when the field size differs from the curve's
// or a component is not finite.
void validate_field(const SampledCurve& curve, const TangentField& h);

// Arc-length derivative of a field along the curve: centered difference over
// the stencil span (one-sided at open endpoints).
TangentField ds_derivative(const SampledCurve& curve, const TangentField& h);
TangentField ds_derivative(const FrameData& frame, const TangentField& h);

// The inner product  sum_i [ a (D_s h1 . t)(D_s h2 . t)
//                          + b (D_s h1 . n)(D_s h2 . n) ] ds_i.
// Symmetric, bilinear, positive semidefinite (kills fields with D_s h = 0).
// Summation is sequential in sample order so results are reproducible.
double elastic_inner(const SampledCurve& curve, const TangentField& h1,
                     const TangentField& h2, const ElasticParams& p);
double elastic_inner(const FrameData& frame, const TangentField& h1,
                     const TangentField& h2, const ElasticParams& p);

// Gradient of elastic_inner(curve, h, h, p) with respect to h.
TangentField elastic_inner_grad_field(const FrameData& frame,
                                      const TangentField& h,
                                      const ElasticParams& p);

// Gradient of elastic_inner(curve, h1, h2, p) with respect to the sample
// points, holding the field values fixed. Differentiates through the frame
// (tangents, normals, weights) and the chord lengths.
TangentField elastic_inner_grad_curve(const SampledCurve& curve,
                                      const FrameData& frame,
                                      const TangentField& h1,
                                      const TangentField& h2,
                                      const ElasticParams& p);

// Adjoint of compute_frame for the unit tangent/normal outputs: pushes
// cotangents on t-hat and n-hat back onto the sample points.
TangentField frame_pullback(const SampledCurve& curve, const FrameData& frame,
                            const TangentField& tbar, const TangentField& nbar);

// Adjoint of the chord lengths l_i = |P_{i+1} - P_i|: pushes scalar
// cotangents on the chords back onto the sample points.
TangentField chord_pullback(const SampledCurve& curve, const FrameData& frame,
                            const std::vector<double>& lbar);

}  // namespace shapespace
