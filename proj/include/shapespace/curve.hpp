#pragma once

#include <cstddef>
#include <vector>

#include "shapespace/vec2.hpp"

namespace shapespace {

// ============================================================================
// Sampled planar curves and their discrete differential geometry.
//
// A curve is an ordered polygon of N samples. Closed curves identify sample N
// with sample 0 (the wrap point is not stored); open curves keep both
// endpoints. All derivative stencils are centered where possible and
// one-sided at open endpoints.
// ============================================================================

struct SampledCurve {
    std::vector<Vec2> points;
    bool closed = true;

    std::size_t size() const { return points.size(); }
};

// Throws std::invalid_argument if the curve has fewer than 8 samples,
// coincident consecutive samples, or non-finite coordinates.
void validate_curve(const SampledCurve& curve);

// Per-sample frame quantities plus the index stencils they were built with.
// `prev`/`next` give the samples used by the centered difference at i
// (wrapping when closed, clamped one-sided at open endpoints), `span` the
// arc-length separation between them, `ds` the quadrature weight at i.
struct FrameData {
    std::vector<Vec2> tangent;   // unit tangent t at each sample
    std::vector<Vec2> normal;    // unit normal n = rot90(t)
    std::vector<double> ds;      // trapezoidal arc-length weight
    std::vector<double> span;    // arc distance between stencil neighbours
    std::vector<double> kappa;   // signed curvature (d t / ds) . n
    std::vector<std::size_t> prev, next;
    std::vector<double> chord;   // edge lengths l_i = |P_{i+1} - P_i|
    double total_length = 0.0;   // == sum of ds == sum of chords
};

FrameData compute_frame(const SampledCurve& curve);

// total polygon length (sum of chords)
double polygon_length(const SampledCurve& curve);

// signed shoelace area of a closed polygon (counterclockwise positive)
double shoelace_area(const SampledCurve& curve);

// ============================================================================
// Reparameterization. A DiffeoGrid holds a sampled orientation-preserving
// diffeomorphism gamma. Open case: gamma on the curve's own grid with
// gamma(0)=0, gamma(1)=1. Closed case: a monotone degree-1 circle map stored
// as a base offset plus per-interval increments summing to 1.
// The group acts by (gamma . F)(t) = F(gamma^{-1}(t)).
// ============================================================================

struct DiffeoGrid {
    bool closed = true;
    double offset = 0.0;               // gamma(0); ignored (must be 0) when open
    std::vector<double> increments;    // closed: N entries; open: N-1 entries

    std::size_t grid_size() const {
        return closed ? increments.size() : increments.size() + 1;
    }

    static DiffeoGrid identity(std::size_t n, bool closed);
    // circle rotation by `offset` in parameter units (closed curves)
    static DiffeoGrid rotation(std::size_t n, double offset);
};

void validate_diffeo(const DiffeoGrid& gamma);

// Resamples the curve at gamma^{-1} of its own grid by piecewise-linear
// interpolation along the polygon: same image, same orientation.
SampledCurve reparameterize(const SampledCurve& curve, const DiffeoGrid& gamma);

// Same resampling applied to per-sample values (tangent fields, scalars).
std::vector<Vec2> reparameterize_field(const std::vector<Vec2>& field,
                                       const DiffeoGrid& gamma);
std::vector<double> reparameterize_scalar(const std::vector<double>& field,
                                          const DiffeoGrid& gamma);

// ============================================================================
// Arc-length section: the unique polygon inscribed in `curve` with all chords
// equal (same first point, same orientation, same image). Computed by a
// scalar solve on the common chord length; the walk data is retained so the
// map can be differentiated (see arclength_pullback).
// ============================================================================

struct ArclengthStore {
    std::vector<std::size_t> edge;  // edge of the input polygon carrying output sample i (i>=1)
    std::vector<double> param;      // position on that edge in [0,1]
    double chord = 0.0;             // the common chord length
};

SampledCurve to_arclength(const SampledCurve& curve);
SampledCurve to_arclength(const SampledCurve& curve, ArclengthStore& store);

// Adjoint of to_arclength at the solved configuration: given cotangents qbar
// on the output samples, returns cotangents on the input samples.
// Implemented via the implicit-function theorem on the equal-chord system.
std::vector<Vec2> arclength_pullback(const SampledCurve& curve,
                                     const ArclengthStore& store,
                                     const std::vector<Vec2>& qbar);

// ============================================================================
// Normalization sections for the translation / rotation / scaling actions.
// Each is idempotent and constant on orbits of its group.
// ============================================================================

Vec2 curve_centroid(const SampledCurve& curve);  // ds-weighted mean of samples

SampledCurve center_centroid(const SampledCurve& curve);
SampledCurve start_to_origin(const SampledCurve& curve);
// Rotates so the major axis of the ds-weighted second-moment ellipse lies
// along +x; sign chosen so the first sample lands at x >= 0. Throws
// std::invalid_argument when the ellipse is isotropic (ambiguous alignment).
SampledCurve align_ellipse(const SampledCurve& curve);
SampledCurve align_start_tangent(const SampledCurve& curve);
SampledCurve scale_length(const SampledCurve& curve);
// Closed curves only; scales so |signed shoelace area| = 1.
SampledCurve scale_area(const SampledCurve& curve);

}  // namespace shapespace
