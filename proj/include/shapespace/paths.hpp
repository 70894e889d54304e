#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shapespace/bundles.hpp"
#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"

namespace shapespace {

// ============================================================================
// Discretized paths in curve space and their energies/lengths under the
// metric constructions. A path holds K+1 slices on a uniform time grid;
// velocities are forward differences, energies left Riemann sums.
// ============================================================================

struct CurvePath {
    std::vector<SampledCurve> slices;

    std::size_t time_steps() const { return slices.size() - 1; }  // K
};

void validate_path(const CurvePath& path);

// One reparameterization per slice, acting slice-wise on a path.
using PathGauge = std::vector<DiffeoGrid>;

enum class MetricVariant {
    Ambient,             // elastic inner product of the raw velocity
    QuotientHorizontal,  // elastic inner product of the horizontal part
    SectionArclength,    // ambient energy of the arc-length projected path
    GaugeNormal,         // degenerate product of the pointwise-normal parts
};

struct MetricChoice {
    MetricVariant variant = MetricVariant::Ambient;
    ElasticParams params;
};

MetricVariant metric_variant_from_name(const std::string& name);
std::string metric_variant_name(MetricVariant variant);

// Forward difference (F_{k+1} - F_k) * K attached to slice k, 0 <= k < K.
TangentField path_velocity(const CurvePath& path, std::size_t k);

// Per-slice squared speeds g_k(v_k, v_k); energy = sum/(2K), length =
// sum of square roots / K. Tiny negative values from the semidefinite
// variants are clamped to zero before the square root.
std::vector<double> path_speed_squares(const CurvePath& path,
                                       const MetricChoice& choice);
double path_energy(const CurvePath& path, const MetricChoice& choice);
double path_length(const CurvePath& path, const MetricChoice& choice);

// Gradient of path_energy with respect to every slice's sample coordinates.
// Endpoint slices receive gradients too; the optimizer simply ignores them.
std::vector<TangentField> path_energy_gradient(const CurvePath& path,
                                               const MetricChoice& choice);

// Applies gauge[k] to slice k. Throws on size mismatch.
CurvePath gauge_act_path(const PathGauge& gauge, const CurvePath& path);

// Per-slice comparison of the quotient-horizontal and gauge-normal squared
// speeds, for inspecting when the two constructions coincide.
struct QuotientAgreementReport {
    std::vector<double> horizontal;  // g(hor v, hor v) per slice
    std::vector<double> gauge;       // gauge_inner(v, v) per slice
    std::vector<double> difference;  // gauge - horizontal
};

QuotientAgreementReport quotient_agreement_report(const CurvePath& path,
                                                  const ElasticParams& p);

}  // namespace shapespace
