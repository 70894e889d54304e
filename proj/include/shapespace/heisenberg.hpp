#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shapespace/vec2.hpp"

namespace shapespace {

// ============================================================================
// Toy three-dimensional model: R^3 with the line { (x0, y0, z) } as the fiber
// through (x0, y0, *) and the group (R, +) acting by z-translation. The four
// quadratic forms below realize, in closed form, the quotient construction,
// the graph-section pullback, and the degenerate gauge-invariant product, so
// every identity between the methods can be checked to machine precision.
// ============================================================================

struct HPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

struct HTangent {
    double dx = 0.0, dy = 0.0, dz = 0.0;
};

// A time-sampled path on the uniform grid 0 = t_0 < ... < t_K = 1.
struct HPath {
    std::vector<double> times;
    std::vector<HPoint> points;

    std::size_t time_steps() const { return points.empty() ? 0 : points.size() - 1; }

    static HPath uniform(std::vector<HPoint> pts);
};

void validate_hpath(const HPath& path);

// A time-sampled element of the gauge group: one z-shift per grid node.
struct GaugeFunction {
    std::vector<double> values;
};

// Closed-form scalar field on the plane: a small bivariate polynomial
// sum c[i][j] u^i v^j, so partial derivatives are analytic. Covers the
// zero field, the coordinate fields, and everything the tests need.
class ScalarField2D {
  public:
    static ScalarField2D zero();
    static ScalarField2D coordinate_u();  // (u, v) -> u
    static ScalarField2D coordinate_v();  // (u, v) -> v
    static ScalarField2D polynomial(std::vector<std::vector<double>> coeff);

    double value(double u, double v) const;
    double du(double u, double v) const;
    double dv(double u, double v) const;

  private:
    std::vector<std::vector<double>> coeff_;  // coeff_[i][j] multiplies u^i v^j
};

// Full metric: dx^2 + dy^2 + (dz - y dx)^2. Positive definite and
// independent of z, so the fiber action is by isometries.
double heis_metric(const HPoint& p, const HTangent& u, const HTangent& v);

// Quotient metric on the base plane: the Euclidean product du^2 + dv^2.
double submersion_metric(const Vec2& u2, const Vec2& v2);

// Pullback of the full metric under the graph section s(u,v) = (u, v, psi):
// du^2 + dv^2 + [psi_v dv + (psi_u - v) du]^2.
double immersion_metric(const ScalarField2D& psi, const Vec2& base,
                        const Vec2& a2, const Vec2& b2);

// Degenerate gauge-invariant product: dx^2 + dy^2 + [phi2 dy + (phi1 - y) dx]^2.
// Contains no dz, so it vanishes on the fiber direction and is invariant
// under the z-translation action.
double gauge_metric(const ScalarField2D& phi1, const ScalarField2D& phi2,
                    const HPoint& p, const HTangent& u, const HTangent& v);

enum class HLengthMetric {
    Heisenberg,              // full metric
    Gauge,                   // degenerate gauge-invariant product
    SubmersionOfProjection,  // Euclidean length of the (x, y) projection
};

// Discrete path length: midpoint evaluation of the metric on segment chords,
// sum sqrt(g(mid; chord/dt, chord/dt)) dt. Exact for affine test paths.
double hpath_length(const HPath& path, HLengthMetric metric,
                    const ScalarField2D& phi1 = ScalarField2D::zero(),
                    const ScalarField2D& phi2 = ScalarField2D::zero());

// Gauge action (g . gamma)(t) = gamma(t) + (0, 0, g(t)), pointwise in t.
HPath gauge_act(const GaugeFunction& g, const HPath& path);

// Lifts a planar path horizontally: z integrates dz = y dx by trapezoidal
// accumulation from z(0) = z0. For closed planar loops the z displacement
// equals minus the signed (shoelace) area of the sampled polygon, exactly --
// a loop comes back to a different fiber point, which is the obstruction to
// building a global section from the horizontal distribution.
HPath horizontal_lift(const std::vector<Vec2>& base_path, double z0);

// Nondegenerate metric built from the gauge product by declaring the fiber
// direction orthogonal to span{(1,0,phi1), (0,1,phi2)} with fiber weight c:
//   g1(u,v) = gauge_metric(u,v) + c (u.dz - phi1 u.dx - phi2 u.dy)
//                                  (v.dz - phi1 v.dx - phi2 v.dy).
// With phi1(x,y) = y, phi2 = 0, c = 1 this reproduces heis_metric exactly.
class ReconstructedMetric {
  public:
    ReconstructedMetric(ScalarField2D phi1, ScalarField2D phi2, double c);

    double operator()(const HPoint& p, const HTangent& u,
                      const HTangent& v) const;

  private:
    ScalarField2D phi1_, phi2_;
    double c_;
};

ReconstructedMetric normal_to_submersion(const ScalarField2D& phi1,
                                         const ScalarField2D& phi2, double c);

}  // namespace shapespace
