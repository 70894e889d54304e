#include "shapespace/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapespace/bundles.hpp"
#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"
#include "shapespace/heisenberg.hpp"
#include "shapespace/optimizer.hpp"
#include "shapespace/paths.hpp"
#include "shapespace/sample_shapes.hpp"

namespace shapespace {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(double value) {
    std::ostringstream out;
    out << std::setprecision(3) << std::scientific << value;
    return out.str();
}

// Convergence order fitted across successive doublings of the resolution.
double fitted_order(const std::vector<double>& errs) {
    const double first = errs.front();
    const double last = errs.back();
    const double doublings = static_cast<double>(errs.size() - 1);
    if (!(first > 0.0) || !(last > 0.0)) return 0.0;
    return std::log2(first / last) / doublings;
}

double metric_norm(const FrameData& frame, const TangentField& h,
                   const ElasticParams& p) {
    const double q = elastic_inner(frame, h, h, p);
    return std::sqrt(q > 0.0 ? q : 0.0);
}

double euclid_norm(const TangentField& h) {
    double total = 0.0;
    for (const Vec2& v : h) total += norm2(v);
    return std::sqrt(total);
}

double max_point_distance(const SampledCurve& a, const SampledCurve& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, norm(a.points[i] - b.points[i]));
    }
    return worst;
}

double max_coordinate(const SampledCurve& curve) {
    double worst = 0.0;
    for (const Vec2& p : curve.points) {
        worst = std::max({worst, std::abs(p.x), std::abs(p.y)});
    }
    return worst;
}

SampledCurve translate_curve(const SampledCurve& curve, Vec2 d) {
    SampledCurve out = curve;
    for (Vec2& p : out.points) p += d;
    return out;
}

SampledCurve rotate_curve(const SampledCurve& curve, double angle) {
    SampledCurve out = curve;
    for (Vec2& p : out.points) p = rotate(p, angle);
    return out;
}

SampledCurve scale_curve(const SampledCurve& curve, double s) {
    SampledCurve out = curve;
    for (Vec2& p : out.points) p = p * s;
    return out;
}

// ---------------------------------------------------------------------------
// Check 1: the toy-model evaluators against their closed-form values, the
// exact degeneracy/invariance identities, and length invariance of the
// degenerate metric under the fiber action. Budget: under one second.
// ---------------------------------------------------------------------------
CheckResult check_heisenberg_exact() {
    CheckResult result;
    result.id = 1;
    result.name = "heisenberg exact metric suite";
    Stopwatch watch;

    double worst_example = 0.0;  // max deviation over the closed-form table
    auto example = [&](double got, double want) {
        worst_example = std::max(worst_example, std::abs(got - want));
    };

    // Full metric.
    example(heis_metric({0, 0, 0}, {0, 0, 1}, {0, 0, 1}), 1.0);
    example(heis_metric({0, 2, 0}, {1, 0, 0}, {1, 0, 0}), 5.0);
    {
        const HTangent u{0.3, -1.2, 0.7}, v{1.5, 0.25, -2.0};
        example(heis_metric({7, 2, -3}, u, v) - heis_metric({7, 2, 40}, u, v),
                0.0);
    }

    // Base-plane metric.
    example(submersion_metric({1, 0}, {1, 0}), 1.0);
    example(submersion_metric({1, 0}, {0, 1}), 0.0);
    example(submersion_metric({3, 4}, {3, 4}), 25.0);

    // Graph-section pullback.
    example(immersion_metric(ScalarField2D::zero(), {1, 3}, {1, 0}, {1, 0}),
            10.0);
    {
        // psi(u, v) = 3u: the derivative matches v = 3 at the base point, so
        // the correction bracket vanishes.
        const ScalarField2D psi = ScalarField2D::polynomial({{0.0}, {3.0}});
        example(immersion_metric(psi, {2, 3}, {1, 0}, {1, 0}), 1.0);
    }
    {
        const ScalarField2D psi = ScalarField2D::polynomial({{0.0, 0.0},
                                                             {0.0, 1.0}});
        example(immersion_metric(psi, {0, 0}, {0, 1}, {0, 1}), 1.0);
    }

    // Degenerate gauge product.
    {
        const ScalarField2D f1 = ScalarField2D::polynomial({{0.0}, {0.0}, {1.0}});
        const ScalarField2D f2 = ScalarField2D::coordinate_v();
        example(gauge_metric(f1, f2, {0.7, -0.3, 2.0}, {0, 0, 1}, {0, 0, 1}),
                0.0);
    }
    example(gauge_metric(ScalarField2D::coordinate_v(), ScalarField2D::zero(),
                         {0.2, 1.7, -3.0}, {1, 1, 0}, {1, 1, 0}),
            2.0);
    example(gauge_metric(ScalarField2D::zero(), ScalarField2D::zero(),
                         {0, 1, 0}, {1, 0, 0}, {1, 0, 0}),
            2.0);

    // Reconstructed nondegenerate metric: orthogonality of the declared
    // complement to the fiber, and the pure-fiber value.
    {
        const ScalarField2D f1 = ScalarField2D::polynomial({{0.5, -1.0},
                                                            {2.0, 0.25}});
        const ScalarField2D f2 = ScalarField2D::coordinate_u();
        const ReconstructedMetric g1 = normal_to_submersion(f1, f2, 3.0);
        const HPoint p{0.4, -1.1, 5.0};
        const HTangent n1{1.0, 0.0, f1.value(p.x, p.y)};
        const HTangent xi{0.0, 0.0, 1.0};
        example(g1(p, n1, xi), 0.0);
    }
    example(normal_to_submersion(ScalarField2D::zero(), ScalarField2D::zero(),
                                 2.0)({0, 0, 0}, {0, 0, 1}, {0, 0, 1}),
            2.0);

    // Path lengths on affine paths are exact at any sampling.
    {
        std::vector<HPoint> seg(5);
        for (std::size_t k = 0; k < 5; ++k) {
            const double t = static_cast<double>(k) / 4.0;
            seg[k] = HPoint{t, 0.0, 0.0};
        }
        const HPath path = HPath::uniform(seg);
        example(hpath_length(path, HLengthMetric::Heisenberg), 1.0);
        example(hpath_length(path, HLengthMetric::Gauge), 1.0);

        std::vector<HPoint> constant(5, HPoint{0.3, -0.2, 0.9});
        example(hpath_length(HPath::uniform(constant),
                             HLengthMetric::Heisenberg),
                0.0);

        // Lifting the same flat segment at height y = 1 accumulates z = x.
        std::vector<Vec2> flat(5);
        for (std::size_t k = 0; k < 5; ++k) {
            flat[k] = Vec2{static_cast<double>(k) / 4.0, 1.0};
        }
        const HPath lifted = horizontal_lift(flat, 0.0);
        example(lifted.points.back().z, 1.0);

        std::vector<Vec2> level(5);
        for (std::size_t k = 0; k < 5; ++k) {
            level[k] = Vec2{static_cast<double>(k) / 4.0, 0.0};
        }
        example(horizontal_lift(level, 0.25).points.back().z, 0.25);

        // z-quadratic gauge motion is invisible to the degenerate metric.
        GaugeFunction quad;
        quad.values.resize(5);
        for (std::size_t k = 0; k < 5; ++k) {
            const double t = static_cast<double>(k) / 4.0;
            quad.values[k] = t * t;
        }
        example(hpath_length(gauge_act(quad, path), HLengthMetric::Gauge),
                1.0);
    }

    bool rejects_nonuniform = false;
    try {
        HPath bad = HPath::uniform(std::vector<HPoint>(9));
        bad.times[3] += 1e-6;
        hpath_length(bad, HLengthMetric::Heisenberg);
    } catch (const std::invalid_argument&) {
        rejects_nonuniform = true;
    }

    // Exact identities on random inputs.
    Rng rng(101);
    double worst_degenerate = 0.0;
    double worst_zshift = 0.0;
    double worst_const_gauge = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const ScalarField2D f1 = ScalarField2D::polynomial(
            {{rng.uniform(-2, 2), rng.uniform(-2, 2)},
             {rng.uniform(-2, 2), rng.uniform(-2, 2)}});
        const ScalarField2D f2 = ScalarField2D::polynomial(
            {{rng.uniform(-2, 2), rng.uniform(-2, 2)},
             {rng.uniform(-2, 2), rng.uniform(-2, 2)}});
        const HPoint p{rng.uniform(-2, 2), rng.uniform(-2, 2),
                       rng.uniform(-3, 3)};
        const HTangent u{rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2)};
        const HTangent v{rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2)};
        const HTangent xi{0.0, 0.0, 1.0};
        worst_degenerate = std::max(
            {worst_degenerate, std::abs(gauge_metric(f1, f2, p, xi, v)),
             std::abs(gauge_metric(f1, f2, p, u, xi))});
        const HPoint shifted{p.x, p.y, p.z + rng.uniform(-50, 50)};
        worst_zshift = std::max(
            {worst_zshift,
             std::abs(heis_metric(p, u, v) - heis_metric(shifted, u, v)),
             std::abs(gauge_metric(f1, f2, p, u, v) -
                      gauge_metric(f1, f2, shifted, u, v))});
    }

    // Length invariance of the degenerate metric under the fiber action:
    // the action only moves z, which the metric never reads.
    double worst_gauge_drift = 0.0;
    const std::size_t k_steps = 32;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<HPoint> pts(k_steps + 1);
        for (HPoint& p : pts) {
            p = HPoint{rng.normal(), rng.normal(), rng.normal()};
        }
        const HPath path = HPath::uniform(pts);
        GaugeFunction g;
        g.values.resize(k_steps + 1);
        for (double& gv : g.values) gv = rng.uniform(-5, 5);
        const ScalarField2D f1 = ScalarField2D::polynomial(
            {{rng.uniform(-1, 1), rng.uniform(-1, 1)},
             {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
        const ScalarField2D f2 = ScalarField2D::polynomial(
            {{rng.uniform(-1, 1)}, {rng.uniform(-1, 1)}});
        const double before = hpath_length(path, HLengthMetric::Gauge, f1, f2);
        const double after =
            hpath_length(gauge_act(g, path), HLengthMetric::Gauge, f1, f2);
        worst_gauge_drift =
            std::max(worst_gauge_drift, std::abs(after - before));

        // A constant fiber shift also preserves the full-metric length
        // (moderate magnitudes; the shift cancels in the differences).
        GaugeFunction constant;
        constant.values.assign(k_steps + 1, rng.uniform(-3, 3));
        worst_const_gauge = std::max(
            worst_const_gauge,
            std::abs(hpath_length(gauge_act(constant, path),
                                  HLengthMetric::Heisenberg) -
                     hpath_length(path, HLengthMetric::Heisenberg)));
    }

    const double gauge_tol = 10.0 * kEps * static_cast<double>(k_steps);
    result.seconds = watch.seconds();
    result.passed = worst_example == 0.0 && rejects_nonuniform &&
                    worst_degenerate == 0.0 && worst_zshift == 0.0 &&
                    worst_gauge_drift <= gauge_tol &&
                    worst_const_gauge <= 1e-12 && result.seconds < 1.0;
    result.detail = "examples max dev " + fmt(worst_example) +
                    ", fiber degeneracy " + fmt(worst_degenerate) +
                    ", z-invariance " + fmt(worst_zshift) +
                    ", action length drift " + fmt(worst_gauge_drift) +
                    " (tol " + fmt(gauge_tol) + ")";
    return result;
}

// ---------------------------------------------------------------------------
// Check 2: with phi1(x,y) = y, phi2 = 0 the degenerate product equals the
// base-plane product on projected tangents (exactly), and adding the fiber
// term with weight 1 rebuilds the full metric within 4 eps per evaluation.
// ---------------------------------------------------------------------------
CheckResult check_heisenberg_agreement() {
    CheckResult result;
    result.id = 2;
    result.name = "heisenberg method agreement";
    Stopwatch watch;

    const ScalarField2D phi1 = ScalarField2D::coordinate_v();
    const ScalarField2D phi2 = ScalarField2D::zero();
    const ReconstructedMetric rebuilt = normal_to_submersion(phi1, phi2, 1.0);

    Rng rng(202);
    double worst_projected = 0.0;
    double worst_rebuilt = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const HPoint p{rng.uniform(-2, 2), rng.uniform(-2, 2),
                       rng.uniform(-3, 3)};
        const HTangent u{rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2)};
        const HTangent v{rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2)};
        const double gauged = gauge_metric(phi1, phi2, p, u, v);
        const double projected =
            submersion_metric(Vec2{u.dx, u.dy}, Vec2{v.dx, v.dy});
        worst_projected =
            std::max(worst_projected, std::abs(gauged - projected));

        const double full = heis_metric(p, u, v);
        const double tol = 4.0 * kEps * (1.0 + std::abs(full));
        const double dev = std::abs(rebuilt(p, u, v) - full);
        worst_rebuilt = std::max(worst_rebuilt, dev / tol);
    }

    result.seconds = watch.seconds();
    result.passed = worst_projected == 0.0 && worst_rebuilt <= 1.0;
    result.detail = "projected-agreement max dev " + fmt(worst_projected) +
                    " (exact), reconstruction max dev " + fmt(worst_rebuilt) +
                    " x (4 eps)";
    return result;
}

// ---------------------------------------------------------------------------
// Check 3: lifting the counterclockwise unit circle accumulates the fiber
// displacement -pi (minus the enclosed area), converging at second order.
// Budget: under one second.
// ---------------------------------------------------------------------------
CheckResult check_holonomy() {
    CheckResult result;
    result.id = 3;
    result.name = "heisenberg holonomy convergence";
    Stopwatch watch;

    std::vector<double> errs;
    double worst_area_match = 0.0;
    for (std::size_t k : {std::size_t(64), std::size_t(128), std::size_t(256),
                          std::size_t(512)}) {
        std::vector<Vec2> loop(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            const double th =
                2.0 * kPi * static_cast<double>(i) / static_cast<double>(k);
            loop[i] = Vec2{std::cos(th), std::sin(th)};
        }
        loop[k] = loop[0];
        const HPath lifted = horizontal_lift(loop, 0.0);
        const double dz = lifted.points.back().z;
        errs.push_back(std::abs(dz + kPi));

        SampledCurve polygon;
        polygon.closed = true;
        polygon.points.assign(loop.begin(), loop.end() - 1);
        worst_area_match =
            std::max(worst_area_match,
                     std::abs(dz + shoelace_area(polygon)));
    }

    const double order = fitted_order(errs);
    result.seconds = watch.seconds();
    result.passed = errs.back() <= 1e-4 && order >= 1.9 &&
                    worst_area_match <= 1e-12 && result.seconds < 1.0;
    result.detail = "|dz + pi| at K=512: " + fmt(errs.back()) +
                    " (tol 1e-04), fitted order " + fmt(order) +
                    " (need >= 1.9), polygon-area match " +
                    fmt(worst_area_match);
    return result;
}

// ---------------------------------------------------------------------------
// Check 4: on the unit circle the inner product of the normal frame field
// with itself integrates a(D_s n . t)^2 = a over one turn, and the tangent
// frame field integrates b; both converge at second order.
// ---------------------------------------------------------------------------
CheckResult check_elastic_circle() {
    CheckResult result;
    result.id = 4;
    result.name = "elastic metric circle values";
    Stopwatch watch;

    const ElasticParams generic{1.3, 0.6};
    std::vector<double> errs_normal, errs_tangent;
    for (std::size_t n : {std::size_t(64), std::size_t(128), std::size_t(256),
                          std::size_t(512)}) {
        const SampledCurve c = circle(n);
        const FrameData frame = compute_frame(c);
        const double in_n =
            elastic_inner(frame, frame.normal, frame.normal, generic);
        const double in_t =
            elastic_inner(frame, frame.tangent, frame.tangent, generic);
        errs_normal.push_back(std::abs(in_n - 2.0 * kPi * generic.a) /
                              (2.0 * kPi * generic.a));
        errs_tangent.push_back(std::abs(in_t - 2.0 * kPi * generic.b) /
                               (2.0 * kPi * generic.b));
    }

    const double err_n_256 = errs_normal[2];
    const double err_t_256 = errs_tangent[2];
    const double order_n = fitted_order(errs_normal);
    const double order_t = fitted_order(errs_tangent);
    result.seconds = watch.seconds();
    result.passed = err_n_256 <= 1e-3 && err_t_256 <= 1e-3 &&
                    order_n >= 1.9 && order_t >= 1.9;
    result.detail = "rel err at N=256: normal " + fmt(err_n_256) +
                    ", tangent " + fmt(err_t_256) +
                    " (tol 1e-03); orders " + fmt(order_n) + ", " +
                    fmt(order_t) + " (need >= 1.9)";
    return result;
}

// ---------------------------------------------------------------------------
// Check 5: the inner product is invariant under simultaneous smooth
// reparameterization of the curve and its fields, up to the first-order
// interpolation error of the resampling.
// ---------------------------------------------------------------------------
CheckResult check_reparam_invariance() {
    CheckResult result;
    result.id = 5;
    result.name = "elastic reparameterization invariance";
    Stopwatch watch;

    const ElasticParams p{1.0, 1.0};
    const std::vector<std::size_t> ns = {128, 256, 512};
    std::vector<double> drift(ns.size(), 0.0);

    for (int curve_case = 0; curve_case < 2; ++curve_case) {
        for (int trial = 0; trial < 20; ++trial) {
            // Fresh generators per trial so the same coefficients are
            // realized at every resolution.
            const std::uint64_t seed =
                505 + 1000 * static_cast<std::uint64_t>(curve_case) +
                static_cast<std::uint64_t>(trial);
            for (std::size_t ni = 0; ni < ns.size(); ++ni) {
                const std::size_t n = ns[ni];
                const SampledCurve base =
                    curve_case == 0 ? circle(n) : ellipse(n, 2.0, 1.0);
                Rng diffeo_rng(seed);
                const DiffeoGrid gamma = random_diffeo(n, diffeo_rng);
                Rng field_rng(seed + 7777);
                const TangentField h1 = fourier_field(n, field_rng);
                const TangentField h2 = fourier_field(n, field_rng);

                const double i11 = elastic_inner(base, h1, h1, p);
                const double i22 = elastic_inner(base, h2, h2, p);
                const double i12 = elastic_inner(base, h1, h2, p);

                const SampledCurve moved = reparameterize(base, gamma);
                const TangentField g1 = reparameterize_field(h1, gamma);
                const TangentField g2 = reparameterize_field(h2, gamma);
                const double j11 = elastic_inner(moved, g1, g1, p);
                const double j22 = elastic_inner(moved, g2, g2, p);
                const double j12 = elastic_inner(moved, g1, g2, p);

                // Diagonal terms are positive; the cross term is measured
                // against its Cauchy-Schwarz scale to avoid 0/0.
                const double scale12 = std::sqrt(i11 * i22);
                const double worst = std::max(
                    {std::abs(j11 - i11) / i11, std::abs(j22 - i22) / i22,
                     std::abs(j12 - i12) / scale12});
                drift[ni] = std::max(drift[ni], worst);
            }
        }
    }

    const double order = fitted_order(drift);
    result.seconds = watch.seconds();
    result.passed = drift.front() <= 5e-2 && order >= 1.0;
    result.detail = "max rel drift at N=128: " + fmt(drift.front()) +
                    " (tol 5e-02), fitted order " + fmt(order) +
                    " (need >= 1.0)";
    return result;
}

// ---------------------------------------------------------------------------
// Check 6: the split h = m t + w is metric-orthogonal to every vertical
// field and reconstructs h; vertical inputs are recognized; projecting twice
// changes nothing. Budget: under five seconds.
// ---------------------------------------------------------------------------
CheckResult check_horizontal_orthogonality() {
    CheckResult result;
    result.id = 6;
    result.name = "horizontal projection orthogonality";
    Stopwatch watch;

    Rng rng(606);
    const std::size_t n = 256;
    const std::vector<ElasticParams> params = {{1, 1}, {1, 10}, {10, 1}};
    double worst_ortho = 0.0;
    double worst_recon = 0.0;
    double worst_vertical = 0.0;
    double worst_idem = 0.0;

    for (int curve_case = 0; curve_case < 2; ++curve_case) {
        const SampledCurve base =
            curve_case == 0 ? circle(n) : ellipse(n, 2.0, 1.0);
        const FrameData frame = compute_frame(base);
        for (const ElasticParams& p : params) {
            for (int trial = 0; trial < 100; ++trial) {
                const TangentField h = fourier_field(n, rng, 4);
                const HorizontalSplit split =
                    horizontal_project(base, frame, h, p);

                VerticalCoefficient mt(n);
                for (double& mi : mt) mi = rng.normal();
                const TangentField vert = vertical_field(frame, mt);
                const double ortho =
                    std::abs(elastic_inner(frame, split.w, vert, p));
                const double denom = metric_norm(frame, split.w, p) *
                                     metric_norm(frame, vert, p);
                worst_ortho = std::max(worst_ortho, ortho / denom);

                TangentField recon = vertical_field(frame, split.m);
                for (std::size_t i = 0; i < n; ++i) recon[i] += split.w[i];
                for (std::size_t i = 0; i < n; ++i) recon[i] -= h[i];
                worst_recon = std::max(worst_recon,
                                       euclid_norm(recon) / euclid_norm(h));
            }

            // Vertical inputs come back as coefficients with no remainder.
            for (int trial = 0; trial < 5; ++trial) {
                VerticalCoefficient m0(n);
                for (std::size_t i = 0; i < n; ++i) {
                    const double th = 2.0 * kPi * static_cast<double>(i) /
                                      static_cast<double>(n);
                    m0[i] = std::sin(th + 0.3) + 0.4 * std::cos(2.0 * th);
                }
                const TangentField v0 = vertical_field(frame, m0);
                const HorizontalSplit split =
                    horizontal_project(base, frame, v0, p);
                double dev = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    dev = std::max(dev, std::abs(split.m[i] - m0[i]));
                    dev = std::max(dev, norm(split.w[i]));
                }
                worst_vertical = std::max(worst_vertical, dev);

                // Re-projecting an already-horizontal field is the identity.
                const TangentField h = fourier_field(n, rng, 4);
                const HorizontalSplit once =
                    horizontal_project(base, frame, h, p);
                const HorizontalSplit twice =
                    horizontal_project(base, frame, once.w, p);
                double idem = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    idem = std::max(idem, std::abs(twice.m[i]));
                    idem = std::max(idem, norm(twice.w[i] - once.w[i]));
                }
                worst_idem = std::max(worst_idem, idem / euclid_norm(once.w));
            }
        }
    }

    result.seconds = watch.seconds();
    result.passed = worst_ortho <= 1e-6 && worst_recon <= 1e-8 &&
                    worst_vertical <= 1e-8 && worst_idem <= 1e-8 &&
                    result.seconds < 5.0;
    result.detail = "orthogonality " + fmt(worst_ortho) +
                    " (tol 1e-06), reconstruction " + fmt(worst_recon) +
                    " (tol 1e-08), vertical recovery " + fmt(worst_vertical) +
                    ", idempotence " + fmt(worst_idem);
    return result;
}

// ---------------------------------------------------------------------------
// Check 7: path lengths under the degenerate normal-projection metric are
// invariant under slice-wise reparameterization up to O(1/N + 1/K), while the
// raw metric is not: its drift exceeds ten times the invariant one.
// ---------------------------------------------------------------------------
CheckResult check_gauge_invariance_paths() {
    CheckResult result;
    result.id = 7;
    result.name = "gauge invariance of path lengths";
    Stopwatch watch;

    const MetricChoice gauge_choice{MetricVariant::GaugeNormal, {1.0, 1.0}};
    const MetricChoice ambient_choice{MetricVariant::Ambient, {1.0, 1.0}};
    const std::vector<std::pair<std::size_t, std::size_t>> levels = {
        {64, 8}, {128, 16}, {256, 32}};
    const int trials = 50;

    std::vector<std::vector<double>> drift(
        trials, std::vector<double>(levels.size(), 0.0));
    int ambient_dominates = 0;

    Rng rng(707);
    for (int t = 0; t < trials; ++t) {
        const PathFamily shape_family = random_path_family(rng);
        const GaugeFamily gauge_family = random_gauge_family(rng);
        double finest_gauge_drift = 0.0;
        double finest_ambient_drift = 0.0;
        for (std::size_t li = 0; li < levels.size(); ++li) {
            const auto [n, k] = levels[li];
            const CurvePath path = shape_family.realize(n, k);
            const PathGauge action = gauge_family.realize(n, k);
            const CurvePath moved = gauge_act_path(action, path);

            const double len = path_length(path, gauge_choice);
            const double len_moved = path_length(moved, gauge_choice);
            drift[t][li] = std::abs(len_moved - len) / len;

            if (li + 1 == levels.size()) {
                finest_gauge_drift = drift[t][li];
                const double amb = path_length(path, ambient_choice);
                const double amb_moved = path_length(moved, ambient_choice);
                finest_ambient_drift = std::abs(amb_moved - amb) / amb;
            }
        }
        if (finest_ambient_drift > 10.0 * finest_gauge_drift) {
            ++ambient_dominates;
        }
    }

    // Fit the constant on the coarsest level with 25% headroom, then demand
    // the same bound at every finer level (which forces the drift to decay
    // with the combined rate).
    double coarsest_max = 0.0;
    for (int t = 0; t < trials; ++t) {
        coarsest_max = std::max(coarsest_max, drift[t][0]);
    }
    const double rate0 = 1.0 / static_cast<double>(levels[0].first) +
                         1.0 / static_cast<double>(levels[0].second);
    const double fitted_c = 1.25 * coarsest_max / rate0;

    bool bound_holds = true;
    double worst_ratio = 0.0;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const double rate = 1.0 / static_cast<double>(levels[li].first) +
                            1.0 / static_cast<double>(levels[li].second);
        for (int t = 0; t < trials; ++t) {
            const double ratio = drift[t][li] / (fitted_c * rate);
            worst_ratio = std::max(worst_ratio, ratio);
            if (ratio > 1.0) bound_holds = false;
        }
    }

    result.seconds = watch.seconds();
    result.passed = bound_holds && ambient_dominates >= 45;
    result.detail = "fitted C " + fmt(fitted_c) + ", worst drift/bound " +
                    fmt(worst_ratio) + " (need <= 1), ambient dominates on " +
                    std::to_string(ambient_dominates) + "/50 (need >= 45)";
    return result;
}

// Smallest distance (in within-edge parameter units) from any equal-chord
// station to a polygon vertex, over the interior slices of a path. The
// resampling map is piecewise smooth with kinks where a station crosses a
// vertex, so a central difference only validates the arc-length gradient when
// every station sits well inside an edge. Endpoint slices are held fixed by
// the finite-difference loop and never differentiated, so they are exempt;
// the final station of a closed walk is the base point itself and stays
// pinned there, exempt likewise.
double station_vertex_margin(const CurvePath& path) {
    double margin = 1.0;
    for (std::size_t s = 1; s + 1 < path.slices.size(); ++s) {
        ArclengthStore store;
        to_arclength(path.slices[s], store);
        for (std::size_t i = 0; i + 1 < store.param.size(); ++i) {
            margin = std::min(
                margin, std::min(store.param[i], 1.0 - store.param[i]));
        }
    }
    return margin;
}

// ---------------------------------------------------------------------------
// Check 8: analytic path-energy gradients agree with central finite
// differences for all four variants; descent on the circle-to-ellipse
// benchmark is monotone; projecting slices every iteration lands at the same
// energy as never projecting. Benchmark budget: under 60 seconds.
// ---------------------------------------------------------------------------
CheckResult check_optimizer() {
    CheckResult result;
    result.id = 8;
    result.name = "path optimizer gradients and descent";
    Stopwatch watch;

    Rng rng(808);
    const std::size_t n = 32, k = 5;
    const double delta = 1e-6;
    double worst_grad = 0.0;

    for (MetricVariant variant :
         {MetricVariant::Ambient, MetricVariant::QuotientHorizontal,
          MetricVariant::SectionArclength, MetricVariant::GaugeNormal}) {
        const MetricChoice choice{variant, {1.3, 0.6}};
        CurvePath path = random_path_family(rng).realize(n, k);
        if (variant == MetricVariant::SectionArclength) {
            // Redraw until all stations keep a margin of at least 1e-3 from
            // the vertices (about 200x the station shift a 1e-6 coordinate
            // step can cause), so every finite difference below stays inside
            // one smooth piece of the resampling map.
            double best = station_vertex_margin(path);
            for (int tries = 0; tries < 64 && best < 1e-3; ++tries) {
                CurvePath candidate = random_path_family(rng).realize(n, k);
                const double margin = station_vertex_margin(candidate);
                if (margin > best) {
                    best = margin;
                    path = std::move(candidate);
                }
            }
        }
        const std::vector<TangentField> grad =
            path_energy_gradient(path, choice);

        double num = 0.0, den = 0.0;
        for (std::size_t s = 1; s < k; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                for (int coord = 0; coord < 2; ++coord) {
                    double& entry = coord == 0 ? path.slices[s].points[i].x
                                               : path.slices[s].points[i].y;
                    const double saved = entry;
                    entry = saved + delta;
                    const double e_plus = path_energy(path, choice);
                    entry = saved - delta;
                    const double e_minus = path_energy(path, choice);
                    entry = saved;
                    const double fd = (e_plus - e_minus) / (2.0 * delta);
                    const double an =
                        coord == 0 ? grad[s][i].x : grad[s][i].y;
                    num += (fd - an) * (fd - an);
                    den += an * an;
                }
            }
        }
        worst_grad = std::max(worst_grad, std::sqrt(num / den));
    }

    // Zero-gradient sanity: a rigid-translation path is already optimal.
    bool translation_fixed = false;
    {
        const SampledCurve c0 = circle(64);
        const SampledCurve c1 = translate_curve(c0, Vec2{1.0, 0.0});
        const CurvePath path = init_path(c0, c1, 4);
        OptimizerConfig cfg;
        cfg.max_iters = 50;
        const auto [out, trace] =
            straighten(path, {MetricVariant::Ambient, {1, 1}}, cfg);
        double moved = 0.0;
        for (std::size_t s = 0; s < path.slices.size(); ++s) {
            moved = std::max(moved,
                             max_point_distance(out.slices[s], path.slices[s]));
        }
        translation_fixed = trace.status == OptimizerStatus::Converged &&
                            trace.entries.size() <= 1 && moved <= 1e-10;
    }

    // Benchmark: unit circle to the 2:1 ellipse under the degenerate metric.
    Stopwatch bench_watch;
    const SampledCurve f0 = circle(128);
    const SampledCurve f1 = ellipse(128, 2.0, 1.0);
    const CurvePath start = init_path(f0, f1, 16);
    const MetricChoice bench{MetricVariant::GaugeNormal, {1.0, 1.0}};

    OptimizerConfig cfg;
    cfg.max_iters = 500;
    cfg.reparam_every = 0;
    const auto [plain_path, plain] = straighten(start, bench, cfg);
    bool monotone = plain.status != OptimizerStatus::AbortedNonFinite;
    double prev = plain.initial_energy;
    for (const TraceEntry& e : plain.entries) {
        if (e.energy > prev) monotone = false;
        prev = e.energy;
    }
    const double bench_seconds = bench_watch.seconds();

    cfg.reparam_every = 1;
    const auto [proj_path, projected] = straighten(start, bench, cfg);
    const double agree = std::abs(projected.final_energy -
                                  plain.final_energy) /
                         plain.final_energy;

    const bool endpoints_kept =
        max_point_distance(plain_path.slices.front(), start.slices.front()) ==
            0.0 &&
        max_point_distance(plain_path.slices.back(), start.slices.back()) ==
            0.0 &&
        max_point_distance(proj_path.slices.front(), start.slices.front()) ==
            0.0 &&
        max_point_distance(proj_path.slices.back(), start.slices.back()) ==
            0.0;

    result.seconds = watch.seconds();
    result.passed = worst_grad <= 1e-5 && translation_fixed && monotone &&
                    bench_seconds < 60.0 && agree <= 1e-2 && endpoints_kept;
    result.detail = "gradient vs FD " + fmt(worst_grad) +
                    " (tol 1e-05), benchmark monotone " +
                    (monotone ? std::string("yes") : std::string("no")) +
                    " in " + fmt(bench_seconds) +
                    " s, reprojection agreement " + fmt(agree) +
                    " (tol 1e-02)";
    return result;
}

// ---------------------------------------------------------------------------
// Check 9: every normalization is idempotent and constant on the orbits of
// its group; scaling a radius-2 circle to unit enclosed area lands on radius
// 1/sqrt(pi) at second order in N.
// ---------------------------------------------------------------------------
CheckResult check_normalizations() {
    CheckResult result;
    result.id = 9;
    result.name = "normalization sections";
    Stopwatch watch;

    Rng rng(909);

    enum class Group { Translation, Rotation, Scaling };
    struct Section {
        const char* label;
        std::function<SampledCurve(const SampledCurve&)> apply;
        Group group;
        bool needs_closed;
    };
    const std::vector<Section> sections = {
        {"centroid", center_centroid, Group::Translation, false},
        {"start", start_to_origin, Group::Translation, false},
        {"ellipse-axes", align_ellipse, Group::Rotation, false},
        {"start-tangent", align_start_tangent, Group::Rotation, false},
        {"length", scale_length, Group::Scaling, false},
        {"area", scale_area, Group::Scaling, true},
    };

    // A closed anisotropic curve and an open arc with anisotropic moments.
    const SampledCurve closed_case = ellipse(128, 2.0, 1.0);
    SampledCurve open_case;
    open_case.closed = false;
    open_case.points.resize(64);
    for (std::size_t i = 0; i < 64; ++i) {
        const double t = -1.0 + 2.2 * static_cast<double>(i) / 63.0;
        open_case.points[i] = Vec2{t + 0.8, 0.3 * t * t + 0.5};
    }

    double worst_idem = 0.0;
    double worst_orbit = 0.0;
    for (const Section& section : sections) {
        std::vector<SampledCurve> cases = {closed_case};
        if (!section.needs_closed) cases.push_back(open_case);
        for (const SampledCurve& input : cases) {
            const SampledCurve normalized = section.apply(input);
            const double scale = 1.0 + max_coordinate(normalized);
            worst_idem = std::max(
                worst_idem,
                max_point_distance(section.apply(normalized), normalized) /
                    scale);
            for (int trial = 0; trial < 100; ++trial) {
                SampledCurve moved;
                switch (section.group) {
                    case Group::Translation:
                        moved = translate_curve(
                            input,
                            Vec2{rng.uniform(-10, 10), rng.uniform(-10, 10)});
                        break;
                    case Group::Rotation:
                        moved = rotate_curve(input,
                                             rng.uniform(0.0, 2.0 * kPi));
                        break;
                    case Group::Scaling:
                        moved = scale_curve(
                            input, std::exp(rng.uniform(std::log(0.1),
                                                        std::log(10.0))));
                        break;
                }
                worst_orbit = std::max(
                    worst_orbit,
                    max_point_distance(section.apply(moved), normalized) /
                        scale);
            }
        }
    }

    // Isotropic curves cannot be axis-aligned.
    bool rejects_isotropic = false;
    try {
        align_ellipse(circle(128));
    } catch (const std::invalid_argument&) {
        rejects_isotropic = true;
    }

    // Unit-area scaling of the radius-2 circle.
    std::vector<double> radius_errs;
    const double target = 1.0 / std::sqrt(kPi);
    for (std::size_t n : {std::size_t(64), std::size_t(128), std::size_t(256)}) {
        const SampledCurve scaled = scale_area(circle(n, 2.0));
        double worst = 0.0;
        for (const Vec2& p : scaled.points) {
            worst = std::max(worst, std::abs(norm(p) - target));
        }
        radius_errs.push_back(worst);
    }
    const double radius_order = fitted_order(radius_errs);

    result.seconds = watch.seconds();
    result.passed = worst_idem <= 1e-9 && worst_orbit <= 1e-9 &&
                    rejects_isotropic && radius_errs.back() <= 1e-3 &&
                    radius_order >= 1.9;
    result.detail = "idempotence " + fmt(worst_idem) + ", orbit constancy " +
                    fmt(worst_orbit) + " (tol 1e-09); unit-area radius err " +
                    fmt(radius_errs.back()) + " at N=256, order " +
                    fmt(radius_order) + " (need >= 1.9)";
    return result;
}

}  // namespace

namespace {

using Check = CheckResult (*)();

std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    std::ostream* progress) {
    std::vector<CheckResult> results;
    int id = 0;
    for (Check check : checks) {
        ++id;
        CheckResult result;
        try {
            result = check();
        } catch (const std::exception& err) {
            result.id = id;
            result.name = "check " + std::to_string(id);
            result.passed = false;
            result.detail = std::string("unexpected error: ") + err.what();
        }
        if (progress != nullptr) {
            *progress << format_check_line(result) << std::endl;
        }
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(std::ostream* progress) {
    return run_checks({check_heisenberg_exact, check_heisenberg_agreement,
                       check_holonomy, check_elastic_circle,
                       check_reparam_invariance,
                       check_horizontal_orthogonality,
                       check_gauge_invariance_paths, check_optimizer,
                       check_normalizations},
                      progress);
}

std::vector<CheckResult> run_heisenberg_suite(std::ostream* progress) {
    return run_checks({check_heisenberg_exact, check_heisenberg_agreement,
                       check_holonomy},
                      progress);
}

std::string format_check_line(const CheckResult& result) {
    std::ostringstream out;
    out << (result.passed ? "PASS" : "FAIL") << "  check " << result.id
        << "  " << result.name << "  [" << std::fixed << std::setprecision(2)
        << result.seconds << " s]  " << result.detail;
    return out.str();
}

}  // namespace shapespace
