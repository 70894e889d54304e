#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/heisenberg.hpp"
#include "shapespace/sample_shapes.hpp"

using namespace shapespace;

namespace {
constexpr double kPi = 3.14159265358979323846;

HPath straight_segment() {
    std::vector<HPoint> pts(5);
    for (std::size_t k = 0; k < 5; ++k) {
        pts[k] = HPoint{static_cast<double>(k) / 4.0, 0.0, 0.0};
    }
    return HPath::uniform(pts);
}
}  // namespace

TEST_CASE("scalar fields evaluate polynomials and their derivatives") {
    const ScalarField2D f =
        ScalarField2D::polynomial({{1.0, 2.0}, {3.0, 0.0}, {0.0, 4.0}});
    // f(u,v) = 1 + 2v + 3u + 4u^2 v
    CHECK(f.value(2.0, 3.0) == 1.0 + 6.0 + 6.0 + 48.0);
    CHECK(f.du(2.0, 3.0) == 3.0 + 4.0 * 2.0 * 2.0 * 3.0);
    CHECK(f.dv(2.0, 3.0) == 2.0 + 4.0 * 4.0);

    CHECK(ScalarField2D::zero().value(5.0, -7.0) == 0.0);
    CHECK(ScalarField2D::coordinate_u().value(5.0, -7.0) == 5.0);
    CHECK(ScalarField2D::coordinate_v().value(5.0, -7.0) == -7.0);
    CHECK(ScalarField2D::coordinate_u().du(5.0, -7.0) == 1.0);
    CHECK(ScalarField2D::coordinate_v().dv(5.0, -7.0) == 1.0);

    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ScalarField2D::polynomial({{inf}}), std::invalid_argument);
}

TEST_CASE("full metric closed-form values") {
    CHECK(heis_metric({0, 0, 0}, {0, 0, 1}, {0, 0, 1}) == 1.0);
    CHECK(heis_metric({0, 2, 0}, {1, 0, 0}, {1, 0, 0}) == 5.0);
}

TEST_CASE("full metric ignores the fiber coordinate exactly") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const HPoint p{rng.uniform(-3, 3), rng.uniform(-3, 3),
                       rng.uniform(-3, 3)};
        const HPoint q{p.x, p.y, p.z + rng.uniform(-100, 100)};
        const HTangent u{rng.normal(), rng.normal(), rng.normal()};
        const HTangent v{rng.normal(), rng.normal(), rng.normal()};
        CHECK(heis_metric(p, u, v) == heis_metric(q, u, v));
    }
}

TEST_CASE("base-plane metric is the Euclidean product") {
    CHECK(submersion_metric({1, 0}, {1, 0}) == 1.0);
    CHECK(submersion_metric({1, 0}, {0, 1}) == 0.0);
    CHECK(submersion_metric({3, 4}, {3, 4}) == 25.0);
}

TEST_CASE("graph-section pullback values") {
    CHECK(immersion_metric(ScalarField2D::zero(), {1, 3}, {1, 0}, {1, 0}) ==
          10.0);
    // Derivative matches the base height: correction bracket vanishes.
    const ScalarField2D tilt = ScalarField2D::polynomial({{0.0}, {3.0}});
    CHECK(immersion_metric(tilt, {2, 3}, {1, 0}, {1, 0}) == 1.0);
    const ScalarField2D saddle =
        ScalarField2D::polynomial({{0.0, 0.0}, {0.0, 1.0}});
    CHECK(immersion_metric(saddle, {0, 0}, {0, 1}, {0, 1}) == 1.0);
}

TEST_CASE("degenerate product vanishes on the fiber direction") {
    const HTangent xi{0, 0, 1};
    CHECK(gauge_metric(ScalarField2D::coordinate_u(),
                       ScalarField2D::coordinate_v(), {0.7, -0.3, 2.0}, xi,
                       xi) == 0.0);
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const ScalarField2D f1 = ScalarField2D::polynomial(
            {{rng.uniform(-2, 2)}, {rng.uniform(-2, 2)}});
        const ScalarField2D f2 = ScalarField2D::polynomial(
            {{rng.uniform(-2, 2), rng.uniform(-2, 2)}});
        const HPoint p{rng.normal(), rng.normal(), rng.normal()};
        const HTangent v{rng.normal(), rng.normal(), rng.normal()};
        CHECK(gauge_metric(f1, f2, p, xi, v) == 0.0);
        CHECK(gauge_metric(f1, f2, p, v, xi) == 0.0);
    }
}

TEST_CASE("degenerate product closed-form values") {
    CHECK(gauge_metric(ScalarField2D::coordinate_v(), ScalarField2D::zero(),
                       {0.2, 1.7, -3.0}, {1, 1, 0}, {1, 1, 0}) == 2.0);
    CHECK(gauge_metric(ScalarField2D::zero(), ScalarField2D::zero(),
                       {0, 1, 0}, {1, 0, 0}, {1, 0, 0}) == 2.0);
}

TEST_CASE("degenerate product agrees with the base plane on projections") {
    const ScalarField2D phi1 = ScalarField2D::coordinate_v();
    const ScalarField2D phi2 = ScalarField2D::zero();
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const HPoint p{rng.normal(), rng.normal(), rng.normal()};
        const HTangent u{rng.normal(), rng.normal(), rng.normal()};
        const HTangent v{rng.normal(), rng.normal(), rng.normal()};
        CHECK(gauge_metric(phi1, phi2, p, u, v) ==
              submersion_metric(Vec2{u.dx, u.dy}, Vec2{v.dx, v.dy}));
    }
}

TEST_CASE("rebuilt nondegenerate metric reproduces the full metric") {
    const ReconstructedMetric g1 = normal_to_submersion(
        ScalarField2D::coordinate_v(), ScalarField2D::zero(), 1.0);
    Rng rng(14);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int trial = 0; trial < 200; ++trial) {
        const HPoint p{rng.normal(), rng.normal(), rng.normal()};
        const HTangent u{rng.normal(), rng.normal(), rng.normal()};
        const HTangent v{rng.normal(), rng.normal(), rng.normal()};
        const double full = heis_metric(p, u, v);
        CHECK(std::abs(g1(p, u, v) - full) <=
              4.0 * eps * (1.0 + std::abs(full)));
    }
}

TEST_CASE("rebuilt metric: declared complement is orthogonal to the fiber") {
    const ScalarField2D f1 =
        ScalarField2D::polynomial({{0.5, -1.0}, {2.0, 0.25}});
    const ScalarField2D f2 = ScalarField2D::coordinate_u();
    const ReconstructedMetric g1 = normal_to_submersion(f1, f2, 3.0);
    const HPoint p{0.4, -1.1, 5.0};
    const HTangent n1{1.0, 0.0, f1.value(p.x, p.y)};
    const HTangent n2{0.0, 1.0, f2.value(p.x, p.y)};
    const HTangent xi{0.0, 0.0, 1.0};
    CHECK(g1(p, n1, xi) == 0.0);
    CHECK(g1(p, n2, xi) == 0.0);
    CHECK(normal_to_submersion(ScalarField2D::zero(), ScalarField2D::zero(),
                               2.0)({0, 0, 0}, {0, 0, 1}, {0, 0, 1}) == 2.0);
    CHECK_THROWS_AS(ReconstructedMetric(f1, f2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ReconstructedMetric(f1, f2, -1.0), std::invalid_argument);
}

TEST_CASE("path lengths of affine paths are exact") {
    const HPath seg = straight_segment();
    CHECK(hpath_length(seg, HLengthMetric::Heisenberg) == 1.0);
    CHECK(hpath_length(seg, HLengthMetric::Gauge) == 1.0);
    CHECK(hpath_length(seg, HLengthMetric::SubmersionOfProjection) == 1.0);

    const std::vector<HPoint> still(5, HPoint{0.3, -0.2, 0.9});
    CHECK(hpath_length(HPath::uniform(still), HLengthMetric::Heisenberg) ==
          0.0);
}

TEST_CASE("path length rejects short paths and non-uniform grids") {
    CHECK_THROWS_AS(
        hpath_length(HPath::uniform(std::vector<HPoint>(2)),
                     HLengthMetric::Heisenberg),
        std::invalid_argument);
    HPath bad = HPath::uniform(std::vector<HPoint>(9));
    bad.times[3] += 1e-6;
    CHECK_THROWS_AS(hpath_length(bad, HLengthMetric::Heisenberg),
                    std::invalid_argument);
}

TEST_CASE("fiber action moves only z") {
    const HPath seg = straight_segment();
    GaugeFunction zero;
    zero.values.assign(5, 0.0);
    const HPath same = gauge_act(zero, seg);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(same.points[k].x == seg.points[k].x);
        CHECK(same.points[k].y == seg.points[k].y);
        CHECK(same.points[k].z == seg.points[k].z);
    }

    GaugeFunction shift;
    shift.values.assign(5, 2.5);
    const HPath moved = gauge_act(shift, seg);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(moved.points[k].z == seg.points[k].z + 2.5);
    }

    GaugeFunction wrong;
    wrong.values.assign(4, 0.0);
    CHECK_THROWS_AS(gauge_act(wrong, seg), std::invalid_argument);
}

TEST_CASE("fiber action preserves degenerate-metric length") {
    const HPath seg = straight_segment();
    GaugeFunction quad;
    quad.values.resize(5);
    for (std::size_t k = 0; k < 5; ++k) {
        const double t = static_cast<double>(k) / 4.0;
        quad.values[k] = t * t;
    }
    CHECK(hpath_length(gauge_act(quad, seg), HLengthMetric::Gauge) == 1.0);

    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<HPoint> pts(17);
        for (HPoint& p : pts) p = HPoint{rng.normal(), rng.normal(),
                                         rng.normal()};
        const HPath path = HPath::uniform(pts);
        GaugeFunction g;
        g.values.resize(17);
        for (double& v : g.values) v = rng.uniform(-5, 5);
        const double before = hpath_length(path, HLengthMetric::Gauge);
        const double after =
            hpath_length(gauge_act(g, path), HLengthMetric::Gauge);
        CHECK(std::abs(after - before) <= 16.0 * 10.0 * 1e-16);
    }
}

TEST_CASE("constant fiber shift preserves full-metric length") {
    Rng rng(16);
    std::vector<HPoint> pts(17);
    for (HPoint& p : pts) p = HPoint{rng.normal(), rng.normal(), rng.normal()};
    const HPath path = HPath::uniform(pts);
    GaugeFunction g;
    g.values.assign(17, 1.75);
    const double before = hpath_length(path, HLengthMetric::Heisenberg);
    const double after =
        hpath_length(gauge_act(g, path), HLengthMetric::Heisenberg);
    CHECK(std::abs(after - before) <= 1e-12 * (1.0 + before));
}

TEST_CASE("horizontal lift: flat base stays level, tilted base climbs") {
    std::vector<Vec2> level(5), tilted(5);
    for (std::size_t k = 0; k < 5; ++k) {
        const double t = static_cast<double>(k) / 4.0;
        level[k] = Vec2{t, 0.0};
        tilted[k] = Vec2{t, 1.0};
    }
    const HPath flat = horizontal_lift(level, 0.25);
    for (const HPoint& p : flat.points) CHECK(p.z == 0.25);
    CHECK(horizontal_lift(tilted, 0.0).points.back().z == 1.0);

    CHECK_THROWS_AS(horizontal_lift(std::vector<Vec2>(1), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(horizontal_lift(level,
                                    std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("lifting the unit circle accumulates minus the enclosed area") {
    double prev_err = 0.0;
    for (std::size_t k : {std::size_t(128), std::size_t(512)}) {
        std::vector<Vec2> loop(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            const double th =
                2.0 * kPi * static_cast<double>(i) / static_cast<double>(k);
            loop[i] = Vec2{std::cos(th), std::sin(th)};
        }
        loop[k] = loop[0];
        const double dz = horizontal_lift(loop, 0.0).points.back().z;

        SampledCurve polygon;
        polygon.closed = true;
        polygon.points.assign(loop.begin(), loop.end() - 1);
        CHECK(std::abs(dz + shoelace_area(polygon)) <= 1e-12);

        const double err = std::abs(dz + kPi);
        if (k == 512) {
            CHECK(err <= 1e-4);
            CHECK(prev_err / err >= 12.0);  // two doublings, order 2
        }
        prev_err = err;
    }
}
