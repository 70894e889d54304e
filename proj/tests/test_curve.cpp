#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/sample_shapes.hpp"

using namespace shapespace;

namespace {
constexpr double kPi = 3.14159265358979323846;

SampledCurve unit_square_at(Vec2 center) {
    SampledCurve square;
    square.closed = true;
    square.points = {Vec2{-1, -1}, Vec2{0, -1}, Vec2{1, -1}, Vec2{1, 0},
                     Vec2{1, 1},   Vec2{0, 1},  Vec2{-1, 1}, Vec2{-1, 0}};
    for (Vec2& p : square.points) p += center;
    return square;
}

SampledCurve open_segment(std::size_t n) {
    SampledCurve seg;
    seg.closed = false;
    seg.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        seg.points[i] =
            Vec2{static_cast<double>(i) / static_cast<double>(n - 1), 0.0};
    }
    return seg;
}

double max_distance(const SampledCurve& a, const SampledCurve& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, norm(a.points[i] - b.points[i]));
    }
    return worst;
}
}  // namespace

TEST_CASE("curve validation rejects malformed inputs") {
    SampledCurve tiny;
    tiny.points.assign(7, Vec2{0, 0});
    CHECK_THROWS_AS(validate_curve(tiny), std::invalid_argument);

    SampledCurve repeated = circle(16);
    repeated.points[5] = repeated.points[4];
    CHECK_THROWS_AS(validate_curve(repeated), std::invalid_argument);

    SampledCurve broken = circle(16);
    broken.points[3].y = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_curve(broken), std::invalid_argument);

    CHECK_NOTHROW(validate_curve(circle(8)));
}

TEST_CASE("frame of the circle: radial normals, curvature one") {
    for (std::size_t n : {std::size_t(64), std::size_t(128)}) {
        const SampledCurve c = circle(n);
        const FrameData frame = compute_frame(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(frame.kappa[i] - 1.0));
            // unit frame, normal = quarter-turn of tangent
            CHECK(std::abs(norm(frame.tangent[i]) - 1.0) <= 1e-14);
            CHECK(norm(frame.normal[i] - rot90(frame.tangent[i])) == 0.0);
        }
        CHECK(worst <= 8.0 / static_cast<double>(n * n));
        CHECK(std::abs(frame.total_length - 2.0 * kPi) <= 1e-2);
    }
}

TEST_CASE("clockwise traversal flips the curvature sign") {
    SampledCurve c = circle(64);
    std::reverse(c.points.begin(), c.points.end());
    const FrameData frame = compute_frame(c);
    for (double k : frame.kappa) CHECK(std::abs(k + 1.0) <= 2e-3);
}

TEST_CASE("straight open segment has zero curvature") {
    const FrameData frame = compute_frame(open_segment(10));
    for (double k : frame.kappa) CHECK(std::abs(k) <= 1e-12);
    for (const Vec2& t : frame.tangent) {
        CHECK(std::abs(t.x - 1.0) <= 1e-15);
        CHECK(t.y == 0.0);
    }
}

TEST_CASE("polygon length and shoelace area of the unit square") {
    const SampledCurve square = unit_square_at({0, 0});
    CHECK(polygon_length(square) == 8.0);
    CHECK(shoelace_area(square) == 4.0);

    SampledCurve reversed = square;
    std::reverse(reversed.points.begin(), reversed.points.end());
    CHECK(shoelace_area(reversed) == -4.0);
}

TEST_CASE("diffeo validation") {
    CHECK_NOTHROW(validate_diffeo(DiffeoGrid::identity(16, true)));
    CHECK_NOTHROW(validate_diffeo(DiffeoGrid::identity(16, false)));
    CHECK_NOTHROW(validate_diffeo(DiffeoGrid::rotation(16, 0.3)));

    DiffeoGrid sag = DiffeoGrid::identity(16, true);
    sag.increments[2] = -sag.increments[2];
    CHECK_THROWS_AS(validate_diffeo(sag), std::invalid_argument);

    DiffeoGrid off = DiffeoGrid::identity(16, true);
    off.increments[0] *= 2.0;
    CHECK_THROWS_AS(validate_diffeo(off), std::invalid_argument);

    DiffeoGrid shifted = DiffeoGrid::identity(16, false);
    shifted.offset = 0.25;
    CHECK_THROWS_AS(validate_diffeo(shifted), std::invalid_argument);
}

TEST_CASE("identity reparameterization is a bit-exact copy") {
    const SampledCurve c = ellipse(32, 2.0, 1.0);
    const SampledCurve r = reparameterize(c, DiffeoGrid::identity(32, true));
    CHECK(max_distance(r, c) == 0.0);

    const SampledCurve seg = open_segment(16);
    const SampledCurve rs =
        reparameterize(seg, DiffeoGrid::identity(16, false));
    CHECK(max_distance(rs, seg) == 0.0);
}

TEST_CASE("grid-aligned rotation is a bit-exact cyclic shift") {
    const std::size_t n = 32;
    const SampledCurve c = ellipse(n, 2.0, 1.0);
    const std::size_t j = 5;
    const SampledCurve r = reparameterize(
        c, DiffeoGrid::rotation(n, static_cast<double>(j) /
                                       static_cast<double>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        // The action samples F at gamma^{-1}(i/n) = (i - j)/n.
        const Vec2 expect = c.points[(i + n - j) % n];
        CHECK(r.points[i].x == expect.x);
        CHECK(r.points[i].y == expect.y);
    }
}

TEST_CASE("rotation composed with its inverse rotation returns the curve") {
    const std::size_t n = 256;
    const SampledCurve c = circle(n);
    const SampledCurve once = reparameterize(c, DiffeoGrid::rotation(n, 0.37));
    const SampledCurve back =
        reparameterize(once, DiffeoGrid::rotation(n, 1.0 - 0.37));
    CHECK(max_distance(back, c) <= 1e-3);
}

TEST_CASE("random diffeos are valid and resolution-consistent") {
    for (int trial = 0; trial < 5; ++trial) {
        Rng rng(40 + trial);
        const DiffeoGrid gamma = random_diffeo(64, rng);
        CHECK_NOTHROW(validate_diffeo(gamma));
        double sum = 0.0;
        for (double d : gamma.increments) sum += d;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("arc-length resampling: fixed point, idempotence, equal chords") {
    // The regular polygon is already arc-length sampled.
    const SampledCurve c = circle(64);
    CHECK(max_distance(to_arclength(c), c) <= 1e-12);

    const SampledCurve e = ellipse(64, 2.0, 1.0);
    const SampledCurve a = to_arclength(e);
    CHECK(norm(a.points[0] - e.points[0]) == 0.0);
    const FrameData frame = compute_frame(a);
    double lo = 1e300, hi = 0.0;
    for (double l : frame.chord) {
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    CHECK((hi - lo) / hi <= 1e-9);
    CHECK(max_distance(to_arclength(a), a) <= 1e-9);

    SampledCurve seg = open_segment(16);
    for (std::size_t i = 0; i < seg.size(); ++i) {
        seg.points[i].y = 0.2 * std::sin(3.0 * seg.points[i].x);
    }
    const SampledCurve sa = to_arclength(seg);
    CHECK(norm(sa.points.front() - seg.points.front()) == 0.0);
    CHECK(norm(sa.points.back() - seg.points.back()) <= 1e-9);
}

TEST_CASE("arc-length adjoint matches finite differences") {
    Rng rng(41);
    // A generic wobbled ellipse: the symmetric one parks several equal-chord
    // stations exactly on vertices, where the resampling map has kinks and
    // no two-sided derivative exists.
    SampledCurve e = ellipse(12, 2.0, 1.0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double th = 2.0 * kPi * static_cast<double>(i) / 12.0;
        const double r = 1.0 + 0.07 * std::sin(2.0 * th + 0.7) +
                         0.04 * std::cos(3.0 * th - 0.3);
        e.points[i] = e.points[i] * r;
    }
    std::vector<Vec2> qbar(12);
    for (Vec2& w : qbar) w = Vec2{rng.normal(), rng.normal()};

    ArclengthStore store;
    to_arclength(e, store);
    const std::vector<Vec2> grad = arclength_pullback(e, store, qbar);

    auto objective = [&](const SampledCurve& curve) {
        const SampledCurve q = to_arclength(curve);
        double total = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            total += dot(q.points[i], qbar[i]);
        }
        return total;
    };

    const double delta = 1e-6;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (int coord = 0; coord < 2; ++coord) {
            double& entry = coord == 0 ? e.points[i].x : e.points[i].y;
            const double saved = entry;
            entry = saved + delta;
            const double plus = objective(e);
            entry = saved - delta;
            const double minus = objective(e);
            entry = saved;
            const double fd = (plus - minus) / (2.0 * delta);
            const double an = coord == 0 ? grad[i].x : grad[i].y;
            num += (fd - an) * (fd - an);
            den += an * an;
        }
    }
    CHECK(std::sqrt(num / den) <= 1e-4);
}

TEST_CASE("centroid centering moves the square at (5,5) to the origin") {
    const SampledCurve centered = center_centroid(unit_square_at({5, 5}));
    const Vec2 c = curve_centroid(centered);
    CHECK(std::abs(c.x) <= 1e-12);
    CHECK(std::abs(c.y) <= 1e-12);
}

TEST_CASE("start normalizations") {
    const SampledCurve moved = start_to_origin(ellipse(32, 2.0, 1.0));
    CHECK(moved.points[0].x == 0.0);
    CHECK(moved.points[0].y == 0.0);

    // circle(n) starts at (1, 0) heading in +y; alignment turns it to +x.
    const SampledCurve aligned = align_start_tangent(circle(64));
    const FrameData frame = compute_frame(aligned);
    CHECK(std::abs(frame.tangent[0].x - 1.0) <= 1e-12);
    CHECK(std::abs(frame.tangent[0].y) <= 1e-12);
}

TEST_CASE("axis alignment rejects the isotropic circle") {
    CHECK_THROWS_AS(align_ellipse(circle(128)), std::invalid_argument);

    const SampledCurve aligned = align_ellipse(ellipse(128, 2.0, 1.0));
    double max_ax = 0.0, max_ay = 0.0;
    for (const Vec2& p : aligned.points) {
        max_ax = std::max(max_ax, std::abs(p.x));
        max_ay = std::max(max_ay, std::abs(p.y));
    }
    CHECK(max_ax >= max_ay);  // major axis along x
    CHECK(aligned.points[0].x >= 0.0);
}

TEST_CASE("scaling normalizations") {
    const SampledCurve unit_len = scale_length(circle(64, 2.0));
    CHECK(std::abs(polygon_length(unit_len) - 1.0) <= 1e-12);
    CHECK(max_distance(scale_length(unit_len), unit_len) <= 1e-12);

    const SampledCurve unit_area = scale_area(circle(128, 2.0));
    const double target = 1.0 / std::sqrt(kPi);
    for (const Vec2& p : unit_area.points) {
        CHECK(std::abs(norm(p) - target) <= 1e-3);
    }

    CHECK_THROWS_AS(scale_area(open_segment(16)), std::invalid_argument);
}
