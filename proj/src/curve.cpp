#include "shapespace/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shapespace {

namespace {

constexpr std::size_t kMinSamples = 8;

// Snap threshold for interpolation positions measured in grid cells: inverse
// reparameterizations that land this close to a node are treated as exact,
// so grid-aligned shifts copy samples bit-for-bit.
constexpr double kNodeSnap = 1e-9;

std::string describe_index(std::size_t i) { return "sample " + std::to_string(i); }

}  // namespace

void validate_curve(const SampledCurve& curve) {
    const std::size_t n = curve.points.size();
    if (n < kMinSamples) {
        throw std::invalid_argument("curve must have at least " +
                                    std::to_string(kMinSamples) + " samples, got " +
                                    std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = curve.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("curve has non-finite coordinates at " +
                                        describe_index(i));
        }
    }
    const std::size_t edges = curve.closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const Vec2 d = curve.points[(i + 1) % n] - curve.points[i];
        if (norm(d) == 0.0) {
            throw std::invalid_argument(
                "degenerate immersion: coincident consecutive samples at " +
                describe_index(i));
        }
    }
}

FrameData compute_frame(const SampledCurve& curve) {
    validate_curve(curve);
    const std::size_t n = curve.points.size();
    const bool closed = curve.closed;
    const std::size_t n_edges = closed ? n : n - 1;

    FrameData f;
    f.tangent.resize(n);
    f.normal.resize(n);
    f.ds.resize(n);
    f.span.resize(n);
    f.kappa.resize(n);
    f.prev.resize(n);
    f.next.resize(n);
    f.chord.resize(n_edges);

    for (std::size_t i = 0; i < n_edges; ++i) {
        f.chord[i] = norm(curve.points[(i + 1) % n] - curve.points[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n_edges; ++i) total += f.chord[i];
    f.total_length = total;

    for (std::size_t i = 0; i < n; ++i) {
        if (closed) {
            f.prev[i] = (i + n - 1) % n;
            f.next[i] = (i + 1) % n;
            f.ds[i] = 0.5 * (f.chord[(i + n - 1) % n] + f.chord[i]);
            f.span[i] = f.chord[(i + n - 1) % n] + f.chord[i];
        } else if (i == 0) {
            f.prev[i] = 0;
            f.next[i] = 1;
            f.ds[i] = 0.5 * f.chord[0];
            f.span[i] = f.chord[0];
        } else if (i == n - 1) {
            f.prev[i] = n - 2;
            f.next[i] = n - 1;
            f.ds[i] = 0.5 * f.chord[n - 2];
            f.span[i] = f.chord[n - 2];
        } else {
            f.prev[i] = i - 1;
            f.next[i] = i + 1;
            f.ds[i] = 0.5 * (f.chord[i - 1] + f.chord[i]);
            f.span[i] = f.chord[i - 1] + f.chord[i];
        }
        const Vec2 u = curve.points[f.next[i]] - curve.points[f.prev[i]];
        const double un = norm(u);
        if (un == 0.0) {
            throw std::domain_error(
                "degenerate frame: the curve folds back onto itself at " +
                describe_index(i));
        }
        f.tangent[i] = u / un;
        f.normal[i] = rot90(f.tangent[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 dt = f.tangent[f.next[i]] - f.tangent[f.prev[i]];
        f.kappa[i] = dot(dt, f.normal[i]) / f.span[i];
    }
    return f;
}

double polygon_length(const SampledCurve& curve) {
    validate_curve(curve);
    const std::size_t n = curve.points.size();
    const std::size_t n_edges = curve.closed ? n : n - 1;
    double total = 0.0;
    for (std::size_t i = 0; i < n_edges; ++i) {
        total += norm(curve.points[(i + 1) % n] - curve.points[i]);
    }
    return total;
}

double shoelace_area(const SampledCurve& curve) {
    validate_curve(curve);
    if (!curve.closed) {
        throw std::invalid_argument("signed area requires a closed curve");
    }
    const std::size_t n = curve.points.size();
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        twice_area += cross(curve.points[i], curve.points[(i + 1) % n]);
    }
    return 0.5 * twice_area;
}

// ---------------------------------------------------------------------------
// Reparameterization
// ---------------------------------------------------------------------------

DiffeoGrid DiffeoGrid::identity(std::size_t n, bool closed) {
    DiffeoGrid g;
    g.closed = closed;
    g.offset = 0.0;
    const std::size_t cells = closed ? n : n - 1;
    g.increments.assign(cells, 1.0 / static_cast<double>(cells));
    return g;
}

DiffeoGrid DiffeoGrid::rotation(std::size_t n, double offset) {
    DiffeoGrid g = identity(n, true);
    g.offset = offset;
    return g;
}

void validate_diffeo(const DiffeoGrid& gamma) {
    if (gamma.increments.size() < 2) {
        throw std::invalid_argument("reparameterization grid is too small");
    }
    if (!std::isfinite(gamma.offset)) {
        throw std::invalid_argument("reparameterization offset is not finite");
    }
    if (!gamma.closed && gamma.offset != 0.0) {
        throw std::invalid_argument(
            "open-curve reparameterizations must fix the endpoints (offset 0)");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < gamma.increments.size(); ++i) {
        const double inc = gamma.increments[i];
        if (!std::isfinite(inc) || inc <= 0.0) {
            throw std::invalid_argument(
                "reparameterization is not strictly increasing at cell " +
                std::to_string(i));
        }
        total += inc;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "reparameterization increments must sum to 1, got " +
            std::to_string(total));
    }
}

namespace {

// Positions u_i (in grid cells) with gamma(u_i / cells) = t_i, i.e. the
// inverse map evaluated on the curve's own grid. Closed case: u in [0, n);
// open case: u in [0, n-1] with the endpoints exact.
std::vector<double> diffeo_inverse_positions(const DiffeoGrid& gamma) {
    validate_diffeo(gamma);
    const std::size_t cells = gamma.increments.size();
    std::vector<double> nodes(cells + 1);
    nodes[0] = gamma.offset;
    for (std::size_t j = 0; j < cells; ++j) {
        nodes[j + 1] = nodes[j] + gamma.increments[j];
    }

    const std::size_t n = gamma.closed ? cells : cells + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t;
        if (gamma.closed) {
            t = static_cast<double>(i) / static_cast<double>(n);
            // shift t by an integer into [nodes[0], nodes[0] + 1)
            t += std::ceil(nodes[0] - t);
            if (t >= nodes[0] + 1.0) t -= 1.0;
            if (t < nodes[0]) t += 1.0;
        } else {
            t = static_cast<double>(i) / static_cast<double>(n - 1);
            t = std::min(std::max(t, nodes[0]), nodes[cells]);
        }
        std::size_t j = static_cast<std::size_t>(
            std::upper_bound(nodes.begin(), nodes.end(), t) - nodes.begin());
        j = (j == 0) ? 0 : j - 1;
        if (j > cells - 1) j = cells - 1;
        const double alpha = (t - nodes[j]) / gamma.increments[j];
        double u = static_cast<double>(j) + alpha;
        const double r = std::round(u);
        if (std::abs(u - r) <= kNodeSnap) u = r;
        if (gamma.closed) {
            if (u >= static_cast<double>(cells)) u -= static_cast<double>(cells);
            if (u < 0.0) u += static_cast<double>(cells);
        } else {
            u = std::min(std::max(u, 0.0), static_cast<double>(cells));
        }
        out[i] = u;
    }
    return out;
}

// Piecewise-linear interpolation of per-sample values at grid positions.
std::vector<Vec2> interp_positions(const std::vector<Vec2>& values, bool closed,
                                   const std::vector<double>& positions) {
    const std::size_t n = values.size();
    std::vector<Vec2> out(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        double u = positions[i];
        std::size_t cell = static_cast<std::size_t>(std::floor(u));
        double frac = u - std::floor(u);
        if (closed) {
            cell %= n;
        } else if (cell >= n - 1) {
            cell = n - 2;
            frac = u - static_cast<double>(cell);
        }
        if (frac == 0.0) {
            out[i] = values[cell];
        } else {
            const std::size_t nxt = closed ? (cell + 1) % n : cell + 1;
            out[i] = values[cell] * (1.0 - frac) + values[nxt] * frac;
        }
    }
    return out;
}

std::vector<double> interp_positions(const std::vector<double>& values,
                                     bool closed,
                                     const std::vector<double>& positions) {
    const std::size_t n = values.size();
    std::vector<double> out(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        double u = positions[i];
        std::size_t cell = static_cast<std::size_t>(std::floor(u));
        double frac = u - std::floor(u);
        if (closed) {
            cell %= n;
        } else if (cell >= n - 1) {
            cell = n - 2;
            frac = u - static_cast<double>(cell);
        }
        if (frac == 0.0) {
            out[i] = values[cell];
        } else {
            const std::size_t nxt = closed ? (cell + 1) % n : cell + 1;
            out[i] = values[cell] * (1.0 - frac) + values[nxt] * frac;
        }
    }
    return out;
}

void check_grid_match(std::size_t curve_n, const DiffeoGrid& gamma) {
    if (gamma.grid_size() != curve_n) {
        throw std::invalid_argument(
            "reparameterization grid size " + std::to_string(gamma.grid_size()) +
            " does not match the curve's " + std::to_string(curve_n) + " samples");
    }
}

}  // namespace

SampledCurve reparameterize(const SampledCurve& curve, const DiffeoGrid& gamma) {
    validate_curve(curve);
    check_grid_match(curve.points.size(), gamma);
    if (gamma.closed != curve.closed) {
        throw std::invalid_argument(
            "reparameterization closedness does not match the curve");
    }
    const std::vector<double> positions = diffeo_inverse_positions(gamma);
    SampledCurve out;
    out.closed = curve.closed;
    out.points = interp_positions(curve.points, curve.closed, positions);
    return out;
}

std::vector<Vec2> reparameterize_field(const std::vector<Vec2>& field,
                                       const DiffeoGrid& gamma) {
    check_grid_match(field.size(), gamma);
    return interp_positions(field, gamma.closed,
                            diffeo_inverse_positions(gamma));
}

std::vector<double> reparameterize_scalar(const std::vector<double>& field,
                                          const DiffeoGrid& gamma) {
    check_grid_match(field.size(), gamma);
    return interp_positions(field, gamma.closed,
                            diffeo_inverse_positions(gamma));
}

// ---------------------------------------------------------------------------
// Arc-length section: inscribed equal-chord polygon
// ---------------------------------------------------------------------------

namespace {

struct ChordWalk {
    bool complete = false;
    double arc = 0.0;                // polygon arc length consumed
    std::vector<std::size_t> edge;   // edge carrying each chord endpoint
    std::vector<double> param;       // position on that edge in [0, 1]
};

// Walks `steps` chords of length c along the polygon from the first sample.
// Each step intersects the circle of radius c about the current point with
// the polygon, moving strictly forward. Returns complete=false when the
// walk exhausts the polygon (open curves) or stalls.
ChordWalk chord_walk(const std::vector<Vec2>& pts, bool closed,
                     const std::vector<double>& chords, double c,
                     std::size_t steps) {
    const std::size_t n = pts.size();
    const std::size_t n_edges = chords.size();
    ChordWalk walk;
    walk.edge.reserve(steps);
    walk.param.reserve(steps);

    std::size_t e = 0;   // total edge advance (not wrapped)
    double s = 0.0;      // position on edge e
    std::size_t guard = 0;
    const std::size_t guard_limit = 16 * n + 16 * steps;

    for (std::size_t step = 0; step < steps; ++step) {
        const std::size_t e0 = e % n_edges;
        const Vec2 x = pts[e0] + (pts[(e0 + 1) % n] - pts[e0]) * s;
        std::size_t ee = e;
        double ss = s;
        while (true) {
            if (++guard > guard_limit) return walk;  // stalled: incomplete
            if (!closed && ee >= n_edges) return walk;  // ran off the end
            const std::size_t ec = ee % n_edges;
            const Vec2 a = pts[ec];
            const Vec2 ev = pts[(ec + 1) % n] - pts[ec];
            const Vec2 d = a - x;
            const double qa = dot(ev, ev);
            const double qb = 2.0 * dot(d, ev);
            const double qc = dot(d, d) - c * c;
            const double disc = qb * qb - 4.0 * qa * qc;
            double t = -1.0;
            if (disc >= 0.0) {
                const double root = (-qb + std::sqrt(disc)) / (2.0 * qa);
                if (root > ss + 1e-15 && root <= 1.0 + 1e-15) {
                    t = std::min(root, 1.0);
                }
            }
            if (t < 0.0) {
                walk.arc += (1.0 - ss) * chords[ec];
                ++ee;
                ss = 0.0;
                continue;
            }
            walk.arc += (t - ss) * chords[ec];
            e = ee;
            s = t;
            walk.edge.push_back(ec);
            walk.param.push_back(t);
            break;
        }
    }
    walk.complete = true;
    return walk;
}

}  // namespace

SampledCurve to_arclength(const SampledCurve& curve) {
    ArclengthStore store;
    return to_arclength(curve, store);
}

SampledCurve to_arclength(const SampledCurve& curve, ArclengthStore& store) {
    validate_curve(curve);
    const std::size_t n = curve.points.size();
    const bool closed = curve.closed;
    const std::size_t n_edges = closed ? n : n - 1;
    const std::size_t steps = closed ? n : n - 1;

    std::vector<double> chords(n_edges);
    double total = 0.0;
    for (std::size_t i = 0; i < n_edges; ++i) {
        chords[i] = norm(curve.points[(i + 1) % n] - curve.points[i]);
        total += chords[i];
    }

    // The common chord length solves gap(c) = arc(c) - L = 0; traversed arc
    // grows monotonically with c, and a chord never consumes less arc than
    // its own length, so gap(L/steps) >= 0. Extend the bracket downward if
    // the polygon is kinked enough that the nominal lower bound overshoots.
    const auto gap = [&](double c) {
        ChordWalk w = chord_walk(curve.points, closed, chords, c, steps);
        if (!w.complete) return total;  // any positive value shrinks hi
        return w.arc - total;
    };
    double hi = total / static_cast<double>(steps);
    double lo = 0.5 * hi;
    int widen = 0;
    while (gap(lo) > 0.0) {
        lo *= 0.5;
        if (++widen > 60) {
            throw std::domain_error(
                "arc-length resampling failed: no chord length brackets the "
                "polygon length");
        }
    }
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-16 * total; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Finish at the largest chord length whose walk provably completes; the
    // midpoint may sit on the incomplete side of the bracket, which on open
    // curves means running off the final edge.
    const double c = lo;

    ChordWalk walk = chord_walk(curve.points, closed, chords, c, steps);
    if (!walk.complete || walk.edge.size() != steps) {
        throw std::domain_error("arc-length resampling failed: chord walk "
                                "did not traverse the polygon");
    }
    store.edge = walk.edge;
    store.param = walk.param;
    store.chord = c;

    SampledCurve out;
    out.closed = closed;
    out.points.resize(n);
    out.points[0] = curve.points[0];
    const std::size_t interior = closed ? n - 1 : n - 2;
    for (std::size_t i = 1; i <= interior; ++i) {
        const std::size_t e = walk.edge[i - 1];
        const double s = walk.param[i - 1];
        out.points[i] = curve.points[e] + (curve.points[(e + 1) % n] - curve.points[e]) * s;
    }
    if (!closed) out.points[n - 1] = curve.points[n - 1];

    // The final chord must land back on the first sample (closed) or on the
    // last sample (open); a large residual means the solve went wrong.
    const std::size_t le = walk.edge[steps - 1];
    const Vec2 last = curve.points[le] +
                      (curve.points[(le + 1) % n] - curve.points[le]) * walk.param[steps - 1];
    const Vec2 target = closed ? curve.points[0] : curve.points[n - 1];
    if (norm(last - target) > 1e-6 * total) {
        throw std::domain_error(
            "arc-length resampling failed: walk residual " +
            std::to_string(norm(last - target)) + " exceeds tolerance");
    }
    return out;
}

std::vector<Vec2> arclength_pullback(const SampledCurve& curve,
                                     const ArclengthStore& store,
                                     const std::vector<Vec2>& qbar) {
    validate_curve(curve);
    const std::size_t n = curve.points.size();
    const bool closed = curve.closed;
    const std::size_t steps = closed ? n : n - 1;   // number of chords
    if (store.edge.size() != steps || store.param.size() != steps) {
        throw std::invalid_argument("arc-length pullback: store does not match the curve");
    }
    if (qbar.size() != n) {
        throw std::invalid_argument("arc-length pullback: cotangent size mismatch");
    }
    const std::size_t n_unknown = closed ? n - 1 : n - 2;  // movable stations

    std::vector<Vec2> edges(closed ? n : n - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i] = curve.points[(i + 1) % n] - curve.points[i];
    }

    // Station positions x_0..x_steps; x_0 is the first sample and x_steps the
    // wrap (closed) or the last sample (open).
    std::vector<Vec2> x(steps + 1);
    x[0] = curve.points[0];
    for (std::size_t i = 1; i <= n_unknown; ++i) {
        const std::size_t e = store.edge[i - 1];
        x[i] = curve.points[e] + edges[e] * store.param[i - 1];
    }
    x[steps] = closed ? curve.points[0] : curve.points[n - 1];

    std::vector<Vec2> pbar(n, Vec2{0.0, 0.0});
    // Direct dependence of the output samples on the input samples.
    pbar[0] += qbar[0];
    if (!closed) pbar[n - 1] += qbar[n - 1];
    std::vector<double> sbar(n_unknown);
    for (std::size_t i = 1; i <= n_unknown; ++i) {
        const std::size_t e = store.edge[i - 1];
        const double s = store.param[i - 1];
        sbar[i - 1] = dot(qbar[i], edges[e]);
        pbar[e] += qbar[i] * (1.0 - s);
        pbar[(e + 1) % n] += qbar[i] * s;
    }

    // Implicit system: phi_i = |x_{i+1} - x_i|^2 - c^2 = 0 for each chord,
    // unknowns are the station parameters and the common chord length c.
    // Solve the transposed Jacobian system for the multipliers lambda by a
    // forward sweep in lambda_0, closed by the c-row (sum of lambdas = 0).
    const std::size_t m = steps;  // number of equations phi_0..phi_{m-1}
    std::vector<Vec2> d(m);
    for (std::size_t i = 0; i < m; ++i) d[i] = x[i + 1] - x[i];

    // a[i] = dphi_i/ds_{i+1}, b[i] = dphi_{i+1}/ds_{i+1}
    std::vector<double> acoef(n_unknown), bcoef(n_unknown);
    double scale = 0.0;
    for (std::size_t i = 0; i < n_unknown; ++i) {
        const std::size_t e = store.edge[i];
        acoef[i] = 2.0 * dot(d[i], edges[e]);
        bcoef[i] = -2.0 * dot(d[i + 1], edges[e]);
        scale = std::max(scale, std::abs(acoef[i]));
    }
    for (std::size_t i = 0; i < n_unknown; ++i) {
        if (std::abs(bcoef[i]) < 1e-14 * std::max(scale, 1e-300)) {
            throw std::domain_error(
                "arc-length pullback: derivative system is singular (station "
                "perpendicular to its edge)");
        }
    }

    std::vector<double> alpha(m), beta(m);
    alpha[0] = 0.0;
    beta[0] = 1.0;
    for (std::size_t i = 1; i < m; ++i) {
        alpha[i] = (-sbar[i - 1] - acoef[i - 1] * alpha[i - 1]) / bcoef[i - 1];
        beta[i] = (-acoef[i - 1] * beta[i - 1]) / bcoef[i - 1];
    }
    double alpha_sum = 0.0, beta_sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        alpha_sum += alpha[i];
        beta_sum += beta[i];
    }
    if (std::abs(beta_sum) < 1e-300) {
        throw std::domain_error("arc-length pullback: closure row is singular");
    }
    const double lambda0 = -alpha_sum / beta_sum;

    // Accumulate lambda_i * dphi_i/dP. Through the stations this is
    // +-2 lambda_i d_i spread onto the carrying edge's endpoints; the fixed
    // stations feed the first/last samples directly.
    const auto add_station_bar = [&](std::size_t i, const Vec2& v) {
        if (i == 0) {
            pbar[0] += v;
        } else if (i == steps) {
            if (closed) {
                pbar[0] += v;
            } else {
                pbar[n - 1] += v;
            }
        } else {
            const std::size_t e = store.edge[i - 1];
            const double s = store.param[i - 1];
            pbar[e] += v * (1.0 - s);
            pbar[(e + 1) % n] += v * s;
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        const double lambda = alpha[i] + beta[i] * lambda0;
        add_station_bar(i + 1, d[i] * (2.0 * lambda));
        add_station_bar(i, d[i] * (-2.0 * lambda));
    }
    return pbar;
}

// ---------------------------------------------------------------------------
// Normalization sections
// ---------------------------------------------------------------------------

Vec2 curve_centroid(const SampledCurve& curve) {
    const FrameData f = compute_frame(curve);
    Vec2 sum{0.0, 0.0};
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        sum += curve.points[i] * f.ds[i];
    }
    return sum / f.total_length;
}

SampledCurve center_centroid(const SampledCurve& curve) {
    const Vec2 c = curve_centroid(curve);
    SampledCurve out = curve;
    for (Vec2& p : out.points) p -= c;
    return out;
}

SampledCurve start_to_origin(const SampledCurve& curve) {
    validate_curve(curve);
    const Vec2 c = curve.points[0];
    SampledCurve out = curve;
    for (Vec2& p : out.points) p -= c;
    return out;
}

SampledCurve align_ellipse(const SampledCurve& curve) {
    const FrameData f = compute_frame(curve);
    Vec2 c{0.0, 0.0};
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        c += curve.points[i] * f.ds[i];
    }
    c = c / f.total_length;

    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const Vec2 q = curve.points[i] - c;
        cxx += q.x * q.x * f.ds[i];
        cxy += q.x * q.y * f.ds[i];
        cyy += q.y * q.y * f.ds[i];
    }
    cxx /= f.total_length;
    cxy /= f.total_length;
    cyy /= f.total_length;

    const double half_gap = std::sqrt(0.25 * (cxx - cyy) * (cxx - cyy) + cxy * cxy);
    const double mean = 0.5 * (cxx + cyy);
    const double lam1 = mean + half_gap;
    const double lam2 = mean - half_gap;
    if (lam1 - lam2 <= 1e-9 * (std::abs(lam1) + std::abs(lam2))) {
        throw std::invalid_argument(
            "ambiguous alignment: the second-moment ellipse is isotropic");
    }
    Vec2 major;
    if (cxy != 0.0) {
        major = Vec2{lam1 - cyy, cxy};
    } else {
        major = (cxx >= cyy) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    const double theta = std::atan2(major.y, major.x);

    SampledCurve out = curve;
    for (Vec2& p : out.points) p = rotate(p, -theta);
    if (out.points[0].x < 0.0) {
        for (Vec2& p : out.points) p = -p;  // extra half turn fixes the sign
    }
    return out;
}

SampledCurve align_start_tangent(const SampledCurve& curve) {
    const FrameData f = compute_frame(curve);
    const double theta = std::atan2(f.tangent[0].y, f.tangent[0].x);
    SampledCurve out = curve;
    for (Vec2& p : out.points) p = rotate(p, -theta);
    return out;
}

SampledCurve scale_length(const SampledCurve& curve) {
    const double length = polygon_length(curve);
    SampledCurve out = curve;
    for (Vec2& p : out.points) p = p / length;
    return out;
}

SampledCurve scale_area(const SampledCurve& curve) {
    validate_curve(curve);
    if (!curve.closed) {
        throw std::invalid_argument(
            "area normalization requires a closed curve");
    }
    const double area = shoelace_area(curve);
    const double length = polygon_length(curve);
    if (std::abs(area) <= 1e-12 * length * length) {
        throw std::invalid_argument(
            "area normalization requires |signed area| bounded away from zero");
    }
    const double s = 1.0 / std::sqrt(std::abs(area));
    SampledCurve out = curve;
    for (Vec2& p : out.points) p = p * s;
    return out;
}

}  // namespace shapespace
