#include "shapespace/heisenberg.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shapespace {

HPath HPath::uniform(std::vector<HPoint> pts) {
    if (pts.size() < 2) {
        throw std::invalid_argument(
            "a sampled path needs at least two points, got " +
            std::to_string(pts.size()));
    }
    HPath path;
    const double steps = static_cast<double>(pts.size() - 1);
    path.times.resize(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        path.times[k] = static_cast<double>(k) / steps;
    }
    path.points = std::move(pts);
    return path;
}

void validate_hpath(const HPath& path) {
    if (path.points.size() < 3) {
        throw std::invalid_argument(
            "a measurable path needs at least two time steps, got " +
            std::to_string(path.points.size()) + " points");
    }
    if (path.times.size() != path.points.size()) {
        throw std::invalid_argument(
            "path has " + std::to_string(path.times.size()) + " times for " +
            std::to_string(path.points.size()) + " points");
    }
    const double steps = static_cast<double>(path.time_steps());
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        const HPoint& p = path.points[k];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw std::invalid_argument(
                "path point " + std::to_string(k) + " is not finite");
        }
        const double expected = static_cast<double>(k) / steps;
        if (std::abs(path.times[k] - expected) > 1e-12) {
            throw std::invalid_argument(
                "path times must form the uniform grid k/K; node " +
                std::to_string(k) + " deviates");
        }
    }
}

ScalarField2D ScalarField2D::zero() { return polynomial({{0.0}}); }

ScalarField2D ScalarField2D::coordinate_u() { return polynomial({{0.0}, {1.0}}); }

ScalarField2D ScalarField2D::coordinate_v() { return polynomial({{0.0, 1.0}}); }

ScalarField2D ScalarField2D::polynomial(std::vector<std::vector<double>> coeff) {
    for (const std::vector<double>& row : coeff) {
        for (double c : row) {
            if (!std::isfinite(c)) {
                throw std::invalid_argument(
                    "scalar field coefficients must be finite");
            }
        }
    }
    ScalarField2D field;
    field.coeff_ = std::move(coeff);
    return field;
}

// The three evaluators below accumulate nonzero terms in row-major order with
// running power products. du/dv fold the exponent into the coefficient first,
// so a polynomial built from those products (coeff[i][j] * i shifted down one
// row) evaluates bit-identically to the derivative itself.
double ScalarField2D::value(double u, double v) const {
    double total = 0.0;
    double up = 1.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        double vp = 1.0;
        for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
            if (coeff_[i][j] != 0.0) total += coeff_[i][j] * up * vp;
            vp *= v;
        }
        up *= u;
    }
    return total;
}

double ScalarField2D::du(double u, double v) const {
    double total = 0.0;
    double up = 1.0;  // u^{i-1}
    for (std::size_t i = 1; i < coeff_.size(); ++i) {
        double vp = 1.0;
        for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
            if (coeff_[i][j] != 0.0) {
                total += coeff_[i][j] * static_cast<double>(i) * up * vp;
            }
            vp *= v;
        }
        up *= u;
    }
    return total;
}

double ScalarField2D::dv(double u, double v) const {
    double total = 0.0;
    double up = 1.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        double vp = 1.0;  // v^{j-1}
        for (std::size_t j = 1; j < coeff_[i].size(); ++j) {
            if (coeff_[i][j] != 0.0) {
                total += coeff_[i][j] * static_cast<double>(j) * up * vp;
            }
            vp *= v;
        }
        up *= u;
    }
    return total;
}

double heis_metric(const HPoint& p, const HTangent& u, const HTangent& v) {
    const double wu = u.dz - p.y * u.dx;
    const double wv = v.dz - p.y * v.dx;
    return u.dx * v.dx + u.dy * v.dy + wu * wv;
}

double submersion_metric(const Vec2& u2, const Vec2& v2) {
    return u2.x * v2.x + u2.y * v2.y;
}

double immersion_metric(const ScalarField2D& psi, const Vec2& base,
                        const Vec2& a2, const Vec2& b2) {
    const double pu = psi.du(base.x, base.y);
    const double pv = psi.dv(base.x, base.y);
    const double wa = pv * a2.y + (pu - base.y) * a2.x;
    const double wb = pv * b2.y + (pu - base.y) * b2.x;
    return a2.x * b2.x + a2.y * b2.y + wa * wb;
}

double gauge_metric(const ScalarField2D& phi1, const ScalarField2D& phi2,
                    const HPoint& p, const HTangent& u, const HTangent& v) {
    const double f1 = phi1.value(p.x, p.y) - p.y;
    const double f2 = phi2.value(p.x, p.y);
    const double wu = f2 * u.dy + f1 * u.dx;
    const double wv = f2 * v.dy + f1 * v.dx;
    return u.dx * v.dx + u.dy * v.dy + wu * wv;
}

double hpath_length(const HPath& path, HLengthMetric metric,
                    const ScalarField2D& phi1, const ScalarField2D& phi2) {
    validate_hpath(path);
    const std::size_t steps = path.time_steps();
    const double kk = static_cast<double>(steps);
    double total = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        const HPoint& a = path.points[k];
        const HPoint& b = path.points[k + 1];
        const HPoint mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y),
                         0.5 * (a.z + b.z)};
        const HTangent vel{(b.x - a.x) * kk, (b.y - a.y) * kk,
                           (b.z - a.z) * kk};
        double g = 0.0;
        switch (metric) {
            case HLengthMetric::Heisenberg:
                g = heis_metric(mid, vel, vel);
                break;
            case HLengthMetric::Gauge:
                g = gauge_metric(phi1, phi2, mid, vel, vel);
                break;
            case HLengthMetric::SubmersionOfProjection:
                g = submersion_metric(Vec2{vel.dx, vel.dy},
                                      Vec2{vel.dx, vel.dy});
                break;
        }
        total += std::sqrt(g > 0.0 ? g : 0.0) / kk;
    }
    return total;
}

HPath gauge_act(const GaugeFunction& g, const HPath& path) {
    if (g.values.size() != path.points.size()) {
        throw std::invalid_argument(
            "gauge function has " + std::to_string(g.values.size()) +
            " values for a path with " + std::to_string(path.points.size()) +
            " points");
    }
    HPath out = path;
    for (std::size_t k = 0; k < out.points.size(); ++k) {
        if (!std::isfinite(g.values[k])) {
            throw std::invalid_argument(
                "gauge function value " + std::to_string(k) + " is not finite");
        }
        out.points[k].z += g.values[k];
    }
    return out;
}

HPath horizontal_lift(const std::vector<Vec2>& base_path, double z0) {
    if (base_path.size() < 2) {
        throw std::invalid_argument(
            "a lift needs at least two base points, got " +
            std::to_string(base_path.size()));
    }
    if (!std::isfinite(z0)) {
        throw std::invalid_argument("lift start height must be finite");
    }
    std::vector<HPoint> pts(base_path.size());
    pts[0] = HPoint{base_path[0].x, base_path[0].y, z0};
    for (std::size_t k = 0; k + 1 < base_path.size(); ++k) {
        const Vec2& a = base_path[k];
        const Vec2& b = base_path[k + 1];
        pts[k + 1].x = b.x;
        pts[k + 1].y = b.y;
        pts[k + 1].z = pts[k].z + 0.5 * (a.y + b.y) * (b.x - a.x);
    }
    return HPath::uniform(std::move(pts));
}

ReconstructedMetric::ReconstructedMetric(ScalarField2D phi1, ScalarField2D phi2,
                                         double c)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("fiber weight must be a positive number");
    }
}

double ReconstructedMetric::operator()(const HPoint& p, const HTangent& u,
                                       const HTangent& v) const {
    const double base = gauge_metric(phi1_, phi2_, p, u, v);
    const double f1 = phi1_.value(p.x, p.y);
    const double f2 = phi2_.value(p.x, p.y);
    const double au = u.dz - f1 * u.dx - f2 * u.dy;
    const double av = v.dz - f1 * v.dx - f2 * v.dy;
    return base + c_ * (au * av);
}

ReconstructedMetric normal_to_submersion(const ScalarField2D& phi1,
                                         const ScalarField2D& phi2, double c) {
    return ReconstructedMetric(phi1, phi2, c);
}

}  // namespace shapespace
