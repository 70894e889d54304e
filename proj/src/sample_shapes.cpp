#include "shapespace/sample_shapes.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapespace {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

// 53-bit mantissa of the engine output; the transform is spelled out so the
// stream does not depend on the standard library's distribution internals.
double Rng::u01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - u01();  // (0, 1], keeps the log finite
    const double u2 = u01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

int Rng::sign() { return u01() < 0.5 ? -1 : 1; }

SampledCurve circle(std::size_t n, double radius) {
    if (n < 8) {
        throw std::invalid_argument("circle needs at least 8 samples");
    }
    SampledCurve curve;
    curve.closed = true;
    curve.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double th = 2.0 * kPi * static_cast<double>(i) /
                          static_cast<double>(n);
        curve.points[i] = Vec2{radius * std::cos(th), radius * std::sin(th)};
    }
    return curve;
}

SampledCurve ellipse(std::size_t n, double ax, double ay) {
    if (n < 8) {
        throw std::invalid_argument("ellipse needs at least 8 samples");
    }
    SampledCurve curve;
    curve.closed = true;
    curve.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double th = 2.0 * kPi * static_cast<double>(i) /
                          static_cast<double>(n);
        curve.points[i] = Vec2{ax * std::cos(th), ay * std::sin(th)};
    }
    return curve;
}

TangentField fourier_field(std::size_t n, Rng& rng, int modes,
                           bool normal_draws) {
    TangentField h(n, Vec2{0.0, 0.0});
    for (int j = 1; j <= modes; ++j) {
        const double damp = 1.0 / static_cast<double>(j * j);
        double c[4];
        for (double& ck : c) {
            ck = (normal_draws ? rng.normal() : rng.uniform(-1.0, 1.0)) * damp;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double th = 2.0 * kPi * static_cast<double>(j) *
                              static_cast<double>(i) / static_cast<double>(n);
            const double cs = std::cos(th);
            const double sn = std::sin(th);
            h[i].x += c[0] * cs + c[1] * sn;
            h[i].y += c[2] * cs + c[3] * sn;
        }
    }
    return h;
}

DiffeoGrid random_diffeo(std::size_t n, Rng& rng, double amp, int modes,
                         bool with_offset) {
    if (n < 2) {
        throw std::invalid_argument("reparameterization grid is too small");
    }
    std::vector<double> aj(modes), ph(modes);
    for (int j = 1; j <= modes; ++j) {
        // The derivative bound sum_j amp/j stays below 1 for amp <= 0.45 and
        // modes <= 4, so the map is strictly increasing.
        aj[j - 1] = rng.uniform(-1.0, 1.0) * amp /
                    (2.0 * kPi * static_cast<double>(j * j));
        ph[j - 1] = rng.uniform(0.0, 2.0 * kPi);
    }
    const double c = with_offset ? rng.u01() : 0.0;

    std::vector<double> g(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        double val = t + c;
        for (int j = 1; j <= modes; ++j) {
            val += aj[j - 1] *
                   std::sin(2.0 * kPi * static_cast<double>(j) * t + ph[j - 1]);
        }
        g[i] = val;
    }
    g[n] = g[0] + 1.0;  // the wiggle is 1-periodic, so the map closes exactly

    DiffeoGrid gamma;
    gamma.closed = true;
    gamma.offset = g[0];
    gamma.increments.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        gamma.increments[i] = g[i + 1] - g[i];
    }
    validate_diffeo(gamma);
    return gamma;
}

CurvePath PathFamily::realize(std::size_t n, std::size_t k) const {
    if (k < 2) {
        throw std::invalid_argument("path needs at least two time steps");
    }
    const SampledCurve base = circle(n);
    // Evaluate the two stored coefficient sets as fields on the n-point grid.
    TangentField f0(n, Vec2{0.0, 0.0}), f1(n, Vec2{0.0, 0.0});
    for (std::size_t m = 0; m < grow.size(); ++m) {
        const double j = static_cast<double>(m + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double th =
                2.0 * kPi * j * static_cast<double>(i) / static_cast<double>(n);
            const double cs = std::cos(th);
            const double sn = std::sin(th);
            f0[i].x += grow[m][0] * cs + grow[m][1] * sn;
            f0[i].y += grow[m][2] * cs + grow[m][3] * sn;
            f1[i].x += swell[m][0] * cs + swell[m][1] * sn;
            f1[i].y += swell[m][2] * cs + swell[m][3] * sn;
        }
    }

    CurvePath path;
    path.slices.resize(k + 1);
    for (std::size_t kk = 0; kk <= k; ++kk) {
        const double tau = static_cast<double>(kk) / static_cast<double>(k);
        SampledCurve slice;
        slice.closed = true;
        slice.points.resize(n);
        const double inflate = 1.0 + 0.15 * tau;
        const double drift = 0.05 * tau;
        const double bulge = 0.04 * std::sin(kPi * tau);
        for (std::size_t i = 0; i < n; ++i) {
            slice.points[i] =
                base.points[i] * inflate + f0[i] * drift + f1[i] * bulge;
        }
        path.slices[kk] = std::move(slice);
    }
    return path;
}

PathFamily random_path_family(Rng& rng, int modes) {
    PathFamily family;
    family.grow.resize(modes);
    family.swell.resize(modes);
    for (int j = 1; j <= modes; ++j) {
        const double damp = 1.0 / static_cast<double>(j * j);
        family.grow[j - 1].resize(4);
        for (double& c : family.grow[j - 1]) {
            c = rng.uniform(-1.0, 1.0) * damp;
        }
    }
    for (int j = 1; j <= modes; ++j) {
        const double damp = 1.0 / static_cast<double>(j * j);
        family.swell[j - 1].resize(4);
        for (double& c : family.swell[j - 1]) {
            c = rng.uniform(-1.0, 1.0) * damp;
        }
    }
    return family;
}

PathGauge GaugeFamily::realize(std::size_t n, std::size_t k) const {
    if (k < 2) {
        throw std::invalid_argument("gauge path needs at least two time steps");
    }
    const int modes = static_cast<int>(wig_grow.size());
    PathGauge gauge(k + 1);
    for (std::size_t kk = 0; kk <= k; ++kk) {
        const double tau = static_cast<double>(kk) / static_cast<double>(k);
        std::vector<double> g(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double t =
                static_cast<double>(i) / static_cast<double>(n);
            double val = t + shift * tau;
            for (int j = 1; j <= modes; ++j) {
                const double amp =
                    wig_grow[j - 1] * tau + wig_swell[j - 1] * std::sin(kPi * tau);
                val += amp * std::sin(2.0 * kPi * static_cast<double>(j) * t +
                                      phase[j - 1]);
            }
            g[i] = val;
        }
        g[n] = g[0] + 1.0;

        DiffeoGrid gamma;
        gamma.closed = true;
        gamma.offset = g[0];
        gamma.increments.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            gamma.increments[i] = g[i + 1] - g[i];
        }
        validate_diffeo(gamma);
        gauge[kk] = std::move(gamma);
    }
    return gauge;
}

GaugeFamily random_gauge_family(Rng& rng, int modes, double shift_amp,
                                double wig_amp) {
    GaugeFamily family;
    family.shift = shift_amp * rng.uniform(0.5, 1.0) *
                   static_cast<double>(rng.sign());
    family.wig_grow.resize(modes);
    family.wig_swell.resize(modes);
    family.phase.resize(modes);
    for (int j = 1; j <= modes; ++j) {
        // total derivative bound: sum_j 2 * wig_amp / j < 1 for wig_amp 0.15
        const double damp = wig_amp / (2.0 * kPi * static_cast<double>(j * j));
        family.wig_grow[j - 1] = rng.uniform(-1.0, 1.0) * damp;
        family.wig_swell[j - 1] = rng.uniform(-1.0, 1.0) * damp;
        family.phase[j - 1] = rng.uniform(0.0, 2.0 * kPi);
    }
    return family;
}

}  // namespace shapespace
