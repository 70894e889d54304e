#pragma once

#include <cstdint>
#include <cstddef>
#include <random>
#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"
#include "shapespace/paths.hpp"

namespace shapespace {

// ============================================================================
// Deterministic test inputs: reference shapes, a reproducible random number
// generator, and the random families used by the verification suites.
// The engine is std::mt19937_64 (its output sequence is fully specified by
// the standard), but the uniform/normal transforms are written out here
// because std::uniform_real_distribution and friends are not guaranteed to
// produce identical streams across library implementations.
// ============================================================================

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double u01();                        // uniform in [0, 1)
    double uniform(double lo, double hi);
    double normal();                     // standard normal (Box-Muller)
    int sign();                          // -1 or +1

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

SampledCurve circle(std::size_t n, double radius = 1.0);
SampledCurve ellipse(std::size_t n, double ax = 2.0, double ay = 1.0);

// Low-frequency random field: per-coordinate trigonometric series up to mode
// `modes`, coefficients drawn from rng and damped by 1/j^2.
TangentField fourier_field(std::size_t n, Rng& rng, int modes = 3,
                           bool normal_draws = true);

// Random closed-curve reparameterization gamma(t) = t + c + sum of damped
// sine modes, with amplitudes small enough that gamma stays monotone.
DiffeoGrid random_diffeo(std::size_t n, Rng& rng, double amp = 0.45,
                         int modes = 4, bool with_offset = true);

// Resolution-consistent random path family: the same low-frequency
// coefficients realized at any (N, K). Slices inflate a circle radially and
// add two bounded fields, so every slice stays uniformly far from degenerate
// and the path has genuinely normal motion.
struct PathFamily {
    std::vector<std::vector<double>> grow;   // modes x 4 coefficients
    std::vector<std::vector<double>> swell;  // modes x 4 coefficients

    CurvePath realize(std::size_t n, std::size_t k) const;
};

PathFamily random_path_family(Rng& rng, int modes = 3);

// Resolution-consistent random gauge path: a time-growing base shift plus
// damped sine wiggles whose amplitudes vary smoothly in time.
struct GaugeFamily {
    double shift;
    std::vector<double> wig_grow, wig_swell, phase;

    PathGauge realize(std::size_t n, std::size_t k) const;
};

GaugeFamily random_gauge_family(Rng& rng, int modes = 3,
                                double shift_amp = 0.08,
                                double wig_amp = 0.15);

}  // namespace shapespace
