#include "shapespace/optimizer.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shapespace {

namespace {

constexpr double kArmijoSlope = 1e-4;    // sufficient-decrease coefficient
constexpr double kStepFloor = 1e-14;     // give up below this * initial_step
constexpr double kChordCollapse = 1e-8;  // reject slices with min chord below
                                         // this * mean chord

// True when some chord of the slice has collapsed relative to the mean,
// which would make the frame (and the energy) meaningless.
bool slice_degenerate(const SampledCurve& slice) {
    const std::size_t n = slice.size();
    const std::size_t n_edges = slice.closed ? n : n - 1;
    double total = 0.0;
    double shortest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_edges; ++i) {
        const double l = norm(slice.points[(i + 1) % n] - slice.points[i]);
        total += l;
        if (l < shortest) shortest = l;
    }
    const double mean = total / static_cast<double>(n_edges);
    return !(shortest > kChordCollapse * mean);
}

// Energy of a candidate path, with failures folded into a rejection flag so
// the line search can back off instead of aborting.
bool guarded_energy(const CurvePath& path, const MetricChoice& choice,
                    double& energy) {
    for (std::size_t k = 1; k + 1 < path.slices.size(); ++k) {
        if (slice_degenerate(path.slices[k])) return false;
    }
    try {
        energy = path_energy(path, choice);
    } catch (const std::domain_error&) {
        return false;
    }
    return std::isfinite(energy);
}

}  // namespace

void validate_config(const OptimizerConfig& cfg) {
    if (cfg.max_iters == 0) {
        throw std::invalid_argument("optimizer needs max_iters >= 1");
    }
    if (!(cfg.initial_step > 0.0) || !std::isfinite(cfg.initial_step)) {
        throw std::invalid_argument("optimizer initial_step must be positive");
    }
    if (!(cfg.backtrack > 0.0) || !(cfg.backtrack < 1.0)) {
        throw std::invalid_argument(
            "optimizer backtrack factor must lie strictly between 0 and 1");
    }
    if (!(cfg.grad_tol >= 0.0) || !std::isfinite(cfg.grad_tol)) {
        throw std::invalid_argument(
            "optimizer gradient tolerance must be non-negative");
    }
}

std::string optimizer_status_name(OptimizerStatus status) {
    switch (status) {
        case OptimizerStatus::Converged: return "converged";
        case OptimizerStatus::MaxIterations: return "max_iterations";
        case OptimizerStatus::StepUnderflow: return "step_underflow";
        case OptimizerStatus::AbortedNonFinite: return "aborted_non_finite";
    }
    throw std::invalid_argument("unknown optimizer status enumerator");
}

CurvePath init_path(const SampledCurve& f0, const SampledCurve& f1,
                    std::size_t k) {
    validate_curve(f0);
    validate_curve(f1);
    if (k < 2) {
        throw std::invalid_argument("path needs at least two time steps");
    }
    if (f0.size() != f1.size()) {
        throw std::invalid_argument(
            "endpoint curves have " + std::to_string(f0.size()) + " and " +
            std::to_string(f1.size()) + " samples; they must match");
    }
    if (f0.closed != f1.closed) {
        throw std::invalid_argument(
            "endpoint curves disagree about closedness");
    }
    CurvePath path;
    path.slices.reserve(k + 1);
    path.slices.push_back(f0);
    for (std::size_t j = 1; j < k; ++j) {
        const double t =
            static_cast<double>(j) / static_cast<double>(k);
        SampledCurve slice;
        slice.closed = f0.closed;
        slice.points.resize(f0.size());
        for (std::size_t i = 0; i < f0.size(); ++i) {
            slice.points[i] =
                f0.points[i] + (f1.points[i] - f0.points[i]) * t;
        }
        path.slices.push_back(std::move(slice));
    }
    path.slices.push_back(f1);
    return path;
}

CurvePath reparam_slices(const CurvePath& path) {
    validate_path(path);
    CurvePath out = path;
    for (std::size_t k = 1; k + 1 < out.slices.size(); ++k) {
        out.slices[k] = to_arclength(out.slices[k]);
    }
    return out;
}

std::pair<CurvePath, OptimizerTrace> straighten(const CurvePath& path,
                                                const MetricChoice& choice,
                                                const OptimizerConfig& cfg) {
    validate_config(cfg);
    validate_path(path);

    CurvePath current = path;
    OptimizerTrace trace;
    double energy = path_energy(current, choice);
    trace.initial_energy = energy;
    if (!std::isfinite(energy)) {
        trace.status = OptimizerStatus::AbortedNonFinite;
        trace.message = "initial path energy is not finite";
        trace.final_energy = energy;
        return {current, trace};
    }

    const std::size_t steps = current.time_steps();
    const std::size_t n = current.slices.front().size();
    double last_step = cfg.initial_step;
    trace.status = OptimizerStatus::MaxIterations;
    trace.message = "iteration budget exhausted";

    for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
        bool reparam_event = false;
        if (cfg.reparam_every > 0 && iter % cfg.reparam_every == 0) {
            current = reparam_slices(current);
            energy = path_energy(current, choice);
            reparam_event = true;
            if (!std::isfinite(energy)) {
                trace.status = OptimizerStatus::AbortedNonFinite;
                trace.message = "energy lost finiteness after reprojection";
                break;
            }
        }

        std::vector<TangentField> grad =
            path_energy_gradient(current, choice);
        double grad_sq = 0.0;
        for (std::size_t k = 1; k < steps; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                grad_sq += norm2(grad[k][i]);
            }
        }
        const double grad_norm = std::sqrt(grad_sq);
        if (!std::isfinite(grad_norm)) {
            trace.status = OptimizerStatus::AbortedNonFinite;
            trace.message = "energy gradient is not finite";
            trace.entries.push_back(
                {iter, energy, grad_norm, 0.0, reparam_event});
            break;
        }
        if (grad_norm < cfg.grad_tol) {
            trace.status = OptimizerStatus::Converged;
            trace.message = "gradient norm below tolerance";
            trace.entries.push_back(
                {iter, energy, grad_norm, 0.0, reparam_event});
            break;
        }

        // Backtracking line search over the interior slices; the step may
        // regrow by at most a factor of two between iterations.
        double step = cfg.initial_step < 2.0 * last_step
                          ? cfg.initial_step
                          : 2.0 * last_step;
        bool accepted = false;
        while (step >= kStepFloor * cfg.initial_step) {
            CurvePath candidate = current;
            for (std::size_t k = 1; k < steps; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    candidate.slices[k].points[i] -= grad[k][i] * step;
                }
            }
            double cand_energy = 0.0;
            if (guarded_energy(candidate, choice, cand_energy) &&
                cand_energy <=
                    energy - kArmijoSlope * step * grad_sq) {
                current = std::move(candidate);
                energy = cand_energy;
                last_step = step;
                accepted = true;
                break;
            }
            step *= cfg.backtrack;
        }

        if (!accepted) {
            trace.status = OptimizerStatus::StepUnderflow;
            trace.message = "no acceptable step above the underflow floor";
            trace.entries.push_back(
                {iter, energy, grad_norm, 0.0, reparam_event});
            break;
        }
        trace.entries.push_back({iter, energy, grad_norm, step, reparam_event});
    }

    trace.final_energy = energy;
    return {current, trace};
}

}  // namespace shapespace
