#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shapespace/paths.hpp"

namespace shapespace {

// ============================================================================
// Path straightening: gradient descent on the discretized path energy over
// the interior slices, endpoints held fixed, with Armijo backtracking and
// optional periodic re-projection of interior slices onto the arc-length
// section.
// ============================================================================

struct OptimizerConfig {
    std::size_t max_iters = 200;
    double initial_step = 1.0;
    double backtrack = 0.5;      // step shrink factor in (0,1)
    double grad_tol = 1e-8;      // stop when the gradient norm drops below
    std::size_t reparam_every = 0;  // re-project every n iterations; 0 = never
};

void validate_config(const OptimizerConfig& cfg);

enum class OptimizerStatus {
    Converged,        // gradient norm below tolerance
    MaxIterations,    // iteration budget exhausted
    StepUnderflow,    // no acceptable step found; treated as converged
    AbortedNonFinite  // energy became non-finite or a slice degenerated
};

std::string optimizer_status_name(OptimizerStatus status);

struct TraceEntry {
    std::size_t iter;
    double energy;     // accepted energy after this iteration
    double grad_norm;
    double step;       // accepted step size (0 when none accepted)
    bool reparam_event;
};

struct OptimizerTrace {
    std::vector<TraceEntry> entries;
    OptimizerStatus status = OptimizerStatus::MaxIterations;
    std::string message;
    double initial_energy = 0.0;
    double final_energy = 0.0;
};

// Pointwise linear interpolation between two curves of equal size and
// closedness; slice k = (1 - k/K) F0 + (k/K) F1, endpoints reproduced exactly.
CurvePath init_path(const SampledCurve& f0, const SampledCurve& f1,
                    std::size_t k);

// Replaces every interior slice by its arc-length reparameterization.
CurvePath reparam_slices(const CurvePath& path);

// Gradient descent on path_energy(., choice) over interior slices. Accepted
// steps never increase the energy (Armijo rule); candidate slices whose
// minimal chord collapses below 1e-8 x mean chord are rejected during the
// line search. Endpoint slices of the result are bit-identical to the input.
std::pair<CurvePath, OptimizerTrace> straighten(const CurvePath& path,
                                                const MetricChoice& choice,
                                                const OptimizerConfig& cfg);

}  // namespace shapespace
