#pragma once

#include <utility>

#include "elsmhd/conditions.hpp"
#include "elsmhd/elsasser.hpp"
#include "elsmhd/monitor.hpp"

namespace elsmhd {

struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 0.1;
    double cfl_safety = 0.5;
    double blowup_threshold = 1e6;
    int monitor_every = 10;
};

enum class RunStatus { completed, blowup_detected, cfl_violation };

std::string run_status_name(RunStatus s);

struct RunResult {
    ElsasserState final;
    MonitorSeries series;
    RunStatus status = RunStatus::completed;
    long steps_taken = 0;
    std::array<ConditionReport, 4> initial_conditions{};
};

/// Leray-projected, dealiased spectral forms of -(W-.grad)W+ and
/// -(W+.grad)W-, computed pseudo-spectrally in divergence form
/// (div W-+ = 0 makes the two forms equal). Throws on non-finite
/// intermediates.
std::pair<SpectralVectorField, SpectralVectorField> nonlinear_term(const ElsasserState& e);

/// Exact per-mode solve of the coupled diffusion. The 2x2 system with matrix
/// [[kappa, lambda], [lambda, kappa]] diagonalizes in the (u, B) basis with
/// eigenvalues kappa +- lambda = 1/Re, 1/Rm; each eigencomponent is scaled by
/// exp(-eigenvalue |k|^2 dt).
ElsasserState diffusion_step(const ElsasserState& e, const FluidParams& params, double dt);

struct StepOutcome {
    ElsasserState state;
    RunStatus status = RunStatus::completed;
    double advective_speed = 0.0;  // max pointwise |W+-| seen this step
};

/// One exponential-integrating-factor Heun step: the diffusion factors are
/// applied exactly; the nonlinearity advances by the two-stage trapezoidal
/// rule. The advective CFL bound dt <= cfl_safety (2pi/n)/max|W| is checked
/// from the physical fields the nonlinearity already produces.
StepOutcome step(const ElsasserState& e, const FluidParams& params,
                 const IntegratorConfig& cfg);

/// Steps from `initial` to cfg.t_end, recording a monitor row every
/// monitor_every steps (plus t = 0 and the final state) and stopping early on
/// blowup or CFL violation. All four smallness conditions are evaluated at
/// t = 0 and stored on the result.
RunResult simulate(const ElsasserState& initial, const FluidParams& params,
                   const IntegratorConfig& cfg, const ConditionParams& cp);

/// Diagnostic pressure recovery: solves
///   Delta P = -sum_ij d_i d_j (W-_i W+_j)
/// per mode with the product formed pseudo-spectrally and dealiased;
/// gauge P_hat(0) = 0.
SpectralScalarField recover_pressure(const ElsasserState& e);

namespace detail {
/// Dealiased advection pair before Leray projection:
/// (-(W-.grad)W+, -(W+.grad)W-). Exposed for oracle comparisons.
std::pair<SpectralVectorField, SpectralVectorField> advection_dealiased(const ElsasserState& e);
}  // namespace detail

}  // namespace elsmhd
