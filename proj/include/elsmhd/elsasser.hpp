#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "elsmhd/field.hpp"

namespace elsmhd {

/// Physical parameter record carried by every run.
///
/// kappa = 1/(2Re) + 1/(2Rm) and lambda = 1/(2Re) - 1/(2Rm), so
/// kappa + lambda = 1/Re and kappa - lambda = 1/Rm exactly, and
/// kappa > |lambda| follows from Re, Rm > 0.
struct FluidParams {
    double re = 1.0;
    double rm = 1.0;
    double s_coupling = 1.0;
    double kappa = 1.0;
    double lambda = 0.0;
};

FluidParams make_params(double re, double rm, double s_coupling);

/// (u, B) in spectral form. The magnetic field is stored S-absorbed
/// (B <- sqrt(S) B happens once at ingestion, see absorb_s).
struct PrimitiveState {
    SpectralVectorField u;
    SpectralVectorField b;
    double time = 0.0;
};

/// (W+, W-) in spectral form; W+- = u +- B.
struct ElsasserState {
    SpectralVectorField w_plus;
    SpectralVectorField w_minus;
    double time = 0.0;
};

/// Applies the one-time normalization B <- sqrt(S) B.
PrimitiveState absorb_s(PrimitiveState p, const FluidParams& params);

/// W+- = u +- B componentwise in spectral space. Expects S-absorption to
/// have already happened. Grid mismatch raises a shape error.
ElsasserState to_elsasser(const PrimitiveState& p, const FluidParams& params);

/// u = (W+ + W-)/2, B = (W+ - W-)/2.
PrimitiveState from_elsasser(const ElsasserState& e);

/// The change of variables V+-(x,t) = kappa^-1 W+-(x, kappa^-1 t): field
/// values divided by kappa, the time coordinate multiplied by kappa. The
/// returned parameters have kappa' = 1 and lambda' = lambda/kappa, under
/// which the rescaled system is again the Elsasser system.
std::pair<ElsasserState, FluidParams> rescale_to_v(const ElsasserState& e,
                                                   const FluidParams& params);

enum class InitialKind { taylor_green, single_mode, random_solenoidal };

struct InitialDataSpec {
    InitialKind kind = InitialKind::taylor_green;
    double amplitude = 1.0;
    std::uint64_t seed = 1;
    int k0 = 4;  // spectrum peak (random kind) / mode index (single-mode)
    std::optional<std::pair<std::string, double>> target_norm;  // (name, value)
};

/// Builds divergence-free, mean-zero initial data.
///
/// taylor-green: u = a (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0), B = 0.
/// single-mode:  u = a cos(k0 x1) e2, B = 0.
/// random-solenoidal: u and B drawn independently per mode with radial
///   spectrum E(k) ~ k^4 exp(-2 (k/k0)^2), Leray-projected; deterministic
///   for a fixed seed.
/// target_norm, when set, rescales both fields so the named norm of u
/// (one of l2, l3, h12, h1) hits the requested value.
PrimitiveState generate_initial(const InitialDataSpec& spec, const Grid& grid);

}  // namespace elsmhd
