#include "elsmhd/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elsmhd/norms.hpp"
#include "elsmhd/spectral.hpp"

namespace elsmhd {

std::string run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::blowup_detected: return "blowup-detected";
        case RunStatus::cfl_violation: return "cfl-violation";
    }
    return "?";
}

namespace {

struct AdvectionEval {
    SpectralVectorField out_plus;   // -P dealias div(W- x W+)
    SpectralVectorField out_minus;  // -P dealias div(W+ x W-)
    double speed_max = 0.0;         // max pointwise |W+-|
};

// Forward transform of one physical scalar product, normalized like
// to_spectral (without the vector-field wrapper).
void forward_scalar(const Grid& grid, std::vector<std::complex<double>>& buf) {
    detail::dft3(grid, buf.data(), -1);
    const double scale = 1.0 / static_cast<double>(grid.point_count());
    for (auto& z : buf) z *= scale;
}

// Both advection terms from the nine products T_ij = W-_i W+_j:
//   div(W- x W+)_j = sum_i i k_i T_ij,  div(W+ x W-)_j = sum_i i k_i T_ji.
AdvectionEval advection_terms(const ElsasserState& e, bool project = true) {
    const Grid& grid = e.w_plus.grid();
    const int n = grid.n();
    const std::size_t n3 = grid.point_count();

    const PhysicalVectorField wp = to_physical(e.w_plus);
    const PhysicalVectorField wm = to_physical(e.w_minus);

    AdvectionEval ev{SpectralVectorField(grid), SpectralVectorField(grid), 0.0};
    for (std::size_t x = 0; x < n3; ++x) {
        const double sp = wp.at(0, x) * wp.at(0, x) + wp.at(1, x) * wp.at(1, x) +
                          wp.at(2, x) * wp.at(2, x);
        const double sm = wm.at(0, x) * wm.at(0, x) + wm.at(1, x) * wm.at(1, x) +
                          wm.at(2, x) * wm.at(2, x);
        ev.speed_max = std::max(ev.speed_max, std::max(sp, sm));
    }
    ev.speed_max = std::sqrt(ev.speed_max);
    if (!std::isfinite(ev.speed_max))
        throw std::runtime_error("nonlinear_term: non-finite field (blowup)");

    std::array<std::vector<std::complex<double>>, 9> tensor;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto& t = tensor[3 * i + j];
            t.resize(n3);
            const double* a = wm.component(i);
            const double* b = wp.component(j);
            for (std::size_t x = 0; x < n3; ++x) t[x] = a[x] * b[x];
            forward_scalar(grid, t);
        }

    for (int ix = 0; ix < n; ++ix) {
        const int kxi = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const int kyi = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const int kzi = grid.wavenumber(iz);
                const std::size_t idx = grid.index(ix, iy, iz);
                const bool cut =
                    3 * std::abs(kxi) > n || 3 * std::abs(kyi) > n || 3 * std::abs(kzi) > n;
                if (cut) continue;
                const std::complex<double> ik[3] = {{0.0, double(kxi)},
                                                    {0.0, double(kyi)},
                                                    {0.0, double(kzi)}};
                for (int j = 0; j < 3; ++j) {
                    std::complex<double> div_mp = 0.0;  // sum_i i k_i T_ij
                    std::complex<double> div_pm = 0.0;  // sum_i i k_i T_ji
                    for (int i = 0; i < 3; ++i) {
                        div_mp += ik[i] * tensor[3 * i + j][idx];
                        div_pm += ik[i] * tensor[3 * j + i][idx];
                    }
                    ev.out_plus.at(j, idx) = -div_mp;
                    ev.out_minus.at(j, idx) = -div_pm;
                }
            }
        }
    }
    if (project) {
        ev.out_plus = leray_project(ev.out_plus);
        ev.out_minus = leray_project(ev.out_minus);
    }
    hermitian_symmetrize(ev.out_plus);
    hermitian_symmetrize(ev.out_minus);
    return ev;
}

// exp applied to the (u, B) eigenbasis; shared by diffusion_step and the
// integrating-factor combination in step().
void apply_diffusion_factors(SpectralVectorField& wp, SpectralVectorField& wm,
                             const FluidParams& params, double dt) {
    const Grid& grid = wp.grid();
    const int n = grid.n();
    const double inv_re = 1.0 / params.re;  // kappa + lambda
    const double inv_rm = 1.0 / params.rm;  // kappa - lambda
    for (int ix = 0; ix < n; ++ix) {
        const double kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const double kz = grid.wavenumber(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                const double eu = std::exp(-inv_re * k2 * dt);
                const double eb = std::exp(-inv_rm * k2 * dt);
                const std::size_t idx = grid.index(ix, iy, iz);
                for (int c = 0; c < 3; ++c) {
                    const std::complex<double> a = wp.at(c, idx);
                    const std::complex<double> b = wm.at(c, idx);
                    const std::complex<double> s = (a + b) * eu;
                    const std::complex<double> d = (a - b) * eb;
                    wp.at(c, idx) = 0.5 * (s + d);
                    wm.at(c, idx) = 0.5 * (s - d);
                }
            }
        }
    }
}

double monitored_norm_max(const MonitorRow& row) {
    return std::max(std::max(row.l3_wp, row.l3_wm), std::max(row.h12_wp, row.h12_wm));
}

}  // namespace

std::pair<SpectralVectorField, SpectralVectorField> nonlinear_term(const ElsasserState& e) {
    AdvectionEval ev = advection_terms(e);
    return {std::move(ev.out_plus), std::move(ev.out_minus)};
}

namespace detail {
std::pair<SpectralVectorField, SpectralVectorField> advection_dealiased(const ElsasserState& e) {
    AdvectionEval ev = advection_terms(e, /*project=*/false);
    return {std::move(ev.out_plus), std::move(ev.out_minus)};
}
}  // namespace detail

ElsasserState diffusion_step(const ElsasserState& e, const FluidParams& params, double dt) {
    if (dt < 0.0) throw std::invalid_argument("diffusion_step: dt must be >= 0");
    ElsasserState out = e;
    if (dt == 0.0) return out;
    apply_diffusion_factors(out.w_plus, out.w_minus, params, dt);
    out.time = e.time + dt;
    return out;
}

StepOutcome step(const ElsasserState& e, const FluidParams& params, const IntegratorConfig& cfg) {
    const Grid& grid = e.w_plus.grid();
    const double dt = cfg.dt;

    AdvectionEval k1 = advection_terms(e);
    if (k1.speed_max > 0.0 &&
        dt > cfg.cfl_safety * grid.spacing() / k1.speed_max)
        return {e, RunStatus::cfl_violation, k1.speed_max};

    // Predictor: E(dt) (y + dt k1)
    ElsasserState pred = e;
    {
        const std::size_t total = pred.w_plus.raw().size();
        for (std::size_t i = 0; i < total; ++i) {
            pred.w_plus.raw()[i] += dt * k1.out_plus.raw()[i];
            pred.w_minus.raw()[i] += dt * k1.out_minus.raw()[i];
        }
    }
    apply_diffusion_factors(pred.w_plus, pred.w_minus, params, dt);
    pred.time = e.time + dt;

    AdvectionEval k2 = advection_terms(pred);

    // y' = E(dt) y + dt/2 (E(dt) k1 + k2)
    StepOutcome out{e, RunStatus::completed, std::max(k1.speed_max, k2.speed_max)};
    apply_diffusion_factors(out.state.w_plus, out.state.w_minus, params, dt);
    apply_diffusion_factors(k1.out_plus, k1.out_minus, params, dt);
    {
        const std::size_t total = out.state.w_plus.raw().size();
        for (std::size_t i = 0; i < total; ++i) {
            out.state.w_plus.raw()[i] +=
                0.5 * dt * (k1.out_plus.raw()[i] + k2.out_plus.raw()[i]);
            out.state.w_minus.raw()[i] +=
                0.5 * dt * (k1.out_minus.raw()[i] + k2.out_minus.raw()[i]);
        }
    }
    out.state.time = e.time + dt;
    return out;
}

RunResult simulate(const ElsasserState& initial, const FluidParams& params,
                   const IntegratorConfig& cfg, const ConditionParams& cp) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrator.dt: must be > 0");
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("integrator.t_end: must be >= 0");
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
        throw std::invalid_argument("integrator.cfl_safety: must lie in (0, 1]");
    if (cfg.monitor_every < 1)
        throw std::invalid_argument("integrator.monitor_every: must be >= 1");

    // Normalize the state into the resolved, solenoidal band once.
    ElsasserState state{leray_project(dealias_two_thirds(initial.w_plus)),
                        leray_project(dealias_two_thirds(initial.w_minus)), 0.0};

    RunResult result{state, MonitorSeries{}, RunStatus::completed, 0};
    result.initial_conditions = evaluate_all(params, state, cp);
    result.series = record_monitors(state, params, std::move(result.series));

    if (monitored_norm_max(result.series.rows.back()) > cfg.blowup_threshold) {
        result.final = std::move(state);
        result.status = RunStatus::blowup_detected;
        return result;
    }

    long n_steps = std::llround(cfg.t_end / cfg.dt);
    if (static_cast<double>(n_steps) * cfg.dt < cfg.t_end - 0.5 * cfg.dt) ++n_steps;

    for (long i = 1; i <= n_steps; ++i) {
        StepOutcome out = [&] {
            try {
                return step(state, params, cfg);
            } catch (const std::runtime_error&) {
                return StepOutcome{state, RunStatus::blowup_detected, 0.0};
            }
        }();
        if (out.status != RunStatus::completed) {
            result.status = out.status;
            break;
        }
        state = std::move(out.state);
        state.time = static_cast<double>(i) * cfg.dt;  // avoid additive drift
        ++result.steps_taken;

        if (i % cfg.monitor_every == 0 || i == n_steps) {
            result.series = record_monitors(state, params, std::move(result.series));
            const MonitorRow& row = result.series.rows.back();
            if (!std::isfinite(monitored_norm_max(row)) ||
                monitored_norm_max(row) > cfg.blowup_threshold) {
                result.status = RunStatus::blowup_detected;
                break;
            }
        }
    }
    result.final = std::move(state);
    return result;
}

SpectralScalarField recover_pressure(const ElsasserState& e) {
    const Grid& grid = e.w_plus.grid();
    const int n = grid.n();
    const std::size_t n3 = grid.point_count();
    const PhysicalVectorField wp = to_physical(e.w_plus);
    const PhysicalVectorField wm = to_physical(e.w_minus);

    SpectralScalarField p(grid);
    std::vector<std::complex<double>> t(n3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double* a = wm.component(i);
            const double* b = wp.component(j);
            for (std::size_t x = 0; x < n3; ++x) t[x] = a[x] * b[x];
            forward_scalar(grid, t);
            // Delta P = -d_i d_j T_ij  =>  P_hat += -k_i k_j T_ij / |k|^2
            for (int ix = 0; ix < n; ++ix) {
                const int kxi = grid.wavenumber(ix);
                for (int iy = 0; iy < n; ++iy) {
                    const int kyi = grid.wavenumber(iy);
                    for (int iz = 0; iz < n; ++iz) {
                        const int kzi = grid.wavenumber(iz);
                        const double k2 =
                            double(kxi) * kxi + double(kyi) * kyi + double(kzi) * kzi;
                        if (k2 == 0.0) continue;  // gauge P_hat(0) = 0
                        if (3 * std::abs(kxi) > n || 3 * std::abs(kyi) > n ||
                            3 * std::abs(kzi) > n)
                            continue;
                        const double kk[3] = {double(kxi), double(kyi), double(kzi)};
                        const std::size_t idx = grid.index(ix, iy, iz);
                        p.at(idx) -= kk[i] * kk[j] * t[idx] / k2;
                    }
                }
            }
        }
    return p;
}

}  // namespace elsmhd
