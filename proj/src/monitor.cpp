#include "elsmhd/monitor.hpp"

#include <cmath>
#include <stdexcept>

#include "elsmhd/norms.hpp"
#include "elsmhd/spectral.hpp"

namespace elsmhd {

MonitorSeries record_monitors(const ElsasserState& e, const FluidParams& params,
                              MonitorSeries prev) {
    const bool first = prev.rows.empty();
    if (first) {
        if (e.time != 0.0)
            throw std::invalid_argument("record_monitors: series must start at t = 0");
        prev.params = params;
    } else if (!(e.time > prev.rows.back().t)) {
        throw std::invalid_argument("record_monitors: time must increase strictly");
    }

    const PhysicalVectorField wp_phys = to_physical(e.w_plus);
    const PhysicalVectorField wm_phys = to_physical(e.w_minus);
    const PrimitiveState prim = from_elsasser(e);

    MonitorRow row;
    row.t = e.time;
    row.l3_wp = lp_norm(wp_phys, 3.0);
    row.l3_wm = lp_norm(wm_phys, 3.0);
    row.h12_wp = hs_norm(e.w_plus, 0.5);
    row.h12_wm = hs_norm(e.w_minus, 0.5);
    const double l2_u = hs_norm(prim.u, 0.0);
    const double l2_b = hs_norm(prim.b, 0.0);
    row.energy_u = 0.5 * l2_u * l2_u;
    row.energy_b = 0.5 * l2_b * l2_b;
    row.div_max = std::max(divergence_max(e.w_plus), divergence_max(e.w_minus));

    // Instantaneous integrands.
    const double h32_wp = hs_norm(e.w_plus, 1.5);
    const double h32_wm = hs_norm(e.w_minus, 1.5);
    const double l9_wp = lp_norm(wp_phys, 9.0);
    const double h1_u = hs_norm(prim.u, 1.0);
    const double h1_b = hs_norm(prim.b, 1.0);

    MonitorSeries::Accumulator acc = prev.accum;
    const double h32_wp_sq = h32_wp * h32_wp;
    const double h32_wm_sq = h32_wm * h32_wm;
    const double l9_wp_cubed = l9_wp * l9_wp * l9_wp;
    const double h1_u_sq = h1_u * h1_u;
    const double h1_b_sq = h1_b * h1_b;

    if (first) {
        row.h32_wp_sq_int = row.h32_wm_sq_int = 0.0;
        row.l9_wp_cubed_int = 0.0;
        row.h1_u_sq_int = row.h1_b_sq_int = 0.0;
    } else {
        const MonitorRow& last = prev.rows.back();
        const double dt = e.time - last.t;
        row.h32_wp_sq_int = last.h32_wp_sq_int + 0.5 * (acc.h32_wp_sq + h32_wp_sq) * dt;
        row.h32_wm_sq_int = last.h32_wm_sq_int + 0.5 * (acc.h32_wm_sq + h32_wm_sq) * dt;
        row.l9_wp_cubed_int = last.l9_wp_cubed_int + 0.5 * (acc.l9_wp_cubed + l9_wp_cubed) * dt;
        row.h1_u_sq_int = last.h1_u_sq_int + 0.5 * (acc.h1_u_sq + h1_u_sq) * dt;
        row.h1_b_sq_int = last.h1_b_sq_int + 0.5 * (acc.h1_b_sq + h1_b_sq) * dt;
    }
    acc.h32_wp_sq = h32_wp_sq;
    acc.h32_wm_sq = h32_wm_sq;
    acc.l9_wp_cubed = l9_wp_cubed;
    acc.h1_u_sq = h1_u_sq;
    acc.h1_b_sq = h1_b_sq;

    const double kappa = params.kappa;
    acc.max_l3_wm = std::max(acc.max_l3_wm, row.l3_wm);
    acc.max_h12_wm_sq_scaled =
        std::max(acc.max_h12_wm_sq_scaled, row.h12_wm * row.h12_wm / (kappa * kappa));

    row.a_minus_l3 = std::pow(acc.max_l3_wm, 3.0) / std::pow(kappa, 3.0);
    row.a_minus_h12 = acc.max_h12_wm_sq_scaled + row.h32_wm_sq_int / kappa;

    prev.accum = acc;
    prev.rows.push_back(row);
    return prev;
}

}  // namespace elsmhd
