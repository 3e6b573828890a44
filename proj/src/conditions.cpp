#include "elsmhd/conditions.hpp"

#include <cmath>
#include <stdexcept>

#include "elsmhd/norms.hpp"
#include "elsmhd/spectral.hpp"

namespace elsmhd {

ConditionParams make_condition_params(double epsilon0, double c0) {
    if (!(epsilon0 > 0.0 && epsilon0 < 0.5))
        throw std::invalid_argument("conditions.epsilon0: must lie in (0, 0.5)");
    if (!(c0 > 0.0)) throw std::invalid_argument("conditions.c0: must be > 0");
    return {epsilon0, c0};
}

std::string condition_name(ConditionVariant v) {
    switch (v) {
        case ConditionVariant::thm1_21: return "thm1-2.1";
        case ConditionVariant::thm1_22: return "thm1-2.2";
        case ConditionVariant::thm2_27: return "thm2-2.7";
        case ConditionVariant::thm2_28: return "thm2-2.8";
    }
    return "?";
}

namespace {

ConditionReport base_report(double kappa, double lambda, const ConditionParams& cp,
                            ConditionVariant variant) {
    ConditionReport r;
    r.which = condition_name(variant);
    r.epsilon0 = cp.epsilon0;
    r.lambda_kappa_ratio = std::abs(lambda) / kappa;
    r.implied_ratio_bound = std::pow(cp.epsilon0, 0.25);
    return r;
}

}  // namespace

ConditionReport evaluate_thm1_norms(double kappa, double lambda, double l3_wp, double l3_wm,
                                    const ConditionParams& cp, ConditionVariant variant) {
    if (variant == ConditionVariant::thm1_22)
        return [&] {
            ConditionReport r =
                evaluate_thm1_norms(kappa, lambda, l3_wm, l3_wp, cp, ConditionVariant::thm1_21);
            r.which = condition_name(variant);
            return r;
        }();
    ConditionReport r = base_report(kappa, lambda, cp, variant);
    r.lambda_zero_hypothesis_met = lambda == 0.0;
    const double k3 = kappa * kappa * kappa;
    const double m3 = l3_wm * l3_wm * l3_wm;
    const double p3 = l3_wp * l3_wp * l3_wp;
    r.lhs = m3 / k3 * std::exp(cp.c0 * p3 / k3);
    r.holds = r.lhs < cp.epsilon0;
    return r;
}

ConditionReport evaluate_thm2_norms(double kappa, double lambda, double h12_wp, double h12_wm,
                                    const ConditionParams& cp, ConditionVariant variant) {
    if (variant == ConditionVariant::thm2_28)
        return [&] {
            ConditionReport r =
                evaluate_thm2_norms(kappa, lambda, h12_wm, h12_wp, cp, ConditionVariant::thm2_27);
            r.which = condition_name(variant);
            return r;
        }();
    ConditionReport r = base_report(kappa, lambda, cp, variant);
    const double k2 = kappa * kappa;
    const double ratio2 = (lambda * lambda) / k2;
    const double m2 = h12_wm * h12_wm;
    const double p2 = h12_wp * h12_wp;
    const double p4 = p2 * p2;
    r.lhs = (m2 / k2 + ratio2 * (p2 / k2 + ratio2)) *
            std::exp(cp.c0 * (p4 / (k2 * k2) + ratio2 * ratio2));
    r.holds = r.lhs < cp.epsilon0;
    return r;
}

ConditionReport evaluate_thm1(const FluidParams& params, const ElsasserState& w0,
                              const ConditionParams& cp, ConditionVariant variant) {
    if (variant != ConditionVariant::thm1_21 && variant != ConditionVariant::thm1_22)
        throw std::invalid_argument("evaluate_thm1: not an L3 variant");
    const double l3_wp = lp_norm(to_physical(w0.w_plus), 3.0);
    const double l3_wm = lp_norm(to_physical(w0.w_minus), 3.0);
    return evaluate_thm1_norms(params.kappa, params.lambda, l3_wp, l3_wm, cp, variant);
}

ConditionReport evaluate_thm2(const FluidParams& params, const ElsasserState& w0,
                              const ConditionParams& cp, ConditionVariant variant) {
    if (variant != ConditionVariant::thm2_27 && variant != ConditionVariant::thm2_28)
        throw std::invalid_argument("evaluate_thm2: not an H1/2 variant");
    const double h12_wp = hs_norm(w0.w_plus, 0.5);
    const double h12_wm = hs_norm(w0.w_minus, 0.5);
    return evaluate_thm2_norms(params.kappa, params.lambda, h12_wp, h12_wm, cp, variant);
}

std::array<ConditionReport, 4> evaluate_all(const FluidParams& params, const ElsasserState& w0,
                                            const ConditionParams& cp) {
    const double l3_wp = lp_norm(to_physical(w0.w_plus), 3.0);
    const double l3_wm = lp_norm(to_physical(w0.w_minus), 3.0);
    const double h12_wp = hs_norm(w0.w_plus, 0.5);
    const double h12_wm = hs_norm(w0.w_minus, 0.5);
    return {
        evaluate_thm1_norms(params.kappa, params.lambda, l3_wp, l3_wm, cp,
                            ConditionVariant::thm1_21),
        evaluate_thm1_norms(params.kappa, params.lambda, l3_wp, l3_wm, cp,
                            ConditionVariant::thm1_22),
        evaluate_thm2_norms(params.kappa, params.lambda, h12_wp, h12_wm, cp,
                            ConditionVariant::thm2_27),
        evaluate_thm2_norms(params.kappa, params.lambda, h12_wp, h12_wm, cp,
                            ConditionVariant::thm2_28),
    };
}

}  // namespace elsmhd
