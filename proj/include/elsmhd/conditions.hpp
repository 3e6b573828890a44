#pragma once

#include <array>
#include <string>

#include "elsmhd/elsasser.hpp"

namespace elsmhd {

struct ConditionParams {
    double epsilon0 = 0.01;
    double c0 = 1.0;
};

ConditionParams make_condition_params(double epsilon0, double c0);

/// The four smallness conditions. The L3 pair assumes lambda = 0; the H1/2
/// pair is general. Variant b of each theorem swaps the roles of W+ and W-.
enum class ConditionVariant { thm1_21, thm1_22, thm2_27, thm2_28 };

std::string condition_name(ConditionVariant v);

struct ConditionReport {
    std::string which;
    double lhs = 0.0;
    double epsilon0 = 0.0;
    bool holds = false;
    double lambda_kappa_ratio = 0.0;
    double implied_ratio_bound = 0.0;     // epsilon0^{1/4}
    bool lambda_zero_hypothesis_met = true;  // relevant for the L3 conditions
};

/// L3 condition from the norms alone:
///   lhs = kappa^-3 m^3 exp( C0 kappa^-3 p^3 )
/// with (m, p) = (||W-||_L3, ||W+||_L3) for variant 2.1 and swapped for 2.2.
ConditionReport evaluate_thm1_norms(double kappa, double lambda, double l3_wp, double l3_wm,
                                    const ConditionParams& cp, ConditionVariant variant);

/// H1/2 condition from the norms alone; r = lambda^2/kappa^2:
///   lhs = ( kappa^-2 m^2 + r (kappa^-2 p^2 + r) )
///         * exp( C0 ( kappa^-4 p^4 + r^2 ) )
/// with (m, p) = (||W-||, ||W+||)_{H1/2} for variant 2.7 and swapped for 2.8.
ConditionReport evaluate_thm2_norms(double kappa, double lambda, double h12_wp, double h12_wm,
                                    const ConditionParams& cp, ConditionVariant variant);

/// Evaluates the condition on actual initial data.
ConditionReport evaluate_thm1(const FluidParams& params, const ElsasserState& w0,
                              const ConditionParams& cp, ConditionVariant variant);
ConditionReport evaluate_thm2(const FluidParams& params, const ElsasserState& w0,
                              const ConditionParams& cp, ConditionVariant variant);

/// All four conditions on the same data.
std::array<ConditionReport, 4> evaluate_all(const FluidParams& params, const ElsasserState& w0,
                                            const ConditionParams& cp);

}  // namespace elsmhd
