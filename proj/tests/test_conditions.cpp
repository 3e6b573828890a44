#include <cmath>

#include "doctest.h"
#include "elsmhd/conditions.hpp"
#include "test_helpers.hpp"

using namespace elsmhd;
using namespace elsmhd::test;

TEST_SUITE("conditions") {

TEST_CASE("theorem-1 condition") {
    ConditionParams cp = make_condition_params(0.01, 1.0);

    SUBCASE("W-_0 = 0 holds for every epsilon0") {
        ConditionReport r =
            evaluate_thm1_norms(1.0, 0.0, 5.0, 0.0, cp, ConditionVariant::thm1_21);
        CHECK(r.lhs == 0.0);
        CHECK(r.holds);
        CHECK(r.lambda_zero_hypothesis_met);
    }
    SUBCASE("formula arithmetic") {
        // kappa=1, ||W-||^3 = 0.001, ||W+||^3 = 1, C0=1 -> lhs = 0.001 e
        const double l3_wm = std::cbrt(0.001);
        ConditionReport r =
            evaluate_thm1_norms(1.0, 0.0, 1.0, l3_wm, cp, ConditionVariant::thm1_21);
        CHECK(r.lhs == doctest::Approx(0.001 * std::exp(1.0)).epsilon(1e-12));
        CHECK(r.holds);  // 0.00272 < 0.01
    }
    SUBCASE("variant 2.2 swaps the roles exactly") {
        ConditionReport a = evaluate_thm1_norms(2.0, 0.0, 1.3, 0.4, cp, ConditionVariant::thm1_21);
        ConditionReport b = evaluate_thm1_norms(2.0, 0.0, 0.4, 1.3, cp, ConditionVariant::thm1_22);
        CHECK(a.lhs == b.lhs);
        CHECK(a.holds == b.holds);
    }
    SUBCASE("nonzero lambda is flagged, not rejected") {
        ConditionReport r =
            evaluate_thm1_norms(1.0, 0.2, 1.0, 0.1, cp, ConditionVariant::thm1_21);
        CHECK_FALSE(r.lambda_zero_hypothesis_met);
    }
}

TEST_CASE("theorem-2 condition") {
    SUBCASE("zero data with lambda = 0") {
        ConditionParams cp = make_condition_params(0.05, 1.0);
        ConditionReport r =
            evaluate_thm2_norms(1.0, 0.0, 1.0, 0.0, cp, ConditionVariant::thm2_27);
        CHECK(r.lhs == 0.0);
        CHECK(r.holds);
    }
    SUBCASE("formula arithmetic") {
        // kappa=1, lambda=0.1, ||W+||^2_{H1/2}=1, ||W-||^2=0.01, C0=1, eps0=0.05
        ConditionParams cp = make_condition_params(0.05, 1.0);
        ConditionReport r = evaluate_thm2_norms(1.0, 0.1, 1.0, 0.1, cp,
                                                ConditionVariant::thm2_27);
        CHECK(r.lhs == doctest::Approx(0.05464292877169844).epsilon(1e-12));
        CHECK_FALSE(r.holds);
    }
    SUBCASE("swap symmetry is exact") {
        ConditionParams cp = make_condition_params(0.01, 2.0);
        ConditionReport a =
            evaluate_thm2_norms(0.5, 0.02, 1.7, 0.3, cp, ConditionVariant::thm2_27);
        ConditionReport b =
            evaluate_thm2_norms(0.5, 0.02, 0.3, 1.7, cp, ConditionVariant::thm2_28);
        CHECK(a.lhs == b.lhs);
    }
}

TEST_CASE("holds implies |lambda|/kappa <= epsilon0^{1/4} on a parameter grid") {
    ConditionParams cp = make_condition_params(0.01, 1.0);
    int holds_seen = 0;
    for (int ip = 0; ip < 10; ++ip)
        for (int im = 0; im < 10; ++im)
            for (int ir = 0; ir < 10; ++ir) {
                const double h12_wp = 0.05 * (ip + 1);
                const double h12_wm = 0.02 * im;
                const double ratio = 0.045 * ir;  // spans both sides of 0.01^{1/4} ~ 0.316
                const double kappa = 0.8;
                const double lambda = ratio * kappa;
                for (ConditionVariant v : {ConditionVariant::thm2_27, ConditionVariant::thm2_28}) {
                    ConditionReport r = evaluate_thm2_norms(kappa, lambda, h12_wp, h12_wm, cp, v);
                    if (r.holds) {
                        ++holds_seen;
                        CHECK(r.lambda_kappa_ratio <= r.implied_ratio_bound);
                    }
                }
            }
    CHECK(holds_seen > 0);  // the grid must actually exercise the implication
}

TEST_CASE("lhs monotonicity") {
    ConditionParams cp = make_condition_params(0.01, 1.0);

    SUBCASE("thm1: increasing in norms and C0, decreasing in kappa") {
        double prev = -1.0;
        for (double wm : {0.1, 0.2, 0.4}) {
            const double lhs =
                evaluate_thm1_norms(1.0, 0.0, 1.0, wm, cp, ConditionVariant::thm1_21).lhs;
            CHECK(lhs > prev);
            prev = lhs;
        }
        prev = -1.0;
        for (double wp : {0.5, 1.0, 2.0}) {
            const double lhs =
                evaluate_thm1_norms(1.0, 0.0, wp, 0.3, cp, ConditionVariant::thm1_21).lhs;
            CHECK(lhs > prev);
            prev = lhs;
        }
        prev = 1e300;
        for (double kappa : {0.5, 1.0, 2.0}) {
            const double lhs =
                evaluate_thm1_norms(kappa, 0.0, 1.0, 0.3, cp, ConditionVariant::thm1_21).lhs;
            CHECK(lhs < prev);
            prev = lhs;
        }
        const double c0_small =
            evaluate_thm1_norms(1.0, 0.0, 1.0, 0.3, make_condition_params(0.01, 0.5),
                                ConditionVariant::thm1_21)
                .lhs;
        const double c0_large =
            evaluate_thm1_norms(1.0, 0.0, 1.0, 0.3, make_condition_params(0.01, 2.0),
                                ConditionVariant::thm1_21)
                .lhs;
        CHECK(c0_large > c0_small);
    }
    SUBCASE("thm2: increasing in |lambda|/kappa at fixed kappa") {
        double prev = -1.0;
        for (double ratio : {0.0, 0.05, 0.1, 0.2}) {
            const double lhs = evaluate_thm2_norms(1.0, ratio, 1.0, 0.1, cp,
                                                   ConditionVariant::thm2_27)
                                   .lhs;
            CHECK(lhs > prev);
            prev = lhs;
        }
    }
}

TEST_CASE("condition params validation") {
    CHECK_THROWS_AS((void)make_condition_params(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_condition_params(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_condition_params(0.01, 0.0), std::invalid_argument);
}

}  // TEST_SUITE
