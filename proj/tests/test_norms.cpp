#include <cmath>

#include "doctest.h"
#include "elsmhd/norms.hpp"
#include "elsmhd/spectral.hpp"
#include "test_helpers.hpp"

using namespace elsmhd;
using namespace elsmhd::test;

TEST_SUITE("norms") {

TEST_CASE("lp_norm fixtures") {
    Grid grid(16);

    SUBCASE("constant field of magnitude 1 at p = 3") {
        PhysicalVectorField f(grid);
        for (std::size_t i = 0; i < grid.point_count(); ++i) f.at(0, i) = 1.0;
        CHECK(lp_norm(f, 3.0) == doctest::Approx(two_pi).epsilon(1e-13));
    }
    SUBCASE("cos(x1) e2 at p = 2") {
        PhysicalVectorField f(grid);
        for (int i = 0; i < grid.n(); ++i)
            for (int j = 0; j < grid.n(); ++j)
                for (int l = 0; l < grid.n(); ++l)
                    f.at(1, grid.index(i, j, l)) = std::cos(two_pi * i / grid.n());
        const double expected = std::pow(two_pi, 1.5) / std::sqrt(2.0);
        CHECK(lp_norm(f, 2.0) == doctest::Approx(expected).epsilon(1e-13));
    }
    SUBCASE("p below 1 is rejected") {
        PhysicalVectorField f(grid);
        CHECK_THROWS_AS((void)lp_norm(f, 0.5), std::invalid_argument);
    }
}

TEST_CASE("hs_norm fixtures") {
    Grid grid(16);

    SUBCASE("cos(x1) e2 at s = 1/2") {
        SpectralVectorField g(grid);
        g.at(1, 1, 0, 0) = {0.5, 0.0};
        g.at(1, grid.n() - 1, 0, 0) = {0.5, 0.0};
        const double expected = std::sqrt(std::pow(two_pi, 3) / 2.0);
        CHECK(hs_norm(g, 0.5) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("s = 0 matches the L2 quadrature") {
        PhysicalVectorField f = random_physical_mean_zero(grid, 5);
        SpectralVectorField g = to_spectral(f);
        CHECK(hs_norm(g, 0.0) == doctest::Approx(lp_norm(f, 2.0)).epsilon(1e-12));
    }
    SUBCASE("zero field") { CHECK(hs_norm(SpectralVectorField(grid), 0.5) == 0.0); }
    SUBCASE("nonzero mean with s < 0 is a domain error") {
        SpectralVectorField g(grid);
        g.at(0, std::size_t{0}) = {1.0, 0.0};
        CHECK_THROWS_AS((void)hs_norm(g, -0.5), std::domain_error);
    }
}

TEST_CASE("hs_norm additivity over disjoint spectral supports") {
    Grid grid(16);
    SpectralVectorField a(grid), b(grid), both(grid);
    a.at(0, 1, 0, 0) = both.at(0, 1, 0, 0) = {0.4, 0.0};
    a.at(0, grid.n() - 1, 0, 0) = both.at(0, grid.n() - 1, 0, 0) = {0.4, 0.0};
    b.at(2, 0, 3, 2) = both.at(2, 0, 3, 2) = {0.0, 0.7};
    b.at(2, 0, grid.n() - 3, grid.n() - 2) = both.at(2, 0, grid.n() - 3, grid.n() - 2) = {0.0, -0.7};
    for (double s : {0.0, 0.5, 1.5}) {
        const double lhs = hs_norm(a, s) * hs_norm(a, s) + hs_norm(b, s) * hs_norm(b, s);
        const double rhs = hs_norm(both, s) * hs_norm(both, s);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("single-mode fields scale exactly as |k|^s") {
    Grid grid(16);
    SpectralVectorField g(grid);
    g.at(1, 3, 0, 0) = {0.2, 0.1};
    g.at(1, grid.n() - 3, 0, 0) = {0.2, -0.1};
    for (double s : {0.5, 1.0, 1.5}) {
        CHECK(hs_norm(g, s) ==
              doctest::Approx(std::pow(3.0, s) * hs_norm(g, 0.0)).epsilon(1e-14));
    }
}

}  // TEST_SUITE
