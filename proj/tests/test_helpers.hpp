#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "elsmhd/elsasser.hpp"
#include "elsmhd/spectral.hpp"

namespace elsmhd::test {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Random physical field with the lattice mean of each component removed,
/// so the forward/backward round trip is exact up to rounding.
inline PhysicalVectorField random_physical_mean_zero(const Grid& grid, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    PhysicalVectorField f(grid);
    const std::size_t n3 = grid.point_count();
    for (int c = 0; c < 3; ++c) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n3; ++i) {
            f.at(c, i) = dist(rng);
            mean += f.at(c, i);
        }
        mean /= static_cast<double>(n3);
        for (std::size_t i = 0; i < n3; ++i) f.at(c, i) -= mean;
    }
    return f;
}

/// Random solenoidal spectral field with all modes inside |k_i| <= kmax.
inline SpectralVectorField random_solenoidal_band(const Grid& grid, int kmax, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SpectralVectorField g(grid);
    const int n = grid.n();
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const int kx = grid.wavenumber(ix), ky = grid.wavenumber(iy),
                          kz = grid.wavenumber(iz);
                if (kx == 0 && ky == 0 && kz == 0) continue;
                if (std::abs(kx) > kmax || std::abs(ky) > kmax || std::abs(kz) > kmax) continue;
                for (int c = 0; c < 3; ++c)
                    g.at(c, grid.index(ix, iy, iz)) = {dist(rng), dist(rng)};
            }
    hermitian_symmetrize(g);
    return leray_project(g);
}

/// Taylor-Green velocity sampled directly from the analytic profile; kept
/// separate from the library's generator so fixtures have an independent
/// construction path.
inline PhysicalVectorField taylor_green_profile(const Grid& grid, double amplitude) {
    PhysicalVectorField f(grid);
    const int n = grid.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const double x = two_pi * i / n, y = two_pi * j / n, z = two_pi * l / n;
                const std::size_t idx = grid.index(i, j, l);
                f.at(0, idx) = amplitude * std::sin(x) * std::cos(y) * std::cos(z);
                f.at(1, idx) = -amplitude * std::cos(x) * std::sin(y) * std::cos(z);
            }
    return f;
}

inline double max_coeff_diff(const SpectralVectorField& a, const SpectralVectorField& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        worst = std::max(worst, std::abs(a.raw()[i] - b.raw()[i]));
    return worst;
}

inline double max_coeff_abs(const SpectralVectorField& a) {
    double worst = 0.0;
    for (const auto& z : a.raw()) worst = std::max(worst, std::abs(z));
    return worst;
}

/// Relative L2 distance between two spectral fields.
inline double rel_l2_diff(const SpectralVectorField& a, const SpectralVectorField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i) {
        num += std::norm(a.raw()[i] - b.raw()[i]);
        den += std::norm(b.raw()[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

/// Re-embeds a band-limited field on a finer grid (same coefficients by
/// wavenumber); used for refinement studies of physical-space oracles.
inline SpectralVectorField embed_on_grid(const SpectralVectorField& g, const Grid& fine) {
    const Grid& coarse = g.grid();
    SpectralVectorField out(fine);
    const int n = coarse.n();
    auto fine_index = [&](int k) { return k >= 0 ? k : fine.n() + k; };
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const int kx = coarse.wavenumber(ix), ky = coarse.wavenumber(iy),
                          kz = coarse.wavenumber(iz);
                const std::size_t src = coarse.index(ix, iy, iz);
                const std::size_t dst = fine.index(fine_index(kx), fine_index(ky), fine_index(kz));
                for (int c = 0; c < 3; ++c) out.at(c, dst) = g.at(c, src);
            }
    return out;
}

/// Fourth-order centered first derivative along `axis` on the lattice.
inline PhysicalVectorField fd4_derivative(const PhysicalVectorField& f, int axis) {
    const Grid& grid = f.grid();
    const int n = grid.n();
    const double h = grid.spacing();
    PhysicalVectorField out(grid);
    auto wrap = [n](int i) { return (i % n + n) % n; };
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    int ip1 = i, im1 = i, ip2 = i, im2 = i;
                    int jp1 = j, jm1 = j, jp2 = j, jm2 = j;
                    int lp1 = l, lm1 = l, lp2 = l, lm2 = l;
                    if (axis == 0) {
                        ip1 = wrap(i + 1); im1 = wrap(i - 1); ip2 = wrap(i + 2); im2 = wrap(i - 2);
                    } else if (axis == 1) {
                        jp1 = wrap(j + 1); jm1 = wrap(j - 1); jp2 = wrap(j + 2); jm2 = wrap(j - 2);
                    } else {
                        lp1 = wrap(l + 1); lm1 = wrap(l - 1); lp2 = wrap(l + 2); lm2 = wrap(l - 2);
                    }
                    const double fp1 = f.at(c, grid.index(ip1, jp1, lp1));
                    const double fm1 = f.at(c, grid.index(im1, jm1, lm1));
                    const double fp2 = f.at(c, grid.index(ip2, jp2, lp2));
                    const double fm2 = f.at(c, grid.index(im2, jm2, lm2));
                    out.at(c, grid.index(i, j, l)) = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
                }
    return out;
}

}  // namespace elsmhd::test
