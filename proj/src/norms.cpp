#include "elsmhd/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elsmhd {

double lp_norm(const PhysicalVectorField& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    const Grid& grid = f.grid();
    const std::size_t n3 = grid.point_count();
    const double* v0 = f.component(0);
    const double* v1 = f.component(1);
    const double* v2 = f.component(2);
    double sum = 0.0;
    for (std::size_t i = 0; i < n3; ++i) {
        const double mag2 = v0[i] * v0[i] + v1[i] * v1[i] + v2[i] * v2[i];
        sum += std::pow(mag2, 0.5 * p);
    }
    return std::pow(sum * grid.cell_volume(), 1.0 / p);
}

double hs_norm(const SpectralVectorField& g, double s) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    const std::size_t zero = grid.index(0, 0, 0);
    if (s < 0.0) {
        const double mean = std::abs(g.at(0, zero)) + std::abs(g.at(1, zero)) +
                            std::abs(g.at(2, zero));
        if (mean != 0.0)
            throw std::domain_error("hs_norm: nonzero mean mode with s < 0");
    }
    double sum = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const double kz = grid.wavenumber(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                const std::size_t idx = grid.index(ix, iy, iz);
                const double a2 = std::norm(g.at(0, idx)) + std::norm(g.at(1, idx)) +
                                  std::norm(g.at(2, idx));
                sum += (s == 0.0 ? 1.0 : std::pow(k2, s)) * a2;
            }
        }
    }
    const double vol = std::pow(2.0 * std::numbers::pi, 3);
    return std::sqrt(vol * sum);
}

}  // namespace elsmhd
