#include "elsmhd/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace elsmhd {

namespace detail {

namespace {

// FFTW plan creation is not thread safe; execution through the new-array
// interface is. One estimate-mode plan pair per grid size, never destroyed.
struct PlanPair {
    fftw_plan forward;
    fftw_plan backward;
};

std::mutex plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

PlanPair plans_for(int n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // FFTW_ESTIMATE keeps planning deterministic and leaves the array intact.
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n) * n * n);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    p.forward = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!p.forward || !p.backward) throw std::runtime_error("fftw plan creation failed");
    cache.emplace(n, p);
    return p;
}

}  // namespace

void dft3(const Grid& grid, std::complex<double>* data, int sign) {
    PlanPair p = plans_for(grid.n());
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(sign < 0 ? p.forward : p.backward, ptr, ptr);
}

}  // namespace detail

void hermitian_symmetrize(SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    for (int c = 0; c < 3; ++c) {
        std::complex<double>* d = g.component(c);
        for (int ix = 0; ix < n; ++ix) {
            const int jx = grid.conjugate_index(ix);
            for (int iy = 0; iy < n; ++iy) {
                const int jy = grid.conjugate_index(iy);
                for (int iz = 0; iz < n; ++iz) {
                    const int jz = grid.conjugate_index(iz);
                    const std::size_t a = grid.index(ix, iy, iz);
                    const std::size_t b = grid.index(jx, jy, jz);
                    if (a < b) {
                        const std::complex<double> v = 0.5 * (d[a] + std::conj(d[b]));
                        d[a] = v;
                        d[b] = std::conj(v);
                    } else if (a == b) {
                        d[a] = {d[a].real(), 0.0};
                    }
                }
            }
        }
    }
}

double hermitian_residual(const SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
        const std::complex<double>* d = g.component(c);
        for (int ix = 0; ix < n; ++ix)
            for (int iy = 0; iy < n; ++iy)
                for (int iz = 0; iz < n; ++iz) {
                    const std::size_t a = grid.index(ix, iy, iz);
                    const std::size_t b = grid.index(grid.conjugate_index(ix),
                                                     grid.conjugate_index(iy),
                                                     grid.conjugate_index(iz));
                    worst = std::max(worst, std::abs(d[a] - std::conj(d[b])));
                }
    }
    return worst;
}

SpectralVectorField to_spectral(const PhysicalVectorField& f) {
    const Grid& grid = f.grid();
    for (double v : f.raw())
        if (!std::isfinite(v))
            throw std::invalid_argument("to_spectral: non-finite value in physical field");

    SpectralVectorField g(grid);
    const std::size_t n3 = grid.point_count();
    const double scale = 1.0 / static_cast<double>(n3);
    for (int c = 0; c < 3; ++c) {
        std::complex<double>* d = g.component(c);
        const double* src = f.component(c);
        for (std::size_t i = 0; i < n3; ++i) d[i] = src[i];
        detail::dft3(grid, d, -1);
        for (std::size_t i = 0; i < n3; ++i) d[i] *= scale;
        d[0] = {0.0, 0.0};  // mean-zero enforced
    }
    hermitian_symmetrize(g);
    return g;
}

namespace {

// Shared inverse-transform core: returns max |Im| and max point magnitude.
void inverse_with_residue(const Grid& grid, std::vector<std::complex<double>>& buf,
                          double& imag_max, double& mag_max) {
    detail::dft3(grid, buf.data(), +1);
    for (const auto& z : buf) {
        imag_max = std::max(imag_max, std::abs(z.imag()));
        mag_max = std::max(mag_max, std::abs(z));
    }
}

}  // namespace

PhysicalVectorField to_physical(const SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const std::size_t n3 = grid.point_count();
    PhysicalVectorField f(grid);
    double imag_max = 0.0, mag_max = 0.0;
    std::vector<std::complex<double>> buf(n3);
    for (int c = 0; c < 3; ++c) {
        const std::complex<double>* src = g.component(c);
        std::copy(src, src + n3, buf.begin());
        inverse_with_residue(grid, buf, imag_max, mag_max);
        double* dst = f.component(c);
        for (std::size_t i = 0; i < n3; ++i) dst[i] = buf[i].real();
    }
    if (imag_max > 1e-12 * mag_max)
        throw std::invalid_argument(
            "to_physical: Hermitian symmetry broken (imaginary residue " +
            std::to_string(imag_max) + " vs magnitude " + std::to_string(mag_max) + ")");
    return f;
}

std::vector<double> to_physical_scalar(const SpectralScalarField& g) {
    const Grid& grid = g.grid();
    const std::size_t n3 = grid.point_count();
    std::vector<std::complex<double>> buf = g.raw();
    double imag_max = 0.0, mag_max = 0.0;
    inverse_with_residue(grid, buf, imag_max, mag_max);
    if (imag_max > 1e-12 * mag_max)
        throw std::invalid_argument("to_physical_scalar: Hermitian symmetry broken");
    std::vector<double> out(n3);
    for (std::size_t i = 0; i < n3; ++i) out[i] = buf[i].real();
    return out;
}

SpectralVectorField leray_project(const SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    SpectralVectorField out = g;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const double kz = grid.wavenumber(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                const std::size_t idx = grid.index(ix, iy, iz);
                const std::complex<double> kdotv =
                    kx * out.at(0, idx) + ky * out.at(1, idx) + kz * out.at(2, idx);
                const std::complex<double> q = kdotv / k2;
                out.at(0, idx) -= kx * q;
                out.at(1, idx) -= ky * q;
                out.at(2, idx) -= kz * q;
            }
        }
    }
    return out;
}

SpectralVectorField fractional_multiplier(const SpectralVectorField& g, double s) {
    if (s == 0.0) return g;
    const Grid& grid = g.grid();
    const int n = grid.n();
    SpectralVectorField out = g;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const double kz = grid.wavenumber(iz);
                const double k2 = kx * kx + ky * ky + kz * kz;
                const std::size_t idx = grid.index(ix, iy, iz);
                const double m = k2 == 0.0 ? 0.0 : std::pow(k2, 0.5 * s);
                out.at(0, idx) *= m;
                out.at(1, idx) *= m;
                out.at(2, idx) *= m;
            }
        }
    }
    return out;
}

SpectralVectorField dealias_two_thirds(const SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    SpectralVectorField out = g;
    for (int ix = 0; ix < n; ++ix) {
        const int kx = std::abs(grid.wavenumber(ix));
        for (int iy = 0; iy < n; ++iy) {
            const int ky = std::abs(grid.wavenumber(iy));
            for (int iz = 0; iz < n; ++iz) {
                const int kz = std::abs(grid.wavenumber(iz));
                if (3 * kx > n || 3 * ky > n || 3 * kz > n) {
                    const std::size_t idx = grid.index(ix, iy, iz);
                    out.at(0, idx) = out.at(1, idx) = out.at(2, idx) = {0.0, 0.0};
                }
            }
        }
    }
    return out;
}

double divergence_max(const SpectralVectorField& g) {
    const Grid& grid = g.grid();
    const int n = grid.n();
    double worst = 0.0;
    for (int ix = 0; ix < n; ++ix) {
        const double kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const double kz = grid.wavenumber(iz);
                const std::size_t idx = grid.index(ix, iy, iz);
                const std::complex<double> kdotv =
                    kx * g.at(0, idx) + ky * g.at(1, idx) + kz * g.at(2, idx);
                worst = std::max(worst, std::abs(kdotv));
            }
        }
    }
    return worst;
}

}  // namespace elsmhd
