#include "elsmhd/elsasser.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "elsmhd/norms.hpp"
#include "elsmhd/spectral.hpp"

namespace elsmhd {

FluidParams make_params(double re, double rm, double s_coupling) {
    if (!(re > 0.0)) throw std::invalid_argument("params.re: must be > 0");
    if (!(rm > 0.0)) throw std::invalid_argument("params.rm: must be > 0");
    if (!(s_coupling >= 0.0)) throw std::invalid_argument("params.s: must be >= 0");
    FluidParams p;
    p.re = re;
    p.rm = rm;
    p.s_coupling = s_coupling;
    p.kappa = 0.5 / re + 0.5 / rm;
    p.lambda = 0.5 / re - 0.5 / rm;
    return p;
}

PrimitiveState absorb_s(PrimitiveState p, const FluidParams& params) {
    const double root_s = std::sqrt(params.s_coupling);
    for (auto& z : p.b.raw()) z *= root_s;
    return p;
}

ElsasserState to_elsasser(const PrimitiveState& p, const FluidParams&) {
    if (p.u.grid() != p.b.grid())
        throw std::invalid_argument("to_elsasser: u and B live on different grids");
    ElsasserState e{SpectralVectorField(p.u.grid()), SpectralVectorField(p.u.grid()), p.time};
    const std::size_t total = p.u.raw().size();
    for (std::size_t i = 0; i < total; ++i) {
        e.w_plus.raw()[i] = p.u.raw()[i] + p.b.raw()[i];
        e.w_minus.raw()[i] = p.u.raw()[i] - p.b.raw()[i];
    }
    return e;
}

PrimitiveState from_elsasser(const ElsasserState& e) {
    PrimitiveState p{SpectralVectorField(e.w_plus.grid()), SpectralVectorField(e.w_plus.grid()),
                     e.time};
    const std::size_t total = e.w_plus.raw().size();
    for (std::size_t i = 0; i < total; ++i) {
        p.u.raw()[i] = 0.5 * (e.w_plus.raw()[i] + e.w_minus.raw()[i]);
        p.b.raw()[i] = 0.5 * (e.w_plus.raw()[i] - e.w_minus.raw()[i]);
    }
    return p;
}

std::pair<ElsasserState, FluidParams> rescale_to_v(const ElsasserState& e,
                                                   const FluidParams& params) {
    if (!(params.kappa > 0.0)) throw std::invalid_argument("rescale_to_v: kappa must be > 0");
    const double ratio = params.lambda / params.kappa;
    // kappa' = 1, lambda' = lambda/kappa  <=>  Re' = 1/(1+ratio), Rm' = 1/(1-ratio)
    FluidParams scaled = make_params(1.0 / (1.0 + ratio), 1.0 / (1.0 - ratio), params.s_coupling);
    if (params.kappa == 1.0) return {e, scaled};

    ElsasserState v = e;
    const double inv_kappa = 1.0 / params.kappa;
    for (auto& z : v.w_plus.raw()) z *= inv_kappa;
    for (auto& z : v.w_minus.raw()) z *= inv_kappa;
    v.time = e.time * params.kappa;
    return {v, scaled};
}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

PhysicalVectorField taylor_green(const Grid& grid, double amplitude) {
    PhysicalVectorField f(grid);
    const int n = grid.n();
    for (int i = 0; i < n; ++i) {
        const double x = two_pi * i / n;
        for (int j = 0; j < n; ++j) {
            const double y = two_pi * j / n;
            for (int l = 0; l < n; ++l) {
                const double z = two_pi * l / n;
                const std::size_t idx = grid.index(i, j, l);
                f.at(0, idx) = amplitude * std::sin(x) * std::cos(y) * std::cos(z);
                f.at(1, idx) = -amplitude * std::cos(x) * std::sin(y) * std::cos(z);
            }
        }
    }
    return f;
}

// Box-Muller on a seeded mt19937_64; keeps random initial data reproducible
// independent of the standard library's normal_distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        } while (u1 <= 1e-300);
        const double u2 = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

SpectralVectorField random_solenoidal(const Grid& grid, double amplitude, int k0,
                                      std::uint64_t seed) {
    const int n = grid.n();
    const int band = n / 3;
    SpectralVectorField g(grid);
    GaussianStream gauss(seed);
    // Visit each Hermitian pair once, in fixed index order, so the draw is
    // reproducible and the symmetry holds by construction.
    for (int ix = 0; ix < n; ++ix) {
        const int kx = grid.wavenumber(ix);
        for (int iy = 0; iy < n; ++iy) {
            const int ky = grid.wavenumber(iy);
            for (int iz = 0; iz < n; ++iz) {
                const int kz = grid.wavenumber(iz);
                const std::size_t a = grid.index(ix, iy, iz);
                const std::size_t b = grid.index(grid.conjugate_index(ix),
                                                 grid.conjugate_index(iy),
                                                 grid.conjugate_index(iz));
                if (b < a) continue;
                const double kmag = std::sqrt(double(kx) * kx + double(ky) * ky + double(kz) * kz);
                if (kmag == 0.0) continue;
                if (std::abs(kx) > band || std::abs(ky) > band || std::abs(kz) > band) continue;
                // Radial spectrum E(k) ~ k^4 exp(-2 (k/k0)^2); a shell at k
                // holds ~k^2 modes, so per-mode amplitude ~ sqrt(E(k)/k^2).
                const double shape = kmag * std::exp(-(kmag / k0) * (kmag / k0));
                for (int c = 0; c < 3; ++c) {
                    if (a == b) {
                        g.at(c, a) = {shape * gauss.next(), 0.0};
                    } else {
                        g.at(c, a) = shape * std::complex<double>(gauss.next(), gauss.next());
                        g.at(c, b) = std::conj(g.at(c, a));
                    }
                }
            }
        }
    }
    g = leray_project(g);
    // Normalize the draw so `amplitude` sets the L2 norm scale.
    const double l2 = hs_norm(g, 0.0);
    if (l2 > 0.0)
        for (auto& z : g.raw()) z *= amplitude / l2;
    return g;
}

double named_norm(const SpectralVectorField& g, const std::string& name) {
    if (name == "l2") return hs_norm(g, 0.0);
    if (name == "h12") return hs_norm(g, 0.5);
    if (name == "h1") return hs_norm(g, 1.0);
    if (name == "l3") return lp_norm(to_physical(g), 3.0);
    throw std::invalid_argument("initial.target_norm: unknown norm name '" + name +
                                "' (expected l2, l3, h12 or h1)");
}

}  // namespace

PrimitiveState generate_initial(const InitialDataSpec& spec, const Grid& grid) {
    if (!std::isfinite(spec.amplitude))
        throw std::invalid_argument("initial.amplitude: must be finite");
    const int band = grid.n() / 3;

    PrimitiveState p{SpectralVectorField(grid), SpectralVectorField(grid), 0.0};
    switch (spec.kind) {
        case InitialKind::taylor_green:
            p.u = to_spectral(taylor_green(grid, spec.amplitude));
            break;
        case InitialKind::single_mode: {
            if (spec.k0 < 1 || spec.k0 > band)
                throw std::invalid_argument("initial.k0: mode outside the resolved band");
            // a cos(k0 x1) e2 -> coefficients a/2 at +-k0 e1
            p.u.at(1, spec.k0, 0, 0) = {0.5 * spec.amplitude, 0.0};
            p.u.at(1, grid.n() - spec.k0, 0, 0) = {0.5 * spec.amplitude, 0.0};
            break;
        }
        case InitialKind::random_solenoidal: {
            if (spec.k0 < 1 || spec.k0 > band)
                throw std::invalid_argument("initial.k0: spectrum peak outside the resolved band");
            p.u = random_solenoidal(grid, spec.amplitude, spec.k0, spec.seed);
            p.b = random_solenoidal(grid, spec.amplitude, spec.k0,
                                    spec.seed ^ 0x517cc1b727220a95ull);
            break;
        }
    }

    if (spec.target_norm) {
        const auto& [name, value] = *spec.target_norm;
        const double current = named_norm(p.u, name);
        if (current == 0.0)
            throw std::invalid_argument("initial.target_norm: cannot rescale a zero field");
        const double factor = value / current;
        for (auto& z : p.u.raw()) z *= factor;
        for (auto& z : p.b.raw()) z *= factor;
    }
    return p;
}

}  // namespace elsmhd
