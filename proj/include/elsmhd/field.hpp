#pragma once

#include <complex>
#include <vector>

#include "elsmhd/grid.hpp"

namespace elsmhd {

/// Real 3-component vector field sampled on the physical lattice
/// x = 2*pi*(i,j,l)/n. Component-major storage.
class PhysicalVectorField {
public:
    explicit PhysicalVectorField(const Grid& grid)
        : grid_(grid), values_(3 * grid.point_count(), 0.0) {}

    const Grid& grid() const { return grid_; }

    double& at(int c, std::size_t idx) { return values_[c * grid_.point_count() + idx]; }
    double at(int c, std::size_t idx) const { return values_[c * grid_.point_count() + idx]; }

    double* component(int c) { return values_.data() + c * grid_.point_count(); }
    const double* component(int c) const { return values_.data() + c * grid_.point_count(); }

    std::vector<double>& raw() { return values_; }
    const std::vector<double>& raw() const { return values_; }

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Complex Fourier coefficients of a real 3-component field, full spectrum in
/// FFT index order, component-major.
///
/// Invariants kept by every producer in this library:
///   - coeffs(-k) == conj(coeffs(k)) bitwise (canonical Hermitian form),
///   - the mean mode coeffs(0) is zero.
class SpectralVectorField {
public:
    explicit SpectralVectorField(const Grid& grid)
        : grid_(grid), coeffs_(3 * grid.point_count(), {0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }

    std::complex<double>& at(int c, std::size_t idx) {
        return coeffs_[c * grid_.point_count() + idx];
    }
    const std::complex<double>& at(int c, std::size_t idx) const {
        return coeffs_[c * grid_.point_count() + idx];
    }
    std::complex<double>& at(int c, int ix, int iy, int iz) {
        return at(c, grid_.index(ix, iy, iz));
    }
    const std::complex<double>& at(int c, int ix, int iy, int iz) const {
        return at(c, grid_.index(ix, iy, iz));
    }

    std::complex<double>* component(int c) { return coeffs_.data() + c * grid_.point_count(); }
    const std::complex<double>* component(int c) const {
        return coeffs_.data() + c * grid_.point_count();
    }

    std::vector<std::complex<double>>& raw() { return coeffs_; }
    const std::vector<std::complex<double>>& raw() const { return coeffs_; }

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

/// Scalar spectral field (pressure diagnostics).
class SpectralScalarField {
public:
    explicit SpectralScalarField(const Grid& grid)
        : grid_(grid), coeffs_(grid.point_count(), {0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }
    std::complex<double>& at(std::size_t idx) { return coeffs_[idx]; }
    const std::complex<double>& at(std::size_t idx) const { return coeffs_[idx]; }
    std::vector<std::complex<double>>& raw() { return coeffs_; }
    const std::vector<std::complex<double>>& raw() const { return coeffs_; }

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

}  // namespace elsmhd
