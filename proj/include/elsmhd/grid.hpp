#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace elsmhd {

/// Cubic periodic lattice on [0, 2*pi)^3 with n points per axis.
///
/// Wavenumbers are the integer lattice k in Z^3 with |k_i| <= n/2, stored in
/// FFT order: index i in [0, n) maps to k = i for i <= n/2 and k = i - n
/// otherwise (the single Nyquist slot represents +-n/2).
class Grid {
public:
    explicit Grid(int n) : n_(n) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("grid.n: must be a power of two >= 8");
    }

    int n() const { return n_; }
    std::size_t point_count() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }
    double spacing() const { return 2.0 * std::numbers::pi / n_; }
    double cell_volume() const {
        const double h = spacing();
        return h * h * h;
    }

    /// Signed wavenumber of storage index i along one axis.
    int wavenumber(int i) const { return i <= n_ / 2 ? i : i - n_; }

    /// Storage index of the Hermitian partner -k along one axis.
    int conjugate_index(int i) const { return i == 0 ? 0 : n_ - i; }

    std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * n_ + iy) * n_ + iz;
    }

    bool operator==(const Grid& o) const { return n_ == o.n_; }
    bool operator!=(const Grid& o) const { return n_ != o.n_; }

private:
    int n_;
};

}  // namespace elsmhd
