#pragma once

#include "elsmhd/field.hpp"

namespace elsmhd {

/// Forward DFT, normalized so coeffs(k) = n^-3 sum_x f(x) exp(-i k.x).
/// The mean mode is zeroed and the result is put in canonical Hermitian form,
/// so coefficient magnitudes are resolution-independent and the symmetry
/// invariant holds bitwise. Throws on non-finite input.
SpectralVectorField to_spectral(const PhysicalVectorField& f);

/// Inverse DFT. The imaginary residue left after the transform must stay
/// below 1e-12 of the field magnitude; a larger residue means the Hermitian
/// symmetry was broken and raises an error. The residue is discarded.
PhysicalVectorField to_physical(const SpectralVectorField& g);

/// Scalar inverse DFT with the same residue contract.
std::vector<double> to_physical_scalar(const SpectralScalarField& g);

/// Per-mode orthogonal projection onto divergence-free fields:
/// v -> v - k (k.v)/|k|^2 for k != 0.
SpectralVectorField leray_project(const SpectralVectorField& g);

/// Scales coeffs(k) by |k|^s; the zero mode stays zero for all s.
SpectralVectorField fractional_multiplier(const SpectralVectorField& g, double s);

/// Zeroes every coefficient with any |k_i| > n/3 (2/3 dealiasing rule).
SpectralVectorField dealias_two_thirds(const SpectralVectorField& g);

/// max_k |k . coeffs(k)|; zero exactly iff the field is discretely solenoidal.
double divergence_max(const SpectralVectorField& g);

/// max_k |coeffs(k) - conj(coeffs(-k))| over modes and components.
/// Zero for fields in canonical Hermitian form.
double hermitian_residual(const SpectralVectorField& g);

/// Averages Hermitian partner modes so coeffs(-k) == conj(coeffs(k)) holds
/// bitwise; self-conjugate modes are forced real.
void hermitian_symmetrize(SpectralVectorField& g);

namespace detail {
/// Unnormalized c2c transforms behind a process-wide plan cache (FFTW).
/// sign = -1 forward, +1 backward. Deterministic for fixed input.
void dft3(const Grid& grid, std::complex<double>* data, int sign);
}  // namespace detail

}  // namespace elsmhd
