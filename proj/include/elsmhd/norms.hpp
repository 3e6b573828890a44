#pragma once

#include "elsmhd/field.hpp"

namespace elsmhd {

/// ( sum_x |f(x)|^p (2pi/n)^3 )^{1/p} with |f(x)| the Euclidean magnitude.
double lp_norm(const PhysicalVectorField& f, double p);

/// Homogeneous Sobolev norm on the torus:
/// ( (2pi)^3 sum_{k != 0} |k|^{2s} |coeffs(k)|^2 )^{1/2}.
/// s = 0 reproduces the L2 norm (Parseval). A nonzero mean mode combined
/// with s < 0 raises a domain error.
double hs_norm(const SpectralVectorField& g, double s);

}  // namespace elsmhd
