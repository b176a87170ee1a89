#pragma once

#include <vector>

#include "scatterlab/grid.hpp"
#include "scatterlab/norms.hpp"
#include "scatterlab/phantom.hpp"

namespace scatterlab {

/// Trapezoidal quadrature of vhat(p) = (2*pi)^-3 int exp(i p.x) w(x) dx.
/// Requires |p| within the grid Nyquist limit pi/h.
FourierSample fourier_hat_field(const Grid3& grid, const Field& w, const Vec3& p);
FourierSample fourier_hat(const Potential& v, const Vec3& p);

/// Uniform Cartesian lattice of Fourier samples, spacing dp per axis.
struct HatGrid {
    double dp = 0.0;
    std::vector<FourierSample> samples;
};

/// Batch transform on the padded FFT dual lattice (spacing pi/(2L), covering
/// |p_i| <= pi/h per axis).  Agrees with per-point fourier_hat_field on lattice
/// nodes up to roundoff.  Samples with |p| > pmax are omitted.
HatGrid fourier_hat_grid(const Grid3& grid, const Field& w, double pmax);

/// Quadrature split of int |w_hat| dp at radius kappa over the sample lattice:
/// I1 integrates |p| <= kappa, I2 the rest.  The two parts partition the same
/// sample set, so I1 + I2 always equals the total exactly.
struct SplitIntegral {
    double i1 = 0.0;
    double i2 = 0.0;
    double total() const { return i1 + i2; }
};
SplitIntegral split_integral(const HatGrid& hat, double kappa);

}  // namespace scatterlab
