#pragma once

#include <vector>

#include "scatterlab/grid.hpp"

namespace scatterlab {

struct FourierSample {
    Vec3 p{0.0, 0.0, 0.0};
    cdouble value{0.0, 0.0};
};

struct SobolevNorm {
    double value = 0.0;
    bool coarse_grid_warning = false;  // set when h*m exceeds the resolution heuristic
};

/// W^{m,1}-type norm: max over multi-indices |J| <= m of the L1 quadrature of
/// |d^J w|.  Derivatives use 4th-order centered differences applied per axis;
/// the field must vanish near the grid boundary (compact interior support).
SobolevNorm sobolev_norm(const Grid3& grid, const Field& w, int m);

/// ess-sup-style weighted norm: max over samples of (1+|p|)^mu * |value|.
double weighted_sup_norm(const std::vector<FourierSample>& samples, double mu);

}  // namespace scatterlab
