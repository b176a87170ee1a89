#pragma once

#include <string>
#include <vector>

#include "scatterlab/grid.hpp"

namespace scatterlab {

/// One C-infinity bump: amp * exp(-a^2/(a^2 - |x-c|^2)) inside |x-c| < a, zero outside.
struct BumpSpec {
    Vec3 center{0.0, 0.0, 0.0};
    double radius = 0.5;
    cdouble amplitude{0.0, 0.0};
};

/// Bump profile value at distance-squared s2 from the center.
inline double bump_profile(double radius, double s2) {
    const double a2 = radius * radius;
    if (s2 >= a2) return 0.0;
    return std::exp(-a2 / (a2 - s2));
}

struct RefractiveIndex {
    Grid3 grid;
    Field n;             // samples of n(x) on grid nodes
    double r1 = 1.0;     // support radius of 1 - n
    int m = 6;           // declared smoothness order, m > 3
    double norm_budget;  // C_n, certified by quadrature
};

struct Potential {
    Grid3 grid;
    Field v;  // v = omega^2 (1 - n)
    double omega = 1.0;
    double E = 1.0;  // E = omega^2
    double r1 = 1.0;
};

/// Builds n = 1 + sum of bumps.  Rejects bumps escaping B_r1 and any node with Im n < 0.
/// norm_budget is left zero here; certify_norm_budget fills it from a measured Sobolev norm.
RefractiveIndex make_phantom(const std::vector<BumpSpec>& bumps, const Grid3& grid, double r1,
                             int smoothness = 6);

Potential potential_of(const RefractiveIndex& n, double omega);

/// Pointwise difference v2 - v1 (grids must match).
Field potential_difference(const Potential& v1, const Potential& v2);

}  // namespace scatterlab
