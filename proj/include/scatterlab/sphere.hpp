#pragma once

#include <vector>

#include "scatterlab/grid.hpp"

namespace scatterlab {

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Product quadrature on the sphere |x| = r: Gauss-Legendre in cos(theta)
/// times uniform trapezoid in azimuth.  Weights sum to 4*pi*r^2.
struct SphereQuadrature {
    double r = 0.0;
    int n_polar = 0;
    int n_azimuth = 0;
    std::vector<Vec3> nodes;      // points on the sphere, |node| = r
    std::vector<double> weights;  // surface-measure weights

    SphereQuadrature() = default;
    SphereQuadrature(double radius, int polar, int azimuth);

    std::size_t size() const { return nodes.size(); }
    bool matches(const SphereQuadrature& o) const {
        return r == o.r && n_polar == o.n_polar && n_azimuth == o.n_azimuth;
    }
};

/// Deterministic quasi-uniform unit directions (Fibonacci lattice).
std::vector<Vec3> fibonacci_directions(int count);

}  // namespace scatterlab
