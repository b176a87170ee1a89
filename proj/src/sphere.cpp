#include "scatterlab/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace scatterlab {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

SphereQuadrature::SphereQuadrature(double radius, int polar, int azimuth)
    : r(radius), n_polar(polar), n_azimuth(azimuth) {
    if (!(radius > 0.0)) throw std::invalid_argument("SphereQuadrature: radius must be positive");
    if (polar < 2 || azimuth < 4) throw std::invalid_argument("SphereQuadrature: quadrature too small");

    std::vector<double> ct, wt;
    gauss_legendre(polar, ct, wt);
    const double dphi = 2.0 * M_PI / azimuth;
    nodes.reserve(static_cast<std::size_t>(polar) * azimuth);
    weights.reserve(nodes.capacity());
    for (int i = 0; i < polar; ++i) {
        const double cth = ct[i];
        const double sth = std::sqrt(std::max(0.0, 1.0 - cth * cth));
        for (int j = 0; j < azimuth; ++j) {
            const double phi = dphi * j;
            nodes.push_back({r * sth * std::cos(phi), r * sth * std::sin(phi), r * cth});
            weights.push_back(r * r * wt[i] * dphi);
        }
    }
}

std::vector<Vec3> fibonacci_directions(int count) {
    if (count < 1) throw std::invalid_argument("fibonacci_directions: count must be positive");
    std::vector<Vec3> dirs;
    dirs.reserve(count);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        dirs.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return dirs;
}

}  // namespace scatterlab
