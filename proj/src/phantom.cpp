#include "scatterlab/phantom.hpp"

#include <cmath>
#include <stdexcept>

namespace scatterlab {

RefractiveIndex make_phantom(const std::vector<BumpSpec>& bumps, const Grid3& grid, double r1,
                             int smoothness) {
    if (!(r1 > 0.0)) throw std::invalid_argument("make_phantom: r1 must be positive");
    if (!(grid.L > r1)) throw std::invalid_argument("make_phantom: grid must cover B_r1 (L > r1)");
    if (smoothness <= 3) throw std::invalid_argument("make_phantom: smoothness order must exceed 3");

    for (std::size_t b = 0; b < bumps.size(); ++b) {
        const auto& bump = bumps[b];
        if (!(bump.radius > 0.0))
            throw std::invalid_argument("make_phantom: bump " + std::to_string(b) +
                                        " has non-positive radius");
        if (norm(bump.center) + bump.radius > r1)
            throw std::invalid_argument(
                "make_phantom: bump " + std::to_string(b) + " escapes the support ball (|center| + radius = " +
                std::to_string(norm(bump.center) + bump.radius) + " > r1 = " + std::to_string(r1) + ")");
    }

    RefractiveIndex out;
    out.grid = grid;
    out.r1 = r1;
    out.m = smoothness;
    out.norm_budget = 0.0;
    out.n.assign(grid.size(), cdouble(1.0));

    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.nx; ++iy)
            for (int iz = 0; iz < grid.nx; ++iz) {
                const Vec3 x = grid.node(ix, iy, iz);
                cdouble acc = 0.0;
                for (const auto& bump : bumps) {
                    const double s2 = norm2(x - bump.center);
                    acc += bump.amplitude * bump_profile(bump.radius, s2);
                }
                const std::size_t idx = grid.index(ix, iy, iz);
                out.n[idx] += acc;
                if (out.n[idx].imag() < 0.0)
                    throw std::invalid_argument("make_phantom: Im n < 0 at a grid node");
            }
    return out;
}

Potential potential_of(const RefractiveIndex& n, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("potential_of: omega must be positive");
    Potential v;
    v.grid = n.grid;
    v.omega = omega;
    v.E = omega * omega;
    v.r1 = n.r1;
    v.v.resize(n.n.size());
    const double w2 = omega * omega;
    for (std::size_t i = 0; i < n.n.size(); ++i) v.v[i] = w2 * (1.0 - n.n[i]);
    return v;
}

Field potential_difference(const Potential& v1, const Potential& v2) {
    if (!(v1.grid == v2.grid))
        throw std::invalid_argument("potential_difference: grids must match");
    Field d(v1.v.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = v2.v[i] - v1.v[i];
    return d;
}

}  // namespace scatterlab
