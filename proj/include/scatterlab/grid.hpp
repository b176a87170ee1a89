#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace scatterlab {

using cdouble = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

/// Uniform grid on [-L, L)^3 with nx points per axis, node x_i = -L + i*h.
/// The half-open convention keeps the node set FFT-compatible.
struct Grid3 {
    double L = 0.0;
    int nx = 0;

    Grid3() = default;
    Grid3(double half_extent, int points_per_axis) : L(half_extent), nx(points_per_axis) {
        if (!(L > 0.0)) throw std::invalid_argument("Grid3: half extent must be positive");
        if (nx < 8) throw std::invalid_argument("Grid3: need at least 8 points per axis");
        if (nx % 2 != 0) throw std::invalid_argument("Grid3: points per axis must be even");
    }

    double h() const { return 2.0 * L / nx; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * nx * nx; }
    double cell_volume() const { return h() * h() * h(); }

    double coord(int i) const { return -L + i * h(); }
    Vec3 node(int ix, int iy, int iz) const { return {coord(ix), coord(iy), coord(iz)}; }
    std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * nx + iy) * nx + iz;
    }
    Vec3 node_of(std::size_t idx) const {
        int iz = static_cast<int>(idx % nx);
        int iy = static_cast<int>((idx / nx) % nx);
        int ix = static_cast<int>(idx / (static_cast<std::size_t>(nx) * nx));
        return node(ix, iy, iz);
    }

    bool operator==(const Grid3& other) const { return L == other.L && nx == other.nx; }
};

using Field = std::vector<cdouble>;

/// Trapezoidal quadrature of a grid field; for compactly supported integrands
/// on an interior-support grid this is the plain h^3-weighted sum.
inline cdouble integrate(const Grid3& g, const Field& f) {
    if (f.size() != g.size()) throw std::invalid_argument("integrate: field size mismatch");
    cdouble s = 0.0;
    for (const auto& v : f) s += v;
    return s * g.cell_volume();
}

inline double sup_abs(const Field& f) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, std::abs(v));
    return m;
}

/// Max of |f| over nodes with |x| < radius.
inline double sup_abs_in_ball(const Grid3& g, const Field& f, double radius) {
    if (f.size() != g.size()) throw std::invalid_argument("sup_abs_in_ball: field size mismatch");
    double m = 0.0;
    const double r2 = radius * radius;
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.nx; ++iy)
            for (int iz = 0; iz < g.nx; ++iz) {
                const Vec3 x = g.node(ix, iy, iz);
                if (norm2(x) < r2) m = std::max(m, std::abs(f[g.index(ix, iy, iz)]));
            }
    return m;
}

}  // namespace scatterlab
