#include "scatterlab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace scatterlab {

namespace {

// 4th-order centered first derivative along one axis; out-of-range samples are
// zero (valid for compactly supported interior fields).
void diff_axis(const Grid3& g, const Field& f, int axis, Field& out) {
    const int n = g.nx;
    const double inv12h = 1.0 / (12.0 * g.h());
    out.assign(g.size(), cdouble(0.0));
    const int stride = (axis == 0) ? n * n : (axis == 1) ? n : 1;

    auto at = [&](std::size_t base, int i, int shift) -> cdouble {
        const int j = i + shift;
        if (j < 0 || j >= n) return cdouble(0.0);
        return f[base + static_cast<std::size_t>(j) * stride];
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::size_t base;
            if (axis == 0)
                base = static_cast<std::size_t>(a) * n + b;
            else if (axis == 1)
                base = static_cast<std::size_t>(a) * n * n + b;
            else
                base = (static_cast<std::size_t>(a) * n + b) * n;
            for (int i = 0; i < n; ++i) {
                const cdouble d =
                    (-at(base, i, 2) + 8.0 * at(base, i, 1) - 8.0 * at(base, i, -1) + at(base, i, -2)) *
                    inv12h;
                out[base + static_cast<std::size_t>(i) * stride] = d;
            }
        }
}

double l1_quadrature(const Grid3& g, const Field& f) {
    double s = 0.0;
    for (const auto& z : f) s += std::abs(z);
    return s * g.cell_volume();
}

}  // namespace

SobolevNorm sobolev_norm(const Grid3& grid, const Field& w, int m) {
    if (m < 0) throw std::invalid_argument("sobolev_norm: order must be nonnegative");
    if (w.size() != grid.size()) throw std::invalid_argument("sobolev_norm: field size mismatch");

    SobolevNorm result;
    result.coarse_grid_warning = m * grid.h() > 0.5;

    // Nested incremental differentiation: fx = d^j1 w, fxy = d^j2 fx, fxyz = d^j3 fxy.
    Field fx = w, fxy, fxyz, tmp;
    for (int j1 = 0; j1 <= m; ++j1) {
        if (j1 > 0) {
            diff_axis(grid, fx, 0, tmp);
            fx.swap(tmp);
        }
        fxy = fx;
        for (int j2 = 0; j1 + j2 <= m; ++j2) {
            if (j2 > 0) {
                diff_axis(grid, fxy, 1, tmp);
                fxy.swap(tmp);
            }
            fxyz = fxy;
            for (int j3 = 0; j1 + j2 + j3 <= m; ++j3) {
                if (j3 > 0) {
                    diff_axis(grid, fxyz, 2, tmp);
                    fxyz.swap(tmp);
                }
                result.value = std::max(result.value, l1_quadrature(grid, fxyz));
            }
        }
    }
    return result;
}

double weighted_sup_norm(const std::vector<FourierSample>& samples, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("weighted_sup_norm: mu must be positive");
    if (samples.empty()) throw std::invalid_argument("weighted_sup_norm: empty sample list");
    double m = 0.0;
    for (const auto& s : samples)
        m = std::max(m, std::pow(1.0 + norm(s.p), mu) * std::abs(s.value));
    return m;
}

}  // namespace scatterlab
