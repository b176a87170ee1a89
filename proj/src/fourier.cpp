#include "scatterlab/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "scatterlab/fft.hpp"

namespace scatterlab {

namespace {
constexpr double kInv8Pi3 = 1.0 / (8.0 * M_PI * M_PI * M_PI);
}

FourierSample fourier_hat_field(const Grid3& grid, const Field& w, const Vec3& p) {
    if (w.size() != grid.size()) throw std::invalid_argument("fourier_hat: field size mismatch");
    const double nyquist = M_PI / grid.h();
    if (norm(p) > nyquist * (1.0 + 1e-12))
        throw std::invalid_argument("fourier_hat: |p| exceeds the grid Nyquist limit");

    cdouble acc = 0.0;
    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.nx; ++iy)
            for (int iz = 0; iz < grid.nx; ++iz) {
                const std::size_t idx = grid.index(ix, iy, iz);
                if (w[idx] == cdouble(0.0)) continue;
                const Vec3 x = grid.node(ix, iy, iz);
                const double phase = dot(p, x);
                acc += cdouble(std::cos(phase), std::sin(phase)) * w[idx];
            }
    return {p, acc * grid.cell_volume() * kInv8Pi3};
}

FourierSample fourier_hat(const Potential& v, const Vec3& p) {
    return fourier_hat_field(v.grid, v.v, p);
}

HatGrid fourier_hat_grid(const Grid3& grid, const Field& w, double pmax) {
    if (w.size() != grid.size()) throw std::invalid_argument("fourier_hat_grid: field size mismatch");
    const int n = grid.nx;
    const int m = 2 * n;
    const double h = grid.h();

    Fft3 fft(m);
    cdouble* buf = fft.data();
    std::fill(buf, buf + fft.size(), cdouble(0.0));
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz)
                buf[(static_cast<std::size_t>(ix) * m + iy) * m + iz] = w[grid.index(ix, iy, iz)];
    fft.backward();  // exp(+i p.x) convention

    HatGrid out;
    out.dp = 2.0 * M_PI / (m * h);
    const double scale = grid.cell_volume() * kInv8Pi3;
    const double pmax2 = pmax * pmax;

    for (int ix = 0; ix < m; ++ix) {
        const double px = fft_freq(ix, m, h);
        for (int iy = 0; iy < m; ++iy) {
            const double py = fft_freq(iy, m, h);
            for (int iz = 0; iz < m; ++iz) {
                const double pz = fft_freq(iz, m, h);
                if (px * px + py * py + pz * pz > pmax2) continue;
                const Vec3 p{px, py, pz};
                // Node j of the corner-packed box sits at x = j*h - L; fold in the -L offset.
                const double phase = -(px + py + pz) * grid.L;
                const cdouble shift(std::cos(phase), std::sin(phase));
                const cdouble val = buf[(static_cast<std::size_t>(ix) * m + iy) * m + iz];
                out.samples.push_back({p, val * shift * scale});
            }
        }
    }
    return out;
}

SplitIntegral split_integral(const HatGrid& hat, double kappa) {
    if (!(hat.dp > 0.0)) throw std::invalid_argument("split_integral: invalid sample spacing");
    SplitIntegral s;
    const double cell = hat.dp * hat.dp * hat.dp;
    for (const auto& smp : hat.samples) {
        const double a = std::abs(smp.value) * cell;
        if (norm(smp.p) <= kappa)
            s.i1 += a;
        else
            s.i2 += a;
    }
    return s;
}

}  // namespace scatterlab
