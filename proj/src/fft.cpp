#include "scatterlab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace scatterlab {

namespace {
// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft3::Fft3(int m) : m_(m) {
    if (m <= 0) throw std::invalid_argument("Fft3: size must be positive");
    buf_ = reinterpret_cast<cdouble*>(fftw_malloc(sizeof(fftw_complex) * size()));
    if (!buf_) throw std::bad_alloc();
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan_fwd_ = fftw_plan_dft_3d(m_, m_, m_, reinterpret_cast<fftw_complex*>(buf_),
                                 reinterpret_cast<fftw_complex*>(buf_), FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_3d(m_, m_, m_, reinterpret_cast<fftw_complex*>(buf_),
                                 reinterpret_cast<fftw_complex*>(buf_), FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft3: fftw plan creation failed");
}

Fft3::~Fft3() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_);
}

void Fft3::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }
void Fft3::backward() { fftw_execute(static_cast<fftw_plan>(plan_bwd_)); }

PaddedConvolver::PaddedConvolver(const Grid3& grid, std::shared_ptr<const std::vector<cdouble>> spectrum)
    : grid_(grid), spectrum_(std::move(spectrum)), fft_(2 * grid.nx) {
    if (!spectrum_ || spectrum_->size() != fft_.size())
        throw std::invalid_argument("PaddedConvolver: spectrum size mismatch");
}

void PaddedConvolver::apply(const Field& q, Field& y) {
    const int n = grid_.nx;
    const int m = fft_.m();
    if (q.size() != grid_.size()) throw std::invalid_argument("PaddedConvolver: field size mismatch");

    cdouble* buf = fft_.data();
    std::fill(buf, buf + fft_.size(), cdouble(0.0));
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy) {
            const std::size_t src = (static_cast<std::size_t>(ix) * n + iy) * n;
            const std::size_t dst = (static_cast<std::size_t>(ix) * m + iy) * m;
            for (int iz = 0; iz < n; ++iz) buf[dst + iz] = q[src + iz];
        }

    fft_.forward();
    const auto& s = *spectrum_;
    for (std::size_t i = 0; i < fft_.size(); ++i) buf[i] *= s[i];
    fft_.backward();

    y.resize(grid_.size());
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy) {
            const std::size_t src = (static_cast<std::size_t>(ix) * m + iy) * m;
            const std::size_t dst = (static_cast<std::size_t>(ix) * n + iy) * n;
            for (int iz = 0; iz < n; ++iz) y[dst + iz] = buf[src + iz];
        }
}

Field PaddedConvolver::apply(const Field& q) {
    Field y;
    apply(q, y);
    return y;
}

cdouble free_kernel_origin_average(double omega, double h) {
    // Average of -exp(i*w*r)/(4*pi*r) over the ball of radius a with a^3 = 3*h^3/(4*pi):
    // -(1/h^3) * int_0^a r exp(i*w*r) dr.
    const double a = std::cbrt(3.0 / (4.0 * M_PI)) * h;
    const cdouble iw(0.0, omega);
    const cdouble eiwa = std::exp(iw * a);
    const cdouble integral = a * eiwa / iw + (eiwa - 1.0) / (omega * omega);
    return -integral / (h * h * h);
}

std::shared_ptr<const std::vector<cdouble>> free_kernel_spectrum(const Grid3& grid, double omega) {
    const int n = grid.nx;
    const int m = 2 * n;
    const double h = grid.h();
    Fft3 fft(m);
    cdouble* buf = fft.data();

    for (int ix = 0; ix < m; ++ix) {
        const double dx = ((ix < n) ? ix : ix - m) * h;
        for (int iy = 0; iy < m; ++iy) {
            const double dy = ((iy < n) ? iy : iy - m) * h;
            for (int iz = 0; iz < m; ++iz) {
                const double dz = ((iz < n) ? iz : iz - m) * h;
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                const std::size_t idx = (static_cast<std::size_t>(ix) * m + iy) * m + iz;
                if (r == 0.0) {
                    buf[idx] = free_kernel_origin_average(omega, h);
                } else {
                    buf[idx] = -std::exp(cdouble(0.0, omega * r)) / (4.0 * M_PI * r);
                }
            }
        }
    }
    fft.forward();

    // Fold quadrature weight h^3 and the 1/m^3 backward-FFT normalization into the spectrum.
    const double scale = h * h * h / static_cast<double>(fft.size());
    auto spec = std::make_shared<std::vector<cdouble>>(fft.size());
    for (std::size_t i = 0; i < fft.size(); ++i) (*spec)[i] = buf[i] * scale;
    return spec;
}

}  // namespace scatterlab
