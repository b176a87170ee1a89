#pragma once

#include <memory>
#include <vector>

#include "scatterlab/grid.hpp"

namespace scatterlab {

/// In-place complex 3d FFT of size m^3 backed by FFTW.  Plans are created with
/// FFTW_ESTIMATE so repeated runs pick the same algorithm and stay bit-reproducible.
/// One Fft3 owns its buffer; it is not thread-safe, use one instance per worker.
class Fft3 {
  public:
    explicit Fft3(int m);
    ~Fft3();
    Fft3(const Fft3&) = delete;
    Fft3& operator=(const Fft3&) = delete;

    int m() const { return m_; }
    std::size_t size() const { return static_cast<std::size_t>(m_) * m_ * m_; }

    cdouble* data() { return buf_; }
    const cdouble* data() const { return buf_; }

    void forward();   // unnormalized
    void backward();  // unnormalized; forward+backward scales by m^3

  private:
    int m_;
    cdouble* buf_;
    void* plan_fwd_;
    void* plan_bwd_;
};

/// Convolution multiplier on the zero-padded (2*nx)^3 box.  Holds the kernel
/// spectrum S so that apply(q) = IFFT(S .* FFT(pad(q))) restricted to the
/// physical nx^3 corner; all quadrature/normalization factors live inside S.
class PaddedConvolver {
  public:
    PaddedConvolver(const Grid3& grid, std::shared_ptr<const std::vector<cdouble>> spectrum);

    const Grid3& grid() const { return grid_; }
    int padded() const { return fft_.m(); }

    /// y = (kernel * q) on the nx^3 grid; q and y are nx^3 fields.
    void apply(const Field& q, Field& y);
    Field apply(const Field& q);

  private:
    Grid3 grid_;
    std::shared_ptr<const std::vector<cdouble>> spectrum_;
    Fft3 fft_;
};

/// Frequency of padded-grid mode index i in [0, m): 2*pi*s/(m*h) with s the
/// signed index (i for i < m/2, i - m otherwise).
inline double fft_freq(int i, int m, double h) {
    const int s = (i < m / 2) ? i : i - m;
    return 2.0 * M_PI * s / (m * h);
}

/// Spectrum of the outgoing free-space Helmholtz kernel G0(x) = -exp(i*omega*|x|)/(4*pi*|x|)
/// sampled on the padded difference grid.  The singular origin cell is replaced by the
/// analytic average of G0 over the equal-volume ball.  The returned spectrum folds in the
/// h^3 quadrature weight and 1/M^3 FFT normalization, matching PaddedConvolver::apply.
std::shared_ptr<const std::vector<cdouble>> free_kernel_spectrum(const Grid3& grid, double omega);

/// Analytic average of G0 over the ball of volume h^3 centred at the origin.
cdouble free_kernel_origin_average(double omega, double h);

}  // namespace scatterlab
