#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace landau {

/// Real-to-complex 3D FFT of cubic size N^3 (FFTW behind the scenes).
/// Plans use deterministic (estimate-mode) planning so repeated runs of the
/// same build produce identical bytes. One instance is not thread-safe;
/// callers serialize transform execution.
class RealFFT3D {
  public:
    explicit RealFFT3D(int n);
    ~RealFFT3D();

    RealFFT3D(const RealFFT3D&) = delete;
    RealFFT3D& operator=(const RealFFT3D&) = delete;

    int n() const { return n_; }
    std::size_t real_size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }
    std::size_t complex_size() const {
        return static_cast<std::size_t>(n_) * n_ * (n_ / 2 + 1);
    }

    /// in: N^3 reals (row-major, z fastest) -> out: N*N*(N/2+1) complex.
    void forward(std::span<const double> in, std::span<std::complex<double>> out);

    /// Inverse of forward, normalized by 1/N^3.
    void inverse(std::span<const std::complex<double>> in, std::span<double> out);

  private:
    struct Impl;
    int n_;
    std::unique_ptr<Impl> impl_;
};

/// Unnormalized complex 3D DFT of cubic size n^3 used by the Fourier-side
/// inequality checks. Forward sign convention: exp(-i xi . v).
class ComplexFFT3D {
  public:
    explicit ComplexFFT3D(int n);
    ~ComplexFFT3D();

    ComplexFFT3D(const ComplexFFT3D&) = delete;
    ComplexFFT3D& operator=(const ComplexFFT3D&) = delete;

    int n() const { return n_; }

    void forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out);

  private:
    struct Impl;
    int n_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace landau
