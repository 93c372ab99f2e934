#include "landau/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace landau {

struct RealFFT3D::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;

    ~Impl() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (real) fftw_free(real);
        if (cplx) fftw_free(cplx);
    }
};

RealFFT3D::RealFFT3D(int n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n < 2) throw std::invalid_argument("RealFFT3D: n must be >= 2");
    impl_->real = fftw_alloc_real(real_size());
    impl_->cplx = fftw_alloc_complex(complex_size());
    if (!impl_->real || !impl_->cplx) throw std::bad_alloc();
    impl_->fwd = fftw_plan_dft_r2c_3d(n, n, n, impl_->real, impl_->cplx,
                                      FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_c2r_3d(n, n, n, impl_->cplx, impl_->real,
                                      FFTW_ESTIMATE);
    if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("RealFFT3D: planning failed");
}

RealFFT3D::~RealFFT3D() = default;

void RealFFT3D::forward(std::span<const double> in,
                        std::span<std::complex<double>> out) {
    if (in.size() != real_size() || out.size() != complex_size()) {
        throw std::invalid_argument("RealFFT3D::forward: size mismatch");
    }
    std::memcpy(impl_->real, in.data(), in.size() * sizeof(double));
    fftw_execute(impl_->fwd);
    std::memcpy(out.data(), impl_->cplx, out.size() * sizeof(std::complex<double>));
}

void RealFFT3D::inverse(std::span<const std::complex<double>> in,
                        std::span<double> out) {
    if (in.size() != complex_size() || out.size() != real_size()) {
        throw std::invalid_argument("RealFFT3D::inverse: size mismatch");
    }
    std::memcpy(impl_->cplx, in.data(), in.size() * sizeof(std::complex<double>));
    fftw_execute(impl_->bwd);
    const double scale = 1.0 / static_cast<double>(real_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = impl_->real[i] * scale;
}

struct ComplexFFT3D::Impl {
    fftw_plan fwd = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;

    ~Impl() {
        if (fwd) fftw_destroy_plan(fwd);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

ComplexFFT3D::ComplexFFT3D(int n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n < 2) throw std::invalid_argument("ComplexFFT3D: n must be >= 2");
    const std::size_t sz = static_cast<std::size_t>(n) * n * n;
    impl_->in = fftw_alloc_complex(sz);
    impl_->out = fftw_alloc_complex(sz);
    if (!impl_->in || !impl_->out) throw std::bad_alloc();
    impl_->fwd = fftw_plan_dft_3d(n, n, n, impl_->in, impl_->out, FFTW_FORWARD,
                                  FFTW_ESTIMATE);
    if (!impl_->fwd) throw std::runtime_error("ComplexFFT3D: planning failed");
}

ComplexFFT3D::~ComplexFFT3D() = default;

void ComplexFFT3D::forward(std::span<const std::complex<double>> in,
                           std::span<std::complex<double>> out) {
    const std::size_t sz = static_cast<std::size_t>(n_) * n_ * n_;
    if (in.size() != sz || out.size() != sz) {
        throw std::invalid_argument("ComplexFFT3D::forward: size mismatch");
    }
    std::memcpy(impl_->in, in.data(), sz * sizeof(std::complex<double>));
    fftw_execute(impl_->fwd);
    std::memcpy(out.data(), impl_->out, sz * sizeof(std::complex<double>));
}

}  // namespace landau
