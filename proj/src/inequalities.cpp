#include "landau/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/fft.hpp"

namespace landau {

double FourierField::frequency(int m) const {
    return std::numbers::pi * signed_mode(m) / half_width;
}

FourierField fourier_transform(const ScalarField& g) {
    const auto& grid = g.grid();
    const int n = grid.n();
    const std::size_t sz = grid.size();

    std::vector<std::complex<double>> in(sz);
    for (std::size_t i = 0; i < sz; ++i) in[i] = g[i];
    std::vector<std::complex<double>> dft(sz);
    ComplexFFT3D fft(n);
    fft.forward(in, dft);

    FourierField out;
    out.n = n;
    out.half_width = grid.half_width();
    out.values.resize(sz);

    // per-axis phase  exp(-i xi_m v_0) dv  with v_0 the first node coordinate
    const double v0 = grid.axis_coord(0);
    std::vector<std::complex<double>> phase(n);
    for (int m = 0; m < n; ++m) {
        const double xi = out.frequency(m);
        phase[m] = std::polar(grid.spacing(), -xi * v0);
    }
    for (int mi = 0; mi < n; ++mi) {
        for (int mj = 0; mj < n; ++mj) {
            for (int mk = 0; mk < n; ++mk) {
                const std::size_t idx = out.index(mi, mj, mk);
                out.values[idx] = dft[idx] * phase[mi] * phase[mj] * phase[mk];
            }
        }
    }
    return out;
}

double hls_ratio(const ScalarField& f, const ScalarField& g,
                 const KernelTables& tables, Convolver& conv) {
    const double gamma = tables.gamma();
    if (!(gamma > -2.0 && gamma < 0.0)) {
        throw std::invalid_argument("hls_ratio: gamma must lie in (-2, 0)");
    }
    if (!(f.grid() == g.grid())) {
        throw std::invalid_argument("hls_ratio: f and g on different grids");
    }
    const ScalarField kg =
        conv.convolve_component(g, tables, KernelTables::Comp::pow_gamma);
    std::vector<double> terms(kg.values().size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = f[i] * kg[i];
    const double numerator = pairwise_sum(terms) * f.grid().cell_volume();

    const double q = 6.0 / (6.0 + gamma);
    const double denominator = lp_norm(f, q) * lp_norm(g, q);
    if (denominator == 0.0) {
        throw std::invalid_argument("hls_ratio: zero denominator (f or g vanishes)");
    }
    return numerator / denominator;
}

double pitt_ratio(const ScalarField& g, double gamma) {
    require_gamma(gamma);
    const auto& grid = g.grid();
    const int n = grid.n();

    std::vector<double> num_terms(grid.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const double r2 = grid.node(i, j, k).norm2();
                num_terms[idx] = std::pow(r2, 0.5 * gamma) * g[idx] * g[idx];
            }
        }
    }
    const double numerator = pairwise_sum(num_terms) * grid.cell_volume();

    const FourierField gh = fourier_transform(g);
    std::vector<double> den_terms(grid.size());
    for (int mi = 0; mi < n; ++mi) {
        for (int mj = 0; mj < n; ++mj) {
            for (int mk = 0; mk < n; ++mk) {
                const std::size_t idx = gh.index(mi, mj, mk);
                const double xi2 = gh.frequency(mi) * gh.frequency(mi) +
                                   gh.frequency(mj) * gh.frequency(mj) +
                                   gh.frequency(mk) * gh.frequency(mk);
                const double w = std::pow(xi2, -0.5 * gamma);  // 0 at xi = 0
                den_terms[idx] = w * std::norm(gh.values[idx]);
            }
        }
    }
    // frequency measure (pi/L)^3 per mode, with the (2 pi)^-3 Plancherel factor
    const double dxi = std::numbers::pi / grid.half_width();
    const double measure =
        dxi * dxi * dxi / std::pow(2.0 * std::numbers::pi, 3.0);
    const double denominator = pairwise_sum(den_terms) * measure;
    if (denominator == 0.0) {
        throw std::invalid_argument("pitt_ratio: zero denominator (g vanishes)");
    }
    return numerator / denominator;
}

}  // namespace landau
