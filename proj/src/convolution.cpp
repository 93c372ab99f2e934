#include "landau/convolution.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace landau {

Convolver::Convolver(const VelocityGrid& grid)
    : grid_(grid),
      padded_n_(2 * grid.n()),
      fft_(padded_n_),
      pad_real_(fft_.real_size(), 0.0),
      f_hat_(fft_.complex_size()),
      prod_(fft_.complex_size()),
      out_pad_(fft_.real_size()) {}

void Convolver::check_compatible(const ScalarField& f,
                                 const KernelTables& tables) const {
    if (!(f.grid() == grid_)) {
        throw std::invalid_argument("convolve: field grid does not match convolver");
    }
    if (!(tables.grid() == grid_)) {
        throw std::invalid_argument("convolve: kernel tables built for a different grid");
    }
}

void Convolver::load_density(const ScalarField& f) {
    const int n = grid_.n();
    const int np = padded_n_;
    double min_val = 0.0, max_abs = 0.0;
    std::fill(pad_real_.begin(), pad_real_.end(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t src = grid_.index(i, j, 0);
            const std::size_t dst = (static_cast<std::size_t>(i) * np + j) * np;
            for (int k = 0; k < n; ++k) {
                const double v = f[src + k];
                pad_real_[dst + k] = v;
                if (v < min_val) min_val = v;
                const double a = std::fabs(v);
                if (a > max_abs) max_abs = a;
            }
        }
    }
    // Small negatives from time stepping are tolerated silently; anything
    // beyond that deserves a warning but not a failure.
    if (min_val < 0.0 && max_abs > 0.0 && -min_val > 1e-4 * max_abs) {
        std::cerr << "convolve: density has negative values (min " << min_val
                  << ", max| | " << max_abs << ")\n";
    }
    fft_.forward(pad_real_, f_hat_);
}

void Convolver::apply_component(const KernelTables& tables,
                                KernelTables::Comp comp, std::span<double> out) {
    const auto k_hat = tables.spectrum(comp);
    for (std::size_t i = 0; i < prod_.size(); ++i) prod_[i] = k_hat[i] * f_hat_[i];
    fft_.inverse(prod_, out_pad_);
    const int n = grid_.n();
    const int np = padded_n_;
    const double vol = grid_.cell_volume();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t src = (static_cast<std::size_t>(i) * np + j) * np;
            const std::size_t dst = grid_.index(i, j, 0);
            for (int k = 0; k < n; ++k) {
                out[dst + k] = out_pad_[src + k] * vol;
            }
        }
    }
}

MatrixField Convolver::convolve_a(const ScalarField& f, const KernelTables& tables) {
    check_compatible(f, tables);
    load_density(f);
    MatrixField abar(grid_);
    for (int c = 0; c < 6; ++c) {
        apply_component(tables, static_cast<KernelTables::Comp>(c), abar.component(c));
    }
    return abar;
}

VectorField Convolver::convolve_b(const ScalarField& f, const KernelTables& tables) {
    check_compatible(f, tables);
    load_density(f);
    VectorField bbar(grid_);
    for (int c = 0; c < 3; ++c) {
        apply_component(tables,
                        static_cast<KernelTables::Comp>(
                            static_cast<int>(KernelTables::Comp::bx) + c),
                        bbar.component(c));
    }
    return bbar;
}

ScalarField Convolver::convolve_c(const ScalarField& f, const KernelTables& tables) {
    check_compatible(f, tables);
    load_density(f);
    ScalarField cbar(grid_);
    apply_component(tables, KernelTables::Comp::c, cbar.values());
    return cbar;
}

ScalarField Convolver::convolve_component(const ScalarField& f,
                                          const KernelTables& tables,
                                          KernelTables::Comp comp) {
    check_compatible(f, tables);
    load_density(f);
    ScalarField out(grid_);
    apply_component(tables, comp, out.values());
    return out;
}

Convolver::Coefficients Convolver::coefficients(const ScalarField& f,
                                                const KernelTables& tables) {
    check_compatible(f, tables);
    load_density(f);
    Coefficients co{MatrixField(grid_), VectorField(grid_), ScalarField(grid_)};
    for (int c = 0; c < 6; ++c) {
        apply_component(tables, static_cast<KernelTables::Comp>(c),
                        co.abar.component(c));
    }
    for (int c = 0; c < 3; ++c) {
        apply_component(tables,
                        static_cast<KernelTables::Comp>(
                            static_cast<int>(KernelTables::Comp::bx) + c),
                        co.bbar.component(c));
    }
    apply_component(tables, KernelTables::Comp::c, co.cbar.values());
    return co;
}

}  // namespace landau
