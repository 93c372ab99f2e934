#pragma once

#include <complex>
#include <vector>

#include "landau/fft.hpp"
#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace landau {

/// Zero-padded spectral linear convolution of grid fields with the
/// cell-averaged kernel tables. Padding to 2n per axis makes the circular
/// transform equal to the exact linear convolution sum
///   (K * f)(v_i) = sum_j K_avg(v_i - v_j) f(v_j) dv^3
/// for every node in the box; no wrap-around contamination.
///
/// The forward transform of f is computed once per load_density() and reused
/// by every component, which is the dominant cost saving per evaluation.
class Convolver {
  public:
    explicit Convolver(const VelocityGrid& grid);

    const VelocityGrid& grid() const { return grid_; }

    /// abar = a * f. Output symmetric PSD at every node for f >= 0.
    MatrixField convolve_a(const ScalarField& f, const KernelTables& tables);

    /// bbar = b * f.
    VectorField convolve_b(const ScalarField& f, const KernelTables& tables);

    /// cbar = c * f; <= 0 everywhere for f >= 0.
    ScalarField convolve_c(const ScalarField& f, const KernelTables& tables);

    /// Scalar-kernel convolution for any single component
    /// (used with Comp::pow_gamma and Comp::pow_gamma_plus2).
    ScalarField convolve_component(const ScalarField& f, const KernelTables& tables,
                                   KernelTables::Comp comp);

    /// All drift-diffusion coefficients from one shared transform of f.
    struct Coefficients {
        MatrixField abar;
        VectorField bbar;
        ScalarField cbar;
    };
    Coefficients coefficients(const ScalarField& f, const KernelTables& tables);

  private:
    void check_compatible(const ScalarField& f, const KernelTables& tables) const;
    void load_density(const ScalarField& f);
    void apply_component(const KernelTables& tables, KernelTables::Comp comp,
                         std::span<double> out);

    VelocityGrid grid_;
    int padded_n_;
    RealFFT3D fft_;
    std::vector<double> pad_real_;
    std::vector<std::complex<double>> f_hat_;
    std::vector<std::complex<double>> prod_;
    std::vector<double> out_pad_;
};

}  // namespace landau
