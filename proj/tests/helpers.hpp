#pragma once

// Shared test oracles. Everything here is independent of the spectral
// implementation path it cross-checks: direct O(N^2) convolution sums and
// closed-form Gaussian integrals.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "landau/convolution.hpp"
#include "landau/grid.hpp"
#include "landau/initial_conditions.hpp"
#include "landau/kernel.hpp"

namespace landau::testing {

/// Direct convolution sum  out(v_i) = sum_j K_avg(v_i - v_j) f(v_j) dv^3
/// for a single kernel component. O(N^2); use at small n only.
inline ScalarField direct_convolve(const ScalarField& f, const KernelTables& t,
                                   KernelTables::Comp comp) {
    const auto& grid = f.grid();
    const int n = grid.n();
    const auto table = t.table(comp);
    ScalarField out(grid);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                double acc = 0.0;
                for (int i2 = 0; i2 < n; ++i2) {
                    const int mi = t.index_of(i - i2);
                    for (int j2 = 0; j2 < n; ++j2) {
                        const int mj = t.index_of(j - j2);
                        for (int k2 = 0; k2 < n; ++k2) {
                            const int mk = t.index_of(k - k2);
                            acc += table[t.padded_index(mi, mj, mk)] *
                                   f.at(i2, j2, k2);
                        }
                    }
                }
                out.at(i, j, k) = acc * grid.cell_volume();
            }
        }
    }
    return out;
}

inline double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(a[i] - b[i]));
    }
    return m;
}

/// Standard Maxwellian (2 pi)^{-3/2} exp(-|v|^2/2): closed-form values.
struct GaussianOracle {
    static constexpr double mass = 1.0;
    static double energy() { return 1.5; }                       // 1/2 int M |v|^2
    static double second_moment() { return 4.0; }                // int M (1+|v|^2)
    static double l2_norm() {
        return std::pow(4.0 * std::numbers::pi, -0.75);          // sqrt(int M^2)
    }
    static double entropy() {
        return -1.5 * (std::log(2.0 * std::numbers::pi) + 1.0);  // int M log M
    }
};

/// Smooth random test field: a sum of a few positive Gaussian blobs with a
/// fixed-seed RNG, compactly concentrated inside the box.
inline ScalarField random_smooth_field(const VelocityGrid& grid, unsigned seed,
                                       int blobs = 3) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> pos(-0.4 * grid.half_width(),
                                               0.4 * grid.half_width());
    std::uniform_real_distribution<double> amp(0.2, 1.0);
    std::uniform_real_distribution<double> temp(0.5, 1.5);
    ScalarField f(grid);
    for (int b = 0; b < blobs; ++b) {
        const Vec3 mu{pos(rng), pos(rng), pos(rng)};
        const ScalarField g = sample_maxwellian(grid, amp(rng), mu, temp(rng));
        for (std::size_t i = 0; i < f.values().size(); ++i) f[i] += g[i];
    }
    return f;
}

}  // namespace landau::testing
