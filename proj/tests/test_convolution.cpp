#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "landau/convolution.hpp"
#include "landau/initial_conditions.hpp"

using namespace landau;
using landau::testing::direct_convolve;
using landau::testing::max_abs;
using landau::testing::max_abs_diff;

namespace {

double rel_table_diff(std::span<const double> spectral, const ScalarField& direct) {
    const double scale = std::max(max_abs(direct.values()), 1e-300);
    return max_abs_diff(spectral, direct.values()) / scale;
}

}  // namespace

TEST_CASE("spectral convolution equals the direct sum at n = 8") {
    const VelocityGrid g = make_grid(8, 4.0);
    Convolver conv(g);
    for (double gamma : {-2.0, -1.0}) {
        const KernelTables t = KernelTables::build(g, gamma);
        const ScalarField f = landau::testing::random_smooth_field(g, 5);

        const MatrixField abar = conv.convolve_a(f, t);
        const VectorField bbar = conv.convolve_b(f, t);
        const ScalarField cbar = conv.convolve_c(f, t);

        for (int c = 0; c < 6; ++c) {
            const ScalarField oracle =
                direct_convolve(f, t, static_cast<KernelTables::Comp>(c));
            CHECK(rel_table_diff(abar.component(c), oracle) < 1e-10);
        }
        for (int c = 0; c < 3; ++c) {
            const ScalarField oracle = direct_convolve(
                f, t,
                static_cast<KernelTables::Comp>(
                    static_cast<int>(KernelTables::Comp::bx) + c));
            CHECK(rel_table_diff(bbar.component(c), oracle) < 1e-10);
        }
        const ScalarField oracle_c = direct_convolve(f, t, KernelTables::Comp::c);
        CHECK(rel_table_diff(cbar.values(), oracle_c) < 1e-10);
    }
}

TEST_CASE("unit-mass cell reproduces the kernel table") {
    const VelocityGrid g = make_grid(8, 4.0);
    const KernelTables t = KernelTables::build(g, -2.0);
    Convolver conv(g);

    ScalarField f(g);
    const int ci = 3, cj = 4, ck = 2;
    f.at(ci, cj, ck) = 1.0 / g.cell_volume();

    const MatrixField abar = conv.convolve_a(f, t);
    const auto axx = t.table(KernelTables::Comp::axx);
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                const double expected = axx[t.padded_index(
                    t.index_of(i - ci), t.index_of(j - cj), t.index_of(k - ck))];
                worst = std::max(worst, std::fabs(abar.component(0)[g.index(i, j, k)] -
                                                  expected));
            }
        }
    }
    CHECK(worst < 1e-12);

    // b reproduction for a unit cell at the center offset
    const VectorField bbar = conv.convolve_b(f, t);
    const auto bx = t.table(KernelTables::Comp::bx);
    const std::size_t probe = g.index(6, 4, 2);
    CHECK(bbar.component(0)[probe] ==
          doctest::Approx(bx[t.padded_index(t.index_of(3), 0, 0)]).epsilon(1e-12));
}

TEST_CASE("zero density gives zero coefficients") {
    const VelocityGrid g = make_grid(8, 4.0);
    const KernelTables t = KernelTables::build(g, -1.0);
    Convolver conv(g);
    const ScalarField zero(g);
    const auto co = conv.coefficients(zero, t);
    for (int c = 0; c < 6; ++c) CHECK(max_abs(co.abar.component(c)) < 1e-15);
    for (int c = 0; c < 3; ++c) CHECK(max_abs(co.bbar.component(c)) < 1e-15);
    CHECK(max_abs(co.cbar.values()) < 1e-15);
}

TEST_CASE("linearity: two unit cells = sum of shifted kernels") {
    const VelocityGrid g = make_grid(8, 4.0);
    const KernelTables t = KernelTables::build(g, -2.0);
    Convolver conv(g);

    ScalarField f1(g), f2(g), both(g);
    f1.at(1, 1, 1) = 1.0 / g.cell_volume();
    f2.at(5, 3, 6) = 1.0 / g.cell_volume();
    both.at(1, 1, 1) = 1.0 / g.cell_volume();
    both.at(5, 3, 6) = 1.0 / g.cell_volume();

    const ScalarField c1 = conv.convolve_c(f1, t);
    const ScalarField c2 = conv.convolve_c(f2, t);
    const ScalarField cb = conv.convolve_c(both, t);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::fabs(cb[i] - c1[i] - c2[i]));
    }
    CHECK(worst < 1e-11 * max_abs(cb.values()));
}

TEST_CASE("coefficient signs and structure for nonnegative densities") {
    const VelocityGrid g = make_grid(16, 5.0);
    const KernelTables t = KernelTables::build(g, -2.0);
    Convolver conv(g);
    const ScalarField m = sample_maxwellian(g, 1.0, {0.4, 0.0, 0.0}, 0.9);
    const auto co = conv.coefficients(m, t);

    double cbar_max = -1e300;
    double min_eig = 1e300;
    for (std::size_t i = 0; i < g.size(); ++i) {
        cbar_max = std::max(cbar_max, co.cbar[i]);
        min_eig = std::min(min_eig, sym3_eig_min(co.abar.at(i)));
    }
    CHECK(cbar_max <= 1e-12);   // cbar <= 0 everywhere
    CHECK(min_eig > -1e-12);    // abar PSD at every node

    // trace identity: trace(abar) = 2 (|.|^{gamma+2} * f)
    const ScalarField tr2 =
        conv.convolve_component(m, t, KernelTables::Comp::pow_gamma_plus2);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::fabs(co.abar.at(i).trace() - 2.0 * tr2[i]));
    }
    CHECK(worst < 1e-10 * max_abs(tr2.values()));
}

TEST_CASE("translation equivariance on the padded lattice") {
    const VelocityGrid g = make_grid(8, 4.0);
    const KernelTables t = KernelTables::build(g, -1.0);
    Convolver conv(g);

    ScalarField f(g), f_shift(g);
    f.at(2, 2, 2) = 1.0;
    f.at(3, 2, 2) = 0.5;
    f_shift.at(2, 3, 4) = 1.0;  // shifted by (0, 1, 2)
    f_shift.at(3, 3, 4) = 0.5;

    const ScalarField c0 = conv.convolve_c(f, t);
    const ScalarField c1 = conv.convolve_c(f_shift, t);
    // compare on the interior where both stay within the box
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j + 1 < g.n(); ++j) {
            for (int k = 0; k + 2 < g.n(); ++k) {
                worst = std::max(worst, std::fabs(c0.at(i, j, k) -
                                                  c1.at(i, j + 1, k + 2)));
            }
        }
    }
    CHECK(worst < 1e-12 * max_abs(c0.values()));
}

TEST_CASE("cbar radial monotonicity for a Maxwellian at gamma = -2") {
    const VelocityGrid g = make_grid(16, 5.0);
    const KernelTables t = KernelTables::build(g, -2.0);
    Convolver conv(g);
    const ScalarField m = sample_maxwellian(g, 1.0, {}, 1.0);
    const ScalarField cbar = conv.convolve_c(m, t);

    // |cbar| decreasing along the +x axis from the center, cbar(0) < 0
    const int h = g.n() / 2;
    double prev = -cbar.at(h, h, h);
    CHECK(prev > 0.0);
    for (int i = h + 1; i < g.n(); ++i) {
        const double cur = -cbar.at(i, h, h);
        CHECK(cur < prev);
        prev = cur;
    }

    // cross-check against the direct sum at n = 16
    const ScalarField oracle = direct_convolve(m, t, KernelTables::Comp::c);
    CHECK(rel_table_diff(cbar.values(), oracle) < 1e-8);
}

TEST_CASE("grid/table mismatch is rejected") {
    const VelocityGrid g = make_grid(8, 4.0);
    const VelocityGrid g2 = make_grid(8, 5.0);
    const KernelTables t2 = KernelTables::build(g2, -1.0);
    Convolver conv(g);
    const ScalarField f(g);
    CHECK_THROWS_AS(conv.convolve_c(f, t2), std::invalid_argument);
    const ScalarField f2(g2);
    CHECK_THROWS_AS(conv.convolve_c(f2, KernelTables::build(g, -1.0)),
                    std::invalid_argument);
}
