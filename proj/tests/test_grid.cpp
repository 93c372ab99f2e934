#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "landau/grid.hpp"
#include "landau/initial_conditions.hpp"

using namespace landau;
using landau::testing::GaussianOracle;

TEST_CASE("make_grid basic geometry") {
    const VelocityGrid g = make_grid(8, 4.0);
    CHECK(g.spacing() == doctest::Approx(1.0));
    CHECK(g.size() == 512);
    // dv * n = 2L exactly
    CHECK(g.spacing() * g.n() == 2.0 * g.half_width());

    const VelocityGrid g2 = make_grid(16, 8.0);
    CHECK(g2.spacing() == doctest::Approx(1.0));
    CHECK(g2.size() == 4096);

    CHECK_THROWS_AS(make_grid(7, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(6, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(16, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(16, 0.0), std::invalid_argument);
}

TEST_CASE("node coordinates are half-offset and never hit the origin") {
    const VelocityGrid g = make_grid(8, 4.0);
    CHECK(g.axis_coord(0) == doctest::Approx(-3.5));
    CHECK(g.axis_coord(7) == doctest::Approx(3.5));
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                CHECK(g.node(i, j, k).norm2() > 0.0);
            }
        }
    }
    // symmetric under v -> -v with the half-cell offset convention
    CHECK(g.axis_coord(2) == doctest::Approx(-g.axis_coord(5)));
}

TEST_CASE("integrate: constants, unit cells, Maxwellian") {
    const VelocityGrid g = make_grid(8, 4.0);
    ScalarField ones(g);
    for (auto& v : ones.values()) v = 1.0;
    CHECK(integrate(ones) == doctest::Approx(512.0));  // (2L)^3

    ScalarField cell(g);
    cell[100] = 1.0 / g.cell_volume();
    CHECK(integrate(cell) == doctest::Approx(1.0));

    const VelocityGrid g32 = make_grid(32, 8.0);
    const ScalarField m = sample_maxwellian(g32, 1.0, {}, 1.0);
    CHECK(integrate(m) == doctest::Approx(GaussianOracle::mass).epsilon(1e-6));
}

TEST_CASE("lp_norm: exact small cases and Gaussian oracle") {
    const VelocityGrid g = make_grid(8, 4.0);
    ScalarField cell(g);
    cell[0] = 1.0 / g.cell_volume();
    CHECK(lp_norm(cell, 1.0) == doctest::Approx(1.0));
    CHECK(lp_norm(cell, 2.0) ==
          doctest::Approx(std::pow(g.cell_volume(), -0.5)));
    CHECK_THROWS_AS(lp_norm(cell, 0.5), std::invalid_argument);

    const VelocityGrid g32 = make_grid(32, 8.0);
    const ScalarField m = sample_maxwellian(g32, 1.0, {}, 1.0);
    CHECK(lp_norm(m, 2.0) ==
          doctest::Approx(GaussianOracle::l2_norm()).epsilon(1e-4));
}

TEST_CASE("weighted_moment: mass, unit cell, Gaussian oracle") {
    const VelocityGrid g32 = make_grid(32, 8.0);
    const ScalarField m = sample_maxwellian(g32, 1.0, {}, 1.0);
    CHECK(weighted_moment(m, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(weighted_moment(m, 2.0) ==
          doctest::Approx(GaussianOracle::second_moment()).epsilon(1e-4));

    // unit-mass cell at a node closest to v = 0
    const VelocityGrid g = make_grid(8, 4.0);
    ScalarField cell(g);
    const int h = g.n() / 2;
    cell.at(h, h, h) = 1.0 / g.cell_volume();
    const double w2 = 1.0 + g.node(h, h, h).norm2();
    CHECK(weighted_moment(cell, 2.0) == doctest::Approx(w2));
    CHECK_THROWS_AS(weighted_moment(cell, -1.0), std::invalid_argument);
}

TEST_CASE("quadrature linearity and norm identities") {
    const VelocityGrid g = make_grid(12, 5.0);
    const ScalarField a = landau::testing::random_smooth_field(g, 11);
    const ScalarField b = landau::testing::random_smooth_field(g, 22);
    const double alpha = 1.7, beta = -0.4;
    ScalarField combo(g);
    for (std::size_t i = 0; i < combo.values().size(); ++i) {
        combo[i] = alpha * a[i] + beta * b[i];
    }
    CHECK(integrate(combo) ==
          doctest::Approx(alpha * integrate(a) + beta * integrate(b))
              .epsilon(1e-13));

    CHECK(lp_norm(a, 1.0) == doctest::Approx(integrate(a)).epsilon(1e-14));
    CHECK(weighted_moment(a, 0.0) == doctest::Approx(lp_norm(a, 1.0)).epsilon(1e-14));
}

TEST_CASE("gradient exact on sampled polynomials") {
    const VelocityGrid g = make_grid(12, 4.0);
    ScalarField constf(g), linear(g), quad(g);
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                const Vec3 v = g.node(i, j, k);
                constf.at(i, j, k) = 3.25;
                linear.at(i, j, k) = v.x;
                quad.at(i, j, k) = v.norm2();
            }
        }
    }
    const VectorField gc = gradient(constf);
    for (int c = 0; c < 3; ++c) {
        CHECK(landau::testing::max_abs(gc.component(c)) == doctest::Approx(0.0));
    }
    const VectorField gl = gradient(linear);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(gl.component(0)[i] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(gl.component(1)[i] == doctest::Approx(0.0));
    }
    // |v|^2 -> 2v exactly, including the one-sided boundary stencils
    const VectorField gq = gradient(quad);
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                const std::size_t idx = g.index(i, j, k);
                const Vec3 v = g.node(i, j, k);
                worst = std::max(worst,
                                 std::fabs(gq.component(0)[idx] - 2.0 * v.x));
                worst = std::max(worst,
                                 std::fabs(gq.component(2)[idx] - 2.0 * v.z));
            }
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("hessian exact on sampled quadratics") {
    const VelocityGrid g = make_grid(10, 4.0);
    ScalarField f(g);
    // f = x^2 + 2 x y - z^2 + 3 y
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int k = 0; k < g.n(); ++k) {
                const Vec3 v = g.node(i, j, k);
                f.at(i, j, k) = v.x * v.x + 2.0 * v.x * v.y - v.z * v.z + 3.0 * v.y;
            }
        }
    }
    const MatrixField h = hessian(f);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const SymMat3 m = h.at(i);
        CHECK(m.xx == doctest::Approx(2.0).epsilon(1e-11));
        CHECK(m.yy == doctest::Approx(0.0).epsilon(1e-11));
        CHECK(m.zz == doctest::Approx(-2.0).epsilon(1e-11));
        CHECK(m.xy == doctest::Approx(2.0).epsilon(1e-11));
        CHECK(m.xz == doctest::Approx(0.0).epsilon(1e-11));
        CHECK(m.yz == doctest::Approx(0.0).epsilon(1e-11));
    }
}

TEST_CASE("sym3 eigenvalues: closed form vs known matrices") {
    const auto ei = sym3_eigenvalues(SymMat3::identity());
    CHECK(ei[0] == doctest::Approx(1.0));
    CHECK(ei[2] == doctest::Approx(1.0));

    const SymMat3 proj{0.0, 1.0, 1.0, 0.0, 0.0, 0.0};
    const auto ep = sym3_eigenvalues(proj);
    CHECK(ep[0] == doctest::Approx(0.0));
    CHECK(ep[1] == doctest::Approx(1.0));
    CHECK(ep[2] == doctest::Approx(1.0));

    // A = Q diag(1,2,3) Q^T for a rotation Q about the z axis by 30 degrees
    const double c = std::cos(std::numbers::pi / 6.0);
    const double s = std::sin(std::numbers::pi / 6.0);
    const SymMat3 a{c * c + 2.0 * s * s, s * s + 2.0 * c * c, 3.0,
                    c * s - 2.0 * s * c, 0.0, 0.0};
    const auto ea = sym3_eigenvalues(a);
    CHECK(ea[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ea[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ea[2] == doctest::Approx(3.0).epsilon(1e-12));
}
