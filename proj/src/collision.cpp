#include "landau/collision.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace landau {

namespace {

// Trilinear (Q1) element data on the reference cube [0,1]^3: 8 nodes with
// corner offsets nu in {0,1}^3, 2x2x2 Gauss points. Reference-space basis
// gradients evaluated at every Gauss point.
struct Q1Element {
    std::array<std::array<Vec3, 8>, 8> grad;  // [gauss][node]

    Q1Element() {
        const double c0 = 0.5 - 0.5 / std::sqrt(3.0);
        const double c1 = 0.5 + 0.5 / std::sqrt(3.0);
        int g = 0;
        for (int gx = 0; gx < 2; ++gx) {
            for (int gy = 0; gy < 2; ++gy) {
                for (int gz = 0; gz < 2; ++gz, ++g) {
                    const Vec3 xi{gx ? c1 : c0, gy ? c1 : c0, gz ? c1 : c0};
                    int node = 0;
                    for (int nx = 0; nx < 2; ++nx) {
                        for (int ny = 0; ny < 2; ++ny) {
                            for (int nz = 0; nz < 2; ++nz, ++node) {
                                const double lx = nx ? xi.x : 1.0 - xi.x;
                                const double ly = ny ? xi.y : 1.0 - xi.y;
                                const double lz = nz ? xi.z : 1.0 - xi.z;
                                grad[g][node] = {(nx ? 1.0 : -1.0) * ly * lz,
                                                 (ny ? 1.0 : -1.0) * lx * lz,
                                                 (nz ? 1.0 : -1.0) * lx * ly};
                            }
                        }
                    }
                }
            }
        }
    }
};

const Q1Element& q1_element() {
    static const Q1Element el;
    return el;
}

// Diffusion part div(abar grad f) as the (negated) gradient of the discrete
// Dirichlet energy  E = 1/2 sum_cells int grad(f)^T A grad(f), with the
// trilinear interpolant per dual cell, 2x2x2 Gauss quadrature, and the cell
// coefficient A averaged over the 8 corner nodes. This operator is symmetric
// negative semidefinite whenever abar is PSD, so the semi-discrete diffusion
// cannot feed growing modes (the face-flux form of the mixed terms does, at
// the near-degenerate box corners). Natural boundary condition: zero flux.
// Row sums vanish exactly, so the mass sum telescopes to zero.
void add_diffusion(const ScalarField& f, const MatrixField& abar, ScalarField& q) {
    const auto& grid = f.grid();
    const int n = grid.n();
    const double dv = grid.spacing();
    const double scale = 1.0 / (8.0 * dv * dv);
    const auto& el = q1_element();

    // cells at even/odd i never share nodes within a pass
    for (int parity = 0; parity < 2; ++parity) {
#pragma omp parallel for schedule(static)
        for (int i = parity; i < n - 1; i += 2) {
            for (int j = 0; j < n - 1; ++j) {
                for (int k = 0; k < n - 1; ++k) {
                    std::array<std::size_t, 8> idx;
                    std::array<double, 8> fv;
                    SymMat3 a{};
                    int node = 0;
                    for (int nx = 0; nx < 2; ++nx) {
                        for (int ny = 0; ny < 2; ++ny) {
                            for (int nz = 0; nz < 2; ++nz, ++node) {
                                idx[node] = grid.index(i + nx, j + ny, k + nz);
                                fv[node] = f[idx[node]];
                                a = a + abar.at(idx[node]);
                            }
                        }
                    }
                    a = a * 0.125;

                    std::array<double, 8> acc{};
                    for (int g = 0; g < 8; ++g) {
                        Vec3 gf{};
                        for (int m = 0; m < 8; ++m) gf = gf + el.grad[g][m] * fv[m];
                        const Vec3 h = a.apply(gf);
                        for (int m = 0; m < 8; ++m) acc[m] += el.grad[g][m].dot(h);
                    }
                    for (int m = 0; m < 8; ++m) q[idx[m]] -= scale * acc[m];
                }
            }
        }
    }
}

// Advective fluxes -bbar f through the minus-face of each node along `axis`,
// face values by arithmetic averages; zero through the outer boundary.
std::vector<double> advective_fluxes(int axis, const ScalarField& f,
                                     const VectorField& bbar) {
    const auto& grid = f.grid();
    const int n = grid.n();
    std::vector<double> flux(grid.size(), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                int pos[3] = {i, j, k};
                if (pos[axis] == 0) continue;
                const std::size_t right = grid.index(i, j, k);
                pos[axis] -= 1;
                const std::size_t left = grid.index(pos[0], pos[1], pos[2]);
                const double b_face = 0.5 * (bbar.component(axis)[left] +
                                             bbar.component(axis)[right]);
                flux[right] = -b_face * 0.5 * (f[left] + f[right]);
            }
        }
    }
    return flux;
}

}  // namespace

ScalarField collision_operator(const ScalarField& f,
                               const Convolver::Coefficients& coeffs) {
    const auto& grid = f.grid();
    const int n = grid.n();
    const double inv_dv = 1.0 / grid.spacing();

    ScalarField q(grid);
    add_diffusion(f, coeffs.abar, q);

    for (int axis = 0; axis < 3; ++axis) {
        const std::vector<double> flux = advective_fluxes(axis, f, coeffs.bbar);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    int pos[3] = {i, j, k};
                    const std::size_t idx = grid.index(i, j, k);
                    // plus-face flux is the minus-face flux of the next node,
                    // zero on the outer boundary
                    double plus = 0.0;
                    if (pos[axis] < n - 1) {
                        pos[axis] += 1;
                        plus = flux[grid.index(pos[0], pos[1], pos[2])];
                    }
                    q[idx] += (plus - flux[idx]) * inv_dv;
                }
            }
        }
    }
    return q;
}

ScalarField collision_operator(const ScalarField& f, const KernelTables& tables,
                               Convolver& conv) {
    return collision_operator(f, conv.coefficients(f, tables));
}

double weak_form_operator(const Vec3& phi_grad, const SymMat3& phi_hess,
                          const Vec3& v, const Vec3& v_star, double gamma) {
    const Vec3 z = v - v_star;
    if (z.norm2() == 0.0) {
        throw std::invalid_argument("weak_form_operator: v = v* is singular");
    }
    const SymMat3 a = kernel_a(z, gamma);
    const Vec3 b = kernel_b(z, gamma);
    const double contraction =
        a.xx * phi_hess.xx + a.yy * phi_hess.yy + a.zz * phi_hess.zz +
        2.0 * (a.xy * phi_hess.xy + a.xz * phi_hess.xz + a.yz * phi_hess.yz);
    return 0.5 * contraction + b.dot(phi_grad);
}

double weak_form_rhs(const ScalarField& f, const ScalarField& phi, double gamma) {
    require_gamma(gamma);
    if (!(f.grid() == phi.grid())) {
        throw std::invalid_argument("weak_form_rhs: f and phi on different grids");
    }
    const auto& grid = f.grid();
    const int n = grid.n();
    const VectorField pg = gradient(phi);
    const MatrixField ph = hessian(phi);

    const std::size_t nodes = grid.size();
    std::vector<double> partial(nodes, 0.0);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const double fv = f[idx];
                if (fv == 0.0) continue;
                const Vec3 v = grid.node(i, j, k);
                const Vec3 g = pg.at(idx);
                const SymMat3 h = ph.at(idx);
                double row = 0.0;
                for (int i2 = 0; i2 < n; ++i2) {
                    for (int j2 = 0; j2 < n; ++j2) {
                        for (int k2 = 0; k2 < n; ++k2) {
                            if (i2 == i && j2 == j && k2 == k) continue;
                            const double fs = f[grid.index(i2, j2, k2)];
                            if (fs == 0.0) continue;
                            row += fv * fs *
                                   weak_form_operator(g, h, v, grid.node(i2, j2, k2),
                                                      gamma);
                        }
                    }
                }
                partial[idx] = row;
            }
        }
    }
    const double vol = grid.cell_volume();
    return pairwise_sum(partial) * vol * vol;
}

}  // namespace landau
