#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "landau/algebra.hpp"

namespace landau {

/// Uniform node-centered cubic lattice in velocity space.
///
/// Nodes sit at v_k = -L + (k + 1/2) dv per axis, k = 0..n-1, with
/// dv = 2L/n, so no node lies at the origin and the lattice of node
/// differences never hits z = 0 exactly either.
class VelocityGrid {
  public:
    VelocityGrid() = default;
    VelocityGrid(int n, double half_width);

    int n() const { return n_; }
    double half_width() const { return half_width_; }
    double spacing() const { return dv_; }
    double cell_volume() const { return dv_ * dv_ * dv_; }
    std::size_t size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }

    double axis_coord(int k) const { return -half_width_ + (k + 0.5) * dv_; }
    Vec3 node(int i, int j, int k) const {
        return {axis_coord(i), axis_coord(j), axis_coord(k)};
    }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    bool operator==(const VelocityGrid& o) const {
        return n_ == o.n_ && half_width_ == o.half_width_;
    }

  private:
    int n_ = 0;
    double half_width_ = 0.0;
    double dv_ = 0.0;
};

VelocityGrid make_grid(int n, double half_width);

/// One real value per grid node.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const VelocityGrid& g)
        : grid_(g), values_(g.size(), 0.0) {}
    ScalarField(const VelocityGrid& g, std::vector<double> values);

    const VelocityGrid& grid() const { return grid_; }
    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& at(int i, int j, int k) { return values_[grid_.index(i, j, k)]; }
    double at(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }

    bool all_finite() const;

  private:
    VelocityGrid grid_;
    std::vector<double> values_;
};

/// Three reals per node, stored component-major.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(const VelocityGrid& g) : grid_(g) {
        for (auto& c : comps_) c.assign(g.size(), 0.0);
    }

    const VelocityGrid& grid() const { return grid_; }
    std::span<double> component(int c) { return comps_[c]; }
    std::span<const double> component(int c) const { return comps_[c]; }

    Vec3 at(std::size_t i) const {
        return {comps_[0][i], comps_[1][i], comps_[2][i]};
    }
    void set(std::size_t i, const Vec3& v) {
        comps_[0][i] = v.x;
        comps_[1][i] = v.y;
        comps_[2][i] = v.z;
    }

    bool all_finite() const;

  private:
    VelocityGrid grid_;
    std::array<std::vector<double>, 3> comps_;
};

/// Symmetric 3x3 per node; six stored components keep symmetry exact.
class MatrixField {
  public:
    MatrixField() = default;
    explicit MatrixField(const VelocityGrid& g) : grid_(g) {
        for (auto& c : comps_) c.assign(g.size(), 0.0);
    }

    const VelocityGrid& grid() const { return grid_; }
    // component order: xx, yy, zz, xy, xz, yz
    std::span<double> component(int c) { return comps_[c]; }
    std::span<const double> component(int c) const { return comps_[c]; }

    SymMat3 at(std::size_t i) const {
        return {comps_[0][i], comps_[1][i], comps_[2][i],
                comps_[3][i], comps_[4][i], comps_[5][i]};
    }
    void set(std::size_t i, const SymMat3& m) {
        comps_[0][i] = m.xx;
        comps_[1][i] = m.yy;
        comps_[2][i] = m.zz;
        comps_[3][i] = m.xy;
        comps_[4][i] = m.xz;
        comps_[5][i] = m.yz;
    }

    bool all_finite() const;

  private:
    VelocityGrid grid_;
    std::array<std::vector<double>, 6> comps_;
};

/// Deterministic pairwise (tree) summation; reproducible bit-for-bit
/// independent of thread count because it is evaluated in a fixed order.
double pairwise_sum(std::span<const double> x);

/// Riemann sum  sum_k g_k dv^3.
double integrate(const ScalarField& g);

/// (sum |g|^p dv^3)^(1/p), p >= 1.
double lp_norm(const ScalarField& g, double p);

/// Moment of order s:  sum |g| (1+|v|^2)^(s/2) dv^3, s >= 0.
double weighted_moment(const ScalarField& g, double s);

/// Second-order central differences; one-sided second-order stencils at the
/// outermost layer. Exact for sampled quadratics.
VectorField gradient(const ScalarField& g);

/// Node-centered Hessian: direct three-point second differences on the
/// diagonal, gradient-of-gradient for mixed entries. Exact on quadratics.
MatrixField hessian(const ScalarField& g);

}  // namespace landau
