#include "landau/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

VelocityGrid::VelocityGrid(int n, double half_width)
    : n_(n), half_width_(half_width), dv_(2.0 * half_width / n) {}

VelocityGrid make_grid(int n, double half_width) {
    if (n < 8 || n % 2 != 0) {
        throw std::invalid_argument(
            "grid: n must be an even integer >= 8, got " + std::to_string(n));
    }
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("grid: half_width L must be positive");
    }
    return VelocityGrid(n, half_width);
}

ScalarField::ScalarField(const VelocityGrid& g, std::vector<double> values)
    : grid_(g), values_(std::move(values)) {
    if (values_.size() != g.size()) {
        throw std::invalid_argument("ScalarField: value count does not match grid");
    }
}

namespace {

bool span_finite(std::span<const double> x) {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace

bool ScalarField::all_finite() const { return span_finite(values_); }

bool VectorField::all_finite() const {
    for (int c = 0; c < 3; ++c) {
        if (!span_finite(comps_[c])) return false;
    }
    return true;
}

bool MatrixField::all_finite() const {
    for (int c = 0; c < 6; ++c) {
        if (!span_finite(comps_[c])) return false;
    }
    return true;
}

double pairwise_sum(std::span<const double> x) {
    constexpr std::size_t block = 64;
    const std::size_t n = x.size();
    if (n <= block) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x.subspan(0, half)) + pairwise_sum(x.subspan(half));
}

double integrate(const ScalarField& g) {
    return pairwise_sum(g.values()) * g.grid().cell_volume();
}

double lp_norm(const ScalarField& g, double p) {
    if (!(p >= 1.0)) {
        throw std::invalid_argument("lp_norm: p must be >= 1");
    }
    const auto vals = g.values();
    std::vector<double> pow_abs(vals.size());
    if (p == 1.0) {
        for (std::size_t i = 0; i < vals.size(); ++i) pow_abs[i] = std::fabs(vals[i]);
    } else if (p == 2.0) {
        for (std::size_t i = 0; i < vals.size(); ++i) pow_abs[i] = vals[i] * vals[i];
    } else {
        for (std::size_t i = 0; i < vals.size(); ++i)
            pow_abs[i] = std::pow(std::fabs(vals[i]), p);
    }
    const double s = pairwise_sum(pow_abs) * g.grid().cell_volume();
    return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

double weighted_moment(const ScalarField& g, double s) {
    if (!(s >= 0.0)) {
        throw std::invalid_argument("weighted_moment: s must be >= 0");
    }
    const auto& grid = g.grid();
    const int n = grid.n();
    std::vector<double> terms(g.values().size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const double w2 = 1.0 + grid.node(i, j, k).norm2();
                terms[idx] = std::fabs(g[idx]) * std::pow(w2, 0.5 * s);
            }
        }
    }
    return pairwise_sum(terms) * grid.cell_volume();
}

namespace {

// d/dx along one axis: central interior, one-sided second order at the ends.
inline double axis_derivative(const ScalarField& g, int i, int j, int k,
                              int axis, double inv_2dv) {
    const auto& grid = g.grid();
    const int n = grid.n();
    int c[3] = {i, j, k};
    const int pos = c[axis];
    auto val = [&](int p) {
        int cc[3] = {i, j, k};
        cc[axis] = p;
        return g.at(cc[0], cc[1], cc[2]);
    };
    if (pos == 0) {
        return (-3.0 * val(0) + 4.0 * val(1) - val(2)) * inv_2dv;
    }
    if (pos == n - 1) {
        return (3.0 * val(n - 1) - 4.0 * val(n - 2) + val(n - 3)) * inv_2dv;
    }
    return (val(pos + 1) - val(pos - 1)) * inv_2dv;
}

inline double axis_second_derivative(const ScalarField& g, int i, int j, int k,
                                     int axis, double inv_dv2) {
    const auto& grid = g.grid();
    const int n = grid.n();
    int c[3] = {i, j, k};
    const int pos = c[axis];
    auto val = [&](int p) {
        int cc[3] = {i, j, k};
        cc[axis] = p;
        return g.at(cc[0], cc[1], cc[2]);
    };
    if (pos == 0) {
        return (2.0 * val(0) - 5.0 * val(1) + 4.0 * val(2) - val(3)) * inv_dv2;
    }
    if (pos == n - 1) {
        return (2.0 * val(n - 1) - 5.0 * val(n - 2) + 4.0 * val(n - 3) -
                val(n - 4)) * inv_dv2;
    }
    return (val(pos + 1) - 2.0 * val(pos) + val(pos - 1)) * inv_dv2;
}

}  // namespace

VectorField gradient(const ScalarField& g) {
    const auto& grid = g.grid();
    const int n = grid.n();
    const double inv_2dv = 0.5 / grid.spacing();
    VectorField out(grid);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                out.component(0)[idx] = axis_derivative(g, i, j, k, 0, inv_2dv);
                out.component(1)[idx] = axis_derivative(g, i, j, k, 1, inv_2dv);
                out.component(2)[idx] = axis_derivative(g, i, j, k, 2, inv_2dv);
            }
        }
    }
    return out;
}

MatrixField hessian(const ScalarField& g) {
    const auto& grid = g.grid();
    const int n = grid.n();
    const double inv_dv2 = 1.0 / (grid.spacing() * grid.spacing());
    MatrixField out(grid);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                out.component(0)[idx] = axis_second_derivative(g, i, j, k, 0, inv_dv2);
                out.component(1)[idx] = axis_second_derivative(g, i, j, k, 1, inv_dv2);
                out.component(2)[idx] = axis_second_derivative(g, i, j, k, 2, inv_dv2);
            }
        }
    }
    // Mixed entries from first derivatives of the gradient components.
    const VectorField grad = gradient(g);
    auto mixed = [&](int comp_axis, int diff_axis, int target) {
        ScalarField tmp(grid, std::vector<double>(grad.component(comp_axis).begin(),
                                                  grad.component(comp_axis).end()));
        const VectorField gg = gradient(tmp);
        auto dst = out.component(target);
        auto src = gg.component(diff_axis);
        for (std::size_t p = 0; p < dst.size(); ++p) dst[p] = src[p];
    };
    mixed(0, 1, 3);  // d2/dxdy
    mixed(0, 2, 4);  // d2/dxdz
    mixed(1, 2, 5);  // d2/dydz
    return out;
}

}  // namespace landau
