#include "landau/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace landau {

ScalarField sample_maxwellian(const VelocityGrid& grid, double mass,
                              const Vec3& mean, double temperature) {
    const double norm =
        mass * std::pow(2.0 * std::numbers::pi * temperature, -1.5);
    const double inv_2t = 0.5 / temperature;
    const int n = grid.n();
    ScalarField f(grid);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Vec3 d = grid.node(i, j, k) - mean;
                f.at(i, j, k) = norm * std::exp(-d.norm2() * inv_2t);
            }
        }
    }
    return f;
}

namespace {

ScalarField sample_anisotropic_gaussian(const VelocityGrid& grid, double mass,
                                        const Vec3& mean, const Vec3& cov_diag) {
    const double det = cov_diag.x * cov_diag.y * cov_diag.z;
    const double norm =
        mass * std::pow(2.0 * std::numbers::pi, -1.5) / std::sqrt(det);
    const int n = grid.n();
    ScalarField f(grid);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Vec3 d = grid.node(i, j, k) - mean;
                const double quad = d.x * d.x / cov_diag.x +
                                    d.y * d.y / cov_diag.y +
                                    d.z * d.z / cov_diag.z;
                f.at(i, j, k) = norm * std::exp(-0.5 * quad);
            }
        }
    }
    return f;
}

// Smooth compactly supported bump: height * exp(1 - 1/(1 - (r/R)^2)) inside
// r < R, zero outside; value is `height` at the center.
ScalarField sample_bump(const VelocityGrid& grid, const Vec3& center,
                        double radius, double height) {
    const int n = grid.n();
    ScalarField f(grid);
    const double inv_r2 = 1.0 / (radius * radius);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double u2 = (grid.node(i, j, k) - center).norm2() * inv_r2;
                if (u2 < 1.0) {
                    f.at(i, j, k) = height * std::exp(1.0 - 1.0 / (1.0 - u2));
                }
            }
        }
    }
    return f;
}

}  // namespace

ScalarField initial_condition(const InitialConditionSpec& spec,
                              const VelocityGrid& grid) {
    switch (spec.kind) {
        case InitialConditionSpec::Kind::maxwellian:
            if (!(spec.first.mass > 0.0) || !(spec.first.temperature > 0.0)) {
                throw std::invalid_argument(
                    "initial_condition: maxwellian needs mass > 0 and temperature > 0");
            }
            return sample_maxwellian(grid, spec.first.mass, spec.first.mean,
                                     spec.first.temperature);
        case InitialConditionSpec::Kind::bimaxwellian: {
            if (!(spec.first.mass > 0.0) || !(spec.second.mass > 0.0) ||
                !(spec.first.temperature > 0.0) || !(spec.second.temperature > 0.0)) {
                throw std::invalid_argument(
                    "initial_condition: bimaxwellian needs positive masses and temperatures");
            }
            ScalarField f = sample_maxwellian(grid, spec.first.mass, spec.first.mean,
                                              spec.first.temperature);
            const ScalarField g = sample_maxwellian(grid, spec.second.mass,
                                                    spec.second.mean,
                                                    spec.second.temperature);
            for (std::size_t i = 0; i < f.values().size(); ++i) f[i] += g[i];
            return f;
        }
        case InitialConditionSpec::Kind::anisotropic_gaussian:
            if (!(spec.first.mass > 0.0)) {
                throw std::invalid_argument("initial_condition: mass must be positive");
            }
            return sample_anisotropic_gaussian(grid, spec.first.mass, spec.first.mean,
                                               spec.covariance_diag);
        case InitialConditionSpec::Kind::bump: {
            const double reach = spec.center.norm() + spec.radius;
            if (reach > 0.8 * grid.half_width()) {
                std::ostringstream os;
                os << "initial_condition: bump support reaches |v| = " << reach
                   << ", beyond the 0.8 L = " << 0.8 * grid.half_width() << " margin";
                throw std::invalid_argument(os.str());
            }
            return sample_bump(grid, spec.center, spec.radius, spec.height);
        }
    }
    throw std::invalid_argument("initial_condition: unknown kind");
}

}  // namespace landau
