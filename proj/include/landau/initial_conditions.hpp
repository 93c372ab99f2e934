#pragma once

#include "landau/config.hpp"
#include "landau/grid.hpp"

namespace landau {

/// Sample the configured initial density on the grid. The result is
/// nonnegative; spec invariants (positive mass/temperature, bump support
/// inside |v| <= 0.8 L) are enforced.
ScalarField initial_condition(const InitialConditionSpec& spec,
                              const VelocityGrid& grid);

/// Maxwellian  m (2 pi T)^{-3/2} exp(-|v - mu|^2 / (2T)) sampled at nodes.
ScalarField sample_maxwellian(const VelocityGrid& grid, double mass,
                              const Vec3& mean, double temperature);

}  // namespace landau
