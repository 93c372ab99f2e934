#pragma once

#include <stdexcept>
#include <vector>

#include "landau/config.hpp"
#include "landau/convolution.hpp"
#include "landau/diagnostics.hpp"
#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace landau {

/// NaN/Inf encountered while advancing the solution.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parabolic stability step  dt = sigma dv^2 / (6 lambda_max), lambda_max the
/// largest abar eigenvalue over all nodes. Vanishing abar (f = 0) falls back
/// to the configured dt.
double cfl_dt(const MatrixField& abar, const VelocityGrid& grid, double sigma,
              double fallback_dt);

struct StepResult {
    ScalarField f;
    double clipped_mass = 0.0;  // mass removed... added by clipping this step
};

/// One SSP-RK2 (Heun) step with convolutions recomputed per stage:
///   f* = f + dt Q(f),  f_next = f/2 + (f* + dt Q(f*))/2,
/// negatives clipped to zero afterwards (no renormalization); the clipped
/// mass is returned as a diagnostic. Throws NumericalError on NaN/Inf in Q.
/// `stage1` may pass coefficients already computed for f.
StepResult step(const ScalarField& f, double dt, const KernelTables& tables,
                Convolver& conv, const Convolver::Coefficients* stage1 = nullptr);

/// Times, diagnostic records, and (optionally) field checkpoints of one run.
struct Trajectory {
    SimulationConfig config;
    std::vector<DiagnosticsRecord> records;  // strictly increasing t
    std::vector<ScalarField> fields;         // aligned with records if stored
    ScalarField final_state;                 // always kept
};

/// Advance the initial condition to T, recording diagnostics every
/// `cadence` steps (plus t = 0 and the final time). Deterministic for a
/// fixed config and thread count.
Trajectory run(const SimulationConfig& cfg);
Trajectory run(const SimulationConfig& cfg, const KernelTables& tables);

}  // namespace landau
