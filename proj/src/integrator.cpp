#include "landau/integrator.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "landau/collision.hpp"
#include "landau/initial_conditions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace landau {

double cfl_dt(const MatrixField& abar, const VelocityGrid& grid, double sigma,
              double fallback_dt) {
    double lam_max = 0.0;
    const std::size_t nodes = grid.size();
    for (std::size_t i = 0; i < nodes; ++i) {
        lam_max = std::max(lam_max, sym3_eig_max(abar.at(i)));
    }
    if (!(lam_max > 0.0)) return fallback_dt;
    const double dv = grid.spacing();
    return sigma * dv * dv / (6.0 * lam_max);
}

namespace {

void require_finite(const ScalarField& q, const char* stage) {
    if (!q.all_finite()) {
        throw NumericalError(std::string("collision operator produced NaN/Inf in ") +
                             stage);
    }
}

}  // namespace

StepResult step(const ScalarField& f, double dt, const KernelTables& tables,
                Convolver& conv, const Convolver::Coefficients* stage1) {
    const auto& grid = f.grid();

    std::optional<Convolver::Coefficients> own;
    if (!stage1) {
        own = conv.coefficients(f, tables);
        stage1 = &*own;
    }
    const ScalarField q1 = collision_operator(f, *stage1);
    require_finite(q1, "stage 1");

    ScalarField fstar(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) fstar[i] = f[i] + dt * q1[i];

    const ScalarField q2 = collision_operator(fstar, tables, conv);
    require_finite(q2, "stage 2");

    StepResult out{ScalarField(grid), 0.0};
    std::vector<double> clipped(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double v = 0.5 * f[i] + 0.5 * (fstar[i] + dt * q2[i]);
        if (v < 0.0) {
            clipped[i] = -v;
            v = 0.0;
        }
        out.f[i] = v;
    }
    out.clipped_mass = pairwise_sum(clipped) * grid.cell_volume();
    return out;
}

Trajectory run(const SimulationConfig& cfg) {
    validate(cfg);
    const VelocityGrid grid = make_grid(cfg.n, cfg.half_width);
    const KernelTables tables =
        KernelTables::build_or_load(grid, cfg.gamma, cfg.cache_dir);
    return run(cfg, tables);
}

Trajectory run(const SimulationConfig& cfg, const KernelTables& tables) {
    validate(cfg);
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    const VelocityGrid grid = make_grid(cfg.n, cfg.half_width);
    if (!(tables.grid() == grid) || tables.gamma() != cfg.gamma) {
        throw std::invalid_argument("run: kernel tables do not match the config");
    }
    Convolver conv(grid);

    Trajectory traj;
    traj.config = cfg;

    ScalarField f = initial_condition(cfg.ic, grid);
    double t = 0.0;
    double clipped_total = 0.0;
    long step_index = 0;

    auto record = [&](const Convolver::Coefficients& co) {
        traj.records.push_back(
            collect_diagnostics(t, f, co, tables, conv, cfg, clipped_total));
        if (cfg.store_fields) traj.fields.push_back(f);
    };

    Convolver::Coefficients co = conv.coefficients(f, tables);
    record(co);
    traj.final_state = f;

    while (t < cfg.t_final) {
        double dt = cfl_dt(co.abar, grid, cfg.cfl_sigma, cfg.fallback_dt);
        bool last = false;
        if (t + dt >= cfg.t_final) {
            dt = cfg.t_final - t;
            last = true;
        }
        StepResult res = [&] {
            try {
                return step(f, dt, tables, conv, &co);
            } catch (const NumericalError& e) {
                std::ostringstream os;
                os << e.what() << " (step " << step_index << ", t = " << t << ")";
                throw NumericalError(os.str());
            }
        }();
        f = std::move(res.f);
        clipped_total += res.clipped_mass;
        t += dt;
        ++step_index;
        co = conv.coefficients(f, tables);
        if (last || step_index % cfg.cadence == 0) record(co);
        if (last) break;
    }
    traj.final_state = f;
    return traj;
}

}  // namespace landau
