// landau: velocity-space simulator and verification harness for the
// homogeneous Landau collision operator with soft potentials.
//
// Subcommands:
//   run         simulate a configuration and write the diagnostics series
//   verify      invariant suite on a checkpoint file
//   experiment  theorem matrix over gamma and initial conditions + report
//   tables      build (and cache) the kernel tables
//
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 IO error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "landau/collision.hpp"
#include "landau/diagnostics.hpp"
#include "landau/harness.hpp"
#include "landau/initial_conditions.hpp"
#include "landau/integrator.hpp"
#include "landau/io.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string env_cache_dir() {
    const char* env = std::getenv("LANDAU_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

struct CommonFlags {
    std::optional<double> gamma, epsilon, p, s, half_width, t_final, sigma;
    std::optional<int> n, cadence, threads;
    std::optional<std::string> ic, out, cache_dir;
};

void add_common_flags(CLI::App* cmd, CommonFlags& fl) {
    cmd->add_option("--gamma", fl.gamma, "potential exponent in [-2, 0)");
    cmd->add_option("--epsilon", fl.epsilon, "integrability parameter in (0, 1)");
    cmd->add_option("--p", fl.p, "L^p tracking order, > 1");
    cmd->add_option("--s", fl.s, "moment order for the weighted estimate, > 0");
    cmd->add_option("--n", fl.n, "grid nodes per axis (even, >= 8)");
    cmd->add_option("--L", fl.half_width, "velocity box half-width");
    cmd->add_option("--T", fl.t_final, "final time");
    cmd->add_option("--sigma", fl.sigma, "CFL safety factor in (0, 1]");
    cmd->add_option("--ic", fl.ic,
                    "initial condition kind (maxwellian, bimaxwellian, "
                    "anisotropic_gaussian, bump)");
    cmd->add_option("--out", fl.out, "output directory");
    cmd->add_option("--cadence", fl.cadence, "diagnostics every k steps");
    cmd->add_option("--threads", fl.threads, "worker thread count");
    cmd->add_option("--cache-dir", fl.cache_dir,
                    "kernel table cache directory (env LANDAU_CACHE_DIR overrides)");
}

// CLI flags override config-file values; the environment overrides --cache-dir.
void apply_overrides(landau::SimulationConfig& cfg, const CommonFlags& fl) {
    if (fl.gamma) cfg.gamma = *fl.gamma;
    if (fl.epsilon) cfg.epsilon = *fl.epsilon;
    if (fl.p) cfg.p = *fl.p;
    if (fl.s) cfg.s = *fl.s;
    if (fl.n) cfg.n = *fl.n;
    if (fl.half_width) cfg.half_width = *fl.half_width;
    if (fl.t_final) cfg.t_final = *fl.t_final;
    if (fl.sigma) cfg.cfl_sigma = *fl.sigma;
    if (fl.ic) cfg.ic.kind = landau::ic_kind_from_string(*fl.ic);
    if (fl.out) cfg.output_path = *fl.out;
    if (fl.cadence) cfg.cadence = *fl.cadence;
    if (fl.threads) cfg.threads = *fl.threads;
    if (fl.cache_dir) cfg.cache_dir = *fl.cache_dir;
    const std::string env = env_cache_dir();
    if (!env.empty()) cfg.cache_dir = env;
}

int cmd_run(const std::string& config_path, const CommonFlags& fl) {
    landau::SimulationConfig cfg;
    if (!config_path.empty()) cfg = landau::parse_config(config_path);
    apply_overrides(cfg, fl);
    landau::validate(cfg);

    std::cout << "q = " << landau::theorem_weight_q(cfg.gamma, cfg.s, cfg.epsilon)
              << " (moment weight from gamma, s, epsilon)\n";

    const landau::Trajectory traj = landau::run(cfg);

    const std::filesystem::path out_dir =
        cfg.output_path.empty() ? std::filesystem::path(".")
                                : std::filesystem::path(cfg.output_path);
    std::filesystem::create_directories(out_dir);
    landau::write_series(traj, out_dir / "series.csv");
    {
        std::ofstream cfg_out(out_dir / "config.json");
        if (!cfg_out) throw landau::IoError("cannot write config echo");
        cfg_out << landau::config_to_json_text(cfg) << '\n';
    }
    landau::write_checkpoint(traj.final_state, cfg, traj.records.back().t,
                             out_dir / "final_state.bin");
    const auto& last = traj.records.back();
    std::cout << "t = " << last.t << "  mass = " << last.mass
              << "  energy = " << last.energy << "  entropy = " << last.entropy
              << "\nseries: " << (out_dir / "series.csv").string() << '\n';
    return 0;
}

int cmd_verify(const std::string& checkpoint_path) {
    const landau::Checkpoint ck = landau::read_checkpoint(checkpoint_path);
    const auto& grid = ck.f.grid();
    landau::Convolver conv(grid);
    const landau::KernelTables tables =
        landau::KernelTables::build_or_load(grid, ck.config.gamma,
                                            ck.config.cache_dir);

    int failures = 0;
    auto check = [&failures](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
        if (!ok) ++failures;
    };

    check("field values finite", ck.f.all_finite());
    double min_val = 0.0;
    for (double v : ck.f.values()) min_val = std::min(min_val, v);
    check("density nonnegative", min_val >= 0.0);

    const auto cons = landau::conserved_quantities(ck.f);
    check("mass positive", cons.mass > 0.0);
    check("energy nonnegative", cons.energy >= 0.0);
    check("entropy finite", std::isfinite(landau::entropy(ck.f)));

    const auto coeffs = conv.coefficients(ck.f, tables);
    bool abar_psd = true;
    double cbar_max = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        abar_psd = abar_psd &&
                   landau::sym3_eig_min(coeffs.abar.at(i)) >= -1e-10;
        cbar_max = std::max(cbar_max, coeffs.cbar[i]);
    }
    check("abar positive semidefinite", abar_psd);
    check("cbar nonpositive", cbar_max <= 1e-10);
    check("coercivity positive",
          landau::coercivity_constant(coeffs.abar, ck.config.gamma) > 0.0);

    const landau::ScalarField q = landau::collision_operator(ck.f, coeffs);
    check("collision operator mass-free",
          std::fabs(landau::integrate(q)) <= 1e-12 * std::max(1.0, cons.mass));

    if (grid.n() <= 24) {
        check("entropy production nonnegative",
              landau::entropy_production(ck.f, tables) >= 0.0);
    }

    std::cout << (failures == 0 ? "all checks passed" : "checks failed") << '\n';
    return failures == 0 ? 0 : kExitNumerical;
}

int cmd_experiment(int n, double t_final, const std::string& out,
                   const std::string& cache_dir_flag) {
    std::string cache = env_cache_dir();
    if (cache.empty()) cache = cache_dir_flag;
    const auto experiments = landau::run_experiment_matrix(n, t_final, cache);
    const std::filesystem::path out_dir = out.empty() ? "." : out;
    std::filesystem::create_directories(out_dir);
    landau::write_report(experiments, out_dir / "report.json",
                         out_dir / "report.md");
    int failures = 0;
    for (const auto& exp : experiments) {
        for (const auto& c : exp.checks) {
            if (!c.pass) {
                ++failures;
                std::cout << "FAIL  " << exp.name << " :: " << c.name
                          << "  measured " << c.measured << " bound " << c.bound
                          << '\n';
            }
        }
    }
    std::cout << "report: " << (out_dir / "report.md").string() << "  ("
              << failures << " failing checks)\n";
    return 0;
}

int cmd_tables(int n, double half_width, double gamma,
               const std::string& cache_dir_flag) {
    std::string cache = env_cache_dir();
    if (cache.empty()) cache = cache_dir_flag;
    if (cache.empty()) cache = ".";
    const landau::VelocityGrid grid = landau::make_grid(n, half_width);
    const landau::KernelTables tables =
        landau::KernelTables::build_or_load(grid, gamma, cache);
    std::cout << "tables ready: n=" << n << " L=" << half_width
              << " gamma=" << gamma << " padded=" << tables.padded_n()
              << "\ncache: "
              << (std::filesystem::path(cache) /
                  landau::KernelTables::cache_file_name(grid, gamma))
                     .string()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau collision operator simulator and verification harness"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "simulate and record diagnostics");
    std::string config_path;
    run_cmd->add_option("--config", config_path, "JSON configuration file");
    CommonFlags run_flags;
    add_common_flags(run_cmd, run_flags);

    auto* verify_cmd = app.add_subcommand("verify", "invariant suite on a checkpoint");
    std::string checkpoint_path;
    verify_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file")
        ->required();

    auto* exp_cmd = app.add_subcommand("experiment", "theorem matrix + report");
    int exp_n = 16;
    double exp_t = 2.0;
    std::string exp_out, exp_cache;
    exp_cmd->add_option("--n", exp_n, "grid nodes per axis");
    exp_cmd->add_option("--T", exp_t, "final time per run");
    exp_cmd->add_option("--out", exp_out, "output directory");
    exp_cmd->add_option("--cache-dir", exp_cache, "kernel table cache directory");

    auto* tables_cmd = app.add_subcommand("tables", "build/cache kernel tables");
    int tb_n = 16;
    double tb_L = 6.0, tb_gamma = -2.0;
    std::string tb_cache;
    tables_cmd->add_option("--n", tb_n, "grid nodes per axis");
    tables_cmd->add_option("--L", tb_L, "velocity box half-width");
    tables_cmd->add_option("--gamma", tb_gamma, "potential exponent");
    tables_cmd->add_option("--cache-dir", tb_cache, "cache directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, run_flags);
        if (verify_cmd->parsed()) return cmd_verify(checkpoint_path);
        if (exp_cmd->parsed()) return cmd_experiment(exp_n, exp_t, exp_out, exp_cache);
        if (tables_cmd->parsed()) return cmd_tables(tb_n, tb_L, tb_gamma, tb_cache);
    } catch (const landau::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const landau::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
