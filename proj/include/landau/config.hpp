#pragma once

#include <string>
#include <vector>

#include "landau/algebra.hpp"

namespace landau {

struct MaxwellianSpec {
    double mass = 1.0;
    Vec3 mean{};
    double temperature = 1.0;
};

struct InitialConditionSpec {
    enum class Kind { maxwellian, bimaxwellian, anisotropic_gaussian, bump };

    Kind kind = Kind::maxwellian;
    MaxwellianSpec first{};    // maxwellian / bimaxwellian component 1
    MaxwellianSpec second{};   // bimaxwellian component 2
    Vec3 covariance_diag{1.0, 1.0, 1.0};  // anisotropic_gaussian (mass/mean: first)
    Vec3 center{};                        // bump
    double radius = 1.0;                  // bump
    double height = 1.0;                  // bump
};

std::string to_string(InitialConditionSpec::Kind kind);
InitialConditionSpec::Kind ic_kind_from_string(const std::string& name);

struct SimulationConfig {
    double gamma = -2.0;       // in [-2, 0)
    int n = 16;                // even, >= 8
    double half_width = 6.0;   // L > 0
    double t_final = 1.0;      // T >= 0
    double cfl_sigma = 0.9;    // in (0, 1]
    int cadence = 1;           // diagnostics every k steps
    InitialConditionSpec ic{};
    double epsilon = 0.5;      // in (0, 1)
    double p = 2.0;            // > 1
    double s = 4.0;            // > 0
    std::string output_path;
    int threads = 0;           // 0: leave runtime default
    std::string cache_dir;
    double fallback_dt = 1e-3;            // used when abar vanishes
    bool store_fields = false;            // keep f at every diagnostic record
    bool diag_entropy_production = true;  // O(N^2) pair sum per record

    std::vector<double> moment_orders{0.0, 1.0, 2.0, 4.0};
    std::vector<double> lp_orders;  // empty: use {2, 3-epsilon, p}
};

/// Moment weight of the initial-data hypothesis: q = -3(gamma - s)(2 - eps)/eps.
double theorem_weight_q(double gamma, double s, double epsilon);

/// Time-integrability exponent alpha = 2(3 - eps) / (3(2 - eps)).
double alpha_exponent(double epsilon);

/// Effective L^p order list: user-provided, or {2, 3-eps, p} deduplicated.
std::vector<double> effective_lp_orders(const SimulationConfig& cfg);

/// Throws std::invalid_argument naming the violated field and its interval.
void validate(const SimulationConfig& cfg);

}  // namespace landau
