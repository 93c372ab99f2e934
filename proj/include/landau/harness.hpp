#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "landau/integrator.hpp"

namespace landau {

/// Trapezoidal time integral of ||f_t||^alpha_{L^{3-eps}} along a trajectory,
/// alpha = 2(3-eps)/(3(2-eps)). Requires at least two records and the
/// L^{3-eps} norm in the recorded order list.
double thm1_quantity(const Trajectory& traj, double epsilon);

/// Growth envelope of the time-integrability estimate: for gamma in (-2, 0)
/// the bound is polynomial, (1+T)^exponent; at gamma = -2 it is the
/// stretched exponential exp(C T^exponent).
struct Thm1Envelope {
    bool stretched = false;
    double exponent = 0.0;
    /// gamma in (-2,0) only: the well-posedness corollary additionally needs
    /// eps < 3(2+gamma)/(3+gamma); false means the envelope is still valid
    /// but the uniqueness application is not.
    bool corollary_range_ok = true;
};
Thm1Envelope thm1_envelope(double gamma, double epsilon, double s);

/// Empirical exponential growth rate of ||f_t||^p_{L^p}: least-squares slope
/// of log(running max) against t over the second half of the run.
struct RateFit {
    double rate = 0.0;
    bool bounded = true;  // all recorded norms finite
    double max_value = 0.0;
};
RateFit thm2_tracking(const Trajectory& traj, double p);

/// Log-log slope of M_s(f_t) against (1+t) over the second half, plus (at
/// gamma = -2) the stepwise discrete moment inequality
///   M_s(t_{k+1}) - M_s(t_k) <= s(s-2) M_1(t_k) M_{s-3}(t_k) dt (1 + slack)
/// with 10% slack.
struct MomentFit {
    double exponent = 0.0;
    bool inequality_checked = false;
    bool inequality_ok = true;
    double worst_ratio = 0.0;  // max of observed increment / bound increment
};
MomentFit moment_growth_fit(const Trajectory& traj, double s, double gamma);

// ---- trajectory-level summaries shared by the report and acceptance ----

/// max_k |m_k - m_0 - clipped_k| / m_0  (conservation of the scheme itself,
/// clipping excluded).
double mass_conservation_error(const Trajectory& traj);

/// max_k ( |momentum_k - momentum_0|_2 + |energy_k - energy_0| ).
double momentum_energy_drift(const Trajectory& traj);

/// Largest positive entropy increment between consecutive records (0 when
/// entropy is monotone nonincreasing).
double max_entropy_increase(const Trajectory& traj);

/// max over interior records of |dH/dt + D| / max(|dH/dt|, D), centered
/// dH/dt, restricted to records where the signal exceeds `significance`
/// times the trajectory maximum. Requires D in the records.
double entropy_identity_residual(const Trajectory& traj,
                                 double significance = 0.02);

/// (max - min) / midpoint of the coercivity constant along the run.
double coercivity_relative_spread(const Trajectory& traj);

/// Slope of log Q(T_k) vs log(1+T_k) over the second half, where Q(T_k) is
/// the cumulative thm1 integral up to record k.
double thm1_growth_slope(const Trajectory& traj, double epsilon);

/// Least-squares slope helper (exposed for tests).
double lsq_slope(std::span<const double> x, std::span<const double> y);

// ---- report ----

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string note;
};

struct ExperimentReport {
    std::string name;
    SimulationConfig config;
    std::vector<CheckResult> checks;
};

/// Identity/envelope checks evaluated on one finished trajectory.
std::vector<CheckResult> evaluate_trajectory_checks(const Trajectory& traj);

/// report.json (machine, schema_version 1) + report.md (human).
void write_report(const std::vector<ExperimentReport>& experiments,
                  const std::filesystem::path& json_path,
                  const std::filesystem::path& md_path);

/// The experiment matrix {gamma in {-2, -1.5, -1}} x {bimaxwellian, bump}.
std::vector<ExperimentReport> run_experiment_matrix(int n, double t_final,
                                                    const std::string& cache_dir);

}  // namespace landau
