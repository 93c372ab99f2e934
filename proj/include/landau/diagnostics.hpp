#pragma once

#include <string>
#include <vector>

#include "landau/collision.hpp"
#include "landau/config.hpp"
#include "landau/convolution.hpp"
#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace landau {

struct ConservedQuantities {
    double mass = 0.0;
    Vec3 momentum{};
    double energy = 0.0;
};

/// Riemann sums of f . {1, v, |v|^2/2}.
ConservedQuantities conserved_quantities(const ScalarField& f);

/// sum f log f dv^3 with the convention 0 log 0 = 0; negative values are
/// treated as 0.
double entropy(const ScalarField& f);

/// Entropy production
///   D = 2 sum_{v != v*} a_avg(v - v*) w . w dv^6,
///   w = sqrt(f*) grad sqrt(f)(v) - sqrt(f) grad sqrt(f)(v*),
/// with central differences of sqrt(f). Each summand is a PSD quadratic
/// form, so the result is nonnegative by construction (per-term roundoff
/// below zero is clamped at the term level). O(N^2) pairs.
double entropy_production(const ScalarField& f, const KernelTables& tables);

/// Interaction functional  integral f . (|.|^gamma_avg * f)  via the
/// cell-averaged scalar kernel convolution.
double interaction_functional(const ScalarField& f, const KernelTables& tables,
                              Convolver& conv);

/// J_gamma(f) = max over nodes of (|.|^gamma_avg * f)(v).
double j_gamma(const ScalarField& f, const KernelTables& tables, Convolver& conv);

/// min over nodes of lambda_min(abar(v)) / <v>^gamma  (closed-form 3x3
/// eigenvalues; no solver dependency).
double coercivity_constant(const MatrixField& abar, double gamma);

/// Mass outside |v| <= 0.9 L.
double tail_mass(const ScalarField& f);

/// beta functions admitted by the chain-rule check. phi_beta solves
/// phi'(x) = x beta''(x), phi(0) = 0.
struct BetaFunction {
    enum class Kind { xlogx_shift, power_p };
    Kind kind = Kind::power_p;
    double p = 2.0;

    double beta(double x) const;
    double beta_second(double x) const;
    double phi(double x) const;
    std::string name() const;
};

/// beta_id is "xlogx_shift" or "power_p" (power order taken from `p`).
/// Unknown ids throw.
BetaFunction make_beta(const std::string& beta_id, double p = 2.0);

/// Three consecutive trajectory states for the centered time derivative.
struct ChainRuleWindow {
    double t_prev = 0.0, t_mid = 0.0, t_next = 0.0;
    const ScalarField* f_prev = nullptr;
    const ScalarField* f_mid = nullptr;
    const ScalarField* f_next = nullptr;
};

/// | d/dt int beta(f) + int abar grad f . grad f beta''(f) + int cbar phi(f) |
/// normalized by max(1, |each term|).
double chain_rule_residual(const ChainRuleWindow& win, const BetaFunction& beta,
                           const KernelTables& tables, Convolver& conv);

struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    Vec3 momentum{};
    double energy = 0.0;
    double entropy = 0.0;
    double entropy_production = 0.0;  // NaN when not evaluated
    std::vector<double> moments;      // per config moment_orders
    std::vector<double> lp_norms;     // per effective_lp_orders
    double weighted_q_moment = 0.0;   // M_q, q from theorem_weight_q
    double interaction = 0.0;
    double j_gamma = 0.0;
    double coercivity = 0.0;
    double clipped_mass = 0.0;  // cumulative since t = 0
    double tail_mass = 0.0;
};

DiagnosticsRecord collect_diagnostics(double t, const ScalarField& f,
                                      const Convolver::Coefficients& coeffs,
                                      const KernelTables& tables, Convolver& conv,
                                      const SimulationConfig& cfg,
                                      double cumulative_clipped_mass);

/// Fixed CSV column order; the header line documents it.
std::string diagnostics_csv_header(const SimulationConfig& cfg);
std::string diagnostics_csv_row(const DiagnosticsRecord& rec);
DiagnosticsRecord diagnostics_from_csv_row(const std::string& line,
                                           const SimulationConfig& cfg);

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double x);

}  // namespace landau
