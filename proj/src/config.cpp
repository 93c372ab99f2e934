#include "landau/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace landau {

std::string to_string(InitialConditionSpec::Kind kind) {
    switch (kind) {
        case InitialConditionSpec::Kind::maxwellian: return "maxwellian";
        case InitialConditionSpec::Kind::bimaxwellian: return "bimaxwellian";
        case InitialConditionSpec::Kind::anisotropic_gaussian:
            return "anisotropic_gaussian";
        case InitialConditionSpec::Kind::bump: return "bump";
    }
    return "unknown";
}

InitialConditionSpec::Kind ic_kind_from_string(const std::string& name) {
    if (name == "maxwellian") return InitialConditionSpec::Kind::maxwellian;
    if (name == "bimaxwellian") return InitialConditionSpec::Kind::bimaxwellian;
    if (name == "anisotropic_gaussian")
        return InitialConditionSpec::Kind::anisotropic_gaussian;
    if (name == "bump") return InitialConditionSpec::Kind::bump;
    throw std::invalid_argument("unknown initial condition kind: " + name);
}

double theorem_weight_q(double gamma, double s, double epsilon) {
    return -3.0 * (gamma - s) * (2.0 - epsilon) / epsilon;
}

double alpha_exponent(double epsilon) {
    return 2.0 * (3.0 - epsilon) / (3.0 * (2.0 - epsilon));
}

std::vector<double> effective_lp_orders(const SimulationConfig& cfg) {
    std::vector<double> orders = cfg.lp_orders;
    if (orders.empty()) {
        orders = {2.0, 3.0 - cfg.epsilon, cfg.p};
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

namespace {

[[noreturn]] void fail_range(const std::string& field, double value,
                             const std::string& interval) {
    std::ostringstream os;
    os << "config: " << field << " must lie in " << interval << ", got " << value;
    throw std::invalid_argument(os.str());
}

}  // namespace

void validate(const SimulationConfig& cfg) {
    if (!(cfg.gamma >= -2.0 && cfg.gamma < 0.0))
        fail_range("gamma", cfg.gamma, "[-2, 0)");
    if (cfg.n < 8 || cfg.n % 2 != 0)
        throw std::invalid_argument(
            "config: n must be an even integer >= 8, got " + std::to_string(cfg.n));
    if (!(cfg.half_width > 0.0)) fail_range("L", cfg.half_width, "(0, inf)");
    if (!(cfg.t_final >= 0.0)) fail_range("T", cfg.t_final, "[0, inf)");
    if (!(cfg.cfl_sigma > 0.0 && cfg.cfl_sigma <= 1.0))
        fail_range("sigma", cfg.cfl_sigma, "(0, 1]");
    if (cfg.cadence < 1)
        throw std::invalid_argument("config: cadence must be >= 1");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
        fail_range("epsilon", cfg.epsilon, "(0, 1)");
    if (!(cfg.p > 1.0)) fail_range("p", cfg.p, "(1, inf)");
    if (!(cfg.s > 0.0)) fail_range("s", cfg.s, "(0, inf)");
    if (!(cfg.fallback_dt > 0.0)) fail_range("fallback_dt", cfg.fallback_dt, "(0, inf)");
    for (double s : cfg.moment_orders) {
        if (!(s >= 0.0)) fail_range("moment_orders entry", s, "[0, inf)");
    }
    for (double p : cfg.lp_orders) {
        if (!(p >= 1.0)) fail_range("lp_orders entry", p, "[1, inf)");
    }

    const auto& ic = cfg.ic;
    switch (ic.kind) {
        case InitialConditionSpec::Kind::bimaxwellian:
            if (!(ic.second.mass > 0.0)) fail_range("ic.second.mass", ic.second.mass, "(0, inf)");
            if (!(ic.second.temperature > 0.0))
                fail_range("ic.second.temperature", ic.second.temperature, "(0, inf)");
            [[fallthrough]];
        case InitialConditionSpec::Kind::maxwellian:
            if (!(ic.first.mass > 0.0)) fail_range("ic.mass", ic.first.mass, "(0, inf)");
            if (!(ic.first.temperature > 0.0))
                fail_range("ic.temperature", ic.first.temperature, "(0, inf)");
            break;
        case InitialConditionSpec::Kind::anisotropic_gaussian:
            if (!(ic.first.mass > 0.0)) fail_range("ic.mass", ic.first.mass, "(0, inf)");
            for (int d = 0; d < 3; ++d) {
                if (!(ic.covariance_diag[d] > 0.0))
                    fail_range("ic.covariance_diag", ic.covariance_diag[d], "(0, inf)");
            }
            break;
        case InitialConditionSpec::Kind::bump: {
            if (!(ic.height > 0.0)) fail_range("ic.height", ic.height, "(0, inf)");
            if (!(ic.radius > 0.0)) fail_range("ic.radius", ic.radius, "(0, inf)");
            const double reach = ic.center.norm() + ic.radius;
            if (reach > 0.8 * cfg.half_width) {
                std::ostringstream os;
                os << "config: bump support must stay inside |v| <= 0.8 L; "
                   << "center+radius reaches " << reach << " with 0.8 L = "
                   << 0.8 * cfg.half_width;
                throw std::invalid_argument(os.str());
            }
            break;
        }
    }
}

}  // namespace landau
