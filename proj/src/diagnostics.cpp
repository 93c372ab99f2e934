#include "landau/diagnostics.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace landau {

ConservedQuantities conserved_quantities(const ScalarField& f) {
    const auto& grid = f.grid();
    const int n = grid.n();
    const std::size_t nodes = grid.size();
    std::vector<double> m(nodes), px(nodes), py(nodes), pz(nodes), e(nodes);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const Vec3 v = grid.node(i, j, k);
                const double fv = f[idx];
                m[idx] = fv;
                px[idx] = fv * v.x;
                py[idx] = fv * v.y;
                pz[idx] = fv * v.z;
                e[idx] = 0.5 * fv * v.norm2();
            }
        }
    }
    const double vol = grid.cell_volume();
    return {pairwise_sum(m) * vol,
            {pairwise_sum(px) * vol, pairwise_sum(py) * vol, pairwise_sum(pz) * vol},
            pairwise_sum(e) * vol};
}

double entropy(const ScalarField& f) {
    const auto vals = f.values();
    std::vector<double> terms(vals.size(), 0.0);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double x = vals[i];
        if (x > 0.0) terms[i] = x * std::log(x);
    }
    return pairwise_sum(terms) * f.grid().cell_volume();
}

double entropy_production(const ScalarField& f, const KernelTables& tables) {
    if (!(f.grid() == tables.grid())) {
        throw std::invalid_argument("entropy_production: grid/table mismatch");
    }
    const auto& grid = f.grid();
    const int n = grid.n();

    ScalarField sf(grid);
    for (std::size_t i = 0; i < sf.values().size(); ++i) {
        sf[i] = f[i] > 0.0 ? std::sqrt(f[i]) : 0.0;
    }
    const VectorField g = gradient(sf);

    std::vector<double> partial(grid.size(), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const double sv = sf[idx];
                const Vec3 gv = g.at(idx);
                double row = 0.0;
                for (int i2 = 0; i2 < n; ++i2) {
                    const std::size_t mi = tables.index_of(i - i2);
                    for (int j2 = 0; j2 < n; ++j2) {
                        const std::size_t mj = tables.index_of(j - j2);
                        for (int k2 = 0; k2 < n; ++k2) {
                            if (i2 == i && j2 == j && k2 == k) continue;
                            const std::size_t idx2 = grid.index(i2, j2, k2);
                            const double ss = sf[idx2];
                            if (sv == 0.0 && ss == 0.0) continue;
                            const Vec3 gs = g.at(idx2);
                            const Vec3 w = ss * gv - sv * gs;
                            const std::size_t mk = tables.index_of(k - k2);
                            const SymMat3 a =
                                tables.a_avg_at(tables.padded_index(mi, mj, mk));
                            // PSD form; clamp per-term roundoff below zero
                            const double term = a.quad_form(w);
                            row += term > 0.0 ? term : 0.0;
                        }
                    }
                }
                partial[idx] = row;
            }
        }
    }
    const double vol = grid.cell_volume();
    return 2.0 * pairwise_sum(partial) * vol * vol;
}

double interaction_functional(const ScalarField& f, const KernelTables& tables,
                              Convolver& conv) {
    const ScalarField kf =
        conv.convolve_component(f, tables, KernelTables::Comp::pow_gamma);
    std::vector<double> terms(kf.values().size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = f[i] * kf[i];
    return pairwise_sum(terms) * f.grid().cell_volume();
}

double j_gamma(const ScalarField& f, const KernelTables& tables, Convolver& conv) {
    const ScalarField kf =
        conv.convolve_component(f, tables, KernelTables::Comp::pow_gamma);
    double best = 0.0;
    for (double v : kf.values()) best = std::max(best, v);
    return best;
}

double coercivity_constant(const MatrixField& abar, double gamma) {
    require_gamma(gamma);
    const auto& grid = abar.grid();
    const int n = grid.n();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                const double w = std::pow(1.0 + grid.node(i, j, k).norm2(),
                                          0.5 * gamma);
                const double lam = sym3_eig_min(abar.at(idx));
                best = std::min(best, lam / w);
            }
        }
    }
    return best;
}

double tail_mass(const ScalarField& f) {
    const auto& grid = f.grid();
    const int n = grid.n();
    const double r = 0.9 * grid.half_width();
    std::vector<double> terms(grid.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = grid.index(i, j, k);
                if (grid.node(i, j, k).norm() > r) terms[idx] = f[idx];
            }
        }
    }
    return pairwise_sum(terms) * grid.cell_volume();
}

double BetaFunction::beta(double x) const {
    if (kind == Kind::xlogx_shift) return (x + 1.0) * std::log1p(x);
    return std::pow(x, p) / p;
}

double BetaFunction::beta_second(double x) const {
    if (kind == Kind::xlogx_shift) return 1.0 / (x + 1.0);
    return (p - 1.0) * std::pow(x, p - 2.0);
}

double BetaFunction::phi(double x) const {
    if (kind == Kind::xlogx_shift) return x - std::log1p(x);
    return (p - 1.0) / p * std::pow(x, p);
}

std::string BetaFunction::name() const {
    if (kind == Kind::xlogx_shift) return "xlogx_shift";
    std::ostringstream os;
    os << "power_p(p=" << p << ")";
    return os.str();
}

BetaFunction make_beta(const std::string& beta_id, double p) {
    if (beta_id == "xlogx_shift") return {BetaFunction::Kind::xlogx_shift, 0.0};
    if (beta_id == "power_p") {
        if (!(p > 1.0)) throw std::invalid_argument("make_beta: power_p needs p > 1");
        return {BetaFunction::Kind::power_p, p};
    }
    throw std::invalid_argument("make_beta: unknown beta_id '" + beta_id + "'");
}

double chain_rule_residual(const ChainRuleWindow& win, const BetaFunction& beta,
                           const KernelTables& tables, Convolver& conv) {
    if (!win.f_prev || !win.f_mid || !win.f_next) {
        throw std::invalid_argument("chain_rule_residual: window needs three fields");
    }
    if (!(win.t_prev < win.t_mid && win.t_mid < win.t_next)) {
        throw std::invalid_argument("chain_rule_residual: window times must increase");
    }
    const auto& grid = win.f_mid->grid();
    const double vol = grid.cell_volume();

    auto beta_integral = [&](const ScalarField& f) {
        std::vector<double> terms(f.values().size());
        for (std::size_t i = 0; i < terms.size(); ++i) {
            terms[i] = beta.beta(std::max(0.0, f[i]));
        }
        return pairwise_sum(terms) * vol;
    };

    const double ddt = (beta_integral(*win.f_next) - beta_integral(*win.f_prev)) /
                       (win.t_next - win.t_prev);

    const auto coeffs = conv.coefficients(*win.f_mid, tables);
    const VectorField grad = gradient(*win.f_mid);

    std::vector<double> a_terms(grid.size()), c_terms(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = std::max(0.0, (*win.f_mid)[i]);
        a_terms[i] = coeffs.abar.at(i).quad_form(grad.at(i)) * beta.beta_second(x);
        c_terms[i] = coeffs.cbar[i] * beta.phi(x);
    }
    const double term_a = pairwise_sum(a_terms) * vol;
    const double term_c = pairwise_sum(c_terms) * vol;

    const double scale = std::max({1.0, std::fabs(ddt), std::fabs(term_a),
                                   std::fabs(term_c)});
    return std::fabs(ddt + term_a + term_c) / scale;
}

DiagnosticsRecord collect_diagnostics(double t, const ScalarField& f,
                                      const Convolver::Coefficients& coeffs,
                                      const KernelTables& tables, Convolver& conv,
                                      const SimulationConfig& cfg,
                                      double cumulative_clipped_mass) {
    DiagnosticsRecord rec;
    rec.t = t;
    const auto cons = conserved_quantities(f);
    rec.mass = cons.mass;
    rec.momentum = cons.momentum;
    rec.energy = cons.energy;
    rec.entropy = entropy(f);
    rec.entropy_production =
        cfg.diag_entropy_production
            ? entropy_production(f, tables)
            : std::numeric_limits<double>::quiet_NaN();
    for (double s : cfg.moment_orders) rec.moments.push_back(weighted_moment(f, s));
    for (double p : effective_lp_orders(cfg)) rec.lp_norms.push_back(lp_norm(f, p));
    rec.weighted_q_moment =
        weighted_moment(f, theorem_weight_q(cfg.gamma, cfg.s, cfg.epsilon));
    rec.interaction = interaction_functional(f, tables, conv);
    rec.j_gamma = j_gamma(f, tables, conv);
    rec.coercivity = coercivity_constant(coeffs.abar, cfg.gamma);
    rec.clipped_mass = cumulative_clipped_mass;
    rec.tail_mass = tail_mass(f);
    return rec;
}

std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view tok) {
    double out = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (res.ec != std::errc{}) {
        throw std::invalid_argument("csv: cannot parse number '" + std::string(tok) + "'");
    }
    return out;
}

}  // namespace

std::string diagnostics_csv_header(const SimulationConfig& cfg) {
    std::string h = "t,mass,momentum_x,momentum_y,momentum_z,energy,entropy,"
                    "entropy_production";
    for (double s : cfg.moment_orders) h += ",M_" + format_double(s);
    for (double p : effective_lp_orders(cfg)) h += ",Lp_" + format_double(p);
    h += ",M_q,interaction,j_gamma,coercivity,clipped_mass,tail_mass";
    return h;
}

std::string diagnostics_csv_row(const DiagnosticsRecord& rec) {
    std::string row = format_double(rec.t);
    auto add = [&row](double x) {
        row += ',';
        row += format_double(x);
    };
    add(rec.mass);
    add(rec.momentum.x);
    add(rec.momentum.y);
    add(rec.momentum.z);
    add(rec.energy);
    add(rec.entropy);
    add(rec.entropy_production);
    for (double m : rec.moments) add(m);
    for (double l : rec.lp_norms) add(l);
    add(rec.weighted_q_moment);
    add(rec.interaction);
    add(rec.j_gamma);
    add(rec.coercivity);
    add(rec.clipped_mass);
    add(rec.tail_mass);
    return row;
}

DiagnosticsRecord diagnostics_from_csv_row(const std::string& line,
                                           const SimulationConfig& cfg) {
    std::vector<std::string_view> toks;
    std::string_view sv = line;
    while (!sv.empty()) {
        const auto pos = sv.find(',');
        toks.push_back(sv.substr(0, pos));
        if (pos == std::string_view::npos) break;
        sv.remove_prefix(pos + 1);
    }
    const std::size_t n_mom = cfg.moment_orders.size();
    const std::size_t n_lp = effective_lp_orders(cfg).size();
    const std::size_t expected = 8 + n_mom + n_lp + 6;
    if (toks.size() != expected) {
        throw std::invalid_argument("csv: wrong column count for configuration");
    }
    DiagnosticsRecord rec;
    std::size_t c = 0;
    rec.t = parse_double(toks[c++]);
    rec.mass = parse_double(toks[c++]);
    rec.momentum.x = parse_double(toks[c++]);
    rec.momentum.y = parse_double(toks[c++]);
    rec.momentum.z = parse_double(toks[c++]);
    rec.energy = parse_double(toks[c++]);
    rec.entropy = parse_double(toks[c++]);
    rec.entropy_production = parse_double(toks[c++]);
    for (std::size_t i = 0; i < n_mom; ++i) rec.moments.push_back(parse_double(toks[c++]));
    for (std::size_t i = 0; i < n_lp; ++i) rec.lp_norms.push_back(parse_double(toks[c++]));
    rec.weighted_q_moment = parse_double(toks[c++]);
    rec.interaction = parse_double(toks[c++]);
    rec.j_gamma = parse_double(toks[c++]);
    rec.coercivity = parse_double(toks[c++]);
    rec.clipped_mass = parse_double(toks[c++]);
    rec.tail_mass = parse_double(toks[c++]);
    return rec;
}

}  // namespace landau
