#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landau/collision.hpp"
#include "landau/config.hpp"
#include "landau/convolution.hpp"
#include "landau/diagnostics.hpp"
#include "landau/harness.hpp"
#include "landau/inequalities.hpp"
#include "landau/initial_conditions.hpp"
#include "landau/integrator.hpp"
#include "landau/io.hpp"
#include "landau/kernel.hpp"

namespace py = pybind11;
using namespace landau;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ScalarField field_from_array(const VelocityGrid& grid, const Array& arr) {
    if (arr.ndim() != 3 || arr.shape(0) != grid.n() || arr.shape(1) != grid.n() ||
        arr.shape(2) != grid.n()) {
        throw std::invalid_argument("field array must have shape (n, n, n)");
    }
    std::vector<double> values(arr.data(), arr.data() + grid.size());
    return ScalarField(grid, std::move(values));
}

Array array_from_field(const ScalarField& f) {
    const int n = f.grid().n();
    Array out({n, n, n});
    std::copy(f.values().begin(), f.values().end(), out.mutable_data());
    return out;
}

Array array_from_span(const VelocityGrid& grid, std::span<const double> vals) {
    const int n = grid.n();
    Array out({n, n, n});
    std::copy(vals.begin(), vals.end(), out.mutable_data());
    return out;
}

py::dict record_to_dict(const DiagnosticsRecord& rec) {
    py::dict d;
    d["t"] = rec.t;
    d["mass"] = rec.mass;
    d["momentum"] = py::make_tuple(rec.momentum.x, rec.momentum.y, rec.momentum.z);
    d["energy"] = rec.energy;
    d["entropy"] = rec.entropy;
    d["entropy_production"] = rec.entropy_production;
    d["moments"] = rec.moments;
    d["lp_norms"] = rec.lp_norms;
    d["M_q"] = rec.weighted_q_moment;
    d["interaction"] = rec.interaction;
    d["j_gamma"] = rec.j_gamma;
    d["coercivity"] = rec.coercivity;
    d["clipped_mass"] = rec.clipped_mass;
    d["tail_mass"] = rec.tail_mass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_landau, m) {
    m.doc() = "Velocity-space Landau collision operator: simulator and "
              "diagnostics core";

    py::class_<VelocityGrid>(m, "Grid")
        .def(py::init([](int n, double half_width) { return make_grid(n, half_width); }),
             py::arg("n"), py::arg("half_width"))
        .def_property_readonly("n", &VelocityGrid::n)
        .def_property_readonly("half_width", &VelocityGrid::half_width)
        .def_property_readonly("spacing", &VelocityGrid::spacing)
        .def("axis_coords", [](const VelocityGrid& g) {
            std::vector<double> v(g.n());
            for (int k = 0; k < g.n(); ++k) v[k] = g.axis_coord(k);
            return v;
        });

    py::class_<KernelTables>(m, "KernelTables")
        .def(py::init([](const VelocityGrid& g, double gamma, const std::string& cache) {
                 return KernelTables::build_or_load(g, gamma, cache);
             }),
             py::arg("grid"), py::arg("gamma"), py::arg("cache_dir") = std::string())
        .def_property_readonly("gamma", &KernelTables::gamma)
        .def_property_readonly("padded_n", &KernelTables::padded_n);

    py::class_<Convolver>(m, "Convolver")
        .def(py::init<const VelocityGrid&>(), py::arg("grid"))
        .def("coefficients",
             [](Convolver& conv, const Array& f_arr, const KernelTables& tables) {
                 const ScalarField f = field_from_array(conv.grid(), f_arr);
                 const auto co = conv.coefficients(f, tables);
                 py::dict out;
                 const char* names[6] = {"xx", "yy", "zz", "xy", "xz", "yz"};
                 py::dict abar;
                 for (int c = 0; c < 6; ++c) {
                     abar[names[c]] = array_from_span(conv.grid(), co.abar.component(c));
                 }
                 out["abar"] = abar;
                 py::list bbar;
                 for (int c = 0; c < 3; ++c) {
                     bbar.append(array_from_span(conv.grid(), co.bbar.component(c)));
                 }
                 out["bbar"] = bbar;
                 out["cbar"] = array_from_field(co.cbar);
                 return out;
             },
             py::arg("f"), py::arg("tables"));

    m.def("maxwellian",
          [](const VelocityGrid& g, double mass, py::tuple mean, double temperature) {
              const Vec3 mu{mean[0].cast<double>(), mean[1].cast<double>(),
                            mean[2].cast<double>()};
              return array_from_field(sample_maxwellian(g, mass, mu, temperature));
          },
          py::arg("grid"), py::arg("mass") = 1.0,
          py::arg("mean") = py::make_tuple(0.0, 0.0, 0.0),
          py::arg("temperature") = 1.0);

    m.def("integrate", [](const VelocityGrid& g, const Array& f) {
        return integrate(field_from_array(g, f));
    });
    m.def("lp_norm", [](const VelocityGrid& g, const Array& f, double p) {
        return lp_norm(field_from_array(g, f), p);
    });
    m.def("weighted_moment", [](const VelocityGrid& g, const Array& f, double s) {
        return weighted_moment(field_from_array(g, f), s);
    });
    m.def("entropy", [](const VelocityGrid& g, const Array& f) {
        return entropy(field_from_array(g, f));
    });
    m.def("conserved_quantities", [](const VelocityGrid& g, const Array& f) {
        const auto c = conserved_quantities(field_from_array(g, f));
        return py::make_tuple(c.mass,
                              py::make_tuple(c.momentum.x, c.momentum.y, c.momentum.z),
                              c.energy);
    });
    m.def("entropy_production",
          [](const VelocityGrid& g, const Array& f, const KernelTables& tables) {
              return entropy_production(field_from_array(g, f), tables);
          });

    m.def("collision_operator",
          [](const VelocityGrid& g, const Array& f, const KernelTables& tables) {
              Convolver conv(g);
              return array_from_field(
                  collision_operator(field_from_array(g, f), tables, conv));
          },
          py::arg("grid"), py::arg("f"), py::arg("tables"));

    m.def("step",
          [](const VelocityGrid& g, const Array& f, double dt,
             const KernelTables& tables) {
              Convolver conv(g);
              auto res = step(field_from_array(g, f), dt, tables, conv);
              return py::make_tuple(array_from_field(res.f), res.clipped_mass);
          },
          py::arg("grid"), py::arg("f"), py::arg("dt"), py::arg("tables"));

    m.def("cfl_dt",
          [](const VelocityGrid& g, const Array& f, const KernelTables& tables,
             double sigma, double fallback_dt) {
              Convolver conv(g);
              const ScalarField field = field_from_array(g, f);
              const auto co = conv.coefficients(field, tables);
              return cfl_dt(co.abar, g, sigma, fallback_dt);
          },
          py::arg("grid"), py::arg("f"), py::arg("tables"), py::arg("sigma") = 0.9,
          py::arg("fallback_dt") = 1e-3);

    m.def("hls_ratio",
          [](const VelocityGrid& g, const Array& f, const Array& h,
             const KernelTables& tables) {
              Convolver conv(g);
              return hls_ratio(field_from_array(g, f), field_from_array(g, h),
                               tables, conv);
          });
    m.def("pitt_ratio", [](const VelocityGrid& g, const Array& f, double gamma) {
        return pitt_ratio(field_from_array(g, f), gamma);
    });

    m.def("thm1_envelope", [](double gamma, double epsilon, double s) {
        const auto env = thm1_envelope(gamma, epsilon, s);
        py::dict d;
        d["stretched"] = env.stretched;
        d["exponent"] = env.exponent;
        d["corollary_range_ok"] = env.corollary_range_ok;
        return d;
    });
    m.def("theorem_weight_q", &theorem_weight_q, py::arg("gamma"), py::arg("s"),
          py::arg("epsilon"));
    m.def("alpha_exponent", &alpha_exponent, py::arg("epsilon"));

    m.def("run_json",
          [](const std::string& config_json) {
              const SimulationConfig cfg = config_from_json_text(config_json);
              const Trajectory traj = run(cfg);
              py::dict out;
              py::list records;
              for (const auto& rec : traj.records) records.append(record_to_dict(rec));
              out["records"] = records;
              out["config"] = config_to_json_text(traj.config);
              out["final_field"] = array_from_field(traj.final_state);
              return out;
          },
          py::arg("config_json"),
          "Run a simulation from a JSON configuration string; returns records "
          "and the final field");
}
