#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "landau/initial_conditions.hpp"
#include "landau/integrator.hpp"
#include "landau/io.hpp"

using namespace landau;
namespace fs = std::filesystem;

TEST_CASE("config parsing: ranges are enforced with named fields") {
    CHECK_THROWS_WITH_AS(config_from_json_text(R"({"gamma": 0.1})"),
                         doctest::Contains("gamma must lie in [-2, 0)"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(config_from_json_text(R"({"epsilon": 1.0})"),
                         doctest::Contains("epsilon must lie in (0, 1)"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(config_from_json_text(R"({"p": 1.0})"),
                         doctest::Contains("p must lie in (1, inf)"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(config_from_json_text(R"({"sigma": 1.5})"),
                         doctest::Contains("sigma must lie in (0, 1]"),
                         std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"n": 9})"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"unknown_key": 1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text("{nonsense"), std::invalid_argument);
}

TEST_CASE("config parsing: accepted config echoes the theorem weight q") {
    const SimulationConfig cfg =
        config_from_json_text(R"({"gamma": -2.0, "epsilon": 0.5, "s": 1.0})");
    // q = -3 (gamma - s)(2 - eps)/eps = -3 (-3)(1.5)/0.5 = 27
    CHECK(theorem_weight_q(cfg.gamma, cfg.s, cfg.epsilon) ==
          doctest::Approx(27.0));
    // round-trip through the echo text
    const SimulationConfig back = config_from_json_text(config_to_json_text(cfg));
    CHECK(back.gamma == cfg.gamma);
    CHECK(back.epsilon == cfg.epsilon);
    CHECK(back.n == cfg.n);
    CHECK(to_string(back.ic.kind) == to_string(cfg.ic.kind));
}

TEST_CASE("config parsing: initial condition blocks") {
    const SimulationConfig bi = config_from_json_text(R"({
        "ic": {"kind": "bimaxwellian", "mass": 0.5, "mean": [1.5, 0, 0],
               "mass2": 0.5, "mean2": [-1.5, 0, 0]}
    })");
    CHECK(bi.ic.kind == InitialConditionSpec::Kind::bimaxwellian);
    CHECK(bi.ic.second.mean.x == doctest::Approx(-1.5));

    // bump support beyond 0.8 L rejected
    CHECK_THROWS_WITH_AS(config_from_json_text(R"({
        "L": 5.0, "ic": {"kind": "bump", "center": [3.5, 0, 0], "radius": 1.0}
    })"),
                         doctest::Contains("0.8 L"), std::invalid_argument);

    CHECK_THROWS_AS(config_from_json_text(R"({"ic": {"kind": "nosuch"}})"),
                    std::invalid_argument);
}

TEST_CASE("shipped initial conditions: nonnegative with finite H and M_q") {
    const VelocityGrid g = make_grid(16, 5.0);
    const double q = theorem_weight_q(-2.0, 1.0, 0.5);

    InitialConditionSpec maxw;
    InitialConditionSpec bi;
    bi.kind = InitialConditionSpec::Kind::bimaxwellian;
    bi.first = {0.5, {1.5, 0.0, 0.0}, 1.0};
    bi.second = {0.5, {-1.5, 0.0, 0.0}, 1.0};
    InitialConditionSpec aniso;
    aniso.kind = InitialConditionSpec::Kind::anisotropic_gaussian;
    aniso.covariance_diag = {1.5, 0.7, 1.0};
    InitialConditionSpec bump;
    bump.kind = InitialConditionSpec::Kind::bump;
    bump.radius = 1.2;
    bump.height = 1.0;

    for (const auto& spec : {maxw, bi, aniso, bump}) {
        const ScalarField f = initial_condition(spec, g);
        double min_val = 0.0;
        for (double v : f.values()) min_val = std::min(min_val, v);
        CHECK(min_val >= 0.0);
        CHECK(std::isfinite(entropy(f)));
        CHECK(std::isfinite(weighted_moment(f, q)));
        CHECK(integrate(f) > 0.0);
    }

    // maxwellian(1, 0, 1) reported values
    const ScalarField m = initial_condition(maxw, make_grid(32, 8.0));
    const auto c = conserved_quantities(m);
    CHECK(c.mass == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.energy == doctest::Approx(1.5).epsilon(1e-5));
    CHECK(entropy(m) == doctest::Approx(-4.2568).epsilon(1e-4));

    // symmetric bimaxwellian has zero momentum
    const ScalarField fb = initial_condition(bi, g);
    CHECK(std::fabs(conserved_quantities(fb).momentum.x) < 1e-12);

    // bump fully inside the box: every moment finite (compact support)
    const ScalarField fc = initial_condition(bump, g);
    CHECK(std::isfinite(weighted_moment(fc, 40.0)));
}

TEST_CASE("series CSV: header-only file, row counts, bit-exact round trip") {
    const auto dir = fs::temp_directory_path() / "landau_io_test";
    fs::create_directories(dir);

    SimulationConfig cfg;
    cfg.gamma = -1.0;
    cfg.n = 8;
    cfg.half_width = 4.0;
    cfg.t_final = 0.0;

    Trajectory empty;
    empty.config = cfg;
    write_series(empty, dir / "empty.csv");
    {
        std::ifstream in(dir / "empty.csv");
        std::string line;
        int count = 0;
        while (std::getline(in, line)) ++count;
        CHECK(count == 1);  // header only
    }

    // real short run: 1 + records lines, values round-trip exactly
    cfg.t_final = 0.05;
    cfg.cadence = 1;
    cfg.diag_entropy_production = true;
    const Trajectory traj = run(cfg);
    write_series(traj, dir / "series.csv");
    {
        std::ifstream in(dir / "series.csv");
        std::string line;
        int count = 0;
        while (std::getline(in, line)) ++count;
        CHECK(count == static_cast<int>(traj.records.size()) + 1);
    }
    const auto readback = read_series(dir / "series.csv", cfg);
    REQUIRE(readback.size() == traj.records.size());
    for (std::size_t k = 0; k < readback.size(); ++k) {
        CHECK(readback[k].t == traj.records[k].t);
        CHECK(readback[k].mass == traj.records[k].mass);
        CHECK(readback[k].entropy == traj.records[k].entropy);
        CHECK(readback[k].j_gamma == traj.records[k].j_gamma);
        for (std::size_t i = 0; i < readback[k].moments.size(); ++i) {
            CHECK(readback[k].moments[i] == traj.records[k].moments[i]);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("checkpoint: binary + sidecar round trip") {
    const auto dir = fs::temp_directory_path() / "landau_ckpt_test";
    fs::create_directories(dir);

    SimulationConfig cfg;
    cfg.gamma = -1.5;
    cfg.n = 8;
    cfg.half_width = 4.0;
    const VelocityGrid g = make_grid(cfg.n, cfg.half_width);
    const ScalarField f = landau::testing::random_smooth_field(g, 17);

    write_checkpoint(f, cfg, 0.625, dir / "state.bin");
    const Checkpoint ck = read_checkpoint(dir / "state.bin");
    CHECK(ck.t == 0.625);
    CHECK(ck.config.gamma == cfg.gamma);
    CHECK(ck.f.grid() == g);
    CHECK(std::memcmp(ck.f.values().data(), f.values().data(),
                      f.values().size() * sizeof(double)) == 0);

    CHECK_THROWS_AS(read_checkpoint(dir / "missing.bin"), IoError);
    fs::remove_all(dir);
}
