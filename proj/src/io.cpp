#include "landau/io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace landau {

namespace {

using nlohmann::json;

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument("config: " + key + " must be an array of 3 numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json ic_to_json(const InitialConditionSpec& ic) {
    json j;
    j["kind"] = to_string(ic.kind);
    switch (ic.kind) {
        case InitialConditionSpec::Kind::maxwellian:
            j["mass"] = ic.first.mass;
            j["mean"] = vec3_to_json(ic.first.mean);
            j["temperature"] = ic.first.temperature;
            break;
        case InitialConditionSpec::Kind::bimaxwellian:
            j["mass"] = ic.first.mass;
            j["mean"] = vec3_to_json(ic.first.mean);
            j["temperature"] = ic.first.temperature;
            j["mass2"] = ic.second.mass;
            j["mean2"] = vec3_to_json(ic.second.mean);
            j["temperature2"] = ic.second.temperature;
            break;
        case InitialConditionSpec::Kind::anisotropic_gaussian:
            j["mass"] = ic.first.mass;
            j["mean"] = vec3_to_json(ic.first.mean);
            j["covariance_diag"] = vec3_to_json(ic.covariance_diag);
            break;
        case InitialConditionSpec::Kind::bump:
            j["center"] = vec3_to_json(ic.center);
            j["radius"] = ic.radius;
            j["height"] = ic.height;
            break;
    }
    return j;
}

InitialConditionSpec ic_from_json(const json& j) {
    InitialConditionSpec ic;
    if (!j.contains("kind")) throw std::invalid_argument("config: ic.kind missing");
    ic.kind = ic_kind_from_string(j.at("kind").get<std::string>());
    auto get = [&j](const char* key, double fallback) {
        return j.contains(key) ? j.at(key).get<double>() : fallback;
    };
    switch (ic.kind) {
        case InitialConditionSpec::Kind::maxwellian:
        case InitialConditionSpec::Kind::bimaxwellian:
            ic.first.mass = get("mass", 1.0);
            ic.first.temperature = get("temperature", 1.0);
            if (j.contains("mean")) ic.first.mean = vec3_from_json(j.at("mean"), "ic.mean");
            if (ic.kind == InitialConditionSpec::Kind::bimaxwellian) {
                ic.second.mass = get("mass2", 1.0);
                ic.second.temperature = get("temperature2", 1.0);
                if (j.contains("mean2"))
                    ic.second.mean = vec3_from_json(j.at("mean2"), "ic.mean2");
            }
            break;
        case InitialConditionSpec::Kind::anisotropic_gaussian:
            ic.first.mass = get("mass", 1.0);
            if (j.contains("mean")) ic.first.mean = vec3_from_json(j.at("mean"), "ic.mean");
            if (j.contains("covariance_diag"))
                ic.covariance_diag =
                    vec3_from_json(j.at("covariance_diag"), "ic.covariance_diag");
            break;
        case InitialConditionSpec::Kind::bump:
            if (j.contains("center")) ic.center = vec3_from_json(j.at("center"), "ic.center");
            ic.radius = get("radius", 1.0);
            ic.height = get("height", 1.0);
            break;
    }
    return ic;
}

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "gamma", "n", "L", "T", "sigma", "cadence", "ic", "epsilon", "p",
        "s", "out", "threads", "cache_dir", "fallback_dt", "store_fields",
        "diag_entropy_production", "moment_orders", "lp_orders"};
    return keys;
}

}  // namespace

SimulationConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const auto& k : known_keys()) {
            if (k == key) { known = true; break; }
        }
        if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
    }

    SimulationConfig cfg;
    if (j.contains("gamma")) cfg.gamma = j.at("gamma").get<double>();
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("L")) cfg.half_width = j.at("L").get<double>();
    if (j.contains("T")) cfg.t_final = j.at("T").get<double>();
    if (j.contains("sigma")) cfg.cfl_sigma = j.at("sigma").get<double>();
    if (j.contains("cadence")) cfg.cadence = j.at("cadence").get<int>();
    if (j.contains("ic")) cfg.ic = ic_from_json(j.at("ic"));
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("p")) cfg.p = j.at("p").get<double>();
    if (j.contains("s")) cfg.s = j.at("s").get<double>();
    if (j.contains("out")) cfg.output_path = j.at("out").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("cache_dir")) cfg.cache_dir = j.at("cache_dir").get<std::string>();
    if (j.contains("fallback_dt")) cfg.fallback_dt = j.at("fallback_dt").get<double>();
    if (j.contains("store_fields")) cfg.store_fields = j.at("store_fields").get<bool>();
    if (j.contains("diag_entropy_production")) {
        cfg.diag_entropy_production = j.at("diag_entropy_production").get<bool>();
    } else {
        // the O(N^2) pair sum is only a sensible default at small n
        cfg.diag_entropy_production = cfg.n <= 24;
    }
    if (j.contains("moment_orders"))
        cfg.moment_orders = j.at("moment_orders").get<std::vector<double>>();
    if (j.contains("lp_orders"))
        cfg.lp_orders = j.at("lp_orders").get<std::vector<double>>();

    validate(cfg);
    return cfg;
}

SimulationConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json_text(const SimulationConfig& cfg) {
    json j;
    j["gamma"] = cfg.gamma;
    j["n"] = cfg.n;
    j["L"] = cfg.half_width;
    j["T"] = cfg.t_final;
    j["sigma"] = cfg.cfl_sigma;
    j["cadence"] = cfg.cadence;
    j["ic"] = ic_to_json(cfg.ic);
    j["epsilon"] = cfg.epsilon;
    j["p"] = cfg.p;
    j["s"] = cfg.s;
    if (!cfg.output_path.empty()) j["out"] = cfg.output_path;
    j["threads"] = cfg.threads;
    if (!cfg.cache_dir.empty()) j["cache_dir"] = cfg.cache_dir;
    j["fallback_dt"] = cfg.fallback_dt;
    j["store_fields"] = cfg.store_fields;
    j["diag_entropy_production"] = cfg.diag_entropy_production;
    j["moment_orders"] = cfg.moment_orders;
    j["lp_orders"] = cfg.lp_orders;
    return j.dump(2);
}

void write_series(const Trajectory& traj, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open series file for writing: " + path.string());
    out << diagnostics_csv_header(traj.config) << '\n';
    for (const auto& rec : traj.records) {
        out << diagnostics_csv_row(rec) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<DiagnosticsRecord> read_series(const std::filesystem::path& path,
                                           const SimulationConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open series file: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("series file empty: " + path.string());
    std::vector<DiagnosticsRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(diagnostics_from_csv_row(line, cfg));
    }
    return out;
}

namespace {

constexpr char kCkptMagic[4] = {'L', 'C', 'K', 'P'};

struct CheckpointHeader {
    char magic[4];
    std::uint32_t version;
    std::uint32_t n;
    std::uint32_t reserved;
    double half_width;
    double gamma;
};
static_assert(sizeof(CheckpointHeader) == 32);

}  // namespace

void write_checkpoint(const ScalarField& f, const SimulationConfig& cfg, double t,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open checkpoint for writing: " + path.string());
    CheckpointHeader hd{};
    std::memcpy(hd.magic, kCkptMagic, 4);
    hd.version = 1;
    hd.n = static_cast<std::uint32_t>(f.grid().n());
    hd.half_width = f.grid().half_width();
    hd.gamma = cfg.gamma;
    out.write(reinterpret_cast<const char*>(&hd), sizeof(hd));
    out.write(reinterpret_cast<const char*>(f.values().data()),
              static_cast<std::streamsize>(f.values().size() * sizeof(double)));
    if (!out) throw IoError("checkpoint write failed: " + path.string());

    json side;
    side["t"] = t;
    side["config"] = json::parse(config_to_json_text(cfg));
    std::ofstream sc(path.string() + ".json");
    if (!sc) throw IoError("cannot open checkpoint sidecar: " + path.string() + ".json");
    sc << side.dump(2) << '\n';
    if (!sc) throw IoError("sidecar write failed: " + path.string() + ".json");
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint: " + path.string());
    CheckpointHeader hd{};
    in.read(reinterpret_cast<char*>(&hd), sizeof(hd));
    if (!in || std::memcmp(hd.magic, kCkptMagic, 4) != 0 || hd.version != 1) {
        throw IoError("not a checkpoint file: " + path.string());
    }
    const VelocityGrid grid = make_grid(static_cast<int>(hd.n), hd.half_width);
    std::vector<double> values(grid.size());
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!in) throw IoError("checkpoint truncated: " + path.string());

    Checkpoint ck{ScalarField(grid, std::move(values)), SimulationConfig{}, 0.0};
    std::ifstream sc(path.string() + ".json");
    if (!sc) throw IoError("missing checkpoint sidecar: " + path.string() + ".json");
    std::ostringstream ss;
    ss << sc.rdbuf();
    json side;
    try {
        side = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw IoError("invalid checkpoint sidecar: " + std::string(e.what()));
    }
    ck.t = side.at("t").get<double>();
    ck.config = config_from_json_text(side.at("config").dump());
    return ck;
}

}  // namespace landau
