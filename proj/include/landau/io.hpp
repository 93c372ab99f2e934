#pragma once

#include <filesystem>
#include <string>

#include "landau/config.hpp"
#include "landau/grid.hpp"
#include "landau/integrator.hpp"

namespace landau {

/// IO failure carrying the offending path in the message.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parse and validate a configuration file (flat JSON, an "ic" object for
/// the initial condition). Unknown keys are rejected so typos fail loudly.
SimulationConfig parse_config(const std::filesystem::path& path);
SimulationConfig config_from_json_text(const std::string& text);

/// Round-trippable JSON echo of a configuration.
std::string config_to_json_text(const SimulationConfig& cfg);

/// CSV time series: one header line (fixed column order), one row per
/// diagnostic record, shortest round-trip decimal formatting.
void write_series(const Trajectory& traj, const std::filesystem::path& path);
std::vector<DiagnosticsRecord> read_series(const std::filesystem::path& path,
                                           const SimulationConfig& cfg);

/// Checkpoint: binary field in the kernel-cache layout (header + raw
/// little-endian doubles) plus a JSON sidecar <path>.json with config and t.
void write_checkpoint(const ScalarField& f, const SimulationConfig& cfg, double t,
                      const std::filesystem::path& path);

struct Checkpoint {
    ScalarField f;
    SimulationConfig config;
    double t = 0.0;
};
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace landau
