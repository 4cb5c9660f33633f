#ifndef RISIM_SCENARIO_HPP
#define RISIM_SCENARIO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "risim/beam.hpp"
#include "risim/deployment.hpp"
#include "risim/field.hpp"
#include "risim/geometry.hpp"

namespace risim {

struct ParseError : std::runtime_error {
    int line = 0;
    std::string key;
    ParseError(int line_, std::string key_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) +
                             (key_.empty() ? "" : " (key '" + key_ + "')") + ": " +
                             message),
          line(line_), key(std::move(key_)) {}
};

enum class BeamMode { SingleBeam, MultiBeam, Unconfigured };

struct SolverSettings {
    std::uint64_t seed = 1;
    int restarts = 16;
    int budget = 300;
};

struct RisSpec {
    UnitGrid grid;
    double tau = 1.0;
    int bits = 0; // 0 = continuous phases
};

struct Scenario {
    int schema_version = 1;
    double frequency_hz = 0.0;
    SourceSpec tx;
    std::vector<RisSpec> chain;
    Vec3 receiver{};
    BeamMode mode = BeamMode::SingleBeam;
    SolverSettings solver;
    std::optional<double> tx_power_dbm;
    bool lattice_sampling = true;

    Wavelength wavelength() const { return Wavelength::from_frequency(frequency_hz); }
    ChainSpec chain_spec() const;
};

// Sections of the structured key-value scenario format, kept so follow-up
// sections ([sweep], [deploy], [pattern]) can be read by the subcommands.
struct ScenarioFile {
    Scenario scenario;
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>> extra;
    bool has_section(const std::string& name) const { return extra.count(name) > 0; }
};

ScenarioFile parse_scenario_text(std::istream& in);
ScenarioFile load_scenario_file(const std::string& path);

// ---- single evaluation ----

struct HopReport {
    int board = 0; // 1-based
    EfficiencyReport efficiency;
    std::optional<double> eab;
    std::optional<Illumination> illumination;
};

struct RunResult {
    Complex rx_field{};
    double rx_power_db = 0.0;
    std::optional<double> rx_power_dbm;
    std::vector<HopReport> hops;
    std::vector<PhaseProfile> profiles;
    ChainResult chain;
    bool solver_converged = true;
};

RunResult run_scenario(const Scenario& scenario);

// ---- sweeps ----

enum class SweepParameter { UnitsPerSide, PositionOnRay, Distance };

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Distance;
    int hop = 2;                 // 1-based board index being varied
    std::vector<double> values;  // unit counts or distances along the ray
    Vec3 ray_origin{};
    Vec3 ray_direction{};        // used by PositionOnRay; Distance reuses the
                                 // current direction from the previous board
    std::vector<BeamMode> modes;
    std::vector<std::string> outputs; // power_db, e_r, eps_s, eps_ap, eab, gain_dbi
};

SweepSpec parse_sweep_section(const ScenarioFile& file);

struct SweepRow {
    double value = 0.0;
    std::vector<double> cells;
    std::string error; // empty on success
};

struct SweepResult {
    std::vector<std::string> header;
    std::vector<SweepRow> rows;
};

Scenario scenario_at_sweep_point(const Scenario& base, const SweepSpec& spec,
                                 double value, BeamMode mode);
SweepResult run_sweep(const Scenario& base, const SweepSpec& spec, int jobs = 1);

std::string sweep_csv(const SweepResult& result);

// ---- pattern cuts ----

struct PatternRequest {
    int rows = 1;
    int cols = 16;
    double spacing = 0.0; // 0 = half wavelength
    double frequency_hz = 3.4e9;
    double theta1_deg = 0.0, phi1_deg = 0.0;
    double theta2_deg = 0.0, phi2_deg = 0.0;
    double cut_phi_deg = 0.0;
    double theta_step_deg = 0.01;
    bool include_sinc = false;
    bool compare_engine = false;       // overlay spherical-wave engine pattern
    std::vector<double> targets_deg;   // multi-beam targets on the cut
    std::uint64_t seed = 1;
};

PatternRequest parse_pattern_section(const ScenarioFile& file);
std::string pattern_csv(const PatternRequest& request);

// ---- reproduction harness ----

enum class ReproTable { Hpbw, Deployment };

std::string table_repro_csv(ReproTable which);

// One row of the deployment reproduction (second board centered at (x,0,x));
// shared by the harness and the acceptance suite.
struct DeploymentComputedRow {
    double x = 0.0;
    double distance = 0.0;
    double eab = 0.0;
    double e_r = 0.0;
    double eps_s = 0.0;
    double eps_ap = 0.0;
    double gain_dbi = 0.0;
};
DeploymentComputedRow compute_deployment_row(double x, int units_per_side = 32);

// The scenario behind the deployment reference table.
Scenario deployment_reference_scenario(double x, int units_per_side = 32,
                                       BeamMode mode = BeamMode::SingleBeam);

// ---- deployment subcommand ----

struct DeployRequest {
    bool optimize_units = false; // false = optimize distance (fixed aperture)
    int hop = 2;                 // board being placed/sized (>= 2)
};

DeployRequest parse_deploy_section(const ScenarioFile& file);

struct DeployOutcome {
    bool optimize_units = false;
    double decision = 0.0;       // r_opt (m) or N_opt (units per side)
    double objective = 0.0;
    double eab = 0.0;
    double predicted_eps_ap = 0.0;
    bool feasible = true;
};

DeployOutcome run_deploy(const Scenario& base, const DeployRequest& request);

// Timestamp header line (suppressible for byte-reproducible output).
std::string csv_timestamp_line(const std::string& tool);

} // namespace risim

#endif
