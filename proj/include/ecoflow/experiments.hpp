#ifndef ECOFLOW_EXPERIMENTS_HPP
#define ECOFLOW_EXPERIMENTS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecoflow/analysis.hpp"
#include "ecoflow/dynamics.hpp"
#include "ecoflow/graph.hpp"

namespace ecoflow {

inline constexpr const char* kVersion = "0.1.0";

struct NetworkSpec {
    std::string generator = "watts_strogatz";  // grid | erdos_renyi | watts_strogatz
    int n = 100;
    int k = 7;          // watts_strogatz
    double beta = 0.1;  // watts_strogatz
    double p = 0.1;     // erdos_renyi
    int rows = 4, cols = 5;  // grid
    std::uint64_t seed = 1;

    HabitatGraph build() const;
};

struct FieldSpec {
    std::string type = "uniform";  // uniform | grf
    double sigma = 2.0;            // grf smoothing
    double low = 15.0, high = 35.0;  // uniform bounds / grf rescale interval
    std::uint64_t seed = 2;

    EnvField build(const HabitatGraph& g) const;
};

// Config for one experiment run. Round-trips losslessly through JSON.
struct ExperimentConfig {
    int schema_version = 1;
    std::string kind;  // hotspot | niche_tracking | advection_sweep | corridor_sweep
    NetworkSpec network;
    FieldSpec field;
    SpeciesParams species;
    IntegratorOptions integrator;
    double u0 = 0.1;

    std::vector<double> alpha_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> rho_grid = {0.0, 0.5, 0.9};
    std::uint64_t removal_seed = 3;
    double target_decile = 0.1;  // optimal-node cutoff for corridor targeting

    std::filesystem::path out_dir = "out";

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    std::uint64_t hash() const;  // over the canonical JSON serialization
};

struct HotspotResult {
    std::optional<double> correlation;  // absent for degenerate (constant) inputs
    int extinct_count = 0;
    double lambda1 = 0.0;
    Eigen::VectorXd u;
};

struct NicheTrackingResult {
    Eigen::VectorXd u_local;  // d = alpha = 0 endpoint
    Eigen::VectorXd u_full;
    EnvField field;
};

struct SweepRow {
    std::string topology;
    double alpha;
    int node_id;
    double theta;
    double u;
};

struct AdvectionSweepResult {
    std::vector<SweepRow> rows;
    int survivors(const std::string& topology, double alpha, double tol = 1e-6) const;
};

struct CorridorRow {
    std::string topology;
    double rho;
    int node_id;
    double niche_distance;
    double u;
};

struct CorridorSweepResult {
    std::vector<CorridorRow> rows;
    double peak_abundance(const std::string& topology, double rho) const;
    double max_occupied_distance(const std::string& topology, double rho,
                                 double tol = 1e-6) const;
};

// Creates cfg.out_dir, writes config.json + provenance.json, and refuses to
// reuse a directory whose recorded config hash differs (unless force).
void prepare_out_dir(const ExperimentConfig& cfg, bool force = false);

HotspotResult run_hotspot(const ExperimentConfig& cfg);
NicheTrackingResult run_niche_tracking(const ExperimentConfig& cfg);
AdvectionSweepResult run_advection_sweep(const ExperimentConfig& cfg);
CorridorSweepResult run_corridor_sweep(const ExperimentConfig& cfg);

// Dispatches on cfg.kind; writes all output files.
void run_experiment(const ExperimentConfig& cfg, bool force = false);

ExperimentConfig default_config(const std::string& kind);

}  // namespace ecoflow

#endif  // ECOFLOW_EXPERIMENTS_HPP
