#ifndef ECOFLOW_IO_HPP
#define ECOFLOW_IO_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ecoflow/advection.hpp"
#include "ecoflow/dynamics.hpp"
#include "ecoflow/graph.hpp"

#include <nlohmann/json.hpp>

namespace ecoflow::io {

// Deterministic shortest-round-trip formatting for every numeric cell, so
// identical runs produce byte-identical files.
std::string fmt(double x);

// FNV-1a over bytes; used for config and field hashes in provenance records.
std::uint64_t fnv1a(const std::string& bytes);

// Edge-list graph file: first line "# <json header>", then one "i j" per line.
void save_graph(const std::filesystem::path& path, const HabitatGraph& g,
                const nlohmann::json& header);
HabitatGraph load_graph(const std::filesystem::path& path,
                        nlohmann::json* header = nullptr);

// Field CSV (node_id,theta) plus a ".meta.json" sidecar with provenance.
void save_field(const std::filesystem::path& csv_path, const EnvField& f,
                const nlohmann::json& extra_meta = {});
EnvField load_field(const std::filesystem::path& csv_path);

// Directed-flow edge list with a header noting theta_opt and the field hash.
void save_flow(const std::filesystem::path& path, const DirectedFlow& flow,
               double theta_opt, std::uint64_t field_hash);

// Dense matrix CSV, one row per line.
void save_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd load_matrix(const std::filesystem::path& path);

// Long-format trajectory CSV: time,node_id,u.
void save_trajectory(const std::filesystem::path& path, const Trajectory& traj);

// Steady-state CSV: node_id,theta,u_star,extinct_flag.
void save_steady_state(const std::filesystem::path& path, const Eigen::VectorXd& u,
                       const EnvField& theta, double extinct_tol = 1e-6);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& content);

}  // namespace ecoflow::io

#endif  // ECOFLOW_IO_HPP
