#include "ecoflow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecoflow::io {

std::string fmt(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

void save_graph(const std::filesystem::path& path, const HabitatGraph& g,
                const nlohmann::json& header) {
    nlohmann::json h = header;
    h["n_nodes"] = g.n_nodes();
    std::ostringstream out;
    out << "# " << h.dump() << "\n";
    for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
    write_text(path, out.str());
}

HabitatGraph load_graph(const std::filesystem::path& path, nlohmann::json* header) {
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("graph file missing '# {json}' header: " + path.string());
    nlohmann::json h = nlohmann::json::parse(line.substr(2));
    const int n = h.at("n_nodes").get<int>();
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int i, j;
        if (!(ls >> i >> j)) throw std::runtime_error("bad edge line: " + line);
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    if (header) *header = h;
    return HabitatGraph(n, edges);
}

void save_field(const std::filesystem::path& csv_path, const EnvField& f,
                const nlohmann::json& extra_meta) {
    std::ostringstream out;
    out << "node_id,theta\n";
    for (int i = 0; i < f.theta.size(); ++i) out << i << "," << fmt(f.theta[i]) << "\n";
    write_text(csv_path, out.str());

    nlohmann::json meta = extra_meta;
    meta["provenance"] = f.provenance;
    meta["seed"] = f.seed;
    meta["n_nodes"] = f.theta.size();
    if (f.constant_rescale_warning) meta["constant_rescale_warning"] = true;
    std::filesystem::path meta_path = csv_path;
    meta_path += ".meta.json";
    write_text(meta_path, meta.dump(2) + "\n");
}

EnvField load_field(const std::filesystem::path& csv_path) {
    std::istringstream in(read_text(csv_path));
    std::string line;
    if (!std::getline(in, line) || line != "node_id,theta")
        throw std::runtime_error("field csv missing 'node_id,theta' header");
    std::vector<double> vals;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad field row: " + line);
        vals.push_back(std::stod(line.substr(comma + 1)));
    }
    EnvField f;
    f.theta = Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<int>(vals.size()));
    f.provenance = "explicit";
    return f;
}

void save_flow(const std::filesystem::path& path, const DirectedFlow& flow,
               double theta_opt, std::uint64_t field_hash) {
    nlohmann::json h;
    h["theta_opt"] = theta_opt;
    h["field_hash"] = field_hash;
    std::ostringstream out;
    out << "# " << h.dump() << "\n";
    const int n = static_cast<int>(flow.a_dir.rows());
    for (int i = 0; i < n; ++i)
        if (flow.best_neighbor[i] >= 0) out << i << " " << flow.best_neighbor[i] << "\n";
    write_text(path, out.str());
}

void save_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << fmt(m(i, j));
        }
        out << "\n";
    }
    write_text(path, out.str());
}

Eigen::MatrixXd load_matrix(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged matrix csv: " + path.string());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty matrix csv: " + path.string());
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

void save_trajectory(const std::filesystem::path& path, const Trajectory& traj) {
    std::ostringstream out;
    out << "time,node_id,u\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k)
        for (int i = 0; i < traj.states[k].size(); ++i)
            out << fmt(traj.times[k]) << "," << i << "," << fmt(traj.states[k][i]) << "\n";
    write_text(path, out.str());
}

void save_steady_state(const std::filesystem::path& path, const Eigen::VectorXd& u,
                       const EnvField& theta, double extinct_tol) {
    std::ostringstream out;
    out << "node_id,theta,u_star,extinct_flag\n";
    for (int i = 0; i < u.size(); ++i)
        out << i << "," << fmt(theta.theta[i]) << "," << fmt(u[i]) << ","
            << (u[i] < extinct_tol ? 1 : 0) << "\n";
    write_text(path, out.str());
}

}  // namespace ecoflow::io
