#include "ecoflow/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecoflow/rng.hpp"

namespace ecoflow {

HabitatGraph::HabitatGraph(int n_nodes) : n_(n_nodes) {
    if (n_nodes <= 0) throw std::invalid_argument("graph needs at least one node");
    adj_ = Eigen::MatrixXd::Zero(n_, n_);
}

HabitatGraph::HabitatGraph(int n_nodes, const std::vector<Edge>& edges)
    : HabitatGraph(n_nodes) {
    for (const auto& [i, j] : edges) add_edge(i, j);
}

void HabitatGraph::check_node(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("node id out of range");
}

void HabitatGraph::add_edge(int i, int j) {
    check_node(i);
    check_node(j);
    if (i == j) throw std::invalid_argument("self-loops not allowed");
    adj_(i, j) = 1.0;
    adj_(j, i) = 1.0;
}

bool HabitatGraph::has_edge(int i, int j) const {
    check_node(i);
    check_node(j);
    return adj_(i, j) != 0.0;
}

std::set<int> HabitatGraph::neighbors(int i) const {
    check_node(i);
    std::set<int> out;
    for (int j = 0; j < n_; ++j)
        if (adj_(i, j) != 0.0) out.insert(j);
    return out;
}

int HabitatGraph::degree(int i) const {
    check_node(i);
    int d = 0;
    for (int j = 0; j < n_; ++j)
        if (adj_(i, j) != 0.0) ++d;
    return d;
}

int HabitatGraph::n_edges() const {
    int e = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_(i, j) != 0.0) ++e;
    return e;
}

std::vector<Edge> HabitatGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_(i, j) != 0.0) out.emplace_back(i, j);
    return out;
}

Eigen::MatrixXd HabitatGraph::laplacian() const {
    Eigen::MatrixXd lap = -adj_;
    for (int i = 0; i < n_; ++i) lap(i, i) = adj_.row(i).sum();
    return lap;
}

bool HabitatGraph::is_connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n_; ++w) {
            if (adj_(v, w) != 0.0 && !seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

HabitatGraph gen_grid(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return HabitatGraph(rows * cols, edges);
}

HabitatGraph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return HabitatGraph(n, edges);
}

namespace {

HabitatGraph watts_strogatz_once(int n, int k, double beta, std::uint64_t seed) {
    Rng rng(seed);
    // Ring lattice: node i linked to i+1 .. i+k (mod n).
    HabitatGraph base(n);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    auto link = [&adj](int a, int b) {
        adj[a][b] = true;
        adj[b][a] = true;
    };
    for (int i = 0; i < n; ++i)
        for (int off = 1; off <= k; ++off) link(i, (i + off) % n);

    // Rewire each lattice edge (i, i+off) with probability beta, keeping the
    // source endpoint and drawing a new target that avoids loops/duplicates.
    for (int off = 1; off <= k; ++off) {
        for (int i = 0; i < n; ++i) {
            if (rng.uniform01() >= beta) continue;
            int old = (i + off) % n;
            if (static_cast<int>(std::count(adj[i].begin(), adj[i].end(), true)) >= n - 1)
                continue;  // node saturated, nowhere to rewire
            int target;
            do {
                target = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
            } while (target == i || adj[i][target]);
            adj[i][old] = adj[old][i] = false;
            link(i, target);
        }
    }

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[i][j]) edges.emplace_back(i, j);
    return HabitatGraph(n, edges);
}

}  // namespace

HabitatGraph gen_watts_strogatz(int n, int k, double beta, std::uint64_t seed) {
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("watts-strogatz requires 1 <= k < n/2");
    if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("rewiring probability outside [0,1]");
    for (std::uint64_t attempt = 0;; ++attempt) {
        HabitatGraph g = watts_strogatz_once(n, k, beta, seed + attempt);
        if (g.is_connected()) return g;
        if (attempt > 1000) throw std::runtime_error("watts-strogatz: no connected graph found");
    }
}

HabitatGraph remove_corridors(const HabitatGraph& g, const std::set<int>& target_nodes,
                              double rho, std::uint64_t seed, RemovalReport* report) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("corridor loss fraction outside [0,1]");
    const std::vector<Edge> all = g.edges();
    const int quota = static_cast<int>(std::lround(rho * static_cast<double>(all.size())));

    std::vector<Edge> incident, rest;
    for (const Edge& e : all) {
        if (target_nodes.count(e.first) || target_nodes.count(e.second))
            incident.push_back(e);
        else
            rest.push_back(e);
    }
    Rng rng(seed);
    rng.shuffle(incident);
    rng.shuffle(rest);

    std::vector<Edge> removed;
    removed.reserve(quota);
    for (const Edge& e : incident) {
        if (static_cast<int>(removed.size()) >= quota) break;
        removed.push_back(e);
    }
    for (const Edge& e : rest) {
        if (static_cast<int>(removed.size()) >= quota) break;
        removed.push_back(e);
    }

    std::set<Edge> gone(removed.begin(), removed.end());
    std::vector<Edge> kept;
    for (const Edge& e : all)
        if (!gone.count(e)) kept.push_back(e);

    if (report) {
        report->removed = removed;
        report->quota = quota;
    }
    return HabitatGraph(g.n_nodes(), kept);
}

}  // namespace ecoflow
