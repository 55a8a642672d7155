#ifndef ECOFLOW_GRAPH_HPP
#define ECOFLOW_GRAPH_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ecoflow {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected, unweighted habitat network. Adjacency is symmetric, binary,
// zero-diagonal. Immutable after construction.
class HabitatGraph {
public:
    explicit HabitatGraph(int n_nodes);
    HabitatGraph(int n_nodes, const std::vector<Edge>& edges);

    int n_nodes() const { return n_; }
    bool has_edge(int i, int j) const;
    std::set<int> neighbors(int i) const;
    int degree(int i) const;
    int n_edges() const;

    // Canonical edge list, each pair with i < j, sorted lexicographically.
    std::vector<Edge> edges() const;

    // L = D - A. Rows sum to zero; symmetric positive semidefinite.
    Eigen::MatrixXd laplacian() const;

    const Eigen::MatrixXd& adjacency() const { return adj_; }

    bool is_connected() const;

private:
    void add_edge(int i, int j);
    void check_node(int i) const;

    int n_;
    Eigen::MatrixXd adj_;  // 0/1 entries
};

// Generators. All are pure functions of their parameters and seed.

// 4-neighborhood lattice; node (r,c) maps to id r*cols + c.
HabitatGraph gen_grid(int rows, int cols);

// G(n,p): every unordered pair linked independently with probability p.
HabitatGraph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Watts-Strogatz ring: each node linked to its k nearest neighbors on each
// side (so n*k edges, degree 2k at beta=0), then each lattice edge rewired
// with probability beta. Retries with seed+1 until the result is connected.
HabitatGraph gen_watts_strogatz(int n, int k, double beta, std::uint64_t seed);

struct RemovalReport {
    std::vector<Edge> removed;
    int quota = 0;  // round(rho * |E|)
};

// Removes round(rho*|E|) edges: first edges incident to target_nodes in
// seeded-random order, then (if the quota exceeds them) seeded-random
// remaining edges.
HabitatGraph remove_corridors(const HabitatGraph& g,
                              const std::set<int>& target_nodes, double rho,
                              std::uint64_t seed, RemovalReport* report = nullptr);

}  // namespace ecoflow

#endif  // ECOFLOW_GRAPH_HPP
