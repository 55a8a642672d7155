#ifndef ECOFLOW_ADVECTION_HPP
#define ECOFLOW_ADVECTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "ecoflow/env.hpp"
#include "ecoflow/graph.hpp"

namespace ecoflow {

// Gradient-directed subgraph: each non-isolated node i points to its single
// best neighbor p(i) = argmin_j |theta_j - theta_opt| (ties to lowest id).
struct DirectedFlow {
    Eigen::MatrixXi a_dir;        // a_dir(i, p(i)) = 1
    std::vector<int> best_neighbor;  // p(i), or -1 for isolated nodes

    int in_degree(int i) const { return a_dir.col(i).sum(); }
    int out_degree(int i) const { return a_dir.row(i).sum(); }
};

// Discrete advection operator built from the directed flow. Off-diagonal is
// the skew part a_dir - a_dir^T; the diagonal makes every column sum to zero,
// so the operator conserves total mass. Entries are small integers; the
// column-sum identity holds exactly.
struct AdvectionMatrix {
    Eigen::MatrixXi entries;

    Eigen::MatrixXd as_double() const { return entries.cast<double>(); }
};

DirectedFlow build_directed_flow(const HabitatGraph& g, const EnvField& theta,
                                 double theta_opt);

AdvectionMatrix build_advection_matrix(const DirectedFlow& flow);

// The advective term of the model: -alpha * A_adv * u.
Eigen::VectorXd advective_term(const AdvectionMatrix& adv, const Eigen::VectorXd& u,
                               double alpha);

}  // namespace ecoflow

#endif  // ECOFLOW_ADVECTION_HPP
