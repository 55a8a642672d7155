#include "ecoflow/advection.hpp"

#include <cmath>
#include <stdexcept>

namespace ecoflow {

DirectedFlow build_directed_flow(const HabitatGraph& g, const EnvField& theta,
                                 double theta_opt) {
    const int n = g.n_nodes();
    if (theta.theta.size() != n)
        throw std::invalid_argument("field length does not match graph");

    DirectedFlow flow;
    flow.a_dir = Eigen::MatrixXi::Zero(n, n);
    flow.best_neighbor.assign(n, -1);
    const Eigen::MatrixXd& adj = g.adjacency();
    for (int i = 0; i < n; ++i) {
        int best = -1;
        double best_dev = 0.0;
        for (int j = 0; j < n; ++j) {
            if (adj(i, j) == 0.0) continue;
            const double dev = std::abs(theta.theta[j] - theta_opt);
            if (best < 0 || dev < best_dev) {  // ties keep the lowest id
                best = j;
                best_dev = dev;
            }
        }
        if (best >= 0) {
            flow.a_dir(i, best) = 1;
            flow.best_neighbor[i] = best;
        }
    }
    return flow;
}

AdvectionMatrix build_advection_matrix(const DirectedFlow& flow) {
    AdvectionMatrix adv;
    adv.entries = flow.a_dir - flow.a_dir.transpose().eval();
    const int n = adv.entries.rows();
    for (int i = 0; i < n; ++i) {
        adv.entries(i, i) = 0;
        adv.entries(i, i) = -adv.entries.col(i).sum();
    }
    return adv;
}

Eigen::VectorXd advective_term(const AdvectionMatrix& adv, const Eigen::VectorXd& u,
                               double alpha) {
    if (adv.entries.rows() != u.size())
        throw std::invalid_argument("advection matrix / density dimension mismatch");
    if (alpha < 0.0) throw std::invalid_argument("advection strength must be nonnegative");
    return -alpha * (adv.as_double() * u);
}

}  // namespace ecoflow
