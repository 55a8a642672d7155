#ifndef ECOFLOW_DYNAMICS_HPP
#define ECOFLOW_DYNAMICS_HPP

#include <Eigen/Dense>
#include <set>
#include <vector>

#include "ecoflow/kernels.hpp"

namespace ecoflow {

struct SpeciesParams {
    ThermalResponse thermal{3.0, 2.0, 25.0};
    double delta = 0.5;        // mortality
    double diffusivity = 1.0;  // d
    double alpha = 1.0;        // advection strength
};

struct IntegratorOptions {
    double dt = 0.01;
    double t_max = 500.0;
    double convergence_tol = 1e-9;  // on the clamp-projected rhs inf-norm
    bool clamp_negative = true;     // clamp post-step negatives to zero
    int record_every = 0;           // 0: record only endpoints
    ExecPolicy policy = ExecPolicy::Serial;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    bool converged = false;
    long clamp_events = 0;

    const Eigen::VectorXd& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

// Componentwise gamma(theta_i) u (1-u) - delta u.
Eigen::VectorXd reaction(const Eigen::VectorXd& u, const EnvField& theta,
                         const SpeciesParams& p);

// Full model right-hand side: reaction - d L u - alpha A_adv u.
Eigen::VectorXd rhs(const Eigen::VectorXd& u, const EnvField& theta,
                    const SpeciesParams& p, const Eigen::MatrixXd& laplacian,
                    const AdvectionMatrix& adv);

// Classical fixed-step RK4. Negative components are clamped to zero after
// each step (counted); exits early once the residual falls below
// convergence_tol. Components held at u = 0 by the clamp with rhs < 0 are
// stationary under the clamped flow and are excluded from the residual.
// Throws on NaN/Inf with the offending step index in the message.
Trajectory integrate(const Eigen::VectorXd& u0, const ModelOperator& model,
                     const IntegratorOptions& opts);

struct SteadyStateResult {
    Eigen::VectorXd u;
    bool converged = false;
    double residual_inf = 0.0;  // ||rhs||_inf at the returned state
    double elapsed_time = 0.0;
    long clamp_events = 0;
};

// Runs integrate with escalating t_max (doubling, up to budget_multiplier x)
// until the residual drops below tol. Non-convergence is flagged, not thrown.
SteadyStateResult steady_state(const Eigen::VectorXd& u0, const ModelOperator& model,
                               IntegratorOptions opts, double tol = 1e-9,
                               int budget_multiplier = 8);

std::set<int> extinct_nodes(const Eigen::VectorXd& u, double tol = 1e-6);

}  // namespace ecoflow

#endif  // ECOFLOW_DYNAMICS_HPP
