#include "ecoflow/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecoflow {

Eigen::VectorXd reaction(const Eigen::VectorXd& u, const EnvField& theta,
                         const SpeciesParams& p) {
    const int n = static_cast<int>(u.size());
    if (theta.theta.size() != n)
        throw std::invalid_argument("density / field dimension mismatch");
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
        const double g = growth_rate(theta.theta[i], p.thermal);
        out[i] = g * u[i] * (1.0 - u[i]) - p.delta * u[i];
    }
    return out;
}

Eigen::VectorXd rhs(const Eigen::VectorXd& u, const EnvField& theta,
                    const SpeciesParams& p, const Eigen::MatrixXd& laplacian,
                    const AdvectionMatrix& adv) {
    if (laplacian.rows() != u.size() || adv.entries.rows() != u.size())
        throw std::invalid_argument("operator / density dimension mismatch");
    return reaction(u, theta, p) - p.diffusivity * (laplacian * u) -
           p.alpha * (adv.as_double() * u);
}

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.lpNorm<Eigen::Infinity>(); }

// Residual for the clamped flow. Strong advection can hold a node at the
// u = 0 boundary with rhs < 0 forever; such components are stationary under
// the clamp, so they do not count against convergence.
double projected_residual(const Eigen::VectorXd& u, const Eigen::VectorXd& r,
                          bool clamped) {
    if (!clamped) return inf_norm(r);
    double out = 0.0;
    for (int i = 0; i < u.size(); ++i)
        if (u[i] > 0.0 || r[i] > 0.0) out = std::max(out, std::abs(r[i]));
    return out;
}

}  // namespace

Trajectory integrate(const Eigen::VectorXd& u0, const ModelOperator& model,
                     const IntegratorOptions& opts) {
    if (opts.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    const int n = model.size();
    if (u0.size() != n) throw std::invalid_argument("u0 / model dimension mismatch");

    const long n_steps = static_cast<long>(std::ceil(opts.t_max / opts.dt - 1e-12));
    Eigen::VectorXd u = u0;
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), tmp(n);

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    double last_t = 0.0;

    for (long step = 0; step < n_steps; ++step) {
        const double h = opts.dt;
        rhs_apply(opts.policy, model, u.data(), k1.data());
        if (projected_residual(u, k1, opts.clamp_negative) < opts.convergence_tol) {
            traj.converged = true;
            break;
        }
        tmp = u + 0.5 * h * k1;
        rhs_apply(opts.policy, model, tmp.data(), k2.data());
        tmp = u + 0.5 * h * k2;
        rhs_apply(opts.policy, model, tmp.data(), k3.data());
        tmp = u + h * k3;
        rhs_apply(opts.policy, model, tmp.data(), k4.data());
        u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!u.allFinite())
            throw std::runtime_error("integration diverged (NaN/Inf) at step " +
                                     std::to_string(step));
        if (opts.clamp_negative) {
            for (int i = 0; i < n; ++i) {
                if (u[i] < 0.0) {
                    u[i] = 0.0;
                    ++traj.clamp_events;
                }
            }
        }
        const double t = static_cast<double>(step + 1) * opts.dt;
        if (opts.record_every > 0 && (step + 1) % opts.record_every == 0) {
            traj.times.push_back(t);
            traj.states.push_back(u);
        }
        last_t = t;
    }
    const double t_end = traj.converged ? last_t
                                        : static_cast<double>(n_steps) * opts.dt;
    if (traj.times.back() != t_end) {
        traj.times.push_back(t_end);
        traj.states.push_back(u);
    }
    return traj;
}

SteadyStateResult steady_state(const Eigen::VectorXd& u0, const ModelOperator& model,
                               IntegratorOptions opts, double tol,
                               int budget_multiplier) {
    opts.convergence_tol = tol;
    opts.record_every = 0;
    SteadyStateResult res;
    Eigen::VectorXd u = u0;
    double elapsed = 0.0;
    long clamps = 0;
    double horizon = opts.t_max;
    const double budget = opts.t_max * budget_multiplier;
    while (true) {
        opts.t_max = horizon;
        Trajectory traj = integrate(u, model, opts);
        u = traj.final_state();
        elapsed += traj.final_time();
        clamps += traj.clamp_events;
        if (traj.converged || elapsed >= budget) {
            res.converged = traj.converged;
            break;
        }
        horizon *= 2.0;
    }
    Eigen::VectorXd r(model.size());
    rhs_apply(opts.policy, model, u.data(), r.data());
    res.residual_inf = projected_residual(u, r, opts.clamp_negative);
    res.u = std::move(u);
    res.elapsed_time = elapsed;
    res.clamp_events = clamps;
    return res;
}

std::set<int> extinct_nodes(const Eigen::VectorXd& u, double tol) {
    std::set<int> out;
    for (int i = 0; i < u.size(); ++i)
        if (u[i] < tol) out.insert(i);
    return out;
}

}  // namespace ecoflow
