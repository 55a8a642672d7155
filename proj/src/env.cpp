#include "ecoflow/env.hpp"

#include <cmath>
#include <stdexcept>

#include "ecoflow/rng.hpp"

namespace ecoflow {

double growth_rate(double theta, const ThermalResponse& resp) {
    if (resp.gamma_opt <= 0.0 || resp.s <= 0.0)
        throw std::invalid_argument("thermal response requires gamma_opt > 0 and s > 0");
    const double dev = theta - resp.theta_opt;
    return resp.gamma_opt * std::exp(-dev * dev / (2.0 * resp.s * resp.s));
}

EnvField uniform_field(int n, double low, double high, std::uint64_t seed) {
    if (low > high) throw std::invalid_argument("uniform_field: low > high");
    Rng rng(seed);
    EnvField f;
    f.theta.resize(n);
    for (int i = 0; i < n; ++i) f.theta[i] = rng.uniform(low, high);
    f.provenance = "uniform";
    f.seed = seed;
    return f;
}

EnvField gaussian_random_field(const HabitatGraph& g, double sigma, std::uint64_t seed) {
    const int n = g.n_nodes();
    Rng rng(seed);
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) xi[i] = rng.normal();

    EnvField f;
    f.provenance = "grf(" + std::to_string(sigma) + ")";
    f.seed = seed;
    if (sigma == 0.0) {
        f.theta = xi;  // smoothing matrix is the identity
        return f;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.laplacian());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("laplacian eigendecomposition failed");
    const Eigen::VectorXd damp =
        (-0.5 * sigma * sigma * es.eigenvalues().array()).exp().matrix();
    f.theta = es.eigenvectors() * damp.asDiagonal() * (es.eigenvectors().transpose() * xi);
    return f;
}

EnvField rescale(const EnvField& f, double a, double b) {
    if (a > b) throw std::invalid_argument("rescale: a > b");
    EnvField out = f;
    const double lo = f.theta.minCoeff();
    const double hi = f.theta.maxCoeff();
    if (hi == lo) {
        out.theta.setConstant(f.theta.size(), 0.5 * (a + b));
        out.constant_rescale_warning = true;
        return out;
    }
    out.theta = (a + (b - a) * (f.theta.array() - lo) / (hi - lo)).matrix();
    return out;
}

double morans_i(const HabitatGraph& g, const Eigen::VectorXd& x) {
    const int n = g.n_nodes();
    const double mean = x.mean();
    const Eigen::VectorXd c = x.array() - mean;
    const double denom = c.squaredNorm();
    const double w = 2.0 * g.n_edges();
    if (denom == 0.0 || w == 0.0) return 0.0;
    double num = 0.0;
    const Eigen::MatrixXd& adj = g.adjacency();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adj(i, j) != 0.0) num += c[i] * c[j];
    return (n / w) * (num / denom);
}

}  // namespace ecoflow
