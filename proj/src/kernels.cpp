#include "ecoflow/kernels.hpp"

#include <stdexcept>

namespace ecoflow {

ModelOperator assemble_model(const EnvField& theta, const ThermalResponse& resp,
                             double delta, double diffusivity, double alpha,
                             const Eigen::MatrixXd& laplacian,
                             const AdvectionMatrix& adv) {
    const int n = static_cast<int>(theta.theta.size());
    if (laplacian.rows() != n || adv.entries.rows() != n)
        throw std::invalid_argument("operator dimensions do not match field length");
    if (delta < 0.0 || diffusivity < 0.0 || alpha < 0.0)
        throw std::invalid_argument("rates must be nonnegative");

    ModelOperator m;
    m.growth.resize(n);
    for (int i = 0; i < n; ++i) m.growth[i] = growth_rate(theta.theta[i], resp);
    m.delta = delta;
    m.transport = (-diffusivity * laplacian - alpha * adv.as_double()).eval();
    return m;
}

void rhs_serial(const ModelOperator& m, const double* u, double* out) {
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = m.transport.data() + static_cast<std::ptrdiff_t>(i) * n;
        for (int j = 0; j < n; ++j) acc += row[j] * u[j];
        out[i] = m.growth[i] * u[i] * (1.0 - u[i]) - m.delta * u[i] + acc;
    }
}

void rhs_parallel(const ModelOperator& m, const double* u, double* out) {
    const int n = m.size();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = m.transport.data() + static_cast<std::ptrdiff_t>(i) * n;
        for (int j = 0; j < n; ++j) acc += row[j] * u[j];
        out[i] = m.growth[i] * u[i] * (1.0 - u[i]) - m.delta * u[i] + acc;
    }
}

}  // namespace ecoflow
