#ifndef ECOFLOW_KERNELS_HPP
#define ECOFLOW_KERNELS_HPP

#include <Eigen/Dense>

#include "ecoflow/advection.hpp"
#include "ecoflow/env.hpp"

namespace ecoflow {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Assembled right-hand side of du/dt = F(u, theta) - d L u - alpha A_adv u.
// The two linear terms are pre-combined into one dense transport matrix whose
// columns sum to (numerically) zero; the reaction is evaluated per node.
struct ModelOperator {
    Eigen::VectorXd growth;   // gamma(theta_i)
    double delta = 0.0;       // mortality
    RowMajorMatrix transport; // -d*L - alpha*A_adv

    int size() const { return static_cast<int>(growth.size()); }
};

ModelOperator assemble_model(const EnvField& theta, const ThermalResponse& resp,
                             double delta, double diffusivity, double alpha,
                             const Eigen::MatrixXd& laplacian,
                             const AdvectionMatrix& adv);

// Serial reference kernel. Kept as the ground truth the parallel kernel is
// tested and benchmarked against.
void rhs_serial(const ModelOperator& m, const double* u, double* out);

// OpenMP kernel; row-parallel over nodes.
void rhs_parallel(const ModelOperator& m, const double* u, double* out);

enum class ExecPolicy { Serial, Parallel };

inline void rhs_apply(ExecPolicy policy, const ModelOperator& m, const double* u,
                      double* out) {
    if (policy == ExecPolicy::Parallel)
        rhs_parallel(m, u, out);
    else
        rhs_serial(m, u, out);
}

}  // namespace ecoflow

#endif  // ECOFLOW_KERNELS_HPP
