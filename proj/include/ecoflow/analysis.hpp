#ifndef ECOFLOW_ANALYSIS_HPP
#define ECOFLOW_ANALYSIS_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecoflow/advection.hpp"
#include "ecoflow/dynamics.hpp"

namespace ecoflow {

// Linearization of the model around the extinction state:
// M = diag(gamma(theta_i) - delta) - d L - alpha A_adv.
struct LinearizedSystem {
    Eigen::MatrixXd m;
    Eigen::VectorXd local_rates;  // r_i = gamma(theta_i) - delta
};

LinearizedSystem linearized_matrix(const EnvField& theta, const SpeciesParams& p,
                                   const Eigen::MatrixXd& laplacian,
                                   const AdvectionMatrix& adv);

struct PrincipalEigen {
    double lambda1 = 0.0;                    // max Re over the spectrum
    std::optional<Eigen::VectorXd> eigvec;   // present when lambda1 is real & simple
};

// Dense nonsymmetric eigensolve (Hessenberg reduction + shifted QR). Throws
// on solver non-convergence.
PrincipalEigen principal_eigenvalue(const Eigen::MatrixXd& m);

enum class Persistence { Extinct, Persistent, Critical };

struct PersistenceVerdict {
    double lambda1;
    Persistence classification;
};

PersistenceVerdict classify_persistence(double lambda1, double tol = 1e-8);

std::string to_string(Persistence p);

// Positive root of u (r - alpha) - gamma u^2 + alpha * inflow = 0
// (node balance of the advection-only system). Strictly positive whenever
// inflow > 0, even for r < 0.
double node_equilibrium_root(double r, double gamma, double alpha, double inflow);

// Pearson correlation between the directed-flow in-degree d_i^in and u_i.
// Throws when either vector has zero variance.
double indegree_abundance_correlation(const DirectedFlow& flow,
                                      const Eigen::VectorXd& u);

// Per-node (|theta_i - theta_opt|, u_i) pairs sorted by distance.
std::vector<std::pair<double, double>> niche_distance_profile(
    const Eigen::VectorXd& u, const EnvField& theta, double theta_opt);

}  // namespace ecoflow

#endif  // ECOFLOW_ANALYSIS_HPP
