#include "ecoflow/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecoflow {

LinearizedSystem linearized_matrix(const EnvField& theta, const SpeciesParams& p,
                                   const Eigen::MatrixXd& laplacian,
                                   const AdvectionMatrix& adv) {
    const int n = static_cast<int>(theta.theta.size());
    if (laplacian.rows() != n || adv.entries.rows() != n)
        throw std::invalid_argument("operator dimensions do not match field length");
    LinearizedSystem sys;
    sys.local_rates.resize(n);
    for (int i = 0; i < n; ++i)
        sys.local_rates[i] = growth_rate(theta.theta[i], p.thermal) - p.delta;
    sys.m = Eigen::MatrixXd(sys.local_rates.asDiagonal()) -
            p.diffusivity * laplacian - p.alpha * adv.as_double();
    return sys;
}

PrincipalEigen principal_eigenvalue(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");

    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("QR eigensolver did not converge");

    const auto& vals = es.eigenvalues();
    int idx = 0;
    for (int i = 1; i < vals.size(); ++i)
        if (vals[i].real() > vals[idx].real()) idx = i;

    PrincipalEigen out;
    out.lambda1 = vals[idx].real();

    // Return an eigenvector only when the dominant eigenvalue is real and
    // simple (its real-part gap to the rest is resolvable).
    const double imag_scale = std::abs(vals[idx].imag());
    const double scale = std::max(1.0, std::abs(out.lambda1));
    if (imag_scale <= 1e-10 * scale) {
        bool simple = true;
        for (int i = 0; i < vals.size(); ++i) {
            if (i == idx) continue;
            if (std::abs(vals[i].real() - out.lambda1) <= 1e-10 * scale &&
                std::abs(vals[i].imag()) <= 1e-10 * scale) {
                simple = false;
                break;
            }
        }
        if (simple) {
            Eigen::VectorXd v = es.eigenvectors().col(idx).real();
            const double residual = (m * v - out.lambda1 * v).norm();
            if (residual <= 1e-8 * v.norm()) out.eigvec = std::move(v);
        }
    }
    return out;
}

PersistenceVerdict classify_persistence(double lambda1, double tol) {
    if (!std::isfinite(lambda1)) throw std::invalid_argument("lambda1 must be finite");
    PersistenceVerdict v{lambda1, Persistence::Critical};
    if (lambda1 < -tol)
        v.classification = Persistence::Extinct;
    else if (lambda1 > tol)
        v.classification = Persistence::Persistent;
    return v;
}

std::string to_string(Persistence p) {
    switch (p) {
        case Persistence::Extinct: return "extinct";
        case Persistence::Persistent: return "persistent";
        default: return "critical";
    }
}

double node_equilibrium_root(double r, double gamma, double alpha, double inflow) {
    if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
    if (inflow < 0.0) throw std::invalid_argument("inflow must be nonnegative");
    const double b = r - alpha;
    const double disc = b * b + 4.0 * gamma * alpha * inflow;
    return (b + std::sqrt(disc)) / (2.0 * gamma);
}

double indegree_abundance_correlation(const DirectedFlow& flow,
                                      const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    if (flow.a_dir.rows() != n)
        throw std::invalid_argument("flow / density dimension mismatch");
    Eigen::VectorXd indeg(n);
    for (int i = 0; i < n; ++i) indeg[i] = flow.in_degree(i);

    const Eigen::VectorXd x = indeg.array() - indeg.mean();
    const Eigen::VectorXd y = u.array() - u.mean();
    const double sx = x.norm(), sy = y.norm();
    if (sx == 0.0 || sy == 0.0)
        throw std::invalid_argument("correlation undefined: zero variance");
    return x.dot(y) / (sx * sy);
}

std::vector<std::pair<double, double>> niche_distance_profile(
    const Eigen::VectorXd& u, const EnvField& theta, double theta_opt) {
    if (theta.theta.size() != u.size())
        throw std::invalid_argument("field / density dimension mismatch");
    std::vector<std::pair<double, double>> out;
    out.reserve(u.size());
    for (int i = 0; i < u.size(); ++i)
        out.emplace_back(std::abs(theta.theta[i] - theta_opt), u[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ecoflow
