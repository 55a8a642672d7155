#ifndef ECOFLOW_ENV_HPP
#define ECOFLOW_ENV_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "ecoflow/graph.hpp"

namespace ecoflow {

// Per-node environmental scalar (temperature, degrees C) plus provenance.
struct EnvField {
    Eigen::VectorXd theta;
    std::string provenance;          // "uniform", "grf(sigma)", "explicit"
    std::uint64_t seed = 0;
    bool constant_rescale_warning = false;  // set when rescale hit a constant field
};

// Gaussian thermal niche: gamma_opt * exp(-(theta - theta_opt)^2 / (2 s^2)).
struct ThermalResponse {
    double gamma_opt;  // peak per-capita birth rate
    double s;          // thermal breadth, degrees C
    double theta_opt;  // optimal temperature, degrees C
};

double growth_rate(double theta, const ThermalResponse& resp);

// i.i.d. uniform temperatures in [low, high].
EnvField uniform_field(int n, double low, double high, std::uint64_t seed);

// Graph-smoothed field exp(-sigma^2 L / 2) * xi, xi ~ N(0, I), computed via
// the symmetric eigendecomposition of L. sigma = 0 returns xi exactly.
EnvField gaussian_random_field(const HabitatGraph& g, double sigma, std::uint64_t seed);

// Affine map of the field onto [a, b]. A constant field maps to (a+b)/2 with
// the warning flag set (the map is 0/0 there).
EnvField rescale(const EnvField& f, double a, double b);

// Moran's I over the graph's edges: spatial autocorrelation of x.
double morans_i(const HabitatGraph& g, const Eigen::VectorXd& x);

}  // namespace ecoflow

#endif  // ECOFLOW_ENV_HPP
