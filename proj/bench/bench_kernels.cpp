// Compares the serial reference RHS kernel against the OpenMP kernel:
// checks agreement, then times both on a realistic model instance.
//
// Usage: ecoflow_bench [n_nodes] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "ecoflow/advection.hpp"
#include "ecoflow/dynamics.hpp"
#include "ecoflow/graph.hpp"

using namespace ecoflow;
using clock_type = std::chrono::steady_clock;

namespace {

double time_kernel(const ModelOperator& model, const Eigen::VectorXd& u, int repeats,
                   void (*kernel)(const ModelOperator&, const double*, double*)) {
    Eigen::VectorXd out(model.size());
    const auto start = clock_type::now();
    for (int r = 0; r < repeats; ++r) {
        kernel(model, u.data(), out.data());
        asm volatile("" : : "g"(out.data()) : "memory");  // keep the call live
    }
    const auto stop = clock_type::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 400;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 2000;
    const int k = std::max(1, std::min(7, (n - 1) / 2 - 1));

    HabitatGraph g = gen_watts_strogatz(n, k, 0.1, 1);
    EnvField field = uniform_field(n, 15.0, 35.0, 2);
    DirectedFlow flow = build_directed_flow(g, field, 25.0);
    AdvectionMatrix adv = build_advection_matrix(flow);
    ModelOperator model =
        assemble_model(field, {3.0, 2.0, 25.0}, 0.5, 1.0, 1.0, g.laplacian(), adv);

    EnvField useed = uniform_field(n, 0.0, 1.0, 3);
    Eigen::VectorXd u = useed.theta;

    // Agreement check before timing.
    Eigen::VectorXd a(n), b(n);
    rhs_serial(model, u.data(), a.data());
    rhs_parallel(model, u.data(), b.data());
    const double diff = (a - b).lpNorm<Eigen::Infinity>();
    std::cout << "serial/parallel max abs diff: " << diff << "\n";
    if (diff > 1e-12) {
        std::cerr << "kernel mismatch\n";
        return 1;
    }

    const double ts = time_kernel(model, u, repeats, rhs_serial);
    const double tp = time_kernel(model, u, repeats, rhs_parallel);
    std::cout << "n=" << n << " repeats=" << repeats << "\n"
              << "serial:   " << ts << " s (" << ts / repeats * 1e6 << " us/call)\n"
              << "parallel: " << tp << " s (" << tp / repeats * 1e6 << " us/call)\n"
              << "speedup:  " << ts / tp << "x\n";
    return 0;
}
