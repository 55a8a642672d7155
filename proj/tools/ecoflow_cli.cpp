// ecoflow command-line interface.
//
// Subcommands:
//   gen-network     write a habitat graph as an edge list
//   gen-field       write a temperature field CSV (+ .meta.json sidecar)
//   build-advection write the directed flow and advection matrix for a
//                   graph/field pair
//   simulate        integrate the model and write trajectory + steady state
//   eigen           print the principal eigenvalue and persistence verdict
//                   of a matrix CSV
//   experiment      run one of the four built-in studies from a JSON config
//
// Exit codes: 0 success, 2 config/usage error, 3 numerical failure, 4 I/O error.

#include <CLI11.hpp>
#include <exception>
#include <filesystem>
#include <iostream>

#include "ecoflow/experiments.hpp"
#include "ecoflow/io.hpp"

namespace fs = std::filesystem;
using namespace ecoflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct NetworkArgs {
    std::string generator = "watts_strogatz";
    int n = 100, k = 7, rows = 4, cols = 5;
    double beta = 0.1, p = 0.1;
    std::uint64_t seed = 1;

    NetworkSpec to_spec() const {
        NetworkSpec s;
        s.generator = generator;
        s.n = n;
        s.k = k;
        s.beta = beta;
        s.p = p;
        s.rows = rows;
        s.cols = cols;
        s.seed = seed;
        return s;
    }
};

void add_network_flags(CLI::App* cmd, NetworkArgs& a) {
    cmd->add_option("--generator", a.generator, "grid | erdos_renyi | watts_strogatz")
        ->check(CLI::IsMember({"grid", "erdos_renyi", "watts_strogatz"}));
    cmd->add_option("--n", a.n, "node count (erdos_renyi, watts_strogatz)");
    cmd->add_option("--k", a.k, "ring neighbors per side (watts_strogatz)");
    cmd->add_option("--beta", a.beta, "rewiring probability (watts_strogatz)");
    cmd->add_option("--p", a.p, "edge probability (erdos_renyi)");
    cmd->add_option("--rows", a.rows, "grid rows");
    cmd->add_option("--cols", a.cols, "grid cols");
    cmd->add_option("--seed", a.seed, "generator seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph reaction-diffusion-advection experiments"};
    app.require_subcommand(1);

    // gen-network
    auto* gen_net = app.add_subcommand("gen-network", "generate a habitat graph");
    NetworkArgs net_args;
    std::string net_out = "graph.txt";
    add_network_flags(gen_net, net_args);
    gen_net->add_option("--out", net_out, "output edge-list path");

    // gen-field
    auto* gen_fld = app.add_subcommand("gen-field", "generate a temperature field");
    NetworkArgs fld_net;
    std::string fld_graph_path, fld_out = "field.csv", fld_type = "uniform";
    double fld_sigma = 2.0, fld_low = 15.0, fld_high = 35.0;
    std::uint64_t fld_seed = 2;
    gen_fld->add_option("--graph", fld_graph_path,
                        "graph file (required for grf; optional for uniform)");
    add_network_flags(gen_fld, fld_net);
    gen_fld->add_option("--type", fld_type, "uniform | grf")
        ->check(CLI::IsMember({"uniform", "grf"}));
    gen_fld->add_option("--sigma", fld_sigma, "grf smoothing length");
    gen_fld->add_option("--low", fld_low, "interval lower bound, deg C");
    gen_fld->add_option("--high", fld_high, "interval upper bound, deg C");
    gen_fld->add_option("--field-seed", fld_seed, "field seed");
    gen_fld->add_option("--out", fld_out, "output CSV path");

    // build-advection
    auto* badv = app.add_subcommand("build-advection",
                                    "build directed flow + advection matrix");
    std::string badv_graph, badv_field, badv_flow_out = "flow.txt",
                badv_matrix_out = "advection.csv";
    double badv_theta_opt = 25.0;
    badv->add_option("--graph", badv_graph, "graph edge-list file")->required();
    badv->add_option("--field", badv_field, "field CSV")->required();
    badv->add_option("--theta-opt", badv_theta_opt, "species thermal optimum");
    badv->add_option("--flow-out", badv_flow_out, "directed flow output");
    badv->add_option("--matrix-out", badv_matrix_out, "advection matrix CSV output");

    // simulate
    auto* sim = app.add_subcommand("simulate", "integrate the full model");
    std::string sim_graph, sim_field, sim_traj_out = "trajectory.csv",
                sim_steady_out = "steady.csv";
    SpeciesParams sim_species;
    IntegratorOptions sim_opts;
    double sim_u0 = 0.1;
    int sim_record_every = 100;
    sim->add_option("--graph", sim_graph)->required();
    sim->add_option("--field", sim_field)->required();
    sim->add_option("--gamma-opt", sim_species.thermal.gamma_opt);
    sim->add_option("--s", sim_species.thermal.s);
    sim->add_option("--theta-opt", sim_species.thermal.theta_opt);
    sim->add_option("--delta", sim_species.delta);
    sim->add_option("--d", sim_species.diffusivity);
    sim->add_option("--alpha", sim_species.alpha);
    sim->add_option("--dt", sim_opts.dt);
    sim->add_option("--t-max", sim_opts.t_max);
    sim->add_option("--u0", sim_u0, "uniform initial density");
    sim->add_option("--record-every", sim_record_every, "trajectory sampling stride");
    sim->add_flag("--parallel", "use the OpenMP kernel");
    sim->add_option("--traj-out", sim_traj_out);
    sim->add_option("--steady-out", sim_steady_out);

    // eigen
    auto* eig = app.add_subcommand("eigen", "principal eigenvalue of a matrix CSV");
    std::string eig_matrix;
    eig->add_option("--matrix", eig_matrix, "dense matrix CSV")->required();

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a built-in study");
    std::string exp_config, exp_kind, exp_out;
    bool exp_force = false;
    exp->add_option("--config", exp_config, "JSON config file");
    exp->add_option("--kind", exp_kind,
                    "hotspot | niche_tracking | advection_sweep | corridor_sweep "
                    "(defaults used when no --config)");
    exp->add_option("--out", exp_out, "output directory override");
    exp->add_option("--seed", "network seed override");
    exp->add_flag("--force", exp_force, "overwrite a mismatched result directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_net->parsed()) {
            HabitatGraph g = net_args.to_spec().build();
            nlohmann::json header{{"generator", net_args.generator},
                                  {"seed", net_args.seed}};
            io::save_graph(net_out, g, header);
            std::cout << "wrote " << net_out << " (" << g.n_nodes() << " nodes, "
                      << g.n_edges() << " edges)\n";
        } else if (gen_fld->parsed()) {
            EnvField f;
            if (fld_type == "grf") {
                if (fld_graph_path.empty())
                    throw CLI::ValidationError("--graph is required for grf fields");
                HabitatGraph g = io::load_graph(fld_graph_path);
                f = rescale(gaussian_random_field(g, fld_sigma, fld_seed), fld_low,
                            fld_high);
            } else {
                int n = fld_net.n;
                if (!fld_graph_path.empty()) n = io::load_graph(fld_graph_path).n_nodes();
                f = uniform_field(n, fld_low, fld_high, fld_seed);
            }
            io::save_field(fld_out, f,
                           {{"interval", {fld_low, fld_high}}, {"sigma", fld_sigma}});
            std::cout << "wrote " << fld_out << "\n";
        } else if (badv->parsed()) {
            HabitatGraph g = io::load_graph(badv_graph);
            EnvField f = io::load_field(badv_field);
            DirectedFlow flow = build_directed_flow(g, f, badv_theta_opt);
            AdvectionMatrix adv = build_advection_matrix(flow);
            io::save_flow(badv_flow_out, flow, badv_theta_opt,
                          io::fnv1a(io::read_text(badv_field)));
            io::save_matrix(badv_matrix_out, adv.as_double());
            std::cout << "wrote " << badv_flow_out << " and " << badv_matrix_out << "\n";
        } else if (sim->parsed()) {
            HabitatGraph g = io::load_graph(sim_graph);
            EnvField f = io::load_field(sim_field);
            DirectedFlow flow = build_directed_flow(g, f, sim_species.thermal.theta_opt);
            AdvectionMatrix adv = build_advection_matrix(flow);
            ModelOperator model =
                assemble_model(f, sim_species.thermal, sim_species.delta,
                               sim_species.diffusivity, sim_species.alpha,
                               g.laplacian(), adv);
            sim_opts.record_every = sim_record_every;
            if (sim->count("--parallel")) sim_opts.policy = ExecPolicy::Parallel;
            Eigen::VectorXd u0 = Eigen::VectorXd::Constant(g.n_nodes(), sim_u0);
            Trajectory traj = integrate(u0, model, sim_opts);
            io::save_trajectory(sim_traj_out, traj);
            io::save_steady_state(sim_steady_out, traj.final_state(), f);
            std::cout << "t_end=" << traj.final_time()
                      << " converged=" << (traj.converged ? "yes" : "no")
                      << " clamp_events=" << traj.clamp_events << "\n";
        } else if (eig->parsed()) {
            Eigen::MatrixXd m = io::load_matrix(eig_matrix);
            PrincipalEigen pe = principal_eigenvalue(m);
            PersistenceVerdict v = classify_persistence(pe.lambda1);
            std::cout << "lambda1=" << io::fmt(pe.lambda1) << " verdict="
                      << to_string(v.classification) << "\n";
        } else if (exp->parsed()) {
            ExperimentConfig cfg;
            if (!exp_config.empty()) {
                if (!fs::exists(exp_config)) {
                    std::cerr << "error: config file not found: " << exp_config << "\n";
                    return kExitConfig;
                }
                cfg = ExperimentConfig::from_json(
                    nlohmann::json::parse(io::read_text(exp_config)));
            } else if (!exp_kind.empty()) {
                cfg = default_config(exp_kind);
            } else {
                std::cerr << "error: experiment needs --config or --kind\n";
                return kExitConfig;
            }
            if (!exp_out.empty()) cfg.out_dir = exp_out;
            if (exp->count("--seed"))
                cfg.network.seed = exp->get_option("--seed")->as<std::uint64_t>();
            run_experiment(cfg, exp_force);
            std::cout << "results in " << cfg.out_dir.string() << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        if (msg.find("cannot open") != std::string::npos ||
            msg.find("cannot write") != std::string::npos) {
            std::cerr << "i/o error: " << msg << "\n";
            return kExitIo;
        }
        std::cerr << "numerical error: " << msg << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
