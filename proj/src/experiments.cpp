#include "ecoflow/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ecoflow/io.hpp"

namespace ecoflow {

HabitatGraph NetworkSpec::build() const {
    if (generator == "grid") return gen_grid(rows, cols);
    if (generator == "erdos_renyi") return gen_erdos_renyi(n, p, seed);
    if (generator == "watts_strogatz") return gen_watts_strogatz(n, k, beta, seed);
    throw std::invalid_argument("unknown network generator: " + generator);
}

EnvField FieldSpec::build(const HabitatGraph& g) const {
    if (type == "uniform") return uniform_field(g.n_nodes(), low, high, seed);
    if (type == "grf") {
        EnvField raw = gaussian_random_field(g, sigma, seed);
        return rescale(raw, low, high);
    }
    throw std::invalid_argument("unknown field type: " + type);
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    j["network"] = {{"generator", network.generator}, {"n", network.n},
                    {"k", network.k},                 {"beta", network.beta},
                    {"p", network.p},                 {"rows", network.rows},
                    {"cols", network.cols},           {"seed", network.seed}};
    j["field"] = {{"type", field.type}, {"sigma", field.sigma}, {"low", field.low},
                  {"high", field.high}, {"seed", field.seed}};
    j["species"] = {{"gamma_opt", species.thermal.gamma_opt},
                    {"s", species.thermal.s},
                    {"theta_opt", species.thermal.theta_opt},
                    {"delta", species.delta},
                    {"diffusivity", species.diffusivity},
                    {"alpha", species.alpha}};
    j["integrator"] = {{"dt", integrator.dt},
                       {"t_max", integrator.t_max},
                       {"convergence_tol", integrator.convergence_tol},
                       {"clamp_negative", integrator.clamp_negative}};
    j["u0"] = u0;
    j["alpha_grid"] = alpha_grid;
    j["rho_grid"] = rho_grid;
    j["removal_seed"] = removal_seed;
    j["target_decile"] = target_decile;
    j["out_dir"] = out_dir.string();
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.schema_version = j.value("schema_version", 1);
    if (c.schema_version != 1)
        throw std::invalid_argument("unsupported config schema version");
    c.kind = j.at("kind").get<std::string>();
    if (j.contains("network")) {
        const auto& n = j["network"];
        c.network.generator = n.value("generator", c.network.generator);
        c.network.n = n.value("n", c.network.n);
        c.network.k = n.value("k", c.network.k);
        c.network.beta = n.value("beta", c.network.beta);
        c.network.p = n.value("p", c.network.p);
        c.network.rows = n.value("rows", c.network.rows);
        c.network.cols = n.value("cols", c.network.cols);
        c.network.seed = n.value("seed", c.network.seed);
    }
    if (j.contains("field")) {
        const auto& f = j["field"];
        c.field.type = f.value("type", c.field.type);
        c.field.sigma = f.value("sigma", c.field.sigma);
        c.field.low = f.value("low", c.field.low);
        c.field.high = f.value("high", c.field.high);
        c.field.seed = f.value("seed", c.field.seed);
    }
    if (j.contains("species")) {
        const auto& s = j["species"];
        c.species.thermal.gamma_opt = s.value("gamma_opt", c.species.thermal.gamma_opt);
        c.species.thermal.s = s.value("s", c.species.thermal.s);
        c.species.thermal.theta_opt = s.value("theta_opt", c.species.thermal.theta_opt);
        c.species.delta = s.value("delta", c.species.delta);
        c.species.diffusivity = s.value("diffusivity", c.species.diffusivity);
        c.species.alpha = s.value("alpha", c.species.alpha);
    }
    if (j.contains("integrator")) {
        const auto& i = j["integrator"];
        c.integrator.dt = i.value("dt", c.integrator.dt);
        c.integrator.t_max = i.value("t_max", c.integrator.t_max);
        c.integrator.convergence_tol =
            i.value("convergence_tol", c.integrator.convergence_tol);
        c.integrator.clamp_negative = i.value("clamp_negative", c.integrator.clamp_negative);
    }
    c.u0 = j.value("u0", c.u0);
    if (j.contains("alpha_grid")) c.alpha_grid = j["alpha_grid"].get<std::vector<double>>();
    if (j.contains("rho_grid")) c.rho_grid = j["rho_grid"].get<std::vector<double>>();
    c.removal_seed = j.value("removal_seed", c.removal_seed);
    c.target_decile = j.value("target_decile", c.target_decile);
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    return c;
}

std::uint64_t ExperimentConfig::hash() const { return io::fnv1a(to_json().dump()); }

ExperimentConfig default_config(const std::string& kind) {
    ExperimentConfig c;
    c.kind = kind;
    if (kind == "hotspot") {
        c.field.type = "uniform";
        c.species.diffusivity = 1.0;
        c.species.alpha = 1.0;
    } else if (kind == "niche_tracking") {
        c.field.type = "grf";
        c.species.diffusivity = 1.0;
        c.species.alpha = 1.0;
    } else if (kind == "advection_sweep") {
        c.network.n = 20;
        c.field.type = "uniform";
        c.species.diffusivity = 0.3;
    } else if (kind == "corridor_sweep") {
        c.field.type = "grf";
        c.species.diffusivity = 1.0;  // equal diffusivity and advection strength
        c.species.alpha = 1.0;
    } else {
        throw std::invalid_argument("unknown experiment kind: " + kind);
    }
    return c;
}

void prepare_out_dir(const ExperimentConfig& cfg, bool force) {
    namespace fs = std::filesystem;
    const fs::path dir = cfg.out_dir;
    const fs::path prov_path = dir / "provenance.json";
    if (fs::exists(prov_path) && !force) {
        nlohmann::json prev = nlohmann::json::parse(io::read_text(prov_path));
        if (prev.value("config_hash", std::uint64_t{0}) != cfg.hash())
            throw std::runtime_error(
                "result directory " + dir.string() +
                " holds a different config (hash mismatch); use --force to overwrite");
    }
    fs::create_directories(dir);
    io::write_text(dir / "config.json", cfg.to_json().dump(2) + "\n");

    nlohmann::json prov;
    prov["config"] = cfg.to_json();
    prov["config_hash"] = cfg.hash();
    prov["version"] = kVersion;
    prov["seeds"] = {{"network", cfg.network.seed},
                     {"field", cfg.field.seed},
                     {"removal", cfg.removal_seed}};
    prov["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    io::write_text(prov_path, prov.dump(2) + "\n");
}

namespace {

SteadyStateResult solve_steady(const HabitatGraph& g, const EnvField& field,
                               const SpeciesParams& sp, const ExperimentConfig& cfg,
                               const AdvectionMatrix& adv) {
    ModelOperator model = assemble_model(field, sp.thermal, sp.delta, sp.diffusivity,
                                         sp.alpha, g.laplacian(), adv);
    Eigen::VectorXd u0 = Eigen::VectorXd::Constant(g.n_nodes(), cfg.u0);
    return steady_state(u0, model, cfg.integrator, cfg.integrator.convergence_tol);
}

}  // namespace

HotspotResult run_hotspot(const ExperimentConfig& cfg) {
    HabitatGraph g = cfg.network.build();
    EnvField field = cfg.field.build(g);
    DirectedFlow flow = build_directed_flow(g, field, cfg.species.thermal.theta_opt);
    AdvectionMatrix adv = build_advection_matrix(flow);

    SteadyStateResult ss = solve_steady(g, field, cfg.species, cfg, adv);
    LinearizedSystem lin =
        linearized_matrix(field, cfg.species, g.laplacian(), adv);

    HotspotResult res;
    res.u = ss.u;
    res.extinct_count = static_cast<int>(extinct_nodes(ss.u).size());
    res.lambda1 = principal_eigenvalue(lin.m).lambda1;
    try {
        res.correlation = indegree_abundance_correlation(flow, ss.u);
    } catch (const std::invalid_argument&) {
        res.correlation = std::nullopt;  // zero variance (degenerate instance)
    }

    const auto& dir = cfg.out_dir;
    io::save_graph(dir / "graph.txt", g, {{"generator", cfg.network.generator},
                                          {"seed", cfg.network.seed}});
    io::save_field(dir / "field.csv", field);
    io::save_flow(dir / "flow.txt", flow, cfg.species.thermal.theta_opt,
                  io::fnv1a(io::read_text(dir / "field.csv")));
    io::save_steady_state(dir / "steady.csv", ss.u, field);

    nlohmann::json summary;
    summary["lambda1"] = res.lambda1;
    summary["extinct_count"] = res.extinct_count;
    summary["converged"] = ss.converged;
    if (res.correlation) summary["indegree_correlation"] = *res.correlation;
    io::write_text(dir / "summary.json", summary.dump(2) + "\n");
    return res;
}

NicheTrackingResult run_niche_tracking(const ExperimentConfig& cfg) {
    HabitatGraph g = cfg.network.build();
    EnvField field = cfg.field.build(g);
    DirectedFlow flow = build_directed_flow(g, field, cfg.species.thermal.theta_opt);
    AdvectionMatrix adv = build_advection_matrix(flow);

    SpeciesParams local = cfg.species;
    local.diffusivity = 0.0;
    local.alpha = 0.0;

    NicheTrackingResult res;
    res.field = field;
    res.u_local = solve_steady(g, field, local, cfg, adv).u;
    res.u_full = solve_steady(g, field, cfg.species, cfg, adv).u;

    const auto& dir = cfg.out_dir;
    io::save_field(dir / "field.csv", field);
    io::save_steady_state(dir / "local_steady.csv", res.u_local, field);
    io::save_steady_state(dir / "full_steady.csv", res.u_full, field);

    nlohmann::json summary;
    summary["local_extinct_count"] = extinct_nodes(res.u_local).size();
    summary["full_extinct_count"] = extinct_nodes(res.u_full).size();
    io::write_text(dir / "summary.json", summary.dump(2) + "\n");
    return res;
}

AdvectionSweepResult run_advection_sweep(const ExperimentConfig& cfg) {
    // Three fixed topologies sharing one node count and one temperature
    // vector, so only graph structure differs between panels.
    struct Panel {
        std::string name;
        HabitatGraph graph;
    };
    const int n = cfg.network.rows * cfg.network.cols;
    std::vector<Panel> panels;
    panels.push_back({"grid", gen_grid(cfg.network.rows, cfg.network.cols)});
    panels.push_back({"erdos_renyi", gen_erdos_renyi(n, 0.4, cfg.network.seed)});
    panels.push_back({"watts_strogatz",
                      gen_watts_strogatz(n, 3, 0.4, cfg.network.seed)});

    EnvField shared = uniform_field(n, cfg.field.low, cfg.field.high, cfg.field.seed);

    AdvectionSweepResult res;
    const int n_alpha = static_cast<int>(cfg.alpha_grid.size());
    std::vector<std::vector<SweepRow>> slots(panels.size() * n_alpha);

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        for (int ai = 0; ai < n_alpha; ++ai) {
            const Panel& panel = panels[pi];
            SpeciesParams sp = cfg.species;
            sp.alpha = cfg.alpha_grid[ai];
            DirectedFlow flow =
                build_directed_flow(panel.graph, shared, sp.thermal.theta_opt);
            AdvectionMatrix adv = build_advection_matrix(flow);
            SteadyStateResult ss = solve_steady(panel.graph, shared, sp, cfg, adv);
            std::vector<SweepRow>& rows = slots[pi * n_alpha + ai];
            for (int i = 0; i < n; ++i)
                rows.push_back({panel.name, sp.alpha, i, shared.theta[i], ss.u[i]});
        }
    }
    for (auto& s : slots)
        res.rows.insert(res.rows.end(), s.begin(), s.end());

    std::ostringstream out;
    out << "topology,alpha,node_id,theta,u\n";
    for (const SweepRow& r : res.rows)
        out << r.topology << "," << io::fmt(r.alpha) << "," << r.node_id << ","
            << io::fmt(r.theta) << "," << io::fmt(r.u) << "\n";
    io::write_text(cfg.out_dir / "sweep.csv", out.str());
    io::save_field(cfg.out_dir / "field.csv", shared);
    return res;
}

int AdvectionSweepResult::survivors(const std::string& topology, double alpha,
                                    double tol) const {
    int count = 0;
    for (const SweepRow& r : rows)
        if (r.topology == topology && r.alpha == alpha && r.u >= tol) ++count;
    return count;
}

namespace {

std::set<int> optimal_node_set(const EnvField& field, double theta_opt, double decile) {
    const int n = static_cast<int>(field.theta.size());
    std::vector<std::pair<double, int>> by_dist;
    for (int i = 0; i < n; ++i)
        by_dist.emplace_back(std::abs(field.theta[i] - theta_opt), i);
    std::sort(by_dist.begin(), by_dist.end());
    const int count = std::max(1, static_cast<int>(std::ceil(decile * n)));
    std::set<int> targets;
    for (int i = 0; i < count; ++i) targets.insert(by_dist[i].second);
    return targets;
}

}  // namespace

CorridorSweepResult run_corridor_sweep(const ExperimentConfig& cfg) {
    struct Panel {
        std::string name;
        HabitatGraph graph;
    };
    std::vector<Panel> panels;
    panels.push_back({"watts_strogatz",
                      gen_watts_strogatz(cfg.network.n, cfg.network.k,
                                         cfg.network.beta, cfg.network.seed)});
    panels.push_back(
        {"erdos_renyi", gen_erdos_renyi(cfg.network.n, cfg.network.p, cfg.network.seed)});

    CorridorSweepResult res;
    nlohmann::json removal_summary = nlohmann::json::array();
    for (const Panel& panel : panels) {
        EnvField field = cfg.field.build(panel.graph);
        const std::set<int> targets =
            optimal_node_set(field, cfg.species.thermal.theta_opt, cfg.target_decile);
        for (double rho : cfg.rho_grid) {
            RemovalReport report;
            HabitatGraph pruned =
                remove_corridors(panel.graph, targets, rho, cfg.removal_seed, &report);
            DirectedFlow flow =
                build_directed_flow(pruned, field, cfg.species.thermal.theta_opt);
            AdvectionMatrix adv = build_advection_matrix(flow);
            SteadyStateResult ss = solve_steady(pruned, field, cfg.species, cfg, adv);
            for (int i = 0; i < pruned.n_nodes(); ++i) {
                res.rows.push_back(
                    {panel.name, rho, i,
                     std::abs(field.theta[i] - cfg.species.thermal.theta_opt), ss.u[i]});
            }
            removal_summary.push_back({{"topology", panel.name},
                                       {"rho", rho},
                                       {"edges_removed", report.removed.size()},
                                       {"quota", report.quota}});
        }
        io::save_field(cfg.out_dir / (panel.name + "_field.csv"), field);
    }

    std::ostringstream out;
    out << "topology,rho,node_id,niche_distance,u\n";
    for (const CorridorRow& r : res.rows)
        out << r.topology << "," << io::fmt(r.rho) << "," << r.node_id << ","
            << io::fmt(r.niche_distance) << "," << io::fmt(r.u) << "\n";
    io::write_text(cfg.out_dir / "profile.csv", out.str());
    io::write_text(cfg.out_dir / "removals.json", removal_summary.dump(2) + "\n");
    return res;
}

double CorridorSweepResult::peak_abundance(const std::string& topology,
                                           double rho) const {
    double peak = 0.0;
    for (const CorridorRow& r : rows)
        if (r.topology == topology && r.rho == rho) peak = std::max(peak, r.u);
    return peak;
}

double CorridorSweepResult::max_occupied_distance(const std::string& topology,
                                                  double rho, double tol) const {
    double dist = 0.0;
    for (const CorridorRow& r : rows)
        if (r.topology == topology && r.rho == rho && r.u > tol)
            dist = std::max(dist, r.niche_distance);
    return dist;
}

void run_experiment(const ExperimentConfig& cfg, bool force) {
    prepare_out_dir(cfg, force);
    if (cfg.kind == "hotspot")
        run_hotspot(cfg);
    else if (cfg.kind == "niche_tracking")
        run_niche_tracking(cfg);
    else if (cfg.kind == "advection_sweep")
        run_advection_sweep(cfg);
    else if (cfg.kind == "corridor_sweep")
        run_corridor_sweep(cfg);
    else
        throw std::invalid_argument("unknown experiment kind: " + cfg.kind);
}

}  // namespace ecoflow
