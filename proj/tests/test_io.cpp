#include <doctest.h>

#include <filesystem>

#include "ecoflow/io.hpp"

using namespace ecoflow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("ecoflow_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("graph round-trip through the edge-list format") {
    TempDir tmp;
    HabitatGraph g = gen_watts_strogatz(30, 2, 0.3, 9);
    nlohmann::json header{{"generator", "watts_strogatz"}, {"seed", 9}};
    const auto path = tmp.path / "g.txt";
    io::save_graph(path, g, header);

    nlohmann::json loaded_header;
    HabitatGraph loaded = io::load_graph(path, &loaded_header);
    CHECK(loaded.adjacency() == g.adjacency());
    CHECK(loaded_header["generator"] == "watts_strogatz");
    CHECK(loaded_header["n_nodes"] == 30);
}

TEST_CASE("field round-trip with sidecar metadata") {
    TempDir tmp;
    EnvField f = uniform_field(12, 15, 35, 4);
    const auto path = tmp.path / "f.csv";
    io::save_field(path, f);
    CHECK(fs::exists(tmp.path / "f.csv.meta.json"));

    EnvField loaded = io::load_field(path);
    // fmt() is shortest-round-trip, so values survive exactly
    CHECK(loaded.theta == f.theta);
}

TEST_CASE("matrix round-trip") {
    TempDir tmp;
    Eigen::MatrixXd m(2, 3);
    m << 1.5, -2.25, 1.0 / 3.0, 0.0, 1e-17, -5.0;
    const auto path = tmp.path / "m.csv";
    io::save_matrix(path, m);
    CHECK(io::load_matrix(path) == m);
}

TEST_CASE("missing file errors name the path") {
    try {
        io::load_graph("/nonexistent/graph.txt");
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/graph.txt") !=
              std::string::npos);
    }
}

TEST_CASE("fnv1a is stable") {
    CHECK(io::fnv1a("") == 14695981039346656037ull);
    CHECK(io::fnv1a("a") != io::fnv1a("b"));
}
