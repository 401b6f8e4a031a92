#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "percograph/degree_sequence.hpp"
#include "percograph/experiments.hpp"
#include "percograph/graph.hpp"
#include "percograph/percolation.hpp"
#include "percograph/run_config.hpp"
#include "percograph/serialization.hpp"

using namespace percograph;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("degree sequences round-trip through their text format") {
    const DegreeSequence seq = DegreeSequence::onion(16, 2);
    std::stringstream buffer;
    write_degree_sequence(seq, buffer);
    const DegreeSequence back = read_degree_sequence(buffer);
    CHECK(back.degree_counts() == seq.degree_counts());
    CHECK(back.n() == seq.n());
    CHECK(back.m() == seq.m());
}

TEST_CASE("degree sequence parser rejects malformed input") {
    const auto parse = [](const std::string& text) {
        std::stringstream buffer{text};
        return read_degree_sequence(buffer);
    };
    CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("parse error"),
                         std::runtime_error);
    // Counts must cover exactly n vertices.
    CHECK_THROWS_AS(parse("4 6\n3 2\n"), std::runtime_error);
    // Degrees must be strictly descending.
    CHECK_THROWS_AS(parse("4 10\n2 2\n3 2\n"), std::runtime_error);
}

TEST_CASE("graphs round-trip and keep canonical edge order") {
    SimpleGraph g(5);
    g.add_edge(3, 4);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::stringstream buffer;
    write_graph(g, buffer);
    const std::string text = buffer.str();
    // Rows are lexicographic min-max pairs.
    CHECK(text == "5 3\n0 2\n1 2\n3 4\n");
    const SimpleGraph back = read_graph(buffer);
    CHECK(back.n() == 5);
    CHECK(back.edge_count() == 3);
    CHECK(back.has_edge(3, 4));
    CHECK(back.has_edge(0, 2));
    CHECK(back.has_edge(1, 2));
}

TEST_CASE("graph parser rejects loops, repeats, and bad ranges") {
    const auto parse = [](const std::string& text) {
        std::stringstream buffer{text};
        return read_graph(buffer);
    };
    CHECK_THROWS_AS(parse("3 1\n0 0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), std::runtime_error); // u < v required
}

TEST_CASE("colorings round-trip with their blue/red states") {
    SimpleGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    RandomStream rng = derive_stream(103);
    const EdgeColoring c = percolate(g, 0.5, rng);
    const auto path = temp_file("percograph_coloring.txt");
    write_coloring_file(c, path.string());
    ColoredGraphFile loaded = read_coloring_file(path.string());
    CHECK(loaded.graph.n() == g.n());
    CHECK(loaded.graph.edge_count() == g.edge_count());
    // States align edge-by-edge in canonical order.
    const auto order = g.canonical_edge_order();
    const auto loaded_order = loaded.graph.canonical_edge_order();
    long long loaded_blue = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const bool blue =
            loaded.state[static_cast<std::size_t>(loaded_order[i])] ==
            EdgeState::blue;
        CHECK(c.blue(order[i]) == blue);
        loaded_blue += blue ? 1 : 0;
    }
    CHECK(loaded_blue == c.blue_count);
    std::filesystem::remove(path);
}

TEST_CASE("two-stage colorings serialize their second-stage view") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    RandomStream rng = derive_stream(107);
    for (int round = 0; round < 50; ++round) {
        const TwoStageSample s = two_stage(g, 0.3, 0.9, rng);
        std::stringstream buffer;
        write_coloring(s.coloring, buffer);
        const ColoredGraphFile loaded = read_coloring(buffer);
        long long blue = 0;
        for (const EdgeState state : loaded.state)
            blue += state == EdgeState::blue ? 1 : 0;
        CHECK(blue == s.g2_count());
    }
}

TEST_CASE("run configurations round-trip through JSON") {
    RunConfig cfg;
    cfg.subcommand = "sweep";
    cfg.seq = "regular:100,3";
    cfg.p_grid = {0.1, 0.2, 0.5};
    cfg.trials = 20;
    cfg.seed = 987654321;
    cfg.burn_in = 500;
    cfg.resample_graph = true;
    cfg.threads = 4;
    cfg.out = "sweep.csv";
    cfg.per_trial_out = "trials.csv";
    cfg.omega = 2.5;
    std::stringstream json{to_json(cfg)};
    const RunConfig back = run_config_from_json(json);
    CHECK(back.subcommand == cfg.subcommand);
    CHECK(back.seq == cfg.seq);
    CHECK(back.p_grid == cfg.p_grid);
    CHECK(back.trials == cfg.trials);
    CHECK(back.seed == cfg.seed);
    CHECK(back.burn_in == cfg.burn_in);
    CHECK(back.resample_graph == cfg.resample_graph);
    CHECK(back.threads == cfg.threads);
    CHECK(back.out == cfg.out);
    CHECK(back.per_trial_out == cfg.per_trial_out);
    CHECK(back.omega == cfg.omega);
    CHECK(back.version == kVersion);
}

TEST_CASE("experiment defaults are conservative") {
    // Hosts are shared across trials unless explicitly resampled, and the
    // sidecar records that choice.
    CHECK_FALSE(RunConfig{}.resample_graph);
    CHECK_FALSE(SweepOptions{}.force);
    CHECK(SweepOptions{}.threads == 0); // 0 = all available cores
    CHECK(SweepOptions{}.burn_in == -1); // -1 = 30 * degree sum
}

TEST_CASE("sidecar lands next to its output file") {
    RunConfig cfg;
    cfg.subcommand = "sweep";
    cfg.seq = "regular:10,2";
    cfg.trials = 1;
    cfg.seed = 5;
    const auto out = temp_file("percograph_out.csv");
    cfg.out = out.string();
    write_sidecar(cfg, cfg.out);
    const auto sidecar = out.string() + ".config.json";
    std::ifstream in(sidecar);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    const RunConfig back = run_config_from_json(content);
    CHECK(back.subcommand == "sweep");
    CHECK(back.seed == 5);
    std::filesystem::remove(sidecar);
}

TEST_CASE("sequence spec grammar covers all constructor forms") {
    CHECK(parse_sequence_spec("regular:6,3").degree_counts() ==
          DegreeSequence::regular(6, 3).degree_counts());
    CHECK(parse_sequence_spec("onion:16,2").degree_counts() ==
          DegreeSequence::onion(16, 2).degree_counts());
    CHECK(parse_sequence_spec("multijump:10000,1").degree_counts() ==
          DegreeSequence::multi_jump(10000, 1).degree_counts());
    CHECK(parse_sequence_spec("3,3,2,2").degrees() ==
          std::vector<int>{3, 3, 2, 2});
    CHECK(parse_sequence_spec("counts:3x2,2x2").degrees() ==
          std::vector<int>{3, 3, 2, 2});
    CHECK_THROWS_AS(parse_sequence_spec("regular:6"), std::exception);
    CHECK_THROWS_AS(parse_sequence_spec("counts:3x0"), std::exception);

    // File form: path to a serialized sequence.
    const auto path = temp_file("percograph_seq.txt");
    write_degree_sequence_file(DegreeSequence({4, 4, 3, 3, 2}), path.string());
    CHECK(parse_sequence_spec(path.string()).degree_counts() ==
          DegreeSequence({4, 4, 3, 3, 2}).degree_counts());
    std::filesystem::remove(path);
}

TEST_CASE("canonical descriptors normalize to counts form") {
    CHECK(canonical_sequence_descriptor("regular:6,3") == "regular:6,3");
    CHECK(canonical_sequence_descriptor("onion:16,2") == "onion:16,2");
    CHECK(canonical_sequence_descriptor("3,3,2,2") == "counts:3x2,2x2");
    CHECK(counts_descriptor(DegreeSequence({5, 1, 1, 5, 0})) ==
          "counts:5x2,1x2,0x1");
}
