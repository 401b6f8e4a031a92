#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "percograph/degree_sequence.hpp"

namespace percograph {

inline constexpr const char* kVersion = "1.0.0";

// Everything needed to replay a CLI run byte-for-byte.  Written as a JSON
// sidecar next to each output file; reloading one re-executes the identical
// experiment (worker count may differ — results do not depend on it).
struct RunConfig {
    std::string subcommand;
    std::string seq;          // canonical sequence descriptor (see below)
    std::string graph_file;   // when the input was an explicit graph
    std::vector<double> p_grid;
    std::vector<double> alpha_grid;
    int n = 0;
    int k = 0;
    int d = 0;
    double p = -1.0;
    double p1 = -1.0;
    double p2 = -1.0;
    double omega = -1.0;
    double factor = 0.0;
    double c = 0.0;
    int trials = 0;
    int samples = 1;
    std::uint64_t seed = 0;
    long long burn_in = -1;
    bool resample_graph = false;
    bool force = false;
    int threads = 0;
    std::string out;
    std::string per_trial_out;
    std::string version = kVersion;
};

std::string to_json(const RunConfig& config);
RunConfig run_config_from_json(std::istream& in);
RunConfig run_config_from_json_file(const std::string& path);
void write_sidecar(const RunConfig& config, const std::string& output_path);

// One flag grammar for degree sequences:
//   "3,3,2,2"            inline list
//   "regular:n,d"        d-regular on n vertices
//   "onion:n,k"          depth-k onion sequence
//   "multijump:n,k"      k-jump sequence
//   "counts:dxC,dxC,..." degree multiset (the canonical descriptor form)
//   anything else        path to a degree sequence file
// n accepts scientific notation (1e6).
DegreeSequence parse_sequence_spec(const std::string& spec);

// Replayable descriptor for a spec: constructor forms pass through
// unchanged; inline lists and files are resolved to their counts: form so a
// sidecar does not depend on the original file's continued existence.
std::string canonical_sequence_descriptor(const std::string& spec);

// The counts: form of a sequence already in hand.
std::string counts_descriptor(const DegreeSequence& seq);

} // namespace percograph
