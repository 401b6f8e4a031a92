#include "percograph/run_config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "percograph/serialization.hpp"

namespace percograph {

namespace {

using nlohmann::json;

// Integer parameter that also accepts scientific notation ("1e6", "2e4").
long long parse_scalar(const std::string& text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string(what) + " is empty");
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0')
        throw std::invalid_argument(std::string(what) + " is not a number: " + text);
    if (!(value >= 0) || value > 9e18)
        throw std::invalid_argument(std::string(what) + " out of range: " + text);
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6)
        throw std::invalid_argument(std::string(what) + " is not an integer: " + text);
    return static_cast<long long>(rounded);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

std::pair<long long, long long> parse_two(const std::string& args,
                                          const char* form) {
    const auto parts = split(args, ',');
    if (parts.size() != 2)
        throw std::invalid_argument(std::string(form) +
                                    " expects exactly two parameters");
    return {parse_scalar(parts[0], form), parse_scalar(parts[1], form)};
}

DegreeSequence parse_counts_form(const std::string& args) {
    std::vector<int> degrees;
    for (const std::string& item : split(args, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos || x == 0 || x + 1 == item.size())
            throw std::invalid_argument("counts item must look like DEGREExCOUNT: " +
                                        item);
        const long long degree = parse_scalar(item.substr(0, x), "counts degree");
        const long long count = parse_scalar(item.substr(x + 1), "counts count");
        if (degree > 2000000000LL)
            throw std::invalid_argument("counts degree out of range: " + item);
        if (count < 1)
            throw std::invalid_argument("counts count must be >= 1: " + item);
        if (static_cast<long long>(degrees.size()) + count > 2000000000LL)
            throw std::invalid_argument("counts total exceeds the vertex limit");
        for (long long i = 0; i < count; ++i)
            degrees.push_back(static_cast<int>(degree));
    }
    return DegreeSequence(std::move(degrees));
}

bool is_inline_list(const std::string& spec) {
    if (spec.empty() || !std::isdigit(static_cast<unsigned char>(spec.front())))
        return false;
    for (char ch : spec)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ',') return false;
    return true;
}

} // namespace

std::string to_json(const RunConfig& config) {
    json j;
    j["subcommand"] = config.subcommand;
    j["seq"] = config.seq;
    j["graph_file"] = config.graph_file;
    j["p_grid"] = config.p_grid;
    j["alpha_grid"] = config.alpha_grid;
    j["n"] = config.n;
    j["k"] = config.k;
    j["d"] = config.d;
    j["p"] = config.p;
    j["p1"] = config.p1;
    j["p2"] = config.p2;
    j["omega"] = config.omega;
    j["factor"] = config.factor;
    j["c"] = config.c;
    j["trials"] = config.trials;
    j["samples"] = config.samples;
    j["seed"] = config.seed;
    j["burn_in"] = config.burn_in;
    j["resample_graph"] = config.resample_graph;
    j["force"] = config.force;
    j["threads"] = config.threads;
    j["out"] = config.out;
    j["per_trial_out"] = config.per_trial_out;
    j["version"] = config.version;
    return j.dump(2) + "\n";
}

RunConfig run_config_from_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    RunConfig config;
    try {
        config.subcommand = j.value("subcommand", std::string());
        config.seq = j.value("seq", std::string());
        config.graph_file = j.value("graph_file", std::string());
        config.p_grid = j.value("p_grid", std::vector<double>());
        config.alpha_grid = j.value("alpha_grid", std::vector<double>());
        config.n = j.value("n", 0);
        config.k = j.value("k", 0);
        config.d = j.value("d", 0);
        config.p = j.value("p", -1.0);
        config.p1 = j.value("p1", -1.0);
        config.p2 = j.value("p2", -1.0);
        config.omega = j.value("omega", -1.0);
        config.factor = j.value("factor", 0.0);
        config.c = j.value("c", 0.0);
        config.trials = j.value("trials", 0);
        config.samples = j.value("samples", 1);
        config.seed = j.value("seed", static_cast<std::uint64_t>(0));
        config.burn_in = j.value("burn_in", static_cast<long long>(-1));
        config.resample_graph = j.value("resample_graph", false);
        config.force = j.value("force", false);
        config.threads = j.value("threads", 0);
        config.out = j.value("out", std::string());
        config.per_trial_out = j.value("per_trial_out", std::string());
        config.version = j.value("version", std::string(kVersion));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config field error: ") + e.what());
    }
    return config;
}

RunConfig run_config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return run_config_from_json(in);
}

void write_sidecar(const RunConfig& config, const std::string& output_path) {
    const std::string path = output_path + ".config.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(config);
    if (!out) throw std::runtime_error("write failed: " + path);
}

DegreeSequence parse_sequence_spec(const std::string& spec) {
    if (spec.rfind("regular:", 0) == 0) {
        const auto [n, d] = parse_two(spec.substr(8), "regular:n,d");
        return DegreeSequence::regular(static_cast<int>(n), static_cast<int>(d));
    }
    if (spec.rfind("onion:", 0) == 0) {
        const auto [n, k] = parse_two(spec.substr(6), "onion:n,k");
        return DegreeSequence::onion(static_cast<int>(n), static_cast<int>(k));
    }
    if (spec.rfind("multijump:", 0) == 0) {
        const auto [n, k] = parse_two(spec.substr(10), "multijump:n,k");
        return DegreeSequence::multi_jump(static_cast<int>(n), static_cast<int>(k));
    }
    if (spec.rfind("counts:", 0) == 0) return parse_counts_form(spec.substr(7));
    if (is_inline_list(spec)) {
        std::vector<int> degrees;
        for (const std::string& item : split(spec, ',')) {
            const long long degree = parse_scalar(item, "degree");
            if (degree > 2000000000LL)
                throw std::invalid_argument("degree out of range: " + item);
            degrees.push_back(static_cast<int>(degree));
        }
        return DegreeSequence(std::move(degrees));
    }
    return read_degree_sequence_file(spec);
}

std::string canonical_sequence_descriptor(const std::string& spec) {
    if (spec.rfind("regular:", 0) == 0 || spec.rfind("onion:", 0) == 0 ||
        spec.rfind("multijump:", 0) == 0) {
        parse_sequence_spec(spec); // validate before passing through
        return spec;
    }
    return counts_descriptor(parse_sequence_spec(spec));
}

std::string counts_descriptor(const DegreeSequence& seq) {
    std::ostringstream out;
    out << "counts:";
    bool first = true;
    for (const auto& [degree, count] : seq.degree_counts()) {
        if (!first) out << ',';
        out << degree << 'x' << count;
        first = false;
    }
    return out.str();
}

} // namespace percograph
