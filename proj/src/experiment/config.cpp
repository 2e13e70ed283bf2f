#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tuza/experiment.hpp"
#include "tuza/rng.hpp"
#include "tuza/spectral.hpp"

namespace tuza {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || !std::isfinite(x)) throw ConfigError(key + ": expected a number, got '" + v + "'");
    return x;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    std::uint64_t x = 0;
    try {
        if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
        x = std::stoull(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw ConfigError(key + ": expected a nonnegative integer, got '" + v + "'");
    return x;
}

std::size_t to_size(const std::string& key, const std::string& v) { return static_cast<std::size_t>(to_u64(key, v)); }

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const auto doubles = [](std::vector<double>& dst) {
        return [&dst](const std::string& k, const std::string& v) {
            dst.clear();
            for (const auto& item : split_list(v)) dst.push_back(to_double(k, item));
        };
    };
    const auto strings = [](std::vector<std::string>& dst) {
        return [&dst](const std::string&, const std::string& v) { dst = split_list(v); };
    };
    const auto size = [](std::size_t& dst) { return [&dst](const std::string& k, const std::string& v) { dst = to_size(k, v); }; };
    const std::map<std::string, Setter> setters = {
        {"alpha", [&](const std::string& k, const std::string& v) { cfg.alpha = to_double(k, v); }},
        {"family", [&](const std::string&, const std::string& v) { cfg.family = v; }},
        {"a", size(cfg.a)},
        {"seeds",
         [&](const std::string& k, const std::string& v) {
             cfg.seeds.clear();
             for (const auto& item : split_list(v)) cfg.seeds.push_back(to_u64(k, item));
         }},
        {"cap_triangles", size(cfg.cap_triangles)},
        {"cover_threshold_a", size(cfg.cover_threshold_a)},
        {"lp_max_triangles", size(cfg.lp_max_triangles)},
        {"survey_instances", strings(cfg.survey_instances)},
        {"survey_random", size(cfg.survey_random)},
        {"survey_max_n", size(cfg.survey_max_n)},
        {"probe_families", strings(cfg.probe_families)},
        {"c_grid", doubles(cfg.c_grid)},
        {"probe_budget", size(cfg.probe_budget)},
        {"canon_trials", size(cfg.canon_trials)},
        {"canon_families", strings(cfg.canon_families)},
        {"canon_max_eta", size(cfg.canon_max_eta)},
        {"spectra_families", strings(cfg.spectra_families)},
        {"spectra_c", doubles(cfg.spectra_c)},
        {"mixing_trials", size(cfg.mixing_trials)},
        {"mantel_max_n", size(cfg.mantel_max_n)},
        {"out", [&](const std::string&, const std::string& v) { cfg.out_dir = v; }},
        {"jobs", size(cfg.jobs)},
    };
    const std::vector<std::string> derived = {"c", "p", "q", "d", "t", "n", "m"};

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (std::find(derived.begin(), derived.end(), key) != derived.end())
            throw ConfigError("line " + std::to_string(lineno) + ": '" + key +
                              "' is derived from alpha and H and may not be set");
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        it->second(key, value);
    }
    if (cfg.seeds.empty()) throw ConfigError("seeds: at least one seed is required");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    return parse_config(in);
}

DerivedParams derive_params(double alpha, const Graph& h) {
    if (!(alpha > 0.0 && alpha < 1.0 / 3.0)) throw ConfigError("alpha must lie in (0, 1/3)");
    if (h.order() == 0 || !h.is_regular() || h.degree(0) == 0) throw ConfigError("H must be d-regular with d >= 1");
    if (count_triangles(h) != 0) throw ConfigError("H must be triangle-free");
    DerivedParams out;
    out.alpha = alpha;
    out.c = alpha / 6.0;
    out.t = h.order();
    out.d = h.degree(0);
    const double d = static_cast<double>(out.d), t = static_cast<double>(out.t);
    out.p = (1.0 - out.c) / (2.0 * out.c * d);
    out.q = (1.0 - out.c) / (2.0 * out.c * t);
    if (d < 1.0 / (2.0 * out.c))
        throw ConfigError("d >= (2c)^{-1} fails: d = " + std::to_string(out.d) + ", (2c)^{-1} = " +
                          format_number(1.0 / (2.0 * out.c)) + ", so p = " + format_number(out.p) + " >= 1");
    if (!(out.p > 0.0 && out.p < 1.0)) throw ConfigError("p in (0,1) fails: p = " + format_number(out.p));
    if (!(out.q > 0.0 && out.q < 1.0)) throw ConfigError("q in (0,1) fails: q = " + format_number(out.q));
    return out;
}

Graph instance_by_name(const std::string& name) {
    const auto number = [&](std::size_t from) {
        std::size_t used = 0;
        const std::size_t n = std::stoul(name.substr(from), &used);
        if (from + used != name.size()) throw std::invalid_argument("bad instance name '" + name + "'");
        return n;
    };
    if (name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1]))) {
        if (name[0] == 'K') return Graph::complete(number(1));
        if (name[0] == 'C') return Graph::cycle(number(1));
        if (name[0] == 'P') return Graph::path(number(1));
    }
    if (name.rfind("gnp:", 0) == 0) {
        std::stringstream ss(name.substr(4));
        std::string n, p, seed;
        std::getline(ss, n, ':');
        std::getline(ss, p, ':');
        std::getline(ss, seed, ':');
        const std::size_t order = to_size(name, n);
        const double prob = to_double(name, p);
        const std::uint64_t s = to_u64(name, seed);
        Graph g(order);
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (keyed_uniform(s, (static_cast<std::uint64_t>(u) << 32) | v) < prob) g.add_edge(u, v);
        return g;
    }
    return generate_by_name(name).graph;
}

}  // namespace tuza
