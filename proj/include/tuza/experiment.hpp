#pragma once
// Batch harness: experiment.cfg parsing, the blowup pipeline and the table
// producers behind each CLI verb.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tuza/duality.hpp"
#include "tuza/graph.hpp"

namespace tuza {

/// A rejected config; the message names the key or the violated inequality.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    double alpha = 0.3;
    std::string family = "petersen";
    std::size_t a = 10;
    std::vector<std::uint64_t> seeds = {1};
    std::size_t cap_triangles = kDefaultTriangleCap;
    std::size_t cover_threshold_a = 50;   // weight < (1+alpha)m/4 asserted for a >= this
    std::size_t lp_max_triangles = 20'000;

    std::vector<std::string> survey_instances = {"K4", "K5", "petersen"};
    std::size_t survey_random = 200;
    std::size_t survey_max_n = 16;

    std::vector<std::string> probe_families = {"K2", "C5", "petersen"};
    std::vector<double> c_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::size_t probe_budget = 20'000;

    std::size_t canon_trials = 1000;
    std::vector<std::string> canon_families = {"K2", "P3", "C4", "C5"};
    std::size_t canon_max_eta = 3;

    std::vector<std::string> spectra_families = {"petersen", "pg2:3", "hoffman_singleton"};
    std::vector<double> spectra_c = {0.1, 0.5, 0.9};
    std::size_t mixing_trials = 1000;

    std::size_t mantel_max_n = 20;

    std::string out_dir = "out";
    std::size_t jobs = 1;
};

/// Flat key = value lines; '#' starts a comment. Lists are comma separated.
/// Unknown keys and hand-entered derived parameters (c, p, q, d, t, n, m)
/// are rejected.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// c = alpha/6, p = (1-c)/(2cd), q = (1-c)/(2ct) from the measured d and t.
struct DerivedParams {
    double alpha = 0.0, c = 0.0, p = 0.0, q = 0.0;
    std::size_t t = 0, d = 0;
};

/// Throws ConfigError naming the failed condition: alpha in (0,1/3), H
/// d-regular and triangle-free, d >= (2c)^{-1}, p and q in (0,1).
DerivedParams derive_params(double alpha, const Graph& h);

/// "K<n>", "C<n>", "P<n>", "gnp:<n>:<p>:<seed>" or any generator registry name.
Graph instance_by_name(const std::string& name);

/// Runs fn(0..count-1) on up to `jobs` threads; results come back in job order.
template <class T>
std::vector<T> run_jobs(std::size_t count, std::size_t jobs, const std::function<T(std::size_t)>& fn);

struct ConstructionRecord {
    std::uint64_t seed = 0;
    std::string family;
    DerivedParams params;
    std::size_t a = 0, n = 0, m = 0;
    TypeCensus counts;
    double internal_target = 0.0, external_target = 0.0, vertex_target = 0.0;
    double internal_rel_dev = 0.0, external_rel_dev = 0.0, vertex_rel_dev = 0.0;
    double band = 0.0;  // a log a
    double internal_max_pair_dev = 0.0, external_max_pair_dev = 0.0;
    bool within_band = false;  // every block pair within the band
    double m_ratio = 0.0;      // m / (n^2 / (4tc))
    std::string status = "ok";
};

/// Builds K . K_a from H and samples G_a with the given p and q.
ConstructionRecord construction_record(const Graph& h, const std::string& family, std::size_t a, const DerivedParams& params,
                                       std::uint64_t seed, SidedGraph* ga_out = nullptr);
/// Derives p, q from cfg and H, then builds G_a. A ConfigError becomes a
/// failed record naming the inequality.
ConstructionRecord run_construction(const ExperimentConfig& cfg, std::uint64_t seed, SidedGraph* ga_out = nullptr);

struct CoverRecord {
    std::uint64_t seed = 0;
    double alpha = 0.0;
    std::size_t a = 0, m = 0;
    double weight = 0.0;
    double ratio = 0.0;   // weight / (m/4)
    double target = 0.0;  // 1 + alpha/2
    bool below_bound = false;  // weight < (1+alpha) m/4
    std::optional<double> tau3_star;
    std::optional<std::size_t> triangles;
    std::string status = "ok";
};

CoverRecord cover_bound_record(const SidedGraph& ga, double alpha, std::size_t threshold_a, std::size_t lp_max_triangles,
                               std::uint64_t seed = 0);
CoverRecord run_cover_bound(const ExperimentConfig& cfg, std::uint64_t seed);

struct SurveyRow {
    std::string instance;
    std::uint64_t seed = 0;
    std::size_t n = 0, edges = 0;
    std::optional<TuzaReport> report;
    bool flag = false;  // ratio > 2
    std::string status = "ok";
};

SurveyRow survey_instance(const std::string& name, const Graph& g, std::uint64_t seed, const SolverCaps& caps);
std::vector<SurveyRow> run_tuza_survey(const ExperimentConfig& cfg, std::uint64_t seed);

struct ProbeRow {
    std::string family;
    std::size_t t = 0;
    double c = 0.0;
    double best = 0.0;
    std::optional<double> oracle;
    bool disproved = false;
    std::string status = "ok";
};

std::vector<ProbeRow> run_fairness_probe(const ExperimentConfig& cfg, std::uint64_t seed);

struct CanonRow {
    std::size_t trial = 0;
    std::string family;
    std::size_t eta = 0;
    double c = 0.0;
    double weight_before = 0.0, weight_after = 0.0;
    bool weight_ok = false, triangle_free = false, bipartite_blocks = false, twins = false;
    bool collapse_valid = false, gamma_orthogonal = false;
    std::string status = "ok";
};

/// Failing trials write their input graph under witness_dir (when nonempty).
std::vector<CanonRow> run_canonicalization_suite(const ExperimentConfig& cfg, std::size_t trials, std::uint64_t seed,
                                                 const std::string& witness_dir = "");

struct SpectraRow {
    std::string family;
    std::size_t t = 0, d = 0;
    double c = 0.0;
    double lambda = 0.0;
    double max_eigen_error = 0.0;  // closed form vs dense solve
    double pd_plus_qt_error = 0.0, pd_minus_qt = 0.0;
    std::size_t mixing_trials = 0, mixing_violations = 0;
    std::string status = "ok";
};

std::vector<SpectraRow> run_spectra(const ExperimentConfig& cfg, std::uint64_t seed);

struct MantelRow {
    std::size_t n = 0, size = 0, bound = 0, nodes = 0;
    bool exact = false;
    std::string status = "ok";
};

std::vector<MantelRow> run_mantel(const ExperimentConfig& cfg);

/// CSV (with a "# schema=1" first line) and JSON for each table.
void write_csv(std::ostream& out, const std::vector<ConstructionRecord>& rows);
void write_csv(std::ostream& out, const std::vector<CoverRecord>& rows);
void write_csv(std::ostream& out, const std::vector<SurveyRow>& rows);
void write_csv(std::ostream& out, const std::vector<ProbeRow>& rows);
void write_csv(std::ostream& out, const std::vector<CanonRow>& rows);
void write_csv(std::ostream& out, const std::vector<SpectraRow>& rows);
void write_csv(std::ostream& out, const std::vector<MantelRow>& rows);

/// Formats a double with 12 significant digits.
std::string format_number(double x);

template <class T>
std::vector<T> run_jobs(std::size_t count, std::size_t jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace tuza
