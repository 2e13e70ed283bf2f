// tuza: batch experiments over the blowup pipeline and the finite checks.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tuza/json_io.hpp"

namespace fs = std::filesystem;
using namespace tuza;

namespace {

struct Globals {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> jobs;
    std::optional<std::size_t> cap_triangles;
};

template <class Row>
int emit(const ExperimentConfig& cfg, const std::string& verb, const std::vector<Row>& rows) {
    fs::create_directories(cfg.out_dir);
    const fs::path base = fs::path(cfg.out_dir) / verb;
    {
        std::ofstream csv(base.string() + ".csv", std::ios::binary);
        write_csv(csv, rows);
    }
    {
        std::ofstream json(base.string() + ".json", std::ios::binary);
        json << to_json(rows).dump(2) << '\n';
    }
    std::size_t ok = 0, skipped = 0, failed = 0;
    for (const auto& r : rows) {
        if (r.status.rfind("failed", 0) == 0) {
            ++failed;
            std::cerr << verb << ": " << r.status << '\n';
        } else if (r.status.rfind("skipped", 0) == 0) {
            ++skipped;
            std::cerr << verb << ": " << r.status << '\n';
        } else {
            ++ok;
        }
    }
    std::cout << verb << ": " << rows.size() << " rows, " << ok << " ok, " << skipped << " skipped, " << failed
              << " failed -> " << base.string() << ".{csv,json}\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on triangle covers, packings and fair configurations"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config, "experiment.cfg (key = value)")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "replaces the seed list with one seed");
    app.add_option("--out", g.out, "output directory");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap-triangles", g.cap_triangles, "skip survey instances with more triangles");

    auto* construct = app.add_subcommand("construct", "build G_a per seed and compare edge counts with their targets");
    auto* cover = app.add_subcommand("cover-bound", "weigh the constructed fractional cover against m/4");
    auto* survey = app.add_subcommand("tuza-survey", "exact and fractional tau3/nu3 on named and random graphs");
    auto* probe = app.add_subcommand("fairness-probe", "search for configurations above 1/2 over a c-grid");
    auto* canon = app.add_subcommand("canon-suite", "canonicalize random triangle-free blowup subgraphs");
    std::size_t trials = 0;
    canon->add_option("--trials", trials, "overrides canon_trials");
    auto* spectra = app.add_subcommand("spectra", "N-matrix spectra and mixing checks");
    auto* mantel = app.add_subcommand("mantel", "crossing-triangle Mantel values");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    ExperimentConfig cfg;
    try {
        if (!g.config.empty()) cfg = load_config(g.config);
    } catch (const ConfigError& e) {
        std::cerr << "config: " << e.what() << '\n';
        return 2;
    }
    if (g.seed) cfg.seeds = {*g.seed};
    if (g.out) cfg.out_dir = *g.out;
    if (g.jobs) cfg.jobs = *g.jobs;
    if (g.cap_triangles) cfg.cap_triangles = *g.cap_triangles;
    const std::uint64_t seed = cfg.seeds.front();

    try {
        if (*construct) {
            const auto rows = run_jobs<ConstructionRecord>(cfg.seeds.size(), cfg.jobs, [&](std::size_t i) {
                return run_construction(cfg, cfg.seeds[i]);
            });
            return emit(cfg, "construct", rows);
        }
        if (*cover) {
            const auto rows = run_jobs<CoverRecord>(cfg.seeds.size(), cfg.jobs, [&](std::size_t i) {
                return run_cover_bound(cfg, cfg.seeds[i]);
            });
            return emit(cfg, "cover-bound", rows);
        }
        if (*survey) {
            const auto rows = run_tuza_survey(cfg, seed);
            const int code = emit(cfg, "tuza-survey", rows);
            for (const auto& r : rows)
                if (r.flag) std::cout << "ratio above 2: " << r.instance << '\n';
            return code;
        }
        if (*probe) return emit(cfg, "fairness-probe", run_fairness_probe(cfg, seed));
        if (*canon)
            return emit(cfg, "canon-suite",
                        run_canonicalization_suite(cfg, trials ? trials : cfg.canon_trials, seed,
                                                   (fs::path(cfg.out_dir) / "witness").string()));
        if (*spectra) return emit(cfg, "spectra", run_spectra(cfg, seed));
        if (*mantel) return emit(cfg, "mantel", run_mantel(cfg));
    } catch (const ConfigError& e) {
        std::cerr << "config: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
