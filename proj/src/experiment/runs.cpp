#include <cmath>
#include <filesystem>
#include <fstream>

#include "tuza/config.hpp"
#include "tuza/experiment.hpp"
#include "tuza/extremal.hpp"
#include "tuza/graph_io.hpp"
#include "tuza/rng.hpp"
#include "tuza/spectral.hpp"

namespace tuza {

namespace {

double rel_dev(double value, double target) {
    if (target == 0.0) return value == 0.0 ? 0.0 : INFINITY;
    return std::abs(value - target) / target;
}

std::uint64_t job_seed(std::uint64_t seed, std::size_t job) { return splitmix64(seed ^ splitmix64(job + 1)); }

}  // namespace

ConstructionRecord construction_record(const Graph& h, const std::string& family, std::size_t a, const DerivedParams& params,
                                       std::uint64_t seed, SidedGraph* ga_out) {
    if (a == 0) throw std::invalid_argument("blowup size must be positive");
    ConstructionRecord rec;
    rec.seed = seed;
    rec.family = family;
    rec.params = params;
    rec.a = a;
    const SidedGraph k = double_of(h);
    SidedGraph ga = random_subgraph(blowup(k, a), params.p, params.q, seed);
    rec.n = ga.graph.order();
    rec.m = ga.graph.size();
    rec.counts = ga.census();

    const double t = static_cast<double>(params.t), d = static_cast<double>(params.d), aa = static_cast<double>(a);
    rec.internal_target = t * d * aa * aa * params.p;
    rec.external_target = t * t * aa * aa * params.q;
    rec.vertex_target = t * aa * (aa - 1.0);
    rec.internal_rel_dev = rel_dev(static_cast<double>(rec.counts.internal), rec.internal_target);
    rec.external_rel_dev = rel_dev(static_cast<double>(rec.counts.external), rec.external_target);
    rec.vertex_rel_dev = rel_dev(static_cast<double>(rec.counts.vertex), rec.vertex_target);

    const EdgeIndex kedges(k.graph);
    std::vector<std::size_t> per_pair(kedges.size(), 0);
    ga.graph.for_each_edge([&](Vertex x, Vertex y) {
        const Vertex bx = *ga.block_of(x), by = *ga.block_of(y);
        if (bx != by) ++per_pair[kedges.id(bx, by)];
    });
    rec.band = aa * std::log(aa);
    rec.within_band = true;
    for (EdgeId e = 0; e < kedges.size(); ++e) {
        const bool internal = k.edge_type(kedges[e].first, kedges[e].second) == EdgeType::internal;
        const double mu = aa * aa * (internal ? params.p : params.q);
        const double dev = std::abs(static_cast<double>(per_pair[e]) - mu);
        double& worst = internal ? rec.internal_max_pair_dev : rec.external_max_pair_dev;
        worst = std::max(worst, dev);
        if (!(dev < rec.band)) rec.within_band = false;
    }
    const double n = static_cast<double>(rec.n);
    rec.m_ratio = static_cast<double>(rec.m) / (n * n / (4.0 * t * params.c));
    if (ga_out) *ga_out = std::move(ga);
    return rec;
}

ConstructionRecord run_construction(const ExperimentConfig& cfg, std::uint64_t seed, SidedGraph* ga_out) {
    const Graph h = instance_by_name(cfg.family);
    try {
        return construction_record(h, cfg.family, cfg.a, derive_params(cfg.alpha, h), seed, ga_out);
    } catch (const ConfigError& e) {
        ConstructionRecord rec;
        rec.seed = seed;
        rec.family = cfg.family;
        rec.a = cfg.a;
        rec.params.alpha = cfg.alpha;
        rec.params.c = cfg.alpha / 6.0;
        rec.params.t = h.order();
        rec.params.d = h.order() ? h.degree(0) : 0;
        if (rec.params.d > 0 && rec.params.c > 0.0) {
            rec.params.p = (1.0 - rec.params.c) / (2.0 * rec.params.c * static_cast<double>(rec.params.d));
            rec.params.q = (1.0 - rec.params.c) / (2.0 * rec.params.c * static_cast<double>(rec.params.t));
        }
        rec.status = std::string("failed(config rejected: ") + e.what() + ")";
        return rec;
    }
}

CoverRecord cover_bound_record(const SidedGraph& ga, double alpha, std::size_t threshold_a, std::size_t lp_max_triangles,
                               std::uint64_t seed) {
    CoverRecord rec;
    rec.seed = seed;
    rec.alpha = alpha;
    rec.a = ga.block_size.value_or(1);
    rec.m = ga.graph.size();
    const PaperCover pc = paper_fractional_cover(ga);
    rec.weight = pc.cover.value;
    rec.ratio = rec.weight / (static_cast<double>(rec.m) / 4.0);
    rec.target = 1.0 + alpha / 2.0;
    rec.below_bound = rec.weight < (1.0 + alpha) * static_cast<double>(rec.m) / 4.0;
    if (ga.graph.order() <= 600) {
        const TriangleSystem ts = enumerate_triangles(ga.graph);
        rec.triangles = ts.size();
        if (ts.size() <= lp_max_triangles) {
            SolverCaps caps;
            caps.max_triangles = lp_max_triangles;
            rec.tau3_star = lp_fractional(ts, caps).cover.value;
            if (*rec.tau3_star > rec.weight + 1e-9)
                rec.status = "failed(tau3* " + format_number(*rec.tau3_star) + " exceeds the constructed cover)";
        }
    }
    if (rec.status == "ok" && rec.a >= threshold_a && !rec.below_bound)
        rec.status = "failed(weight " + format_number(rec.weight) + " >= (1+alpha)m/4)";
    return rec;
}

CoverRecord run_cover_bound(const ExperimentConfig& cfg, std::uint64_t seed) {
    SidedGraph ga;
    const ConstructionRecord built = run_construction(cfg, seed, &ga);
    if (built.status != "ok") {
        CoverRecord rec;
        rec.seed = seed;
        rec.alpha = cfg.alpha;
        rec.a = cfg.a;
        rec.target = 1.0 + cfg.alpha / 2.0;
        rec.status = built.status;
        return rec;
    }
    try {
        return cover_bound_record(ga, cfg.alpha, cfg.cover_threshold_a, cfg.lp_max_triangles, seed);
    } catch (const std::exception& e) {
        CoverRecord rec;
        rec.seed = seed;
        rec.alpha = cfg.alpha;
        rec.a = cfg.a;
        rec.status = std::string("failed(") + e.what() + ")";
        return rec;
    }
}

SurveyRow survey_instance(const std::string& name, const Graph& g, std::uint64_t seed, const SolverCaps& caps) {
    SurveyRow row;
    row.instance = name;
    row.seed = seed;
    row.n = g.order();
    row.edges = g.size();
    try {
        row.report = tuza_report(g, caps);
        row.flag = row.report->ratio && *row.report->ratio > 2.0 + 1e-12;
    } catch (const InstanceTooLarge& e) {
        row.status = std::string("skipped(") + e.what() + ")";
    }
    return row;
}

std::vector<SurveyRow> run_tuza_survey(const ExperimentConfig& cfg, std::uint64_t seed) {
    std::vector<std::string> names = cfg.survey_instances;
    const std::size_t lo = std::min<std::size_t>(4, cfg.survey_max_n);
    for (std::size_t i = 0; i < cfg.survey_random; ++i) {
        const std::size_t n = lo + static_cast<std::size_t>(keyed_uniform(seed, 2 * i) * static_cast<double>(cfg.survey_max_n - lo + 1));
        const std::size_t p20 = 4 + static_cast<std::size_t>(keyed_uniform(seed, 2 * i + 1) * 13.0);
        names.push_back("gnp:" + std::to_string(n) + ":" + format_number(static_cast<double>(p20) / 20.0) + ":" +
                        std::to_string(job_seed(seed, i)));
    }
    SolverCaps caps;
    caps.max_triangles = cfg.cap_triangles;
    return run_jobs<SurveyRow>(names.size(), cfg.jobs, [&](std::size_t i) {
        return survey_instance(names[i], instance_by_name(names[i]), seed, caps);
    });
}

std::vector<ProbeRow> run_fairness_probe(const ExperimentConfig& cfg, std::uint64_t seed) {
    struct Job {
        std::size_t family;
        double c;
    };
    std::vector<Job> jobs;
    for (std::size_t f = 0; f < cfg.probe_families.size(); ++f)
        for (double c : cfg.c_grid) jobs.push_back({f, c});
    std::vector<Graph> hs;
    for (const auto& name : cfg.probe_families) hs.push_back(instance_by_name(name));
    return run_jobs<ProbeRow>(jobs.size(), cfg.jobs, [&](std::size_t i) {
        ProbeRow row;
        row.family = cfg.probe_families[jobs[i].family];
        row.c = jobs[i].c;
        const CompoundGraph k(hs[jobs[i].family]);
        row.t = k.t();
        ProbeOptions opts;
        opts.budget = cfg.probe_budget;
        opts.seed = job_seed(seed, i);
        const ProbeResult res = probe_fairness(k, row.c, opts);
        row.best = res.value;
        row.disproved = res.disproves_fairness;
        const OracleOptions oracle_opts;
        if (k.t() <= oracle_opts.max_t && k.edge_count() <= oracle_opts.max_edges)
            row.oracle = exhaustive_oracle(k, row.c, oracle_opts).value;
        return row;
    });
}

std::vector<CanonRow> run_canonicalization_suite(const ExperimentConfig& cfg, std::size_t trials, std::uint64_t seed,
                                                 const std::string& witness_dir) {
    std::vector<Graph> hs;
    for (const auto& name : cfg.canon_families) hs.push_back(instance_by_name(name));
    if (hs.empty() || cfg.canon_max_eta == 0) throw ConfigError("canon suite needs families and canon_max_eta >= 1");
    return run_jobs<CanonRow>(trials, cfg.jobs, [&](std::size_t i) {
        CanonRow row;
        row.trial = i;
        const std::uint64_t s = job_seed(seed, i);
        const std::size_t f = static_cast<std::size_t>(keyed_uniform(s, 0) * static_cast<double>(hs.size()));
        row.family = cfg.canon_families[f];
        row.eta = 1 + static_cast<std::size_t>(keyed_uniform(s, 1) * static_cast<double>(cfg.canon_max_eta));
        row.c = std::round(keyed_uniform(s, 2) * 1000.0) / 1000.0;
        const CompoundGraph k(hs[f]);
        const CanonWeights w = CanonWeights::from(k, row.eta, row.c);
        const SidedGraph input = random_triangle_free(k, row.eta, s);
        std::string problem;
        try {
            const CanonicalForm cf = canonicalize(input, w);
            row.weight_before = cf.weight_before;
            row.weight_after = cf.weight_after;
            row.weight_ok = check_weight_not_decreased(cf, w);
            row.triangle_free = check_triangle_free(cf);
            row.bipartite_blocks = check_blocks_complete_bipartite(cf.f);
            row.twins = check_twins(cf.f);
            if (!(row.weight_ok && row.triangle_free && row.bipartite_blocks && row.twins)) problem = "observation";
            else {
                const Configuration collapsed = collapse_to_configuration(k, cf.f);
                row.collapse_valid = validate(k, collapsed).empty() &&
                                     std::abs(weight_value(k, collapsed, row.c) - cf.weight_after) <= 1e-12;
                row.gamma_orthogonal = gamma_orthogonal(k, collapsed);
                if (!row.collapse_valid || !row.gamma_orthogonal) problem = "collapse";
                else if (!(canonicalize(cf.f, w).f.graph == cf.f.graph)) problem = "fixed point";
            }
        } catch (const std::exception& e) {
            problem = e.what();
        }
        if (!problem.empty()) {
            std::string path = "-";
            if (!witness_dir.empty()) {
                std::filesystem::create_directories(witness_dir);
                path = (std::filesystem::path(witness_dir) / ("canon_" + std::to_string(i) + ".txt")).string();
                save_graph(path, input);
            }
            row.status = "failed(" + path + ")";
        }
        return row;
    });
}

std::vector<SpectraRow> run_spectra(const ExperimentConfig& cfg, std::uint64_t seed) {
    std::vector<SpectraRow> rows;
    for (std::size_t f = 0; f < cfg.spectra_families.size(); ++f) {
        const GeneratedGraph gen = generate_by_name(cfg.spectra_families[f]);
        const MixingReport mix = check_mixing(gen.graph, gen.spectrum, cfg.mixing_trials, job_seed(seed, f));
        for (double c : cfg.spectra_c) {
            SpectraRow row;
            row.family = gen.name;
            row.t = gen.t;
            row.d = gen.d;
            row.c = c;
            row.lambda = gen.spectrum.lambda;
            const WeightedKMatrix wk = WeightedKMatrix::from_regular(gen.graph, c);
            const Spectrum closed = n_matrix_spectrum_closed_form(wk, gen.spectrum);
            const std::vector<double> dense = symmetric_eigenvalues(wk.dense_n(), 2 * wk.t);
            for (std::size_t i = 0; i < dense.size(); ++i)
                row.max_eigen_error = std::max(row.max_eigen_error, std::abs(dense[i] - closed.eigenvalues[i]));
            const double pd = wk.p * static_cast<double>(wk.d), qt = wk.q * static_cast<double>(wk.t);
            row.pd_plus_qt_error = std::abs(pd + qt - (1.0 - c) / static_cast<double>(wk.t));
            row.pd_minus_qt = std::abs(pd - qt);
            row.mixing_trials = mix.trials;
            row.mixing_violations = mix.violations;
            if (row.max_eigen_error > 1e-8 || row.pd_plus_qt_error > 1e-12 || row.pd_minus_qt > 1e-12 ||
                mix.violations != 0)
                row.status = "failed(-)";
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<MantelRow> run_mantel(const ExperimentConfig& cfg) {
    return run_jobs<MantelRow>(cfg.mantel_max_n, cfg.jobs, [&](std::size_t i) {
        MantelRow row;
        row.n = i + 1;
        row.bound = row.n * row.n;
        try {
            const MantelResult r = max_crossing_triangle_free(row.n);
            row.size = r.size;
            row.exact = r.exact;
            row.nodes = r.nodes;
            if (r.size != row.bound) row.status = "failed(-)";
        } catch (const InstanceTooLarge& e) {
            row.status = std::string("skipped(") + e.what() + ")";
        }
        return row;
    });
}

}  // namespace tuza
