#include <cmath>
#include <concepts>
#include <cstdio>
#include <ostream>

#include "tuza/json_io.hpp"

namespace tuza {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string field(double x) { return format_number(x); }
std::string field(bool b) { return b ? "true" : "false"; }
template <std::unsigned_integral T>
std::string field(T x) {
    return std::to_string(x);
}
template <class T>
std::string field(const std::optional<T>& x) {
    return x ? field(*x) : std::string();
}

class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::initializer_list<const char*> header) : out_(out) {
        out_ << "# schema=1\n";
        bool first = true;
        for (const char* h : header) {
            out_ << (first ? "" : ",") << h;
            first = false;
        }
        out_ << '\n';
    }
    template <class... Ts>
    void row(const Ts&... xs) {
        bool first = true;
        ((out_ << (first ? "" : ",") << field(xs), first = false), ...);
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

template <class T>
Json opt(const std::optional<T>& x) {
    return x ? Json(*x) : Json(nullptr);
}

Json finite(double x) { return std::isfinite(x) ? Json(x) : Json(format_number(x)); }

}  // namespace

void write_csv(std::ostream& out, const std::vector<ConstructionRecord>& rows) {
    CsvWriter w(out, {"seed", "family", "alpha", "c", "p", "q", "t", "d", "a", "n", "m", "internal", "external", "vertex",
                      "internal_target", "external_target", "vertex_target", "internal_rel_dev", "external_rel_dev",
                      "vertex_rel_dev", "band", "internal_max_pair_dev", "external_max_pair_dev", "within_band",
                      "m_ratio", "status"});
    for (const auto& r : rows)
        w.row(r.seed, r.family, r.params.alpha, r.params.c, r.params.p, r.params.q, r.params.t, r.params.d, r.a, r.n, r.m,
              r.counts.internal, r.counts.external, r.counts.vertex, r.internal_target, r.external_target, r.vertex_target,
              r.internal_rel_dev, r.external_rel_dev, r.vertex_rel_dev, r.band, r.internal_max_pair_dev,
              r.external_max_pair_dev, r.within_band, r.m_ratio, r.status);
}

void write_csv(std::ostream& out, const std::vector<CoverRecord>& rows) {
    CsvWriter w(out, {"seed", "alpha", "a", "m", "weight", "ratio", "target", "below_bound", "triangles", "tau3_star",
                      "status"});
    for (const auto& r : rows)
        w.row(r.seed, r.alpha, r.a, r.m, r.weight, r.ratio, r.target, r.below_bound, r.triangles, r.tau3_star, r.status);
}

void write_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
    CsvWriter w(out, {"instance", "seed", "n", "edges", "triangles", "tau3", "nu3", "tau3_star", "nu3_star", "ratio",
                      "flag", "status"});
    for (const auto& r : rows) {
        if (!r.report) {
            w.row(r.instance, r.seed, r.n, r.edges, std::string(), std::string(), std::string(), std::string(),
                  std::string(), std::string(), r.flag, r.status);
            continue;
        }
        const TuzaReport& t = *r.report;
        const std::string ratio = t.ratio ? format_number(*t.ratio) : "no-triangles";
        w.row(r.instance, r.seed, r.n, r.edges, t.triangles, t.tau3, t.nu3, t.tau3_star, t.nu3_star, ratio, r.flag,
              r.status);
    }
}

void write_csv(std::ostream& out, const std::vector<ProbeRow>& rows) {
    CsvWriter w(out, {"family", "t", "c", "best", "oracle", "fairness_disproved", "status"});
    for (const auto& r : rows) w.row(r.family, r.t, r.c, r.best, r.oracle, r.disproved, r.status);
}

void write_csv(std::ostream& out, const std::vector<CanonRow>& rows) {
    CsvWriter w(out, {"trial", "family", "eta", "c", "weight_before", "weight_after", "weight_delta", "weight_ok",
                      "triangle_free", "bipartite_blocks", "twins", "collapse_valid", "gamma_orthogonal", "status"});
    for (const auto& r : rows)
        w.row(r.trial, r.family, r.eta, r.c, r.weight_before, r.weight_after, r.weight_after - r.weight_before,
              r.weight_ok, r.triangle_free, r.bipartite_blocks, r.twins, r.collapse_valid, r.gamma_orthogonal, r.status);
}

void write_csv(std::ostream& out, const std::vector<SpectraRow>& rows) {
    CsvWriter w(out, {"family", "t", "d", "c", "lambda", "max_eigen_error", "pd_plus_qt_error", "pd_minus_qt",
                      "mixing_trials", "mixing_violations", "status"});
    for (const auto& r : rows)
        w.row(r.family, r.t, r.d, r.c, r.lambda, r.max_eigen_error, r.pd_plus_qt_error, r.pd_minus_qt, r.mixing_trials,
              r.mixing_violations, r.status);
}

void write_csv(std::ostream& out, const std::vector<MantelRow>& rows) {
    CsvWriter w(out, {"n", "size", "bound", "exact", "nodes", "status"});
    for (const auto& r : rows) w.row(r.n, r.size, r.bound, r.exact, r.nodes, r.status);
}

Json to_json(const TuzaReport& r, const std::string& instance, std::uint64_t seed) {
    return Json{{"instance", instance}, {"tau3", r.tau3},         {"nu3", r.nu3},
                {"tau3_star", r.tau3_star}, {"nu3_star", r.nu3_star}, {"ratio", opt(r.ratio)},
                {"runtime_ms", r.runtime_ms}, {"seed", seed},       {"triangles", r.triangles}};
}

Json to_json(const Configuration& cfg) {
    Json patterns = Json::array();
    for (std::uint8_t m : cfg.pattern) patterns.push_back(static_cast<int>(m));
    Json vertex_edges = Json::array();
    for (bool b : cfg.vertex_edge) vertex_edges.push_back(b);
    return Json{{"t", cfg.phi_b.size() / 2}, {"patterns", patterns}, {"phi_b", cfg.phi_b}, {"vertex_edges", vertex_edges}};
}

Json to_json(const WeightReport& r) {
    return Json{{"c", r.c},
                {"w_c", r.w_c},
                {"w_c_identity", r.w_c_identity},
                {"zeta_i", r.zeta_i},
                {"zeta_e", r.zeta_e},
                {"gamma_i", r.gamma_i},
                {"gamma_e", r.gamma_e},
                {"vertex_loss", r.vertex_loss},
                {"class_counts", r.class_counts}};
}

Json to_json(const RegularPairStat& s) {
    Json out{{"density", s.density},
             {"epsilon", s.epsilon},
             {"regular", s.regular},
             {"certified", s.certified},
             {"worst_deviation", s.worst_deviation},
             {"pairs_checked", s.pairs_checked}};
    if (s.witness) out["witness"] = Json{{"u", s.witness->first}, {"w", s.witness->second}};
    else out["witness"] = nullptr;
    return out;
}

Json to_json(const MantelResult& r) {
    Json edges = Json::array();
    r.witness.graph.for_each_edge([&](Vertex u, Vertex v) { edges.push_back({u, v}); });
    return Json{{"n", r.n}, {"size", r.size}, {"exact", r.exact}, {"nodes", r.nodes}, {"seed_size", r.seed_size},
                {"witness_edges", edges}};
}

Json to_json(const CountingReport& r) {
    Json out{{"hypotheses_met", r.hypotheses_met}, {"certified", r.certified}, {"unmet", r.unmet},
             {"ab", to_json(r.ab)},                {"ab2", to_json(r.ab2)},    {"bb2", to_json(r.bb2)}};
    if (r.triangle) out["triangle"] = *r.triangle;
    else out["triangle"] = nullptr;
    return out;
}

Json to_json(const ConstructionRecord& r) {
    return Json{{"seed", r.seed},
                {"family", r.family},
                {"alpha", r.params.alpha},
                {"c", r.params.c},
                {"p", r.params.p},
                {"q", r.params.q},
                {"t", r.params.t},
                {"d", r.params.d},
                {"a", r.a},
                {"n", r.n},
                {"m", r.m},
                {"counts", {{"internal", r.counts.internal}, {"external", r.counts.external}, {"vertex", r.counts.vertex}}},
                {"targets", {{"internal", r.internal_target}, {"external", r.external_target}, {"vertex", r.vertex_target}}},
                {"rel_dev", {{"internal", finite(r.internal_rel_dev)}, {"external", finite(r.external_rel_dev)},
                             {"vertex", finite(r.vertex_rel_dev)}}},
                {"band", r.band},
                {"max_pair_dev", {{"internal", r.internal_max_pair_dev}, {"external", r.external_max_pair_dev}}},
                {"within_band", r.within_band},
                {"m_ratio", finite(r.m_ratio)},
                {"status", r.status}};
}

Json to_json(const CoverRecord& r) {
    return Json{{"seed", r.seed},     {"alpha", r.alpha},   {"a", r.a},
                {"m", r.m},           {"weight", r.weight}, {"ratio", finite(r.ratio)},
                {"target", r.target}, {"below_bound", r.below_bound}, {"triangles", opt(r.triangles)},
                {"tau3_star", opt(r.tau3_star)}, {"status", r.status}};
}

Json to_json(const SurveyRow& r) {
    Json out = r.report ? to_json(*r.report, r.instance, r.seed) : Json{{"instance", r.instance}, {"seed", r.seed}};
    out["n"] = r.n;
    out["edges"] = r.edges;
    out["flag"] = r.flag;
    out["status"] = r.status;
    return out;
}

Json to_json(const ProbeRow& r) {
    return Json{{"family", r.family}, {"t", r.t}, {"c", r.c}, {"best", r.best}, {"oracle", opt(r.oracle)},
                {"fairness_disproved", r.disproved}, {"status", r.status}};
}

Json to_json(const CanonRow& r) {
    return Json{{"trial", r.trial},
                {"family", r.family},
                {"eta", r.eta},
                {"c", r.c},
                {"weight_before", r.weight_before},
                {"weight_after", r.weight_after},
                {"weight_ok", r.weight_ok},
                {"triangle_free", r.triangle_free},
                {"bipartite_blocks", r.bipartite_blocks},
                {"twins", r.twins},
                {"collapse_valid", r.collapse_valid},
                {"gamma_orthogonal", r.gamma_orthogonal},
                {"status", r.status}};
}

Json to_json(const SpectraRow& r) {
    return Json{{"family", r.family},
                {"t", r.t},
                {"d", r.d},
                {"c", r.c},
                {"lambda", r.lambda},
                {"max_eigen_error", r.max_eigen_error},
                {"pd_plus_qt_error", r.pd_plus_qt_error},
                {"pd_minus_qt", r.pd_minus_qt},
                {"mixing_trials", r.mixing_trials},
                {"mixing_violations", r.mixing_violations},
                {"status", r.status}};
}

Json to_json(const MantelRow& r) {
    return Json{{"n", r.n}, {"size", r.size}, {"bound", r.bound}, {"exact", r.exact}, {"nodes", r.nodes},
                {"status", r.status}};
}

}  // namespace tuza
