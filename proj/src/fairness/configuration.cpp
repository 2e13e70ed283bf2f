#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "lifts.hpp"
#include "tuza/config.hpp"
#include "tuza/simd.hpp"

namespace tuza {

bool is_allowed_pattern(std::uint8_t mask) {
    return std::find(kPatterns.begin(), kPatterns.end(), mask) != kPatterns.end();
}

int edge_class(std::uint8_t mask) {
    if (mask == (lift::bb | lift::ss)) return 1;
    if (mask == lift::bb) return 2;
    if (mask == (lift::bs | lift::sb)) return 3;
    return 4;
}

std::string refined_label(std::uint8_t mask) {
    switch (mask) {
        case lift::bb | lift::ss: return "1";
        case lift::bb: return "2";
        case lift::ss: return "2'";
        case lift::bs | lift::sb: return "3";
        case lift::bs: return "3a";
        case lift::sb: return "3b";
        case 0: return "4";
        default: return "x";
    }
}

CompoundGraph::CompoundGraph(const Graph& h) : k_(double_of(h)) { index(); }

CompoundGraph::CompoundGraph(SidedGraph k) : k_(std::move(k)) {
    if (k_.block_size || k_.graph.order() != 2 * k_.x_count)
        throw std::invalid_argument("compound graph needs a double K_{H,H} without block structure");
    index();
}

void CompoundGraph::index() {
    const std::size_t n = k_.graph.order();
    if (k_.x_count == 0) throw std::invalid_argument("compound graph of an empty H");
    edges_ = EdgeIndex(k_.graph);
    types_.resize(edges_.size());
    incident_.assign(n, {});
    std::size_t internal = 0;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [u, w] = edges_[e];
        types_[e] = k_.edge_type(u, w);
        if (types_[e] == EdgeType::internal) ++internal;
        incident_[u].emplace_back(w, e);
        incident_[w].emplace_back(u, e);
    }
    if (internal == 0 || internal % 2) throw std::invalid_argument("H must have at least one edge");
    m_ = internal / 2;
    const TriangleSystem ts = crossing_triangles(k_);
    triangle_count_ = ts.size();
    through_.assign(edges_.size(), {});
    for (const auto& te : ts.triangle_edges) {
        through_[te[0]].push_back({te[1], te[2]});
        through_[te[1]].push_back({te[0], te[2]});
        through_[te[2]].push_back({te[0], te[1]});
    }
}

double CompoundGraph::edge_coefficient(EdgeId e, double c) const {
    const double tt = static_cast<double>(t());
    return types_[e] == EdgeType::internal ? (1.0 - c) / (4.0 * static_cast<double>(m_)) : (1.0 - c) / (2.0 * tt * tt);
}

namespace {

double part_mass(double phi_b, int x) { return x == 0 ? phi_b : 1.0 - phi_b; }

}  // namespace

double captured_fraction(std::uint8_t mask, double phi_u, double phi_w) {
    double sum = 0.0;
    for (int xu = 0; xu < 2; ++xu)
        for (int xw = 0; xw < 2; ++xw)
            if ((mask >> (2 * xu + xw)) & 1u) sum += part_mass(phi_u, xu) * part_mass(phi_w, xw);
    return sum;
}

SidedGraph configuration_graph(const CompoundGraph& k, const Configuration& cfg) {
    SidedGraph f;
    f.graph = Graph(2 * k.base().graph.order());
    f.x_count = 2 * k.t();
    f.block_size = 2;
    for (Vertex v = 0; v < cfg.vertex_edge.size(); ++v)
        if (cfg.vertex_edge[v]) f.graph.add_edge(big(v), small(v));
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        for (int xu = 0; xu < 2; ++xu)
            for (int xw = 0; xw < 2; ++xw)
                if ((cfg.pattern[e] >> (2 * xu + xw)) & 1u) f.graph.add_edge(2 * u + xu, 2 * w + xw);
    }
    return f;
}

std::vector<Violation> validate(const CompoundGraph& k, const Configuration& cfg) {
    std::vector<Violation> out;
    const std::size_t n = k.base().graph.order();
    if (cfg.pattern.size() != k.edge_count() || cfg.phi_b.size() != n || cfg.vertex_edge.size() != n) {
        out.push_back({ViolationKind::shape, "configuration sizes do not match K", {}});
        return out;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!cfg.vertex_edge[v])
            out.push_back({ViolationKind::missing_vertex_edge, "vertex edge of " + std::to_string(v) + " missing",
                           {big(v), small(v)}});
    for (EdgeId e = 0; e < k.edge_count(); ++e)
        if (cfg.pattern[e] > 15)
            out.push_back({ViolationKind::shape, "pattern of edge " + std::to_string(e) + " is not a lift mask", {}});
    if (!out.empty() && out.front().kind == ViolationKind::shape) return out;

    const SidedGraph f = configuration_graph(k, cfg);
    for (Vertex v = 0; v < n; ++v) {
        if (!simd::intersects(f.graph.row(big(v)), f.graph.row(small(v)))) continue;
        for (Vertex z = 0; z < f.graph.order(); ++z)
            if (f.graph.has_edge(big(v), z) && f.graph.has_edge(small(v), z)) {
                out.push_back({ViolationKind::common_neighbor,
                               "v^b and v^s of " + std::to_string(v) + " share neighbor " + std::to_string(z),
                               {big(v), small(v), z}});
                break;
            }
    }
    const TriangleSystem ts = crossing_triangles(f);
    for (const auto& tri : ts.triangles)
        out.push_back({ViolationKind::external_triangle,
                       "external triangle " + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                           std::to_string(tri[2]),
                       {tri[0], tri[1], tri[2]}});
    for (Vertex v = 0; v < n; ++v)
        if (!(cfg.phi_b[v] >= 0.5 && cfg.phi_b[v] <= 1.0))
            out.push_back({ViolationKind::mass, "phi(v^b) of " + std::to_string(v) + " = " +
                                                    std::to_string(cfg.phi_b[v]) + " outside [1/2,1]",
                           {big(v)}});
    return out;
}

Configuration naive_configuration(const CompoundGraph& k) {
    Configuration cfg;
    cfg.pattern.assign(k.edge_count(), lift::bs | lift::sb);
    cfg.phi_b.assign(k.base().graph.order(), 0.5);
    cfg.vertex_edge.assign(k.base().graph.order(), true);
    return cfg;
}

namespace detail {

bool lift_present(const CompoundGraph& k, std::uint8_t mask, EdgeId e, Vertex p, int xp, int xq) {
    const bool forward = k.edges()[e].first == p;
    const int bit = forward ? 2 * xp + xq : 2 * xq + xp;
    return (mask >> bit) & 1u;
}

// True when the external triangle through e with other edges e1, e2 has a
// lift with all three edges in F, taking mask for e.
bool triangle_lifted(const CompoundGraph& k, const std::vector<std::uint8_t>& pattern, EdgeId e, std::uint8_t mask,
                     EdgeId e1, EdgeId e2) {
    if (!mask || !pattern[e1] || !pattern[e2]) return false;
    const auto [u, w] = k.edges()[e];
    const auto [a, b] = k.edges()[e1];
    const Vertex z = a == u || a == w ? b : a;
    const Vertex u1 = a == z ? b : a;  // the endpoint of e shared with e1
    const Vertex w1 = u1 == u ? w : u;
    for (int xu = 0; xu < 2; ++xu)
        for (int xw = 0; xw < 2; ++xw) {
            if (!lift_present(k, mask, e, u1, xu, xw)) continue;
            for (int xz = 0; xz < 2; ++xz)
                if (lift_present(k, pattern[e1], e1, u1, xu, xz) && lift_present(k, pattern[e2], e2, w1, xw, xz))
                    return true;
        }
    return false;
}

bool etf_with(const CompoundGraph& k, const std::vector<std::uint8_t>& pattern, EdgeId e, std::uint8_t mask) {
    for (const auto& [e1, e2] : k.triangles_through(e))
        if (triangle_lifted(k, pattern, e, mask, e1, e2)) return false;
    return true;
}

}  // namespace detail

Configuration random_configuration(const CompoundGraph& k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Configuration cfg;
    cfg.pattern.assign(k.edge_count(), 0);
    cfg.vertex_edge.assign(k.base().graph.order(), true);
    cfg.phi_b.resize(k.base().graph.order());
    std::uniform_real_distribution<double> mass(0.5, 1.0);
    for (double& p : cfg.phi_b) p = mass(rng);
    std::vector<EdgeId> order(k.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, kPatterns.size() - 1);
    for (EdgeId e : order) {
        const std::uint8_t mask = kPatterns[pick(rng)];
        if (detail::etf_with(k, cfg.pattern, e, mask)) cfg.pattern[e] = mask;
    }
    return cfg;
}

double weight_value(const CompoundGraph& k, const Configuration& cfg, double c) {
    double internal = 0.0, external = 0.0, vertices = 0.0;
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        (k.type(e) == EdgeType::internal ? internal : external) +=
            captured_fraction(cfg.pattern[e], cfg.phi_b[u], cfg.phi_b[w]);
    }
    for (double p : cfg.phi_b) vertices += p * (1.0 - p);
    const double t = static_cast<double>(k.t());
    return (1.0 - c) * internal / (4.0 * static_cast<double>(k.m())) + (1.0 - c) * external / (2.0 * t * t) +
           c * vertices / t;
}

namespace {

void require_valid(const CompoundGraph& k, const Configuration& cfg) {
    const auto violations = validate(k, cfg);
    if (!violations.empty()) throw std::invalid_argument("invalid configuration: " + violations.front().detail);
}

}  // namespace

WeightReport weight_c(const CompoundGraph& k, const Configuration& cfg, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0,1]");
    require_valid(k, cfg);
    WeightReport r;
    r.c = c;
    const double t = static_cast<double>(k.t());
    const double m = static_cast<double>(k.m());

    // Definition: sum over the edges of F in K+.
    const SidedGraph f = configuration_graph(k, cfg);
    const auto phi = [&](Vertex x) { return part_mass(cfg.phi_b[x / 2], static_cast<int>(x % 2)); };
    double internal = 0.0, external = 0.0, vertices = 0.0;
    f.graph.for_each_edge([&](Vertex a, Vertex b) {
        switch (f.edge_type(a, b)) {
            case EdgeType::internal: internal += phi(a) * phi(b); break;
            case EdgeType::external: external += phi(a) * phi(b); break;
            case EdgeType::vertex: break;
        }
    });
    for (double p : cfg.phi_b) vertices += p * (1.0 - p);
    r.w_c = (1.0 - c) * internal / (4.0 * m) + (1.0 - c) * external / (2.0 * t * t) + c * vertices / t;

    // Identity: per-edge gains in terms of delta.
    double zi = 0.0, ze = 0.0, delta_sq = 0.0;
    r.edge_gain.resize(k.edge_count());
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        const double du = cfg.delta(u), dw = cfg.delta(w);
        double captured = 0.0;
        for (int xu = 0; xu < 2; ++xu)
            for (int xw = 0; xw < 2; ++xw)
                if ((cfg.pattern[e] >> (2 * xu + xw)) & 1u)
                    captured += (0.5 + (xu ? -du : du)) * (0.5 + (xw ? -dw : dw));
        (k.type(e) == EdgeType::internal ? zi : ze) += captured;
        r.edge_gain[e] = k.edge_coefficient(e, c) * (captured - 0.5);
        ++r.class_counts[static_cast<std::size_t>(edge_class(cfg.pattern[e]) - 1)];
    }
    for (Vertex v = 0; v < cfg.phi_b.size(); ++v) delta_sq += cfg.delta(v) * cfg.delta(v);
    r.zeta_i = zi / (2.0 * m);
    r.zeta_e = ze / (t * t);
    r.gamma_i = r.zeta_i - 0.5;
    r.gamma_e = r.zeta_e - 0.5;
    r.vertex_loss = c / t * delta_sq;
    r.w_c_identity = 0.5 + (1.0 - c) / 2.0 * (r.gamma_i + r.gamma_e) - r.vertex_loss;
    if (std::fabs(r.w_c - r.w_c_identity) > 1e-12)
        throw std::logic_error("c-weight definition and delta identity disagree by " +
                               std::to_string(std::fabs(r.w_c - r.w_c_identity)));
    return r;
}

bool fairness_monotonicity_check(const CompoundGraph& k, const Configuration& cfg, double c1, double c2) {
    if (!(c1 < c2)) throw std::invalid_argument("monotonicity check needs c1 < c2");
    require_valid(k, cfg);
    const double t = static_cast<double>(k.t());
    double qi = 0.0, qe = 0.0, qv = 0.0;
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        (k.type(e) == EdgeType::internal ? qi : qe) += captured_fraction(cfg.pattern[e], cfg.phi_b[u], cfg.phi_b[w]);
    }
    for (double p : cfg.phi_b) qv += p * (1.0 - p);
    qi /= 2.0 * static_cast<double>(k.m());
    qe /= t * t;
    qv /= t;
    if (qv > 0.5 + 1e-15) throw std::logic_error("vertex share exceeds 1/2");
    const auto combo = [&](double c) { return (1.0 - c) / 2.0 * qi + (1.0 - c) / 2.0 * qe + c * qv; };
    const double w1 = weight_value(k, cfg, c1), w2 = weight_value(k, cfg, c2);
    if (std::fabs(w1 - combo(c1)) > 1e-12 || std::fabs(w2 - combo(c2)) > 1e-12)
        throw std::logic_error("c-weight is not the expected convex combination");
    return w2 <= std::max(w1, 0.5) + 1e-12;
}

EdgeVector gamma_vector(const CompoundGraph& k, const Configuration& cfg) {
    EdgeVector v(k.edge_count());
    for (EdgeId e = 0; e < k.edge_count(); ++e)
        if (edge_class(cfg.pattern[e]) <= 2) v.set(e);
    return v;
}

EdgeVector class123_vector(const CompoundGraph& k, const Configuration& cfg) {
    EdgeVector v(k.edge_count());
    for (EdgeId e = 0; e < k.edge_count(); ++e)
        if (edge_class(cfg.pattern[e]) <= 3) v.set(e);
    return v;
}

bool gamma_orthogonal(const CompoundGraph& k, const Configuration& cfg) {
    return is_orthogonal(gamma_vector(k, cfg), external_triangle_space(k.base(), class123_vector(k, cfg)));
}

}  // namespace tuza
