#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tuza/config.hpp"
#include "tuza/simd.hpp"

namespace tuza {

CanonWeights CanonWeights::from(const CompoundGraph& k, std::size_t eta, double c) {
    if (eta == 0) throw std::invalid_argument("block size must be positive");
    const double t = static_cast<double>(k.t());
    const double e2 = static_cast<double>(eta) * static_cast<double>(eta);
    CanonWeights w;
    w.vertex = c / (t * e2);
    w.internal = (1.0 - c) / (4.0 * static_cast<double>(k.m()) * e2);
    w.external = (1.0 - c) / (2.0 * t * t * e2);
    return w;
}

double CanonWeights::of(EdgeType type) const {
    switch (type) {
        case EdgeType::vertex: return vertex;
        case EdgeType::internal: return internal;
        case EdgeType::external: return external;
    }
    return 0.0;
}

double total_weight(const SidedGraph& f, const CanonWeights& w) {
    double sum = 0.0;
    f.graph.for_each_edge([&](Vertex u, Vertex v) { sum += w.of(f.edge_type(u, v)); });
    return sum;
}

namespace {

double vertex_weight(const SidedGraph& f, const CanonWeights& w, Vertex x) {
    double sum = 0.0;
    for (Vertex y : f.graph.neighbors(x)) sum += w.of(f.edge_type(x, y));
    return sum;
}

std::vector<Vertex> block_members(const SidedGraph& f, Vertex block) {
    std::vector<Vertex> out(*f.block_size);
    std::iota(out.begin(), out.end(), static_cast<Vertex>(block * *f.block_size));
    return out;
}

void copy_neighborhood(Graph& g, Vertex from, Vertex to) {
    const std::vector<Vertex> nbrs = g.neighbors(from);
    g.isolate(to);
    for (Vertex z : nbrs)
        if (z != to) g.add_edge(to, z);
}

Vertex heaviest(const SidedGraph& f, const CanonWeights& w, const std::vector<Vertex>& among) {
    Vertex pick = among.front();
    double best = vertex_weight(f, w, pick);
    for (Vertex y : among) {
        const double value = vertex_weight(f, w, y);
        if (value > best) {
            best = value;
            pick = y;
        }
    }
    return pick;
}

}  // namespace

CanonicalForm canonicalize(const SidedGraph& f_tilde, const CanonWeights& w) {
    if (!f_tilde.block_size) throw std::invalid_argument("canonicalize needs block structure");
    if (count_triangles(f_tilde.graph) != 0) throw std::invalid_argument("canonicalize input has a triangle");
    CanonicalForm out;
    out.f = f_tilde;
    out.weight_before = total_weight(f_tilde, w);
    const std::size_t blocks = f_tilde.block_count();
    out.s.resize(blocks);
    out.t.resize(blocks);
    Graph& g = out.f.graph;
    for (Vertex v = 0; v < blocks; ++v) {
        const std::vector<Vertex> members = block_members(out.f, v);
        const Vertex x = heaviest(out.f, w, members);
        auto& s = out.s[v];
        auto& t = out.t[v];
        for (Vertex y : members) (g.has_edge(x, y) ? s : t).push_back(y);
        for (Vertex y : t)
            if (y != x) copy_neighborhood(g, x, y);
        if (s.empty()) continue;
        const Vertex z = heaviest(out.f, w, s);
        for (Vertex y : s)
            if (y != z) copy_neighborhood(g, z, y);
    }
    out.weight_after = total_weight(out.f, w);
    return out;
}

bool check_weight_not_decreased(const CanonicalForm& cf, const CanonWeights& w) {
    return total_weight(cf.f, w) >= cf.weight_before - 1e-12;
}

bool check_triangle_free(const CanonicalForm& cf) { return count_triangles(cf.f.graph) == 0; }

std::pair<std::vector<Vertex>, std::vector<Vertex>> block_sides(const SidedGraph& f, Vertex block) {
    const std::vector<Vertex> members = block_members(f, block);
    std::vector<Vertex> s, t;
    const auto anchor = std::find_if(members.begin(), members.end(), [&](Vertex x) {
        return std::any_of(members.begin(), members.end(), [&](Vertex y) { return f.graph.has_edge(x, y); });
    });
    if (anchor == members.end()) return {s, members};
    for (Vertex y : members) (f.graph.has_edge(*anchor, y) ? s : t).push_back(y);
    return {s, t};
}

bool check_blocks_complete_bipartite(const SidedGraph& f) {
    if (!f.block_size) return false;
    for (Vertex b = 0; b < f.block_count(); ++b) {
        const auto [s, t] = block_sides(f, b);
        for (Vertex x : s) {
            for (Vertex y : t)
                if (!f.graph.has_edge(x, y)) return false;
            for (Vertex y : s)
                if (f.graph.has_edge(x, y)) return false;
        }
        for (Vertex x : t)
            for (Vertex y : t)
                if (f.graph.has_edge(x, y)) return false;
    }
    return true;
}

bool check_twins(const SidedGraph& f) {
    if (!f.block_size) return false;
    const auto same = [&](const std::vector<Vertex>& part) {
        for (Vertex y : part)
            if (!std::equal(f.graph.row(y).begin(), f.graph.row(y).end(), f.graph.row(part.front()).begin()))
                return false;
        return true;
    };
    for (Vertex b = 0; b < f.block_count(); ++b) {
        const auto [s, t] = block_sides(f, b);
        if (!s.empty() && !same(s)) return false;
        if (!t.empty() && !same(t)) return false;
    }
    return true;
}

Configuration collapse_to_configuration(const CompoundGraph& k, const SidedGraph& f) {
    if (!f.block_size || f.block_count() != k.base().graph.order() || f.x_count != k.t() * *f.block_size)
        throw std::invalid_argument("collapse needs a blowup of K");
    if (!check_blocks_complete_bipartite(f) || !check_twins(f) || count_triangles(f.graph) != 0)
        throw std::invalid_argument("collapse needs a canonical triangle-free graph");
    const std::size_t n = k.base().graph.order();
    const double eta = static_cast<double>(*f.block_size);
    std::vector<std::vector<Vertex>> r(n), p(n);
    Configuration cfg;
    cfg.phi_b.resize(n);
    cfg.vertex_edge.assign(n, true);
    for (Vertex v = 0; v < n; ++v) {
        auto [s, t] = block_sides(f, v);
        if (s.size() >= t.size()) {
            r[v] = std::move(s);
            p[v] = std::move(t);
        } else {
            r[v] = std::move(t);
            p[v] = std::move(s);
        }
        cfg.phi_b[v] = static_cast<double>(r[v].size()) / eta;
    }
    cfg.pattern.assign(k.edge_count(), 0);
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        for (int xu = 0; xu < 2; ++xu)
            for (int xw = 0; xw < 2; ++xw) {
                const auto& pu = xu ? p[u] : r[u];
                const auto& pw = xw ? p[w] : r[w];
                if (!pu.empty() && !pw.empty() && f.graph.has_edge(pu.front(), pw.front()))
                    cfg.pattern[e] |= static_cast<std::uint8_t>(1u << (2 * xu + xw));
            }
    }
    return cfg;
}

SidedGraph random_triangle_free(const CompoundGraph& k, std::size_t eta, std::uint64_t seed) {
    const SidedGraph host = blowup(k.base(), eta);
    std::vector<Edge> edges = EdgeIndex(host.graph).edges();
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    const double keep = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SidedGraph out = host;
    out.graph = Graph(host.graph.order());
    for (const auto& [u, v] : edges) {
        if (unit(rng) >= keep) continue;
        if (!simd::intersects(out.graph.row(u), out.graph.row(v))) out.graph.add_edge(u, v);
    }
    return out;
}

}  // namespace tuza
