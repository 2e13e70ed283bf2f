#include "tuza/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "tuza/rng.hpp"
#include "tuza/simd.hpp"

namespace tuza {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
    if (n > kMaxOrder) throw std::length_error("graph order " + std::to_string(n) + " exceeds limit");
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
    if (has_edge(u, v)) return;
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v || !has_edge(u, v)) return;
    bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --edge_count_;
}

void Graph::isolate(Vertex v) {
    for (Vertex w : neighbors(v)) remove_edge(v, w);
}

std::size_t Graph::degree(Vertex v) const { return simd::popcount(row(v)); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    const auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
    return out;
}

bool Graph::is_regular() const {
    if (n_ == 0) return true;
    const std::size_t d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

std::size_t Graph::components() const {
    std::vector<char> seen(n_, 0);
    std::size_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

bool Graph::is_bipartite() const {
    std::vector<int> colour(n_, -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    stack.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::size_t> Graph::diameter() const {
    std::size_t best = 0;
    std::vector<std::size_t> dist(n_);
    for (Vertex s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        std::size_t reached = 1;
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w : neighbors(u))
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[u] + 1;
                    best = std::max(best, dist[w]);
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != n_) return std::nullopt;
    }
    return best;
}

EdgeIndex::EdgeIndex(const Graph& g) : edges_(g.edges()) {}

std::optional<EdgeId> EdgeIndex::find(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

EdgeId EdgeIndex::id(Vertex u, Vertex v) const {
    if (const auto found = find(u, v)) return *found;
    throw std::out_of_range("not an edge: " + std::to_string(u) + "-" + std::to_string(v));
}

char edge_type_code(EdgeType type) {
    switch (type) {
        case EdgeType::internal: return 'i';
        case EdgeType::external: return 'e';
        case EdgeType::vertex: return 'x';
    }
    return '?';
}

EdgeType SidedGraph::edge_type(Vertex u, Vertex v) const {
    if (block_size && u / *block_size == v / *block_size) return EdgeType::vertex;
    return side(u) == side(v) ? EdgeType::internal : EdgeType::external;
}

TypeCensus SidedGraph::census() const {
    TypeCensus c;
    graph.for_each_edge([&](Vertex u, Vertex v) {
        switch (edge_type(u, v)) {
            case EdgeType::internal: ++c.internal; break;
            case EdgeType::external: ++c.external; break;
            case EdgeType::vertex: ++c.vertex; break;
        }
    });
    return c;
}

Graph lex_product(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("lex_product of an empty graph");
    if (n1 > kMaxOrder / n2) throw std::length_error("lex_product order overflows the vertex limit");
    Graph out(n1 * n2);
    const auto id = [n2](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * n2 + b); };
    for (Vertex u1 = 0; u1 < n1; ++u1) {
        for (Vertex u2 = 0; u2 < n2; ++u2) {
            for (Vertex v2 = u2 + 1; v2 < n2; ++v2)
                if (g2.has_edge(u2, v2)) out.add_edge(id(u1, u2), id(u1, v2));
        }
        for (Vertex v1 = u1 + 1; v1 < n1; ++v1) {
            if (!g1.has_edge(u1, v1)) continue;
            for (Vertex u2 = 0; u2 < n2; ++u2)
                for (Vertex v2 = 0; v2 < n2; ++v2) out.add_edge(id(u1, u2), id(v1, v2));
        }
    }
    return out;
}

SidedGraph double_of(const Graph& h) {
    SidedGraph k;
    k.graph = lex_product(Graph::complete(2), h);
    k.x_count = h.order();
    return k;
}

SidedGraph blowup(const SidedGraph& k, std::size_t a) {
    if (a == 0) throw std::invalid_argument("blowup size must be positive");
    SidedGraph out;
    out.graph = lex_product(k.graph, Graph::complete(a));
    out.x_count = k.x_count * a;
    out.block_size = a;
    Provenance origin = k.origin.value_or(Provenance{});
    origin.a = a;
    out.origin = origin;
    return out;
}

SidedGraph random_subgraph(const SidedGraph& k_blow, double p, double q, std::uint64_t seed) {
    if (!k_blow.block_size) throw std::invalid_argument("random_subgraph needs a blowup (no block structure)");
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("edge retention probabilities must lie in [0,1]");
    SidedGraph out;
    out.graph = Graph(k_blow.graph.order());
    out.x_count = k_blow.x_count;
    out.block_size = k_blow.block_size;
    Provenance origin = k_blow.origin.value_or(Provenance{});
    origin.p = p;
    origin.q = q;
    origin.seed = seed;
    origin.sampled = true;
    out.origin = origin;
    std::uint64_t edge_id = 0;
    k_blow.graph.for_each_edge([&](Vertex u, Vertex v) {
        const EdgeType type = k_blow.edge_type(u, v);
        bool keep = true;
        if (type != EdgeType::vertex) keep = keyed_uniform(seed, edge_id) < (type == EdgeType::internal ? p : q);
        if (keep) out.graph.add_edge(u, v);
        ++edge_id;
    });
    return out;
}

namespace {

// Calls fn(a, b, c) for each triangle a < b < c in lexicographic order.
template <class Fn>
void scan_triangles(const Graph& g, Fn&& fn) {
    const std::size_t words = g.words();
    std::vector<std::uint64_t> common(words);
    g.for_each_edge([&](Vertex a, Vertex b) {
        simd::and_into(common, g.row(a), g.row(b));
        const std::size_t first = (static_cast<std::size_t>(b) + 1) >> 6;
        for (std::size_t w = first; w < words; ++w) {
            std::uint64_t bits = common[w];
            if (w == first) bits &= ~std::uint64_t{0} << ((b + 1) & 63);
            while (bits) {
                fn(a, b, static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
                bits &= bits - 1;
            }
        }
    });
}

TriangleSystem build_system(const Graph& g, bool crossing_only, std::size_t x_count) {
    TriangleSystem ts;
    ts.edges = EdgeIndex(g);
    ts.edge_to_triangles.resize(ts.edges.size());
    scan_triangles(g, [&](Vertex a, Vertex b, Vertex c) {
        if (crossing_only) {
            const bool ax = a < x_count;
            if (ax == (b < x_count) && ax == (c < x_count)) return;
        }
        const auto id = static_cast<std::uint32_t>(ts.triangles.size());
        ts.triangles.push_back({a, b, c});
        const std::array<EdgeId, 3> e{ts.edges.id(a, b), ts.edges.id(a, c), ts.edges.id(b, c)};
        ts.triangle_edges.push_back(e);
        for (EdgeId x : e) ts.edge_to_triangles[x].push_back(id);
    });
    return ts;
}

}  // namespace

TriangleSystem enumerate_triangles(const Graph& g) { return build_system(g, false, 0); }

std::size_t count_triangles(const Graph& g) {
    std::size_t count = 0;
    scan_triangles(g, [&](Vertex, Vertex, Vertex) { ++count; });
    return count;
}

TriangleSystem crossing_triangles(const SidedGraph& k) { return build_system(k.graph, true, k.x_count); }

}  // namespace tuza
