#pragma once
// Dense simple undirected graphs and the constructions built from them:
// lexicographic product, the double K_{H,H}, clique blowups and their random
// subgraphs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tuza {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Largest vertex count any constructor will produce.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

/// Simple undirected graph on vertices 0..n-1 stored as dense adjacency
/// bitset rows. Edge ids are lexicographic over (min endpoint, max endpoint).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return n_; }
    std::size_t size() const { return edge_count_; }
    std::size_t words() const { return words_; }

    bool has_edge(Vertex u, Vertex v) const {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    /// Adds uv; no-op when already present. Throws on loops / out of range.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    /// Removes every edge at v.
    void isolate(Vertex v);

    std::size_t degree(Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::vector<Vertex> neighbors(Vertex v) const;
    /// All edges (u < v) in edge-id order.
    std::vector<Edge> edges() const;

    /// Calls fn(u, v) for every edge u < v in edge-id order.
    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (Vertex u = 0; u < n_; ++u) {
            const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(u) * words_;
            const std::size_t first = (u + 1) >> 6;
            for (std::size_t w = first; w < words_; ++w) {
                std::uint64_t bits = r[w];
                if (w == first) bits &= ~std::uint64_t{0} << ((u + 1) & 63);
                while (bits) {
                    const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
                    fn(u, v);
                    bits &= bits - 1;
                }
            }
        }
    }

    bool is_regular() const;
    /// Number of connected components.
    std::size_t components() const;
    bool is_bipartite() const;
    /// Largest BFS distance; nullopt when disconnected.
    std::optional<std::size_t> diameter() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Maps edges to their lexicographic ids and back.
class EdgeIndex {
public:
    EdgeIndex() = default;
    explicit EdgeIndex(const Graph& g);

    std::size_t size() const { return edges_.size(); }
    const Edge& operator[](EdgeId id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// Id of uv (either orientation); nullopt when uv is not an edge.
    std::optional<EdgeId> find(Vertex u, Vertex v) const;
    EdgeId id(Vertex u, Vertex v) const;

private:
    std::vector<Edge> edges_;
};

enum class Side : std::uint8_t { X, Y };
enum class EdgeType : std::uint8_t { internal, external, vertex };

char edge_type_code(EdgeType type);

struct Provenance {
    std::string h_name;
    std::size_t a = 1;
    double p = 1.0;
    double q = 1.0;
    std::uint64_t seed = 0;
    bool sampled = false;
};

struct TypeCensus {
    std::size_t internal = 0;
    std::size_t external = 0;
    std::size_t vertex = 0;
    friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

/// A graph with an X/Y side split where X is the id prefix [0, x_count), and
/// optionally a block structure of consecutive ids of size block_size.
struct SidedGraph {
    Graph graph;
    std::size_t x_count = 0;
    std::optional<std::size_t> block_size;
    std::optional<Provenance> origin;

    Side side(Vertex v) const { return v < x_count ? Side::X : Side::Y; }
    std::optional<Vertex> block_of(Vertex v) const {
        if (!block_size) return std::nullopt;
        return static_cast<Vertex>(v / *block_size);
    }
    std::size_t block_count() const { return block_size ? graph.order() / *block_size : graph.order(); }
    EdgeType edge_type(Vertex u, Vertex v) const;
    TypeCensus census() const;
};

Graph lex_product(const Graph& g1, const Graph& g2);
/// K_{H,H}: X = ids 0..t-1, Y = t..2t-1.
SidedGraph double_of(const Graph& h);
SidedGraph blowup(const SidedGraph& k, std::size_t a);
/// Keeps internal edges with probability p, external with probability q and
/// every vertex edge. Each edge draws from its own stream keyed by (seed, edge id).
SidedGraph random_subgraph(const SidedGraph& k_blow, double p, double q, std::uint64_t seed);

struct TriangleSystem {
    std::vector<std::array<Vertex, 3>> triangles;  // sorted triples, ascending
    EdgeIndex edges;
    std::vector<std::array<EdgeId, 3>> triangle_edges;  // ids of (ab, ac, bc)
    std::vector<std::vector<std::uint32_t>> edge_to_triangles;

    std::size_t size() const { return triangles.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

TriangleSystem enumerate_triangles(const Graph& g);
std::size_t count_triangles(const Graph& g);
/// Triangles meeting both sides (equivalently, containing an external edge).
TriangleSystem crossing_triangles(const SidedGraph& k);

}  // namespace tuza
