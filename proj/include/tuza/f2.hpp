#pragma once
// Edge-space linear algebra over GF(2): cycle and cut spaces, spans of
// induced and short cycles, external-triangle spaces and the Gamma/cut
// decomposition check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tuza/graph.hpp"

namespace tuza {

/// Bit vector indexed by edge id of some host graph.
class EdgeVector {
public:
    EdgeVector() = default;
    explicit EdgeVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    std::size_t length() const { return length_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const;
    bool is_zero() const;
    /// Lowest set index, or length() when zero.
    std::size_t lowest() const;
    std::vector<std::size_t> support() const;

    EdgeVector& operator^=(const EdgeVector& other);
    EdgeVector& operator&=(const EdgeVector& other);
    /// Inner product over GF(2).
    bool dot(const EdgeVector& other) const;
    /// True when every set bit of this is set in other.
    bool subset_of(const EdgeVector& other) const;

    /// Hex digit k holds edges 4k..4k+3, edge 4k in the low bit.
    std::string to_hex() const;
    static EdgeVector from_hex(std::string_view hex, std::size_t length);

    const std::vector<std::uint64_t>& words() const { return words_; }
    friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

EdgeVector operator^(EdgeVector a, const EdgeVector& b);

/// Indicator of an edge list (vertex pairs) in the id order of idx.
EdgeVector indicator(const EdgeIndex& idx, const std::vector<Edge>& edges);
/// Indicator of the closed walk v0 v1 ... v_{k-1} v0.
EdgeVector cycle_indicator(const EdgeIndex& idx, const std::vector<Vertex>& cycle);
/// Indicator of the cut between vertices with in_a set and the rest.
EdgeVector cut_indicator(const EdgeIndex& idx, const std::vector<bool>& in_a);

/// Reduced row-echelon basis; each row's pivot is its lowest set edge id.
class F2Basis {
public:
    F2Basis() = default;
    explicit F2Basis(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<EdgeVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Adds v to the span; returns false when it was already inside.
    bool insert(const EdgeVector& v);
    EdgeVector reduce(EdgeVector v) const;
    bool contains(const EdgeVector& v) const { return reduce(v).is_zero(); }
    /// Same span (both are reduced, so this is row equality).
    bool same_span(const F2Basis& other) const;

private:
    std::size_t length_ = 0;
    std::vector<EdgeVector> rows_;
    std::vector<std::size_t> pivots_;  // ascending
};

/// Fundamental cycles of a BFS spanning forest, row reduced.
F2Basis cycle_space_basis(const Graph& g);
/// Vertex stars, row reduced; the orthogonal complement of the cycle space.
F2Basis cut_space_basis(const Graph& g);

struct InducedCycles {
    bool generates = false;
    std::size_t induced_count = 0;
    std::vector<std::vector<Vertex>> spanning;  // independent subset spanning the found space
};

/// Enumerates chordless cycles (optionally only those of length <= length_cap)
/// and compares their span with the cycle space.
InducedCycles induced_cycles_generate(const Graph& g, std::size_t vertex_cap = 16,
                                      std::size_t count_cap = 1'000'000);

/// True iff cycles of length <= length_cap span the cycle space.
bool short_cycles_generate(const Graph& g, std::size_t length_cap, std::size_t count_cap = 1'000'000);

/// Span of the external triangles of k whose three edges lie in g_sub.
F2Basis external_triangle_space(const SidedGraph& k, const EdgeVector& g_sub);

bool is_orthogonal(const EdgeVector& v, const F2Basis& basis);

struct GammaDecomposition {
    std::vector<Vertex> a, b, excluded;  // A, B, S
    EdgeVector z;                        // over E(k), only edges avoiding S
    std::size_t z_max_degree = 0;
    bool exact = false;                  // true when the flip search was exhaustive
};

struct DecomposeOptions {
    std::size_t exact_max_t = 12;
    std::size_t max_excluded = 0;  // largest S tried
};

/// Searches for S and a partition A, B of V(k) \ S with
/// Z = Gamma xor grad_G(A, B) (restricted to K - S) made of external edges only.
/// Among the partitions found, |Z| is minimised. nullopt means none was found.
std::optional<GammaDecomposition> decompose_gamma(const SidedGraph& k, const EdgeVector& gamma,
                                                  const EdgeVector& g_edges, const DecomposeOptions& opts = {});

}  // namespace tuza
