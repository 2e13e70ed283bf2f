#pragma once
// Finite checks of the extremal tools: crossing-triangle Mantel, scaled pair
// densities and regular pairs, the counting lemma and the Chernoff tail.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuza/graph.hpp"

namespace tuza {

struct MantelOptions {
    std::size_t exact_max = 5;         // branch and bound up to this side size
    std::size_t construction_max = 20;
    std::size_t max_nodes = 200'000'000;
};

struct MantelResult {
    std::size_t n = 0;
    std::size_t size = 0;
    bool exact = false;            // size is the true maximum
    SidedGraph witness;            // crossing-triangle-free, X = ids < n
    std::size_t nodes = 0;
    std::size_t seed_size = 0;     // incumbent found by neighborhood switching
};

/// Largest subgraph of K_{2n} with no triangle meeting both halves. Exact for
/// n <= exact_max; otherwise the matched multipartite construction (size n^2).
/// Throws InstanceTooLarge past construction_max or the node cap, and
/// std::logic_error if an exact value exceeds n^2.
MantelResult max_crossing_triangle_free(std::size_t n, const MantelOptions& opts = {});

/// F[X] complete multipartite with parts x, F[Y] with parts y, and X_i joined
/// to Y_i. Profiles are padded with zeros to equal length.
SidedGraph multipartite_construction(std::span<const std::size_t> x, std::span<const std::size_t> y);
/// Edge count of the construction by the closed form
/// sum_{i<j} (x_i x_j + y_i y_j) + sum_i x_i y_i.
std::size_t multipartite_size(std::span<const std::size_t> x, std::span<const std::size_t> y);
/// n^2 - (1/2) sum (x_i - y_i)^2; requires sum x = sum y = n.
double multipartite_size_formula(std::span<const std::size_t> x, std::span<const std::size_t> y);

/// Greedy maximal crossing-triangle-free subgraph improved by neighborhood
/// switching between nonadjacent same-side vertices.
SidedGraph switching_heuristic(std::size_t n, std::uint64_t seed);

struct RegularPairStat {
    double density = 0.0;
    double epsilon = 0.0;
    bool regular = true;
    bool certified = false;  // every qualifying pair was examined
    double worst_deviation = 0.0;
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
    std::size_t pairs_checked = 0;
};

/// d_{s,H}(U,W) = e(U,W) / (s |U| |W|). Throws std::invalid_argument on an
/// overlap, an empty part, an out-of-range vertex or s outside (0,1].
RegularPairStat pair_density(const Graph& h, std::span<const Vertex> u, std::span<const Vertex> w, double s);

enum class PairCheck { exhaustive, sampled };

struct PairCheckOptions {
    PairCheck mode = PairCheck::exhaustive;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::size_t exhaustive_max = 14;
};

/// Is (U,W) (s;H,eps)-regular? Exhaustive mode enumerates every U' with
/// |U'| >= eps|U| and, per size of W', the densest and sparsest W'. Sampled
/// mode only looks at random qualifying pairs and never certifies. Throws
/// InstanceTooLarge when a part exceeds exhaustive_max in exhaustive mode.
RegularPairStat check_regular_pair(const Graph& h, std::span<const Vertex> u, std::span<const Vertex> w, double s,
                                   double eps, const PairCheckOptions& opts = {});

struct CountingReport {
    RegularPairStat ab, ab2, bb2;
    bool hypotheses_met = false;
    bool certified = false;
    std::vector<std::string> unmet;
    std::optional<std::array<Vertex, 3>> triangle;  // (a, b, b')
};

/// Checks the counting-lemma hypotheses on A,B,B' (pairwise disjoint, equal
/// size) and searches for a triangle abb'. Parts above 14 vertices fall back
/// to sampled regularity checks, which never certify. Throws std::logic_error
/// if the hypotheses are certified and no triangle exists.
CountingReport counting_lemma_verify(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> b,
                                     std::span<const Vertex> b2, double s, double eps);

enum class Tail { upper, lower };

/// Bound on P(X >= np + x) or P(X <= np - x) for X ~ Bin(n, p).
double chernoff_tail(std::size_t n, double p, double x, Tail side);

}  // namespace tuza
