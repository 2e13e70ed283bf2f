#include <gtest/gtest.h>

#include <random>

#include "test_graphs.hpp"
#include "tuza/f2.hpp"

namespace tuza {
namespace {

using testing::gnp;
using testing::petersen_by_hand;

// Plain dense elimination, independent of F2Basis.
std::size_t rank_oracle(std::vector<std::vector<bool>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] != rows[rank][j];
        ++rank;
    }
    return rank;
}

std::vector<bool> to_bools(const EdgeVector& v) {
    std::vector<bool> out(v.length());
    for (std::size_t i = 0; i < v.length(); ++i) out[i] = v.get(i);
    return out;
}

TEST(EdgeVector, HexLayoutAndRoundTrip) {
    EdgeVector v(6);
    v.set(0);
    v.set(5);
    EXPECT_EQ(v.to_hex(), "12");
    EXPECT_EQ(EdgeVector::from_hex("12", 6), v);
    EXPECT_THROW(EdgeVector::from_hex("1f", 6), std::invalid_argument);
    EXPECT_THROW(EdgeVector::from_hex("1", 6), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (std::size_t len : {1u, 63u, 64u, 65u, 200u}) {
        EdgeVector r(len);
        for (std::size_t i = 0; i < len; ++i) r.set(i, rng() & 1u);
        EXPECT_EQ(EdgeVector::from_hex(r.to_hex(), len), r);
    }
}

TEST(F2Basis, ReducedEchelonInvariant) {
    std::mt19937_64 rng(9);
    F2Basis b(100);
    std::vector<std::vector<bool>> inserted;
    for (int i = 0; i < 60; ++i) {
        EdgeVector v(100);
        for (std::size_t j = 0; j < 100; ++j) v.set(j, (rng() % 5) == 0);
        b.insert(v);
        inserted.push_back(to_bools(v));
        for (std::size_t r = 0; r < b.dim(); ++r) {
            EXPECT_EQ(b.rows()[r].lowest(), b.pivots()[r]);
            for (std::size_t s = 0; s < b.dim(); ++s)
                if (s != r) EXPECT_FALSE(b.rows()[s].get(b.pivots()[r]));
        }
    }
    EXPECT_EQ(b.dim(), rank_oracle(inserted));
}

TEST(CycleSpace, DimensionFormulaAndOrthogonalityToCuts) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gnp(2 + seed % 20, 0.1 + 0.02 * static_cast<double>(seed % 25), seed);
        const F2Basis cyc = cycle_space_basis(g);
        const F2Basis cut = cut_space_basis(g);
        EXPECT_EQ(cyc.dim(), g.size() - g.order() + g.components());
        EXPECT_EQ(cyc.dim() + cut.dim(), g.size());
        for (const auto& c : cyc.rows()) EXPECT_TRUE(is_orthogonal(c, cut));
    }
}

TEST(CycleSpace, Examples) {
    EXPECT_EQ(cycle_space_basis(Graph::path(6)).dim(), 0u);
    const F2Basis c5 = cycle_space_basis(Graph::cycle(5));
    ASSERT_EQ(c5.dim(), 1u);
    EXPECT_EQ(c5.rows()[0].popcount(), 5u);
    const Graph p = petersen_by_hand();
    EXPECT_EQ(cycle_space_basis(p).dim(), 6u);
    // Rank oracle: |E| minus the GF(2) rank of the incidence matrix.
    std::vector<std::vector<bool>> incidence(p.order(), std::vector<bool>(p.size()));
    const auto edges = p.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) incidence[edges[e].first][e] = incidence[edges[e].second][e] = true;
    EXPECT_EQ(p.size() - rank_oracle(incidence), 6u);
}

TEST(InducedCycles, K4) {
    const InducedCycles r = induced_cycles_generate(Graph::complete(4));
    EXPECT_EQ(r.induced_count, 4u);  // chordless only: the four triangles
    EXPECT_TRUE(r.generates);
    EXPECT_EQ(r.spanning.size(), 3u);
}

TEST(InducedCycles, ChordalGraphsSpannedByTriangles) {
    for (std::size_t n : {4u, 5u}) {
        const InducedCycles r = induced_cycles_generate(Graph::complete(n));
        EXPECT_EQ(r.induced_count, n * (n - 1) * (n - 2) / 6);
        for (const auto& c : r.spanning) EXPECT_EQ(c.size(), 3u);
        EXPECT_TRUE(r.generates);
    }
}

TEST(InducedCycles, CycleC6) {
    const InducedCycles r = induced_cycles_generate(Graph::cycle(6));
    EXPECT_EQ(r.induced_count, 1u);
    EXPECT_TRUE(r.generates);
}

TEST(InducedCycles, AlwaysGenerateUpToTwelveVertices) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = gnp(3 + seed % 10, 0.15 + 0.05 * static_cast<double>(seed % 14), seed + 1000);
        EXPECT_TRUE(induced_cycles_generate(g).generates) << seed;
    }
    EXPECT_THROW(induced_cycles_generate(Graph::cycle(20)), std::length_error);
}

TEST(ShortCycles, Examples) {
    EXPECT_TRUE(short_cycles_generate(petersen_by_hand(), 5));
    EXPECT_FALSE(short_cycles_generate(petersen_by_hand(), 4));
    EXPECT_FALSE(short_cycles_generate(Graph::cycle(7), 3));
    EXPECT_TRUE(short_cycles_generate(Graph::cycle(7), 7));
    EXPECT_TRUE(short_cycles_generate(testing::complete_bipartite(3, 4), 5));
    EXPECT_THROW(short_cycles_generate(Graph::cycle(4), 2), std::invalid_argument);
}

TEST(ShortCycles, DiameterBoundAlwaysSuffices) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gnp(5 + seed % 12, 0.25 + 0.01 * static_cast<double>(seed), seed + 77);
        const auto diam = g.diameter();
        if (!diam) continue;
        EXPECT_TRUE(short_cycles_generate(g, 2 * *diam + 1)) << seed;
    }
}

TEST(ExternalTriangles, EmptyWhenNoExternalTriangles) {
    const SidedGraph k = double_of(Graph(3));
    EdgeVector all(k.graph.size());
    for (std::size_t e = 0; e < all.length(); ++e) all.set(e);
    EXPECT_EQ(external_triangle_space(k, all).dim(), 0u);
}

TEST(ExternalTriangles, DoubleK2MatchesRankOracle) {
    const SidedGraph k = double_of(Graph::complete(2));
    EdgeVector all(k.graph.size());
    for (std::size_t e = 0; e < all.length(); ++e) all.set(e);
    const F2Basis basis = external_triangle_space(k, all);
    const TriangleSystem ts = crossing_triangles(k);
    std::vector<std::vector<bool>> rows;
    for (const auto& te : ts.triangle_edges) {
        std::vector<bool> r(all.length());
        for (EdgeId e : te) r[e] = true;
        rows.push_back(r);
    }
    EXPECT_EQ(basis.dim(), rank_oracle(rows));
    EXPECT_EQ(basis.dim(), 3u);
    // Each triangle has odd intersection with itself.
    EdgeVector first(all.length());
    for (EdgeId e : ts.triangle_edges[0]) first.set(e);
    EXPECT_FALSE(is_orthogonal(first, basis));
    EXPECT_TRUE(is_orthogonal(EdgeVector(all.length()), basis));
}

TEST(ExternalTriangles, DroppingEdgesOnlyShrinks) {
    const SidedGraph k = double_of(Graph::cycle(5));
    const EdgeIndex idx(k.graph);
    EdgeVector all(idx.size());
    for (std::size_t e = 0; e < all.length(); ++e) all.set(e);
    EdgeVector fewer = all;
    for (Vertex y = 5; y < 10; ++y) fewer.set(idx.id(0, y), false);
    const F2Basis big = external_triangle_space(k, all);
    const F2Basis small = external_triangle_space(k, fewer);
    EXPECT_LE(small.dim(), big.dim());
    for (const auto& r : small.rows()) EXPECT_TRUE(big.contains(r));
}

TEST(ExternalTriangles, LengthMismatchThrows) {
    const SidedGraph k = double_of(Graph::complete(2));
    EXPECT_THROW(is_orthogonal(EdgeVector(3), external_triangle_space(k, EdgeVector(k.graph.size()))), std::invalid_argument);
}

EdgeVector full(std::size_t m) {
    EdgeVector v(m);
    for (std::size_t e = 0; e < m; ++e) v.set(e);
    return v;
}

TEST(DecomposeGamma, RecoversPlantedCut) {
    std::mt19937_64 rng(21);
    for (const Graph& h : {Graph::cycle(5), petersen_by_hand(), Graph::cycle(15)}) {
        const SidedGraph k = double_of(h);
        const EdgeIndex idx(k.graph);
        std::vector<bool> in_a(k.graph.order());
        for (std::size_t v = 0; v < in_a.size(); ++v) in_a[v] = rng() & 1u;
        const EdgeVector g = full(idx.size());
        const EdgeVector gamma = cut_indicator(idx, in_a);
        const auto d = decompose_gamma(k, gamma, g);
        ASSERT_TRUE(d.has_value());
        EXPECT_TRUE(d->z.is_zero());
        EXPECT_TRUE(d->excluded.empty());
        std::vector<bool> got(k.graph.order());
        for (Vertex v : d->a) got[v] = true;
        EXPECT_EQ(cut_indicator(idx, got), gamma);
        EXPECT_EQ(d->exact, h.order() <= 12);
    }
}

TEST(DecomposeGamma, SingleFlippedExternalEdgeIsZ) {
    const SidedGraph k = double_of(Graph::cycle(5));
    const EdgeIndex idx(k.graph);
    std::vector<bool> in_a{true, false, true, true, false, false, true, false, false, true};
    EdgeVector gamma = cut_indicator(idx, in_a);
    const EdgeId flipped = idx.id(1, 7);
    gamma.flip(flipped);
    const auto d = decompose_gamma(k, gamma, full(idx.size()));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->z.support(), std::vector<std::size_t>{flipped});
    EXPECT_EQ(d->z_max_degree, 1u);
}

TEST(DecomposeGamma, OddInternalCycleFails) {
    const SidedGraph k = double_of(Graph::cycle(5));
    const EdgeIndex idx(k.graph);
    EdgeVector gamma(idx.size());
    for (Vertex v = 0; v < 5; ++v) gamma.set(idx.id(v, (v + 1) % 5));
    EXPECT_FALSE(decompose_gamma(k, gamma, full(idx.size())).has_value());
    // Excluding one vertex of the odd cycle repairs it.
    DecomposeOptions opts;
    opts.max_excluded = 1;
    const auto d = decompose_gamma(k, gamma, full(idx.size()), opts);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->excluded.size(), 1u);
    EXPECT_LT(d->excluded[0], 5u);
}

TEST(DecomposeGamma, ExhaustiveScanAgreesOnSmallInstances) {
    // Brute force over all 2^(2t) bipartitions for t = 3.
    std::mt19937_64 rng(4);
    const SidedGraph k = double_of(Graph::path(3));
    const EdgeIndex idx(k.graph);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeVector g(idx.size()), gamma(idx.size());
        for (std::size_t e = 0; e < idx.size(); ++e) {
            if (rng() % 4 == 0) continue;
            g.set(e);
            if (rng() & 1u) gamma.set(e);
        }
        std::optional<std::size_t> best;
        for (unsigned mask = 0; mask < 64; ++mask) {
            std::vector<bool> in_a(6);
            for (std::size_t v = 0; v < 6; ++v) in_a[v] = (mask >> v) & 1u;
            EdgeVector z = cut_indicator(idx, in_a);
            z &= g;
            z ^= gamma;
            bool ok = true;
            for (std::size_t e : z.support()) ok = ok && k.side(idx[static_cast<EdgeId>(e)].first) != k.side(idx[static_cast<EdgeId>(e)].second);
            if (ok && (!best || z.popcount() < *best)) best = z.popcount();
        }
        const auto d = decompose_gamma(k, gamma, g);
        ASSERT_EQ(d.has_value(), best.has_value()) << trial;
        if (d) EXPECT_EQ(d->z.popcount(), *best) << trial;
    }
}

TEST(DecomposeGamma, GammaOutsideGThrows) {
    const SidedGraph k = double_of(Graph::complete(2));
    EdgeVector gamma(k.graph.size());
    gamma.set(0);
    EXPECT_THROW(decompose_gamma(k, gamma, EdgeVector(k.graph.size())), std::invalid_argument);
}

}  // namespace
}  // namespace tuza
