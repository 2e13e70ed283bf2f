#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "test_graphs.hpp"
#include "tuza/duality.hpp"
#include "tuza/extremal.hpp"

namespace tuza {
namespace {

bool crossing_free_by_scan(const Graph& g, std::size_t n) {
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            for (Vertex c = b + 1; c < g.order(); ++c) {
                const bool mixed = !((a < n) == (b < n) && (b < n) == (c < n));
                if (mixed && g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) return false;
            }
    return true;
}

// Every edge subset of K_{2n}.
std::size_t mantel_by_enumeration(std::size_t n) {
    const std::vector<Edge> all = Graph::complete(2 * n).edges();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        Graph g(2 * n);
        for (std::size_t e = 0; e < all.size(); ++e)
            if (mask >> e & 1) g.add_edge(all[e].first, all[e].second);
        if (crossing_free_by_scan(g, n)) best = size;
    }
    return best;
}

TEST(CrossingMantel, SmallValues) {
    EXPECT_EQ(max_crossing_triangle_free(1).size, 1u);
    for (std::size_t n = 2; n <= 3; ++n) {
        const MantelResult r = max_crossing_triangle_free(n);
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.size, mantel_by_enumeration(n)) << n;
        EXPECT_EQ(r.size, n * n);
        EXPECT_TRUE(crossing_free_by_scan(r.witness.graph, n));
        EXPECT_EQ(r.witness.graph.size(), r.size);
    }
}

TEST(CrossingMantel, WitnessForTwo) {
    // {x1x2, y1y2, x1y1, x2y2} is crossing-triangle-free with 4 edges.
    const std::vector<Edge> edges = {{0, 1}, {2, 3}, {0, 2}, {1, 3}};
    EXPECT_TRUE(crossing_free_by_scan(Graph::from_edges(4, edges), 2));
}

TEST(CrossingMantel, ExactAgreesWithCoverSolver) {
    // max F = |E(K_2n)| - tau(crossing triangles).
    for (std::size_t n = 1; n <= 5; ++n) {
        SidedGraph host;
        host.graph = Graph::complete(2 * n);
        host.x_count = n;
        const CoverResult cover = tau3_exact(crossing_triangles(host));
        const MantelResult r = max_crossing_triangle_free(n);
        EXPECT_EQ(r.size, host.graph.size() - static_cast<std::size_t>(std::lround(cover.value))) << n;
        EXPECT_LE(r.size, n * n);
        EXPECT_TRUE(crossing_free_by_scan(r.witness.graph, n));
    }
}

TEST(CrossingMantel, ConstructionRegime) {
    for (std::size_t n = 6; n <= 20; ++n) {
        const MantelResult r = max_crossing_triangle_free(n);
        EXPECT_FALSE(r.exact);
        EXPECT_EQ(r.size, n * n);
        EXPECT_EQ(crossing_triangles(r.witness).size(), 0u);
    }
    EXPECT_THROW(max_crossing_triangle_free(21), InstanceTooLarge);
    MantelOptions small;
    small.max_nodes = 1;
    EXPECT_THROW(max_crossing_triangle_free(5, small), InstanceTooLarge);
}

TEST(CrossingMantel, HeuristicIsFeasible) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const SidedGraph f = switching_heuristic(n, seed);
            EXPECT_TRUE(crossing_free_by_scan(f.graph, n));
            EXPECT_LE(f.graph.size(), n * n);
        }
}

std::vector<std::size_t> random_composition(std::size_t n, std::size_t parts, std::mt19937_64& rng) {
    std::vector<std::size_t> out(parts, 0);
    std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
    for (std::size_t i = 0; i < n; ++i) ++out[pick(rng)];
    return out;
}

TEST(Multipartite, FormulaMatchesDirectCount) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        const std::size_t rx = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t ry = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto x = random_composition(n, rx, rng), y = random_composition(n, ry, rng);
        const SidedGraph f = multipartite_construction(x, y);
        std::size_t direct = 0;
        f.graph.for_each_edge([&](Vertex, Vertex) { ++direct; });
        EXPECT_EQ(multipartite_size(x, y), direct);
        EXPECT_DOUBLE_EQ(multipartite_size_formula(x, y), static_cast<double>(direct));
        EXPECT_EQ(crossing_triangles(f).size(), 0u);
    }
    const std::vector<std::size_t> a = {2}, b = {3};
    EXPECT_THROW(multipartite_size_formula(a, b), std::invalid_argument);
}

TEST(PairDensity, TrivialCases) {
    const Graph empty(6);
    const std::vector<Vertex> u = {0, 1, 2}, w = {3, 4, 5};
    EXPECT_EQ(pair_density(empty, u, w, 1.0).density, 0.0);
    EXPECT_EQ(pair_density(testing::complete_bipartite(3, 3), u, w, 1.0).density, 1.0);
    const std::vector<Vertex> overlap = {2, 3};
    EXPECT_THROW(pair_density(empty, u, overlap, 1.0), std::invalid_argument);
    EXPECT_THROW(pair_density(empty, u, {}, 1.0), std::invalid_argument);
    EXPECT_THROW(pair_density(empty, u, w, 0.0), std::invalid_argument);
}

TEST(PairDensity, PetersenSplit) {
    const Graph g = testing::petersen_by_hand();
    const std::vector<Vertex> outer = {0, 1, 2, 3, 4}, inner = {5, 6, 7, 8, 9};
    // The five spokes.
    EXPECT_NEAR(pair_density(g, outer, inner, 0.3).density, 5.0 / (0.3 * 25.0), 1e-15);
    const std::vector<Vertex> u = {0, 2, 5}, w = {1, 7, 9};
    std::size_t hand = 0;
    for (Vertex x : u)
        for (Vertex y : w) hand += g.has_edge(x, y);
    EXPECT_NEAR(pair_density(g, u, w, 0.3).density, static_cast<double>(hand) / (0.3 * 9.0), 1e-15);
}

// Regularity by looping over every U' and W'.
double worst_deviation_brute(const Graph& g, const std::vector<Vertex>& u, const std::vector<Vertex>& w, double s,
                             double eps) {
    const auto density = [&](std::uint32_t mu, std::uint32_t mw) {
        std::size_t e = 0, nu = 0, nw = 0;
        for (std::size_t i = 0; i < u.size(); ++i) nu += mu >> i & 1;
        for (std::size_t j = 0; j < w.size(); ++j) nw += mw >> j & 1;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j)
                if ((mu >> i & 1) && (mw >> j & 1)) e += g.has_edge(u[i], w[j]);
        return std::tuple{static_cast<double>(e) / (s * static_cast<double>(nu * nw)), nu, nw};
    };
    const double d = std::get<0>(density((1u << u.size()) - 1, (1u << w.size()) - 1));
    double worst = 0.0;
    for (std::uint32_t mu = 1; mu < (1u << u.size()); ++mu)
        for (std::uint32_t mw = 1; mw < (1u << w.size()); ++mw) {
            const auto [dd, nu, nw] = density(mu, mw);
            if (static_cast<double>(nu) < eps * static_cast<double>(u.size()) - 1e-12) continue;
            if (static_cast<double>(nw) < eps * static_cast<double>(w.size()) - 1e-12) continue;
            worst = std::max(worst, std::abs(dd - d));
        }
    return worst;
}

TEST(RegularPair, TrivialPairsAreRegular) {
    const std::vector<Vertex> u = {0, 1, 2, 3}, w = {4, 5, 6, 7};
    for (double eps : {0.01, 0.1, 0.4}) {
        const auto full = check_regular_pair(testing::complete_bipartite(4, 4), u, w, 1.0, eps);
        EXPECT_TRUE(full.regular);
        EXPECT_TRUE(full.certified);
        EXPECT_EQ(full.worst_deviation, 0.0);
        EXPECT_TRUE(check_regular_pair(Graph(8), u, w, 1.0, eps).regular);
    }
}

TEST(RegularPair, PlantedIrregularPair) {
    // First half of U complete to W, second half empty.
    Graph g(20);
    std::vector<Vertex> u, w;
    for (Vertex i = 0; i < 10; ++i) {
        u.push_back(i);
        w.push_back(10 + i);
    }
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = 10; j < 20; ++j) g.add_edge(i, j);
    const RegularPairStat st = check_regular_pair(g, u, w, 1.0, 0.1);
    EXPECT_DOUBLE_EQ(st.density, 0.5);
    EXPECT_FALSE(st.regular);
    ASSERT_TRUE(st.witness.has_value());
    EXPECT_NEAR(st.worst_deviation, 0.5, 1e-12);
    const auto& [wu, ww] = *st.witness;
    EXPECT_GE(static_cast<double>(wu.size()), 1.0);
    EXPECT_NEAR(std::abs(pair_density(g, wu, ww, 1.0).density - st.density), 0.5, 1e-12);

    PairCheckOptions sampled;
    sampled.mode = PairCheck::sampled;
    sampled.samples = 500;
    const RegularPairStat ss = check_regular_pair(g, u, w, 1.0, 0.1, sampled);
    EXPECT_FALSE(ss.certified);
    EXPECT_FALSE(ss.regular);
}

TEST(RegularPair, ExhaustiveMatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t a = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t b = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const double eps = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
        const double s = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
        const Graph g = testing::gnp(a + b, p, 100 + static_cast<std::uint64_t>(trial));
        std::vector<Vertex> u(a), w(b);
        std::iota(u.begin(), u.end(), 0);
        std::iota(w.begin(), w.end(), static_cast<Vertex>(a));
        const RegularPairStat st = check_regular_pair(g, u, w, s, eps);
        const double brute = worst_deviation_brute(g, u, w, s, eps);
        EXPECT_NEAR(st.worst_deviation, brute, 1e-12);
        EXPECT_EQ(st.regular, brute <= eps + 1e-12);
        if (st.witness) {
            const auto& [wu, ww] = *st.witness;
            EXPECT_GT(std::abs(pair_density(g, wu, ww, s).density - st.density), eps);
        }
    }
}

TEST(RegularPair, ExhaustiveCap) {
    const Graph g(30);
    std::vector<Vertex> u(15), w(15);
    std::iota(u.begin(), u.end(), 0);
    std::iota(w.begin(), w.end(), 15);
    EXPECT_THROW(check_regular_pair(g, u, w, 1.0, 0.1), InstanceTooLarge);
}

bool has_abb(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b, const std::vector<Vertex>& b2) {
    for (Vertex x : a)
        for (Vertex y : b)
            for (Vertex z : b2)
                if (g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z)) return true;
    return false;
}

Graph random_tripartite(std::size_t l, double p_ab, double p_ab2, double p_bb2, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g(3 * l);
    for (Vertex i = 0; i < l; ++i)
        for (Vertex j = 0; j < l; ++j) {
            if (unit(rng) < p_ab) g.add_edge(i, static_cast<Vertex>(l + j));
            if (unit(rng) < p_ab2) g.add_edge(i, static_cast<Vertex>(2 * l + j));
            if (unit(rng) < p_bb2) g.add_edge(static_cast<Vertex>(l + i), static_cast<Vertex>(2 * l + j));
        }
    return g;
}

std::vector<Vertex> range(std::size_t from, std::size_t len) {
    std::vector<Vertex> out(len);
    std::iota(out.begin(), out.end(), static_cast<Vertex>(from));
    return out;
}

TEST(CountingLemma, CompleteParts) {
    const std::size_t l = 5;
    const Graph g = random_tripartite(l, 1.0, 1.0, 1.0, 0);
    const auto a = range(0, l), b = range(l, l), b2 = range(2 * l, l);
    const CountingReport rep = counting_lemma_verify(g, a, b, b2, 1.0, 0.1);
    EXPECT_TRUE(rep.hypotheses_met);
    EXPECT_TRUE(rep.certified);
    ASSERT_TRUE(rep.triangle.has_value());
    const auto [x, y, z] = *rep.triangle;
    EXPECT_TRUE(g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z));
}

TEST(CountingLemma, EmptyBPairIsReported) {
    const std::size_t l = 5;
    const Graph g = random_tripartite(l, 1.0, 1.0, 0.0, 0);
    const CountingReport rep = counting_lemma_verify(g, range(0, l), range(l, l), range(2 * l, l), 1.0, 0.1);
    EXPECT_FALSE(rep.hypotheses_met);
    ASSERT_EQ(rep.unmet.size(), 1u);
    EXPECT_NE(rep.unmet[0].find("B,B'"), std::string::npos);
    EXPECT_FALSE(rep.triangle.has_value());
}

TEST(CountingLemma, RandomInstanceAtTwelve) {
    const std::size_t l = 12;
    const auto a = range(0, l), b = range(l, l), b2 = range(2 * l, l);
    int met = 0;
    for (std::uint64_t seed = 0; seed < 20 && met < 3; ++seed) {
        const Graph g = random_tripartite(l, 0.9, 0.9, 0.9, seed);
        const CountingReport rep = counting_lemma_verify(g, a, b, b2, 0.95, 0.4);
        if (!rep.hypotheses_met) continue;
        ++met;
        EXPECT_TRUE(rep.certified);
        ASSERT_TRUE(rep.triangle.has_value());
        EXPECT_TRUE(has_abb(g, a, b, b2));
    }
    EXPECT_GT(met, 0);
}

TEST(CountingLemma, NeverMetWithoutTriangle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t l = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const Graph g = random_tripartite(l, unit(rng), unit(rng), unit(rng) * 0.5, rng());
        const auto a = range(0, l), b = range(l, l), b2 = range(2 * l, l);
        const double eps = std::uniform_real_distribution<double>(0.05, 0.49)(rng);
        const CountingReport rep = counting_lemma_verify(g, a, b, b2, 0.5 + 0.5 * unit(rng), eps);
        EXPECT_EQ(rep.triangle.has_value(), has_abb(g, a, b, b2));
        if (rep.hypotheses_met) EXPECT_TRUE(rep.triangle.has_value());
    }
}

TEST(CountingLemma, RejectsBadParts) {
    const Graph g(9);
    EXPECT_THROW(counting_lemma_verify(g, range(0, 3), range(3, 3), range(5, 3), 1.0, 0.1), std::invalid_argument);
    EXPECT_THROW(counting_lemma_verify(g, range(0, 3), range(3, 3), range(6, 2), 1.0, 0.1), std::invalid_argument);
}

// P(X >= k) and P(X <= k) by direct summation of the pmf.
long double binom_pmf(std::size_t n, std::size_t k, long double p) {
    if (p == 0.0L) return k == 0 ? 1.0L : 0.0L;
    if (p == 1.0L) return k == n ? 1.0L : 0.0L;
    const long double logc = std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
                             std::lgamma(static_cast<long double>(n - k) + 1);
    return std::exp(logc + static_cast<long double>(k) * std::log(p) +
                    static_cast<long double>(n - k) * std::log1p(-p));
}

long double exact_upper(std::size_t n, double p, double x) {
    const double lo = static_cast<double>(n) * p + x;
    long double sum = 0.0L;
    for (std::size_t k = 0; k <= n; ++k)
        if (static_cast<double>(k) >= lo) sum += binom_pmf(n, k, p);
    return sum;
}

long double exact_lower(std::size_t n, double p, double x) {
    const double hi = static_cast<double>(n) * p - x;
    long double sum = 0.0L;
    for (std::size_t k = 0; k <= n; ++k)
        if (static_cast<double>(k) <= hi) sum += binom_pmf(n, k, p);
    return sum;
}

TEST(Chernoff, FormulaValues) {
    EXPECT_EQ(chernoff_tail(100, 0.3, 0.0, Tail::upper), 1.0);
    EXPECT_EQ(chernoff_tail(100, 0.3, 0.0, Tail::lower), 1.0);
    EXPECT_DOUBLE_EQ(chernoff_tail(10000, 0.5, 500.0, Tail::lower), std::exp(-25.0));
    EXPECT_DOUBLE_EQ(chernoff_tail(10000, 0.5, 500.0, Tail::upper), std::exp(-250000.0 / (2.0 * (5000.0 + 500.0 / 3.0))));
    EXPECT_THROW(chernoff_tail(10, 0.5, -1.0, Tail::upper), std::invalid_argument);
}

TEST(Chernoff, DominatesExactTailsNear20) {
    for (double x = 0.0; x <= 20.0; x += 0.125) {
        EXPECT_GE(chernoff_tail(20, 0.3, x, Tail::upper), exact_upper(20, 0.3, x) * (1 - 1e-12L)) << x;
        EXPECT_GE(chernoff_tail(20, 0.3, x, Tail::lower), exact_lower(20, 0.3, x) * (1 - 1e-12L)) << x;
    }
}

TEST(Chernoff, DominatesOnFullGrid) {
    for (std::size_t n = 1; n <= 30; ++n)
        for (int pi = 1; pi <= 9; ++pi) {
            const double p = pi / 10.0;
            for (double x = 0.0; x <= static_cast<double>(n); x += 0.25) {
                EXPECT_GE(chernoff_tail(n, p, x, Tail::upper), exact_upper(n, p, x) * (1 - 1e-12L));
                EXPECT_GE(chernoff_tail(n, p, x, Tail::lower), exact_lower(n, p, x) * (1 - 1e-12L));
            }
        }
}

}  // namespace
}  // namespace tuza
