#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "test_graphs.hpp"
#include "tuza/duality.hpp"
#include "tuza/lp.hpp"

namespace tuza {
namespace {

using testing::gnp;

struct Fraction {
    std::int64_t num = 0, den = 1;
    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) num = -num, den = -den;
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) num /= g, den /= g;
    }
    friend Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
    friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
    friend bool operator<(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }
    bool zero() const { return num == 0; }
};

// Max of sum(x) over the vertices of {x >= 0, A x <= 1}: every choice of
// tight rows S and zero variables Z with |S| + |Z| = #vars, solved exactly.
Fraction lp_vertex_enumeration(const TriangleSystem& ts) {
    const std::size_t nv = ts.size(), ne = ts.edge_count();
    Fraction best(0);
    for (std::uint64_t rows = 0; rows < (std::uint64_t{1} << ne); ++rows) {
        const std::size_t s = static_cast<std::size_t>(__builtin_popcountll(rows));
        if (s > nv) continue;
        std::vector<std::size_t> row_ids;
        for (std::size_t e = 0; e < ne; ++e)
            if ((rows >> e) & 1u) row_ids.push_back(e);
        // Every subset of s free variables (the rest are zero).
        std::vector<std::size_t> free(s);
        std::iota(free.begin(), free.end(), 0);
        for (;;) {
            std::vector<std::vector<Fraction>> m(s, std::vector<Fraction>(s + 1));
            for (std::size_t i = 0; i < s; ++i) {
                for (std::size_t j = 0; j < s; ++j) {
                    const auto& te = ts.triangle_edges[free[j]];
                    m[i][j] = Fraction(te[0] == row_ids[i] || te[1] == row_ids[i] || te[2] == row_ids[i]);
                }
                m[i][s] = Fraction(1);
            }
            bool singular = false;
            for (std::size_t c = 0; c < s && !singular; ++c) {
                std::size_t p = c;
                while (p < s && m[p][c].zero()) ++p;
                if (p == s) {
                    singular = true;
                    break;
                }
                std::swap(m[p], m[c]);
                for (std::size_t r = 0; r < s; ++r) {
                    if (r == c || m[r][c].zero()) continue;
                    const Fraction f = m[r][c] / m[c][c];
                    for (std::size_t j = c; j <= s; ++j) m[r][j] = m[r][j] - f * m[c][j];
                }
            }
            if (!singular) {
                std::vector<Fraction> x(nv, Fraction(0));
                bool ok = true;
                for (std::size_t j = 0; j < s; ++j) {
                    x[free[j]] = m[j][s] / m[j][j];
                    ok = ok && !(x[free[j]] < Fraction(0));
                }
                for (std::size_t e = 0; e < ne && ok; ++e) {
                    Fraction load(0);
                    for (std::uint32_t t : ts.edge_to_triangles[e]) load = load + x[t];
                    ok = !(Fraction(1) < load);
                }
                if (ok) {
                    Fraction total(0);
                    for (const auto& v : x) total = total + v;
                    if (best < total) best = total;
                }
            }
            std::size_t i = s;
            while (i > 0 && free[i - 1] == nv - s + i - 1) --i;
            if (i == 0) break;
            ++free[i - 1];
            for (std::size_t j = i; j < s; ++j) free[j] = free[j - 1] + 1;
        }
    }
    return best;
}

std::size_t nu3_oracle(const TriangleSystem& ts) {
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts.size()); ++mask) {
        std::set<EdgeId> used;
        bool ok = true;
        for (std::size_t t = 0; t < ts.size() && ok; ++t)
            if ((mask >> t) & 1u)
                for (EdgeId e : ts.triangle_edges[t]) ok = ok && used.insert(e).second;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

// Each triangle picks one of its edges; the cover is the set of picks.
std::size_t tau3_oracle(const TriangleSystem& ts) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < ts.size(); ++i) combos *= 3;
    std::size_t best = ts.size();
    for (std::size_t code = 0; code < combos; ++code) {
        std::set<EdgeId> picks;
        std::size_t c = code;
        for (std::size_t t = 0; t < ts.size(); ++t, c /= 3) picks.insert(ts.triangle_edges[t][c % 3]);
        best = std::min(best, picks.size());
    }
    return best;
}

void expect_valid_packing(const TriangleSystem& ts, const PackingResult& r) {
    std::set<EdgeId> used;
    for (const auto& [t, w] : r.support) {
        EXPECT_EQ(w, 1.0);
        for (EdgeId e : ts.triangle_edges[t]) EXPECT_TRUE(used.insert(e).second);
    }
    EXPECT_EQ(static_cast<double>(r.support.size()), r.value);
}

void expect_valid_cover(const TriangleSystem& ts, const CoverResult& r) {
    std::set<EdgeId> chosen;
    for (const auto& [e, w] : r.support) chosen.insert(e);
    for (const auto& te : ts.triangle_edges) EXPECT_TRUE(chosen.count(te[0]) || chosen.count(te[1]) || chosen.count(te[2]));
    EXPECT_EQ(static_cast<double>(chosen.size()), r.value);
}

TEST(PackingLp, SolvesTinyInstanceAndDual) {
    // Two columns sharing row 1.
    PackingLp lp;
    lp.rows = 3;
    lp.columns = {{0, 1}, {1, 2}};
    const LpSolution s = solve_packing_lp(lp);
    EXPECT_NEAR(s.primal_value, 1.0, 1e-12);
    EXPECT_NEAR(s.dual_value, 1.0, 1e-12);
    EXPECT_LE(s.max_primal_violation, 1e-12);
    EXPECT_LE(s.max_dual_violation, 1e-12);
}

TEST(PackingLp, IterationCapThrows) {
    PackingLp lp;
    lp.rows = 3;
    lp.columns = {{0}, {1}, {2}};
    LpOptions opts;
    opts.iteration_cap = 1;
    EXPECT_THROW(solve_packing_lp(lp, opts), std::runtime_error);
}

TEST(Fractional, K4IsTwo) {
    const TriangleSystem ts = enumerate_triangles(Graph::complete(4));
    const FractionalPair f = lp_fractional(ts);
    EXPECT_NEAR(f.packing.value, 2.0, 1e-9);
    EXPECT_NEAR(f.cover.value, 2.0, 1e-9);
    EXPECT_LE(f.gap, 1e-7);
    const Fraction oracle = lp_vertex_enumeration(ts);
    EXPECT_EQ(oracle.num, 2);
    EXPECT_EQ(oracle.den, 1);
}

TEST(Fractional, K5AgainstVertexEnumeration) {
    const TriangleSystem ts = enumerate_triangles(Graph::complete(5));
    const Fraction oracle = lp_vertex_enumeration(ts);
    EXPECT_EQ(oracle.num, 10);
    EXPECT_EQ(oracle.den, 3);
    const FractionalPair f = lp_fractional(ts);
    EXPECT_NEAR(f.packing.value, 10.0 / 3.0, 1e-9);
    EXPECT_NEAR(f.cover.value, 10.0 / 3.0, 1e-9);
}

TEST(Fractional, TriangleFreeIsZero) {
    const FractionalPair f = lp_fractional(enumerate_triangles(testing::petersen_by_hand()));
    EXPECT_EQ(f.packing.value, 0.0);
    EXPECT_EQ(f.cover.value, 0.0);
}

TEST(Fractional, CoverCertificateIsFeasible) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TriangleSystem ts = enumerate_triangles(gnp(12, 0.5, seed));
        const FractionalPair f = lp_fractional(ts);
        std::vector<double> y(ts.edge_count(), 0.0), load(ts.edge_count(), 0.0);
        for (const auto& [e, w] : f.cover.support) y[e] = w;
        for (const auto& [t, w] : f.packing.support)
            for (EdgeId e : ts.triangle_edges[t]) load[e] += w;
        for (const auto& te : ts.triangle_edges) EXPECT_GE(y[te[0]] + y[te[1]] + y[te[2]], 1.0 - 1e-9);
        for (double l : load) EXPECT_LE(l, 1.0 + 1e-9);
        EXPECT_LE(f.gap, 1e-7);
    }
}

TEST(Exact, CompleteGraphsK4K5) {
    const TriangleSystem k4 = enumerate_triangles(Graph::complete(4));
    const TriangleSystem k5 = enumerate_triangles(Graph::complete(5));
    EXPECT_EQ(nu3_oracle(k4), 1u);
    EXPECT_EQ(tau3_oracle(k4), 2u);
    EXPECT_EQ(nu3_oracle(k5), 2u);
    EXPECT_EQ(tau3_oracle(k5), 4u);
    EXPECT_EQ(nu3_exact(k4).value, 1.0);
    EXPECT_EQ(tau3_exact(k4).value, 2.0);
    EXPECT_EQ(nu3_exact(k5).value, 2.0);
    EXPECT_EQ(tau3_exact(k5).value, 4.0);
    expect_valid_packing(k5, nu3_exact(k5));
    expect_valid_cover(k5, tau3_exact(k5));
}

TEST(Exact, SingleTriangleAndTriangleFree) {
    const TriangleSystem one = enumerate_triangles(Graph::complete(3));
    EXPECT_EQ(nu3_exact(one).value, 1.0);
    EXPECT_EQ(tau3_exact(one).value, 1.0);
    const TriangleSystem none = enumerate_triangles(Graph::cycle(6));
    EXPECT_EQ(nu3_exact(none).value, 0.0);
    EXPECT_EQ(tau3_exact(none).value, 0.0);
    EXPECT_TRUE(tau3_exact(none).support.empty());
}

TEST(Exact, AgreeWithExhaustiveOracleUpToTwelveTriangles) {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 60 && seed < 5000; ++seed) {
        const Graph g = gnp(5 + seed % 6, 0.35 + 0.05 * static_cast<double>(seed % 5), seed + 500);
        const TriangleSystem ts = enumerate_triangles(g);
        if (ts.size() == 0 || ts.size() > 12) continue;
        ++checked;
        const PackingResult p = nu3_exact(ts);
        const CoverResult c = tau3_exact(ts);
        EXPECT_EQ(p.value, static_cast<double>(nu3_oracle(ts))) << seed;
        EXPECT_EQ(c.value, static_cast<double>(tau3_oracle(ts))) << seed;
        expect_valid_packing(ts, p);
        expect_valid_cover(ts, c);
    }
    EXPECT_EQ(checked, 60);
}

TEST(Exact, CapsAreExplicit) {
    SolverCaps caps;
    caps.max_triangles = 5;
    const TriangleSystem ts = enumerate_triangles(Graph::complete(5));
    EXPECT_THROW(nu3_exact(ts, caps), InstanceTooLarge);
    EXPECT_THROW(tau3_exact(ts, caps), InstanceTooLarge);
    EXPECT_THROW(lp_fractional(ts, caps), InstanceTooLarge);
}

TEST(TuzaReport, SharpAtK4AndK5) {
    for (std::size_t n : {4u, 5u}) {
        const TuzaReport r = tuza_report(Graph::complete(n));
        ASSERT_TRUE(r.ratio.has_value());
        EXPECT_EQ(*r.ratio, 2.0);
    }
    EXPECT_FALSE(tuza_report(testing::petersen_by_hand()).ratio.has_value());
}

TEST(TuzaReport, SandwichAndTrivialBoundOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 5 + seed % 14;
        const TuzaReport r = tuza_report(gnp(n, 0.2 + 0.0125 * static_cast<double>(seed), seed + 9000));
        EXPECT_LE(static_cast<double>(r.nu3), r.nu3_star + 1e-7);
        EXPECT_NEAR(r.nu3_star, r.tau3_star, 1e-7);
        EXPECT_LE(r.tau3_star, static_cast<double>(r.tau3) + 1e-7);
        if (r.ratio) EXPECT_LE(*r.ratio, 3.0);
    }
}

TEST(TuzaReport, RandomTwentyVertexGraphsRespectTrivialBound) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const TuzaReport r = tuza_report(gnp(20, 0.5, seed + 31));
        ASSERT_TRUE(r.ratio.has_value());
        EXPECT_LE(*r.ratio, 3.0);
    }
}

TEST(PaperCover, WeightFormulaAndFeasibility) {
    const SidedGraph ga = random_subgraph(blowup(double_of(testing::petersen_by_hand()), 3), 0.6, 0.7, 4);
    const PaperCover pc = paper_fractional_cover(ga, true);
    const TypeCensus c = ga.census();
    EXPECT_EQ(pc.vertex_edges, c.vertex);
    EXPECT_EQ(pc.external_edges, c.external);
    EXPECT_EQ(pc.cover.value, static_cast<double>(c.vertex) + 0.5 * static_cast<double>(c.external));
    EXPECT_TRUE(pc.full_scan);
    double total = 0.0;
    for (const auto& [e, w] : pc.cover.support) total += w;
    EXPECT_EQ(total, pc.cover.value);
}

TEST(PaperCover, UnitBlowupFullScan) {
    const SidedGraph ga = random_subgraph(blowup(double_of(Graph::cycle(5)), 1), 1.0, 1.0, 0);
    const PaperCover pc = paper_fractional_cover(ga);
    EXPECT_TRUE(pc.full_scan);
    EXPECT_EQ(pc.cover.value, 12.5);
    // Against the LP optimum the constructed cover is an upper bound.
    EXPECT_LE(lp_fractional(enumerate_triangles(ga.graph)).cover.value, pc.cover.value + 1e-9);
}

TEST(PaperCover, RejectsTriangleInH) {
    const SidedGraph ga = blowup(double_of(Graph::complete(3)), 2);
    EXPECT_THROW(paper_fractional_cover(ga), std::logic_error);
    EXPECT_THROW(paper_fractional_cover(double_of(Graph::cycle(5))), std::invalid_argument);
}

}  // namespace
}  // namespace tuza
