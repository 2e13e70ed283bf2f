#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tuza/duality.hpp"
#include "tuza/lp.hpp"
#include "tuza/simd.hpp"

namespace tuza {

FractionalPair lp_fractional(const TriangleSystem& ts, const SolverCaps& caps) {
    if (ts.size() > caps.max_triangles)
        throw InstanceTooLarge("instance too large: " + std::to_string(ts.size()) + " triangles exceeds cap " +
                               std::to_string(caps.max_triangles));
    FractionalPair out;
    if (ts.size() == 0) return out;
    PackingLp lp;
    lp.rows = ts.edge_count();
    lp.columns.reserve(ts.size());
    for (const auto& te : ts.triangle_edges) lp.columns.push_back({te[0], te[1], te[2]});
    const LpSolution sol = solve_packing_lp(lp);

    constexpr double feas_tol = 1e-9;
    if (sol.max_primal_violation > feas_tol)
        throw std::runtime_error("fractional packing violates an edge load by " + std::to_string(sol.max_primal_violation));
    if (sol.max_dual_violation > feas_tol)
        throw std::runtime_error("fractional cover leaves a triangle short by " + std::to_string(sol.max_dual_violation));

    out.packing.value = sol.primal_value;
    out.packing.nodes = sol.iterations;
    for (std::size_t t = 0; t < sol.x.size(); ++t)
        if (sol.x[t] > 0.0) out.packing.support.emplace_back(static_cast<std::uint32_t>(t), sol.x[t]);
    out.packing.certificate = sol.y;
    out.cover.value = sol.dual_value;
    out.cover.nodes = sol.iterations;
    for (std::size_t e = 0; e < sol.y.size(); ++e)
        if (sol.y[e] > 0.0) out.cover.support.emplace_back(static_cast<EdgeId>(e), sol.y[e]);
    out.gap = std::fabs(sol.primal_value - sol.dual_value);
    return out;
}

PackingResult lp_packing(const TriangleSystem& ts, const SolverCaps& caps) { return lp_fractional(ts, caps).packing; }

CoverResult lp_cover(const TriangleSystem& ts, const SolverCaps& caps) { return lp_fractional(ts, caps).cover; }

TuzaReport tuza_report(const Graph& g, const SolverCaps& caps) {
    const auto start = std::chrono::steady_clock::now();
    const TriangleSystem ts = enumerate_triangles(g);
    TuzaReport r;
    r.triangles = ts.size();
    const FractionalPair frac = lp_fractional(ts, caps);
    r.nu3 = static_cast<std::size_t>(nu3_exact(ts, caps).value);
    r.tau3 = static_cast<std::size_t>(tau3_exact(ts, caps).value);
    r.nu3_star = frac.packing.value;
    r.tau3_star = frac.cover.value;
    constexpr double tol = 1e-7;
    if (frac.gap > tol) throw std::logic_error("LP duality gap " + std::to_string(frac.gap) + " exceeds tolerance");
    if (static_cast<double>(r.nu3) > r.nu3_star + tol || r.tau3_star > static_cast<double>(r.tau3) + tol)
        throw std::logic_error("sandwich nu3 <= nu3* = tau3* <= tau3 violated");
    if (r.nu3 > 0) r.ratio = static_cast<double>(r.tau3) / static_cast<double>(r.nu3);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

PaperCover paper_fractional_cover(const SidedGraph& ga, bool with_support, std::size_t full_scan_max_order) {
    if (!ga.block_size) throw std::invalid_argument("paper cover needs a blown-up double (block structure missing)");
    const Graph& g = ga.graph;
    PaperCover out;
    Graph internal(g.order());
    g.for_each_edge([&](Vertex u, Vertex v) {
        switch (ga.edge_type(u, v)) {
            case EdgeType::vertex: ++out.vertex_edges; break;
            case EdgeType::external: ++out.external_edges; break;
            case EdgeType::internal: internal.add_edge(u, v); break;
        }
    });
    out.cover.value = static_cast<double>(out.vertex_edges) + 0.5 * static_cast<double>(out.external_edges);

    // A triangle short of weight 1 has no vertex edge and at most one external
    // edge, which forces all three edges internal.
    internal.for_each_edge([&](Vertex u, Vertex v) {
        if (simd::intersects(internal.row(u), internal.row(v)))
            throw std::logic_error("triangle on internal edges at " + std::to_string(u) + "-" + std::to_string(v) +
                                   " gets weight 0; H is not triangle-free or the typing is corrupt");
    });
    if (g.order() <= full_scan_max_order) {
        out.full_scan = true;
        const TriangleSystem ts = enumerate_triangles(g);
        for (const auto& tri : ts.triangles) {
            double w = 0.0;
            for (auto [a, b] : {std::pair{tri[0], tri[1]}, std::pair{tri[0], tri[2]}, std::pair{tri[1], tri[2]}}) {
                const EdgeType type = ga.edge_type(a, b);
                w += type == EdgeType::vertex ? 1.0 : type == EdgeType::external ? 0.5 : 0.0;
            }
            if (w < 1.0)
                throw std::logic_error("triangle " + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                                       std::to_string(tri[2]) + " gets weight below 1");
        }
    }
    if (with_support) {
        EdgeId id = 0;
        g.for_each_edge([&](Vertex u, Vertex v) {
            const EdgeType type = ga.edge_type(u, v);
            if (type == EdgeType::vertex) out.cover.support.emplace_back(id, 1.0);
            if (type == EdgeType::external) out.cover.support.emplace_back(id, 0.5);
            ++id;
        });
    }
    return out;
}

}  // namespace tuza
