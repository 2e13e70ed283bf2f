#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tuza/duality.hpp"
#include "tuza/extremal.hpp"
#include "tuza/lp.hpp"

namespace tuza {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> padded(std::span<const std::size_t> v, std::size_t len) {
    std::vector<std::size_t> out(v.begin(), v.end());
    out.resize(len, 0);
    return out;
}

bool has_crossing_triangle_at(const SidedGraph& f, Vertex u, Vertex v) {
    for (Vertex z : f.graph.neighbors(u))
        if (z != v && f.graph.has_edge(v, z) && !(f.side(u) == f.side(v) && f.side(v) == f.side(z))) return true;
    return false;
}

// Branch and bound over the edges of K_{2n}. A crossing triangle may not have
// all three edges included.
class CrossingSearch {
public:
    CrossingSearch(std::size_t n, std::size_t max_nodes) : max_nodes_(max_nodes) {
        host_.graph = Graph::complete(2 * n);
        host_.x_count = n;
        const TriangleSystem ts = crossing_triangles(host_);
        edges_ = ts.edges;
        for (const auto& te : ts.triangle_edges) {
            Mask m = 0;
            for (EdgeId e : te) m |= Mask{1} << e;
            tri_.push_back(m);
        }
        through_.resize(edges_.size());
        for (std::size_t i = 0; i < tri_.size(); ++i)
            for (EdgeId e : ts.triangle_edges[i]) through_[e].push_back(i);
        all_ = edges_.size() == 64 ? ~Mask{0} : (Mask{1} << edges_.size()) - 1;
    }

    void seed(const SidedGraph& f) {
        Mask m = 0;
        f.graph.for_each_edge([&](Vertex u, Vertex v) { m |= Mask{1} << edges_.id(u, v); });
        best_ = m;
        best_size_ = static_cast<std::size_t>(std::popcount(m));
    }

    void run() { search(0, 0); }

    std::size_t best_size() const { return best_size_; }
    std::size_t nodes() const { return nodes_; }

    SidedGraph witness() const {
        SidedGraph out = host_;
        out.graph = Graph(host_.graph.order());
        for (EdgeId e = 0; e < edges_.size(); ++e)
            if (best_ >> e & 1) out.graph.add_edge(edges_[e].first, edges_[e].second);
        return out;
    }

private:
    // Lower bound on exclusions still needed: a greedy packing of live
    // triangles disjoint on undecided edges, then the LP relaxation.
    std::size_t exclusions_needed(Mask in, Mask out) const {
        const Mask open = all_ & ~in & ~out;
        std::vector<Mask> live;
        for (Mask t : tri_)
            if (!(t & out)) live.push_back(t & open);
        Mask used = 0;
        std::size_t greedy = 0;
        std::vector<std::size_t> order(live.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return std::popcount(live[a]) < std::popcount(live[b]); });
        for (std::size_t i : order)
            if (!(live[i] & used)) {
                used |= live[i];
                ++greedy;
            }
        return greedy;
    }

    std::size_t lp_exclusions(Mask in, Mask out) const {
        const Mask open = all_ & ~in & ~out;
        PackingLp lp;
        lp.rows = edges_.size();
        for (Mask t : tri_) {
            if (t & out) continue;
            std::vector<std::uint32_t> col;
            for (Mask m = t & open; m; m &= m - 1) col.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
            lp.columns.push_back(std::move(col));
        }
        if (lp.columns.empty()) return 0;
        const LpSolution sol = solve_packing_lp(lp);
        return static_cast<std::size_t>(std::ceil(sol.primal_value - 1e-7));
    }

    // Includes e and excludes the last open edge of any triangle it completes
    // to two included edges. Returns false on a fully included triangle.
    bool include(EdgeId e, Mask& in, Mask& out) const {
        in |= Mask{1} << e;
        for (std::size_t i : through_[e]) {
            const Mask t = tri_[i];
            if (t & out) continue;
            const Mask rest = t & ~in;
            if (!rest) return false;
            if (std::popcount(rest) == 1) out |= rest;
        }
        return true;
    }

    void search(Mask in, Mask out) {
        if (++nodes_ > max_nodes_) throw InstanceTooLarge("crossing Mantel search exceeded the node cap");
        const Mask open = all_ & ~in & ~out;
        const std::size_t have = static_cast<std::size_t>(std::popcount(in));
        const std::size_t room = static_cast<std::size_t>(std::popcount(open));
        if (!open) {
            if (have > best_size_) {
                best_size_ = have;
                best_ = in;
            }
            return;
        }
        if (have + room <= best_size_) return;
        if (have + room - exclusions_needed(in, out) <= best_size_) return;
        if (have + room - lp_exclusions(in, out) <= best_size_) return;

        EdgeId pick = 0;
        std::size_t pick_degree = 0;
        bool found = false;
        for (Mask m = open; m; m &= m - 1) {
            const auto e = static_cast<EdgeId>(std::countr_zero(m));
            std::size_t live = 0;
            for (std::size_t i : through_[e])
                if (!(tri_[i] & out)) ++live;
            if (!found || live > pick_degree) {
                pick = e;
                pick_degree = live;
                found = true;
            }
        }
        if (pick_degree == 0) {
            search(in | open, out);
            return;
        }
        Mask in2 = in, out2 = out;
        if (include(pick, in2, out2)) search(in2, out2);
        search(in, out | (Mask{1} << pick));
    }

    SidedGraph host_;
    EdgeIndex edges_;
    std::vector<Mask> tri_;
    std::vector<std::vector<std::size_t>> through_;
    Mask all_ = 0;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
    std::size_t nodes_ = 0;
    std::size_t max_nodes_;
};

}  // namespace

SidedGraph multipartite_construction(std::span<const std::size_t> x, std::span<const std::size_t> y) {
    const std::size_t r = std::max(x.size(), y.size());
    const auto xs = padded(x, r), ys = padded(y, r);
    const std::size_t nx = std::accumulate(xs.begin(), xs.end(), std::size_t{0});
    const std::size_t ny = std::accumulate(ys.begin(), ys.end(), std::size_t{0});
    std::vector<std::size_t> part(nx + ny);
    std::size_t at = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < xs[i]; ++k) part[at++] = i;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < ys[i]; ++k) part[at++] = i;
    SidedGraph out;
    out.graph = Graph(nx + ny);
    out.x_count = nx;
    for (Vertex u = 0; u < nx + ny; ++u)
        for (Vertex v = u + 1; v < nx + ny; ++v) {
            const bool same_side = (u < nx) == (v < nx);
            if (same_side ? part[u] != part[v] : part[u] == part[v]) out.graph.add_edge(u, v);
        }
    return out;
}

std::size_t multipartite_size(std::span<const std::size_t> x, std::span<const std::size_t> y) {
    const std::size_t r = std::max(x.size(), y.size());
    const auto xs = padded(x, r), ys = padded(y, r);
    std::size_t total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        total += xs[i] * ys[i];
        for (std::size_t j = i + 1; j < r; ++j) total += xs[i] * xs[j] + ys[i] * ys[j];
    }
    return total;
}

double multipartite_size_formula(std::span<const std::size_t> x, std::span<const std::size_t> y) {
    const std::size_t r = std::max(x.size(), y.size());
    const auto xs = padded(x, r), ys = padded(y, r);
    const std::size_t n = std::accumulate(xs.begin(), xs.end(), std::size_t{0});
    if (std::accumulate(ys.begin(), ys.end(), std::size_t{0}) != n)
        throw std::invalid_argument("profiles must have equal totals");
    double defect = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const double d = static_cast<double>(xs[i]) - static_cast<double>(ys[i]);
        defect += d * d;
    }
    return static_cast<double>(n * n) - defect / 2.0;
}

SidedGraph switching_heuristic(std::size_t n, std::uint64_t seed) {
    SidedGraph f;
    f.graph = Graph(2 * n);
    f.x_count = n;
    std::vector<Edge> edges = Graph::complete(2 * n).edges();
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    const auto saturate = [&] {
        for (const auto& [u, v] : edges)
            if (!f.graph.has_edge(u, v)) {
                f.graph.add_edge(u, v);
                if (has_crossing_triangle_at(f, u, v)) f.graph.remove_edge(u, v);
            }
    };
    saturate();
    for (bool improved = true; improved;) {
        improved = false;
        for (Vertex u = 0; u < 2 * n && !improved; ++u)
            for (Vertex v = 0; v < 2 * n && !improved; ++v) {
                if (u == v || f.side(u) != f.side(v) || f.graph.has_edge(u, v)) continue;
                if (f.graph.degree(u) <= f.graph.degree(v)) continue;
                const std::vector<Vertex> nbrs = f.graph.neighbors(u);
                f.graph.isolate(v);
                for (Vertex z : nbrs) f.graph.add_edge(v, z);
                saturate();
                improved = true;
            }
    }
    return f;
}

MantelResult max_crossing_triangle_free(std::size_t n, const MantelOptions& opts) {
    if (n == 0) throw std::invalid_argument("side size must be positive");
    MantelResult out;
    out.n = n;
    if (n <= opts.exact_max) {
        if (2 * n * (2 * n - 1) / 2 > 64) throw InstanceTooLarge("exact crossing Mantel supports at most 64 edges");
        CrossingSearch search(n, opts.max_nodes);
        const SidedGraph seed = switching_heuristic(n, n);
        out.seed_size = seed.graph.size();
        search.seed(seed);
        search.run();
        out.size = search.best_size();
        out.witness = search.witness();
        out.exact = true;
        out.nodes = search.nodes();
        if (out.size > n * n)
            throw std::logic_error("crossing Mantel exceeded n^2 at n = " + std::to_string(n));
    } else {
        if (n > opts.construction_max)
            throw InstanceTooLarge("crossing Mantel construction capped at n = " + std::to_string(opts.construction_max));
        const std::vector<std::size_t> parts = {(n + 1) / 2, n / 2};
        out.witness = multipartite_construction(parts, parts);
        out.size = out.witness.graph.size();
    }
    if (crossing_triangles(out.witness).size() != 0 || out.witness.graph.size() != out.size)
        throw std::logic_error("crossing Mantel witness is not crossing-triangle-free");
    return out;
}

}  // namespace tuza
