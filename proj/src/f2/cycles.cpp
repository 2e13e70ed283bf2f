#include <queue>
#include <stdexcept>

#include "tuza/f2.hpp"

namespace tuza {

F2Basis cycle_space_basis(const Graph& g) {
    const EdgeIndex idx(g);
    F2Basis basis(idx.size());
    const std::size_t n = g.order();
    constexpr Vertex none = ~Vertex{0};
    std::vector<Vertex> parent(n, none);
    std::vector<std::size_t> depth(n, 0);
    std::vector<bool> seen(n, false);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                }
        }
    }
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (parent[u] == v || parent[v] == u) return;
        EdgeVector cyc(idx.size());
        cyc.set(idx.id(u, v));
        Vertex a = u, b = v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            cyc.flip(idx.id(a, parent[a]));
            a = parent[a];
        }
        basis.insert(cyc);
    });
    return basis;
}

F2Basis cut_space_basis(const Graph& g) {
    const EdgeIndex idx(g);
    F2Basis basis(idx.size());
    for (Vertex v = 0; v < g.order(); ++v) {
        EdgeVector star(idx.size());
        for (Vertex w : g.neighbors(v)) star.set(idx.id(v, w));
        basis.insert(star);
    }
    return basis;
}

namespace {

// Depth-first enumeration of chordless cycles of length <= length_cap, each
// reported once as v0 < v1 ... with v0 its smallest vertex and v1 < v_last.
// fn returns false to stop early.
class ChordlessCycles {
public:
    ChordlessCycles(const Graph& g, std::size_t length_cap, std::size_t count_cap)
        : g_(g), length_cap_(length_cap), count_cap_(count_cap), on_path_(g.order(), false) {}

    template <class Fn>
    void run(Fn&& fn) {
        for (Vertex s = 0; s < g_.order() && !stopped_; ++s) {
            path_.assign(1, s);
            on_path_[s] = true;
            extend(fn);
            on_path_[s] = false;
        }
    }

private:
    bool touches_interior(Vertex w) const {
        for (std::size_t i = 1; i + 1 < path_.size(); ++i)
            if (g_.has_edge(w, path_[i])) return true;
        return false;
    }

    template <class Fn>
    void extend(Fn& fn) {
        const Vertex s = path_.front();
        for (Vertex w : g_.neighbors(path_.back())) {
            if (stopped_) return;
            if (w <= s || on_path_[w] || touches_interior(w)) continue;
            if (path_.size() >= 2 && g_.has_edge(w, s)) {
                if (path_[1] < w) {
                    if (++found_ > count_cap_) throw std::length_error("cycle enumeration cap exceeded");
                    path_.push_back(w);
                    if (!fn(path_)) stopped_ = true;
                    path_.pop_back();
                }
                continue;
            }
            if (path_.size() + 2 > length_cap_) continue;
            path_.push_back(w);
            on_path_[w] = true;
            extend(fn);
            on_path_[w] = false;
            path_.pop_back();
        }
    }

    const Graph& g_;
    std::size_t length_cap_;
    std::size_t count_cap_;
    std::size_t found_ = 0;
    bool stopped_ = false;
    std::vector<Vertex> path_;
    std::vector<bool> on_path_;
};

}  // namespace

InducedCycles induced_cycles_generate(const Graph& g, std::size_t vertex_cap, std::size_t count_cap) {
    if (g.order() > vertex_cap) throw std::length_error("induced cycle enumeration is capped at " + std::to_string(vertex_cap) + " vertices");
    const EdgeIndex idx(g);
    const F2Basis target = cycle_space_basis(g);
    F2Basis found(idx.size());
    InducedCycles out;
    ChordlessCycles(g, g.order(), count_cap).run([&](const std::vector<Vertex>& cycle) {
        ++out.induced_count;
        if (found.insert(cycle_indicator(idx, cycle))) out.spanning.push_back(cycle);
        return true;
    });
    out.generates = found.same_span(target);
    return out;
}

bool short_cycles_generate(const Graph& g, std::size_t length_cap, std::size_t count_cap) {
    if (length_cap < 3) throw std::invalid_argument("cycle length cap must be at least 3");
    const EdgeIndex idx(g);
    const F2Basis target = cycle_space_basis(g);
    F2Basis found(idx.size());
    if (target.dim() == 0) return true;
    ChordlessCycles(g, length_cap, count_cap).run([&](const std::vector<Vertex>& cycle) {
        found.insert(cycle_indicator(idx, cycle));
        return found.dim() < target.dim();
    });
    return found.same_span(target);
}

F2Basis external_triangle_space(const SidedGraph& k, const EdgeVector& g_sub) {
    const TriangleSystem ts = crossing_triangles(k);
    if (g_sub.length() != ts.edge_count()) throw std::invalid_argument("edge subset length does not match K");
    F2Basis basis(ts.edge_count());
    for (const auto& te : ts.triangle_edges) {
        if (!g_sub.get(te[0]) || !g_sub.get(te[1]) || !g_sub.get(te[2])) continue;
        EdgeVector v(ts.edge_count());
        for (EdgeId e : te) v.set(e);
        basis.insert(v);
    }
    return basis;
}

}  // namespace tuza
