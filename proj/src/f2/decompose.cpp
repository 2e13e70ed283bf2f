#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tuza/f2.hpp"

namespace tuza {

namespace {

struct SignedEdge {
    Vertex u, v;
    bool differ;  // endpoints must get different colours
};

struct ExternalConstraint {
    Vertex u, v;
    bool gamma;
};

// Two-colouring of the internal G-edges of K - S subject to the parity
// constraints. Each component gets a base colouring; flipping a component
// complements it.
struct Colouring {
    std::vector<int> component;  // -1 for excluded vertices
    std::vector<int> parity;
    std::size_t x_components = 0;  // X-side components are numbered first
    std::size_t components = 0;
    std::optional<Edge> conflict;
};

Colouring colour_sides(const SidedGraph& k, const std::vector<std::vector<std::pair<Vertex, bool>>>& adj,
                       const std::vector<bool>& excluded) {
    const std::size_t n = k.graph.order();
    Colouring c;
    c.component.assign(n, -1);
    c.parity.assign(n, 0);
    std::vector<Vertex> stack;
    int next = 0;
    for (int pass = 0; pass < 2; ++pass) {
        const Vertex lo = pass == 0 ? 0 : static_cast<Vertex>(k.x_count);
        const Vertex hi = pass == 0 ? static_cast<Vertex>(k.x_count) : static_cast<Vertex>(n);
        for (Vertex s = lo; s < hi; ++s) {
            if (excluded[s] || c.component[s] >= 0) continue;
            c.component[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                const Vertex u = stack.back();
                stack.pop_back();
                for (const auto& [w, differ] : adj[u]) {
                    if (excluded[w]) continue;
                    const int want = c.parity[u] ^ static_cast<int>(differ);
                    if (c.component[w] < 0) {
                        c.component[w] = next;
                        c.parity[w] = want;
                        stack.push_back(w);
                    } else if (c.parity[w] != want && !c.conflict) {
                        c.conflict = Edge{std::min(u, w), std::max(u, w)};
                    }
                }
            }
            ++next;
        }
        if (pass == 0) c.x_components = static_cast<std::size_t>(next);
    }
    c.components = static_cast<std::size_t>(next);
    return c;
}

struct FlipChoice {
    std::vector<int> flip;
    std::size_t z_size = std::numeric_limits<std::size_t>::max();
    bool exact = false;
};

// Z restricted to external edges is separable over the inner side once the
// outer side's flips are fixed; enumerate (or greedily improve) the outer flips.
FlipChoice choose_flips(const Colouring& col, const std::vector<ExternalConstraint>& ext, bool exhaustive) {
    const std::size_t cx = col.x_components;
    const std::size_t cy = col.components - cx;
    const bool x_outer = cx <= cy;
    const std::size_t n_outer = x_outer ? cx : cy;
    const std::size_t n_inner = x_outer ? cy : cx;
    const std::size_t outer_base = x_outer ? 0 : cx;
    const std::size_t inner_base = x_outer ? cx : 0;

    // cost[o][i][w]: external edges between outer comp o and inner comp i whose
    // endpoints' base colours combined with gamma give w.
    std::vector<std::size_t> cost(n_outer * n_inner * 2, 0);
    for (const auto& e : ext) {
        const std::size_t a = static_cast<std::size_t>(col.component[e.u]);
        const std::size_t b = static_cast<std::size_t>(col.component[e.v]);
        const std::size_t o = (a >= outer_base && a < outer_base + n_outer ? a : b) - outer_base;
        const std::size_t i = (a >= outer_base && a < outer_base + n_outer ? b : a) - inner_base;
        const int want = static_cast<int>(e.gamma) ^ col.parity[e.u] ^ col.parity[e.v];
        ++cost[(o * n_inner + i) * 2 + static_cast<std::size_t>(want)];
    }

    std::vector<int> outer(n_outer, 0), inner(n_inner, 0);
    // An edge lands in Z when flip_o ^ flip_i ^ want == 1.
    const auto evaluate = [&](const std::vector<int>& fo, std::vector<int>& fi) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n_inner; ++i) {
            std::size_t keep = 0, flip = 0;
            for (std::size_t o = 0; o < n_outer; ++o) {
                const std::size_t base = (o * n_inner + i) * 2;
                keep += cost[base + static_cast<std::size_t>(1 ^ fo[o])];
                flip += cost[base + static_cast<std::size_t>(fo[o])];
            }
            fi[i] = flip < keep ? 1 : 0;
            total += std::min(keep, flip);
        }
        return total;
    };

    FlipChoice best;
    std::vector<int> fi(n_inner);
    const auto consider = [&](const std::vector<int>& fo) {
        const std::size_t z = evaluate(fo, fi);
        if (z < best.z_size) {
            best.z_size = z;
            best.flip.assign(col.components, 0);
            for (std::size_t o = 0; o < n_outer; ++o) best.flip[outer_base + o] = fo[o];
            for (std::size_t i = 0; i < n_inner; ++i) best.flip[inner_base + i] = fi[i];
        }
        return z;
    };

    if (exhaustive) {
        // The first outer component stays unflipped: complementing everything leaves Z unchanged.
        const std::size_t free = n_outer ? n_outer - 1 : 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
            for (std::size_t o = 1; o < n_outer; ++o) outer[o] = static_cast<int>((mask >> (o - 1)) & 1u);
            consider(outer);
        }
        best.exact = true;
        return best;
    }
    std::size_t current = consider(outer);
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t o = 0; o < n_outer; ++o) {
            outer[o] ^= 1;
            const std::size_t z = consider(outer);
            if (z < current) {
                current = z;
                improved = true;
            } else {
                outer[o] ^= 1;
            }
        }
    }
    return best;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<GammaDecomposition> decompose_gamma(const SidedGraph& k, const EdgeVector& gamma, const EdgeVector& g_edges,
                                                  const DecomposeOptions& opts) {
    const EdgeIndex idx(k.graph);
    if (gamma.length() != idx.size() || g_edges.length() != idx.size())
        throw std::invalid_argument("edge vector length does not match K");
    if (!gamma.subset_of(g_edges)) throw std::invalid_argument("gamma must be supported on G");

    const std::size_t n = k.graph.order();
    std::vector<std::vector<std::pair<Vertex, bool>>> adj(n);
    std::vector<ExternalConstraint> all_ext;
    for (std::size_t e = 0; e < idx.size(); ++e) {
        if (!g_edges.get(e)) continue;
        const auto [u, v] = idx[static_cast<EdgeId>(e)];
        if (k.side(u) == k.side(v)) {
            adj[u].emplace_back(v, gamma.get(e));
            adj[v].emplace_back(u, gamma.get(e));
        } else {
            all_ext.push_back({u, v, gamma.get(e)});
        }
    }

    const bool exact = k.x_count <= opts.exact_max_t;
    std::optional<std::vector<bool>> chosen_s;
    FlipChoice chosen_flips;
    Colouring chosen_col;

    const auto try_excluded = [&](const std::vector<bool>& excluded) {
        Colouring col = colour_sides(k, adj, excluded);
        if (col.conflict) return false;
        std::vector<ExternalConstraint> ext;
        for (const auto& e : all_ext)
            if (!excluded[e.u] && !excluded[e.v]) ext.push_back(e);
        FlipChoice flips = choose_flips(col, ext, exact);
        if (!chosen_s || flips.z_size < chosen_flips.z_size) {
            chosen_s = excluded;
            chosen_flips = std::move(flips);
            chosen_col = std::move(col);
        }
        return true;
    };

    if (exact) {
        for (std::size_t size = 0; size <= std::min(opts.max_excluded, n) && !chosen_s; ++size) {
            std::vector<std::size_t> combo(size);
            for (std::size_t i = 0; i < size; ++i) combo[i] = i;
            do {
                std::vector<bool> excluded(n, false);
                for (std::size_t v : combo) excluded[v] = true;
                try_excluded(excluded);
            } while (size > 0 && next_combination(combo, n));
        }
    } else {
        std::vector<bool> excluded(n, false);
        for (std::size_t removed = 0;; ++removed) {
            const Colouring col = colour_sides(k, adj, excluded);
            if (!col.conflict) {
                try_excluded(excluded);
                break;
            }
            if (removed == opts.max_excluded) break;
            const auto [u, v] = *col.conflict;
            excluded[adj[u].size() >= adj[v].size() ? u : v] = true;
        }
    }
    if (!chosen_s) return std::nullopt;

    GammaDecomposition out;
    out.exact = chosen_flips.exact;
    std::vector<bool> in_a(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if ((*chosen_s)[v]) {
            out.excluded.push_back(v);
            continue;
        }
        const int colour = chosen_col.parity[v] ^ chosen_flips.flip[static_cast<std::size_t>(chosen_col.component[v])];
        in_a[v] = colour == 0;
        (colour == 0 ? out.a : out.b).push_back(v);
    }

    out.z = EdgeVector(idx.size());
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t e = 0; e < idx.size(); ++e) {
        const auto [u, v] = idx[static_cast<EdgeId>(e)];
        if ((*chosen_s)[u] || (*chosen_s)[v]) continue;
        const bool in_cut = g_edges.get(e) && in_a[u] != in_a[v];
        if (gamma.get(e) == in_cut) continue;
        if (k.side(u) == k.side(v)) throw std::logic_error("decomposition left an internal edge in Z");
        out.z.set(e);
        ++deg[u];
        ++deg[v];
    }
    out.z_max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    return out;
}

}  // namespace tuza
