#include <algorithm>
#include <string>

#include "tuza/duality.hpp"
#include "tuza/lp.hpp"
#include "tuza/simd.hpp"

namespace tuza {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void clear_bit(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

Bits all_ones(std::size_t n) {
    Bits b((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64) b.back() = (std::uint64_t{1} << (n % 64)) - 1;
    if (n == 0) b.clear();
    return b;
}

void check_caps(const TriangleSystem& ts, const SolverCaps& caps) {
    if (ts.size() > caps.max_triangles)
        throw InstanceTooLarge("instance too large: " + std::to_string(ts.size()) + " triangles exceeds cap " +
                               std::to_string(caps.max_triangles));
}

class PackingSearch {
public:
    PackingSearch(const TriangleSystem& ts, const SolverCaps& caps) : ts_(ts), caps_(caps), count_(ts.edge_count()) {
        for (const auto& [u, v] : ts.edges.edges()) order_ = std::max<std::size_t>(order_, v + 1);
    }

    PackingResult run() {
        Bits avail = all_ones(ts_.size());
        greedy(avail);
        root_bound_ = root_cap();
        if (best_.size() < root_bound_) {
            std::vector<std::uint32_t> chosen;
            search(avail, chosen);
        }
        PackingResult r;
        r.value = static_cast<double>(best_.size());
        for (std::uint32_t t : best_) r.support.emplace_back(t, 1.0);
        r.nodes = nodes_;
        return r;
    }

private:
    // floor(nu3*) from the root LP, with a little slack for rounding.
    std::size_t root_cap() const {
        if (ts_.size() == 0) return 0;
        PackingLp lp;
        lp.rows = ts_.edge_count();
        for (const auto& te : ts_.triangle_edges) lp.columns.push_back({te[0], te[1], te[2]});
        return static_cast<std::size_t>(solve_packing_lp(lp).primal_value + 1e-6);
    }

    void greedy(Bits avail) {
        std::vector<std::uint32_t> chosen;
        for (std::size_t t = 0; t < ts_.size(); ++t) {
            if (!test_bit(avail, t)) continue;
            chosen.push_back(static_cast<std::uint32_t>(t));
            take(avail, t);
        }
        best_ = chosen;
    }

    void take(Bits& avail, std::size_t t) const {
        for (EdgeId e : ts_.triangle_edges[t])
            for (std::uint32_t u : ts_.edge_to_triangles[e]) clear_bit(avail, u);
    }

    std::size_t upper_bound(const Bits& avail) {
        std::fill(count_.begin(), count_.end(), 0);
        std::size_t live_triangles = 0;
        for (std::size_t w = 0; w < avail.size(); ++w) {
            std::uint64_t bits = avail[w];
            while (bits) {
                const std::size_t t = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                ++live_triangles;
                for (EdgeId e : ts_.triangle_edges[t]) ++count_[e];
            }
        }
        if (live_triangles == 0) return 0;
        std::size_t live_edges = 0;
        std::vector<std::size_t> deg(order_, 0);
        for (std::size_t e = 0; e < count_.size(); ++e) {
            if (!count_[e]) continue;
            ++live_edges;
            ++deg[ts_.edges[static_cast<EdgeId>(e)].first];
            ++deg[ts_.edges[static_cast<EdgeId>(e)].second];
        }
        std::size_t half_degrees = 0;
        for (std::size_t d : deg) half_degrees += d / 2;
        std::size_t bound = std::min({live_triangles, live_edges / 3, half_degrees / 3});

        // Greedy clique cover: the triangles through one edge pairwise conflict.
        if (bound > 0) {
            std::vector<EdgeId> order;
            for (std::size_t e = 0; e < count_.size(); ++e)
                if (count_[e]) order.push_back(static_cast<EdgeId>(e));
            std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
                return count_[a] != count_[b] ? count_[a] > count_[b] : a < b;
            });
            Bits left = avail;
            std::size_t cliques = 0;
            for (EdgeId e : order) {
                bool used = false;
                for (std::uint32_t t : ts_.edge_to_triangles[e])
                    if (test_bit(left, t)) {
                        clear_bit(left, t);
                        used = true;
                    }
                if (used && ++cliques >= bound) break;
            }
            bound = std::min(bound, cliques);
        }
        return bound;
    }

    void search(const Bits& avail, std::vector<std::uint32_t>& chosen) {
        if (++nodes_ > caps_.max_nodes) throw InstanceTooLarge("packing search exceeded the node cap");
        if (best_.size() >= root_bound_) return;
        const std::size_t ub = upper_bound(avail);
        if (chosen.size() + ub <= best_.size()) return;
        if (ub == 0) {
            best_ = chosen;
            return;
        }
        // Branch on the live edge with fewest available triangles (count_ is fresh).
        EdgeId pick = 0;
        std::size_t fewest = SIZE_MAX;
        for (std::size_t e = 0; e < count_.size(); ++e)
            if (count_[e] && count_[e] < fewest) {
                fewest = count_[e];
                pick = static_cast<EdgeId>(e);
            }
        std::vector<std::uint32_t> options;
        for (std::uint32_t t : ts_.edge_to_triangles[pick])
            if (test_bit(avail, t)) options.push_back(t);
        for (std::uint32_t t : options) {
            Bits next = avail;
            take(next, t);
            chosen.push_back(t);
            search(next, chosen);
            chosen.pop_back();
            if (best_.size() >= root_bound_) return;
        }
        Bits next = avail;
        for (std::uint32_t t : options) clear_bit(next, t);
        search(next, chosen);
    }

    const TriangleSystem& ts_;
    SolverCaps caps_;
    std::vector<std::size_t> count_;
    std::vector<std::uint32_t> best_;
    std::size_t nodes_ = 0;
    std::size_t root_bound_ = SIZE_MAX;
    std::size_t order_ = 0;
};

class CoverSearch {
public:
    enum : char { kFree = 0, kChosen = 1, kForbidden = 2 };

    CoverSearch(const TriangleSystem& ts, const SolverCaps& caps) : ts_(ts), caps_(caps) {}

    CoverResult run() {
        greedy();
        std::vector<char> status(ts_.edge_count(), kFree);
        search(status, all_ones(ts_.size()), 0);
        CoverResult r;
        r.value = static_cast<double>(best_.size());
        for (EdgeId e : best_) r.support.emplace_back(e, 1.0);
        r.nodes = nodes_;
        return r;
    }

private:
    void greedy() {
        Bits uncovered = all_ones(ts_.size());
        std::vector<std::size_t> count(ts_.edge_count());
        for (std::size_t e = 0; e < count.size(); ++e) count[e] = ts_.edge_to_triangles[e].size();
        for (;;) {
            const auto it = std::max_element(count.begin(), count.end());
            if (it == count.end() || *it == 0) break;
            const auto e = static_cast<EdgeId>(it - count.begin());
            best_.push_back(e);
            for (std::uint32_t t : ts_.edge_to_triangles[e]) {
                if (!test_bit(uncovered, t)) continue;
                clear_bit(uncovered, t);
                for (EdgeId f : ts_.triangle_edges[t]) --count[f];
            }
        }
        std::sort(best_.begin(), best_.end());
    }

    void choose(std::vector<char>& status, Bits& uncovered, EdgeId e) const {
        status[e] = kChosen;
        for (std::uint32_t t : ts_.edge_to_triangles[e]) clear_bit(uncovered, t);
    }

    void search(std::vector<char> status, Bits uncovered, std::size_t chosen) {
        if (++nodes_ > caps_.max_nodes) throw InstanceTooLarge("cover search exceeded the node cap");
        // Unit propagation: a triangle with one non-forbidden edge forces it.
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t w = 0; w < uncovered.size(); ++w) {
                std::uint64_t bits = uncovered[w];
                while (bits) {
                    const std::size_t t = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    if (!test_bit(uncovered, t)) continue;
                    int open = 0;
                    EdgeId last = 0;
                    for (EdgeId e : ts_.triangle_edges[t])
                        if (status[e] == kFree) {
                            ++open;
                            last = e;
                        }
                    if (open == 0) return;
                    if (open == 1) {
                        choose(status, uncovered, last);
                        ++chosen;
                        changed = true;
                    }
                }
            }
        }
        if (chosen >= best_.size()) return;

        // Lower bound: triangles pairwise disjoint on free edges each need their own edge.
        std::vector<char> used(ts_.edge_count(), 0);
        std::vector<std::size_t> count(ts_.edge_count(), 0);
        std::size_t packed = 0;
        bool any = false;
        for (std::size_t w = 0; w < uncovered.size(); ++w) {
            std::uint64_t bits = uncovered[w];
            while (bits) {
                const std::size_t t = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                any = true;
                bool clash = false;
                for (EdgeId e : ts_.triangle_edges[t])
                    if (status[e] == kFree) {
                        ++count[e];
                        clash = clash || used[e];
                    }
                if (clash) continue;
                ++packed;
                for (EdgeId e : ts_.triangle_edges[t])
                    if (status[e] == kFree) used[e] = 1;
            }
        }
        if (!any) {
            best_.clear();
            for (std::size_t e = 0; e < status.size(); ++e)
                if (status[e] == kChosen) best_.push_back(static_cast<EdgeId>(e));
            return;
        }
        if (chosen + packed >= best_.size()) return;

        const auto pick = static_cast<EdgeId>(std::max_element(count.begin(), count.end()) - count.begin());
        {
            std::vector<char> s2 = status;
            Bits u2 = uncovered;
            choose(s2, u2, pick);
            search(std::move(s2), std::move(u2), chosen + 1);
        }
        status[pick] = kForbidden;
        search(std::move(status), std::move(uncovered), chosen);
    }

    const TriangleSystem& ts_;
    SolverCaps caps_;
    std::vector<EdgeId> best_;
    std::size_t nodes_ = 0;
};

}  // namespace

PackingResult nu3_exact(const TriangleSystem& ts, const SolverCaps& caps) {
    check_caps(ts, caps);
    return PackingSearch(ts, caps).run();
}

CoverResult tau3_exact(const TriangleSystem& ts, const SolverCaps& caps) {
    check_caps(ts, caps);
    if (ts.size() == 0) return {};
    return CoverSearch(ts, caps).run();
}

}  // namespace tuza
