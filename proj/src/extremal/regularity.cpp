#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tuza/duality.hpp"
#include "tuza/extremal.hpp"

namespace tuza {

namespace {

void check_parts(const Graph& h, std::initializer_list<std::span<const Vertex>> parts) {
    std::vector<bool> seen(h.order(), false);
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("vertex sets must be nonempty");
        for (Vertex v : part) {
            if (v >= h.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw std::invalid_argument("vertex sets overlap at " + std::to_string(v));
            seen[v] = true;
        }
    }
}

std::size_t min_part(double eps, std::size_t size) {
    const double need = std::ceil(eps * static_cast<double>(size) - 1e-12);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(need, 0.0)));
}

std::size_t cross_edges(const Graph& h, std::span<const Vertex> u, std::span<const Vertex> w) {
    std::size_t count = 0;
    for (Vertex x : u)
        for (Vertex y : w) count += h.has_edge(x, y);
    return count;
}

struct Judge {
    RegularPairStat& stat;
    double s;

    void consider(std::size_t edges, std::size_t nu, std::size_t nw, const std::function<
                  std::pair<std::vector<Vertex>, std::vector<Vertex>>()>& materialize) {
        ++stat.pairs_checked;
        const double d = static_cast<double>(edges) / (s * static_cast<double>(nu) * static_cast<double>(nw));
        const double dev = std::abs(d - stat.density);
        if (dev > stat.worst_deviation) {
            stat.worst_deviation = dev;
            if (dev > stat.epsilon + 1e-12) {
                stat.regular = false;
                stat.witness = materialize();
            }
        }
    }
};

}  // namespace

RegularPairStat pair_density(const Graph& h, std::span<const Vertex> u, std::span<const Vertex> w, double s) {
    check_parts(h, {u, w});
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("scaling factor must lie in (0,1]");
    RegularPairStat out;
    out.density = static_cast<double>(cross_edges(h, u, w)) /
                  (s * static_cast<double>(u.size()) * static_cast<double>(w.size()));
    return out;
}

RegularPairStat check_regular_pair(const Graph& h, std::span<const Vertex> u, std::span<const Vertex> w, double s,
                                   double eps, const PairCheckOptions& opts) {
    RegularPairStat stat = pair_density(h, u, w, s);
    stat.epsilon = eps;
    const std::size_t mu = min_part(eps, u.size()), mw = min_part(eps, w.size());
    Judge judge{stat, s};

    if (opts.mode == PairCheck::exhaustive) {
        if (u.size() > opts.exhaustive_max || w.size() > opts.exhaustive_max)
            throw InstanceTooLarge("exhaustive regularity check capped at " + std::to_string(opts.exhaustive_max) +
                                   " vertices per part");
        // count[j] = |N(w_j) cap U'|, maintained by Gray code over U'.
        std::vector<std::size_t> count(w.size(), 0);
        std::vector<std::size_t> order(w.size());
        const std::uint32_t total = std::uint32_t{1} << u.size();
        std::uint32_t mask = 0;
        for (std::uint32_t step = 1; step <= total; ++step) {
            const auto nu = static_cast<std::size_t>(__builtin_popcount(mask));
            if (nu >= mu) {
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return count[a] != count[b] ? count[a] > count[b] : a < b;
                });
                std::size_t top = 0, bottom = 0;
                for (std::size_t k = 1; k <= w.size(); ++k) {
                    top += count[order[k - 1]];
                    bottom += count[order[w.size() - k]];
                    if (k < mw) continue;
                    const auto pick = [&, k, mask](bool dense) {
                        std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
                        for (std::size_t i = 0; i < u.size(); ++i)
                            if (mask >> i & 1) out.first.push_back(u[i]);
                        for (std::size_t j = 0; j < k; ++j)
                            out.second.push_back(w[order[dense ? j : w.size() - 1 - j]]);
                        std::sort(out.second.begin(), out.second.end());
                        return out;
                    };
                    judge.consider(top, nu, k, [&] { return pick(true); });
                    judge.consider(bottom, nu, k, [&] { return pick(false); });
                }
            }
            if (step == total) break;
            const int flip = __builtin_ctz(step);
            mask ^= std::uint32_t{1} << flip;
            const bool added = mask >> flip & 1;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (h.has_edge(u[static_cast<std::size_t>(flip)], w[j])) count[j] = added ? count[j] + 1 : count[j] - 1;
        }
        stat.certified = true;
        return stat;
    }

    std::mt19937_64 rng(opts.seed);
    std::vector<Vertex> su(u.begin(), u.end()), sw(w.begin(), w.end());
    for (std::size_t i = 0; i < opts.samples; ++i) {
        const std::size_t ku = std::uniform_int_distribution<std::size_t>(mu, u.size())(rng);
        const std::size_t kw = std::uniform_int_distribution<std::size_t>(mw, w.size())(rng);
        std::shuffle(su.begin(), su.end(), rng);
        std::shuffle(sw.begin(), sw.end(), rng);
        const std::span<const Vertex> pu(su.data(), ku), pw(sw.data(), kw);
        judge.consider(cross_edges(h, pu, pw), ku, kw, [&] {
            std::pair<std::vector<Vertex>, std::vector<Vertex>> out{{pu.begin(), pu.end()}, {pw.begin(), pw.end()}};
            std::sort(out.first.begin(), out.first.end());
            std::sort(out.second.begin(), out.second.end());
            return out;
        });
    }
    stat.certified = false;
    return stat;
}

CountingReport counting_lemma_verify(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> b,
                                     std::span<const Vertex> b2, double s, double eps) {
    check_parts(h, {a, b, b2});
    if (a.size() != b.size() || b.size() != b2.size()) throw std::invalid_argument("parts must have equal size");
    const std::size_t l = a.size();
    PairCheckOptions opts;
    if (l > opts.exhaustive_max) opts.mode = PairCheck::sampled;

    CountingReport rep;
    rep.ab = check_regular_pair(h, a, b, 1.0, eps, opts);
    rep.ab2 = check_regular_pair(h, a, b2, 1.0, eps, opts);
    rep.bb2 = check_regular_pair(h, b, b2, s, eps, opts);
    rep.certified = rep.ab.certified && rep.ab2.certified && rep.bb2.certified;
    const auto need = [&](const RegularPairStat& st, const std::string& name, const std::string& scale) {
        if (!st.regular) rep.unmet.push_back(name + " not (" + scale + ";H,eps)-regular");
        if (st.density < 2.0 * eps - 1e-12) rep.unmet.push_back(name + " (" + scale + ";H)-density below 2 eps");
    };
    need(rep.ab, "A,B", "1");
    need(rep.ab2, "A,B'", "1");
    need(rep.bb2, "B,B'", "s");
    rep.hypotheses_met = rep.unmet.empty();

    // Look first for a with many neighbors on both sides, as in the proof.
    std::vector<Vertex> order(a.begin(), a.end());
    const auto both = [&](Vertex x) {
        std::size_t nb = 0, nb2 = 0;
        for (Vertex y : b) nb += h.has_edge(x, y);
        for (Vertex y : b2) nb2 += h.has_edge(x, y);
        return std::min(nb, nb2);
    };
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return both(x) > both(y); });
    for (Vertex x : order) {
        for (Vertex y : b) {
            if (!h.has_edge(x, y)) continue;
            for (Vertex z : b2)
                if (h.has_edge(x, z) && h.has_edge(y, z)) {
                    rep.triangle = std::array<Vertex, 3>{x, y, z};
                    break;
                }
            if (rep.triangle) break;
        }
        if (rep.triangle) break;
    }
    if (rep.hypotheses_met && rep.certified && !rep.triangle)
        throw std::logic_error("counting lemma hypotheses hold but no triangle abb' exists");
    return rep;
}

}  // namespace tuza
