#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "lifts.hpp"
#include "tuza/config.hpp"

namespace tuza {

namespace {

double mass(double phi_b, int x) { return x == 0 ? phi_b : 1.0 - phi_b; }

// Contribution of v's incident edges and of v itself to w_c.
double local_value(const CompoundGraph& k, const Configuration& cfg, double c, Vertex v) {
    double sum = c / static_cast<double>(k.t()) * cfg.phi_b[v] * (1.0 - cfg.phi_b[v]);
    for (const auto& [w, e] : k.incident(v)) {
        const auto [a, b] = k.edges()[e];
        sum += k.edge_coefficient(e, c) * captured_fraction(cfg.pattern[e], cfg.phi_b[a], cfg.phi_b[b]);
    }
    return sum;
}

// Maximiser of w_c in phi_b[v] with everything else fixed: the edge terms are
// linear in phi_b[v] and the vertex term is (c/t) phi (1 - phi).
double best_phi(const CompoundGraph& k, const Configuration& cfg, double c, Vertex v) {
    double slope = 0.0;
    for (const auto& [w, e] : k.incident(v)) {
        double d = 0.0;
        for (int xv = 0; xv < 2; ++xv)
            for (int xw = 0; xw < 2; ++xw)
                if (detail::lift_present(k, cfg.pattern[e], e, v, xv, xw)) d += (xv == 0 ? 1.0 : -1.0) * mass(cfg.phi_b[w], xw);
        slope += k.edge_coefficient(e, c) * d;
    }
    if (c == 0.0) return slope > 0.0 ? 1.0 : slope < 0.0 ? 0.5 : cfg.phi_b[v];
    const double t = static_cast<double>(k.t());
    return std::clamp(0.5 + slope * t / (2.0 * c), 0.5, 1.0);
}

double ascend(const CompoundGraph& k, Configuration& cfg, double c) {
    for (int sweep = 0; sweep < 500; ++sweep) {
        double moved = 0.0;
        for (Vertex v = 0; v < cfg.phi_b.size(); ++v) {
            const double next = best_phi(k, cfg, c, v);
            moved = std::max(moved, std::fabs(next - cfg.phi_b[v]));
            cfg.phi_b[v] = next;
        }
        if (moved < 1e-14) break;
    }
    return weight_value(k, cfg, c);
}

// Best-improvement sweeps over phi and patterns until nothing moves.
void polish(const CompoundGraph& k, Configuration& cfg, double c) {
    for (int round = 0; round < 200; ++round) {
        bool improved = false;
        for (Vertex v = 0; v < cfg.phi_b.size(); ++v) {
            const double before = local_value(k, cfg, c, v);
            const double old = cfg.phi_b[v];
            cfg.phi_b[v] = best_phi(k, cfg, c, v);
            if (local_value(k, cfg, c, v) > before + 1e-15)
                improved = true;
            else
                cfg.phi_b[v] = old;
        }
        for (EdgeId e = 0; e < k.edge_count(); ++e) {
            const auto [u, w] = k.edges()[e];
            const double coef = k.edge_coefficient(e, c);
            const double current = coef * captured_fraction(cfg.pattern[e], cfg.phi_b[u], cfg.phi_b[w]);
            double best = current;
            std::uint8_t pick = cfg.pattern[e];
            for (std::uint8_t p : kPatterns) {
                const double value = coef * captured_fraction(p, cfg.phi_b[u], cfg.phi_b[w]);
                if (value > best + 1e-15 && detail::etf_with(k, cfg.pattern, e, p)) {
                    best = value;
                    pick = p;
                }
            }
            if (pick != cfg.pattern[e]) {
                cfg.pattern[e] = pick;
                improved = true;
            }
        }
        if (!improved) break;
    }
}

Configuration greedy_big(const CompoundGraph& k, double c) {
    Configuration cfg;
    cfg.pattern.assign(k.edge_count(), 0);
    cfg.phi_b.assign(k.base().graph.order(), 1.0);
    cfg.vertex_edge.assign(k.base().graph.order(), true);
    std::vector<EdgeId> order(k.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return k.edge_coefficient(a, c) > k.edge_coefficient(b, c); });
    for (EdgeId e : order)
        if (detail::etf_with(k, cfg.pattern, e, lift::bb)) cfg.pattern[e] = lift::bb;
    return cfg;
}

class Annealer {
public:
    Annealer(const CompoundGraph& k, double c, std::uint64_t seed) : k_(k), c_(c), rng_(seed) {
        for (EdgeId e = 0; e < k.edge_count(); ++e) max_coef_ = std::max(max_coef_, k.edge_coefficient(e, c));
    }

    Configuration run(Configuration cfg, std::size_t iterations) {
        double value = weight_value(k_, cfg, c_);
        Configuration best = cfg;
        double best_value = value;
        const double t0 = std::max(max_coef_, 1e-12) * 0.25;
        const double t1 = t0 * 1e-4;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> edge_pick(0, k_.edge_count() - 1);
        std::uniform_int_distribution<std::size_t> vertex_pick(0, cfg.phi_b.size() - 1);
        std::uniform_int_distribution<std::size_t> pattern_pick(0, kPatterns.size() - 1);
        for (std::size_t i = 0; i < iterations; ++i) {
            const double temp = t0 * std::pow(t1 / t0, static_cast<double>(i) / static_cast<double>(iterations));
            if (unit(rng_) < 0.75) {
                const EdgeId e = static_cast<EdgeId>(edge_pick(rng_));
                const std::uint8_t p = kPatterns[pattern_pick(rng_)];
                if (p == cfg.pattern[e]) continue;
                const auto [u, w] = k_.edges()[e];
                const double coef = k_.edge_coefficient(e, c_);
                const double delta = coef * (captured_fraction(p, cfg.phi_b[u], cfg.phi_b[w]) -
                                             captured_fraction(cfg.pattern[e], cfg.phi_b[u], cfg.phi_b[w]));
                if (delta < 0.0 && unit(rng_) >= std::exp(delta / temp)) continue;
                if (!detail::etf_with(k_, cfg.pattern, e, p)) continue;
                cfg.pattern[e] = p;
                value += delta;
            } else {
                const Vertex v = static_cast<Vertex>(vertex_pick(rng_));
                const double before = local_value(k_, cfg, c_, v);
                cfg.phi_b[v] = best_phi(k_, cfg, c_, v);
                value += local_value(k_, cfg, c_, v) - before;
            }
            if (value > best_value + 1e-12) {
                best_value = value;
                best = cfg;
            }
        }
        return best;
    }

private:
    const CompoundGraph& k_;
    double c_;
    std::mt19937_64 rng_;
    double max_coef_ = 0.0;
};

}  // namespace

void optimize_phi(const CompoundGraph& k, Configuration& cfg, double c, std::uint64_t seed, std::size_t starts) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.5, 1.0);
    Configuration best = cfg;
    double best_value = ascend(k, best, c);
    for (std::size_t s = 0; s < starts; ++s) {
        Configuration trial = cfg;
        for (double& p : trial.phi_b) p = s == 0 ? 0.5 : s == 1 ? 1.0 : unit(rng);
        const double value = ascend(k, trial, c);
        if (value > best_value) {
            best_value = value;
            best = std::move(trial);
        }
    }
    cfg.phi_b = best.phi_b;
}

ProbeResult probe_fairness(const CompoundGraph& k, double c, const ProbeOptions& opts) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0,1]");
    std::vector<Configuration> starts;
    starts.push_back(naive_configuration(k));
    starts.push_back(greedy_big(k, c));
    for (std::size_t s = 0; s < opts.random_starts; ++s)
        starts.push_back(random_configuration(k, opts.seed * 1000003 + s + 1));
    const std::size_t per_start = std::max<std::size_t>(1, opts.budget / starts.size());

    ProbeResult out;
    out.best = starts.front();
    out.value = weight_value(k, out.best, c);
    for (std::size_t s = 0; s < starts.size(); ++s) {
        Annealer annealer(k, c, opts.seed * 7919 + s);
        Configuration cfg = annealer.run(starts[s], per_start);
        polish(k, cfg, c);
        optimize_phi(k, cfg, c, opts.seed + s);
        polish(k, cfg, c);
        const double value = weight_value(k, cfg, c);
        if (value > out.value) {
            out.value = value;
            out.best = std::move(cfg);
        }
    }
    if (!validate(k, out.best).empty()) throw std::logic_error("fairness probe produced an invalid configuration");
    out.value = weight_c(k, out.best, c).w_c;
    out.disproves_fairness = out.value > 0.5 + 1e-9;
    return out;
}

namespace {

struct Quadratic {
    std::size_t n = 0;
    double constant = 0.0;
    std::vector<double> g, h;  // f = constant + g.phi + phi.H.phi / 2, H row-major
};

Quadratic weight_quadratic(const CompoundGraph& k, const std::vector<std::uint8_t>& pattern, double c) {
    Quadratic q;
    q.n = k.base().graph.order();
    q.g.assign(q.n, 0.0);
    q.h.assign(q.n * q.n, 0.0);
    for (EdgeId e = 0; e < k.edge_count(); ++e) {
        const auto [u, w] = k.edges()[e];
        const double coef = k.edge_coefficient(e, c);
        for (int xu = 0; xu < 2; ++xu)
            for (int xw = 0; xw < 2; ++xw) {
                if (!((pattern[e] >> (2 * xu + xw)) & 1u)) continue;
                // phi(u^x) = cu + su phi_b[u]
                const double su = xu ? -1.0 : 1.0, cu = xu ? 1.0 : 0.0;
                const double sw = xw ? -1.0 : 1.0, cw = xw ? 1.0 : 0.0;
                q.constant += coef * cu * cw;
                q.g[u] += coef * su * cw;
                q.g[w] += coef * cu * sw;
                q.h[u * q.n + w] += coef * su * sw;
                q.h[w * q.n + u] += coef * su * sw;
            }
    }
    const double vc = c / static_cast<double>(k.t());
    for (std::size_t v = 0; v < q.n; ++v) {
        q.g[v] += vc;
        q.h[v * q.n + v] -= 2.0 * vc;
    }
    return q;
}

// Stationary points of f on every face of [1/2,1]^n; the best one is the
// maximum over the box.
std::vector<double> maximize_on_box(const Quadratic& q, const std::vector<std::uint8_t>& pattern,
                                    const CompoundGraph& k, double c, double& best_value) {
    const std::size_t n = q.n;
    std::size_t faces = 1;
    for (std::size_t i = 0; i < n; ++i) faces *= 3;
    std::vector<double> best_phi(n, 0.5), phi(n);
    best_value = -1.0;
    Configuration probe;
    probe.pattern = pattern;
    probe.vertex_edge.assign(n, true);
    std::vector<std::size_t> free;
    std::vector<double> a, rhs;
    for (std::size_t code = 0; code < faces; ++code) {
        free.clear();
        std::size_t cc = code;
        for (std::size_t i = 0; i < n; ++i, cc /= 3) {
            const std::size_t state = cc % 3;
            if (state == 2)
                free.push_back(i);
            else
                phi[i] = state == 0 ? 0.5 : 1.0;
        }
        const std::size_t f = free.size();
        bool ok = true;
        if (f > 0) {
            a.assign(f * f, 0.0);
            rhs.assign(f, 0.0);
            for (std::size_t r = 0; r < f; ++r) {
                rhs[r] = -q.g[free[r]];
                for (std::size_t j = 0; j < n; ++j) {
                    const bool is_free = std::find(free.begin(), free.end(), j) != free.end();
                    if (!is_free) rhs[r] -= q.h[free[r] * n + j] * phi[j];
                }
                for (std::size_t s = 0; s < f; ++s) a[r * f + s] = q.h[free[r] * n + free[s]];
            }
            for (std::size_t col = 0; col < f && ok; ++col) {
                std::size_t piv = col;
                for (std::size_t r = col + 1; r < f; ++r)
                    if (std::fabs(a[r * f + col]) > std::fabs(a[piv * f + col])) piv = r;
                if (std::fabs(a[piv * f + col]) < 1e-13) {
                    ok = false;
                    break;
                }
                if (piv != col) {
                    for (std::size_t s = 0; s < f; ++s) std::swap(a[piv * f + s], a[col * f + s]);
                    std::swap(rhs[piv], rhs[col]);
                }
                for (std::size_t r = 0; r < f; ++r) {
                    if (r == col) continue;
                    const double factor = a[r * f + col] / a[col * f + col];
                    if (factor == 0.0) continue;
                    for (std::size_t s = col; s < f; ++s) a[r * f + s] -= factor * a[col * f + s];
                    rhs[r] -= factor * rhs[col];
                }
            }
            for (std::size_t r = 0; r < f && ok; ++r) {
                const double x = rhs[r] / a[r * f + r];
                if (x < 0.5 - 1e-9 || x > 1.0 + 1e-9) ok = false;
                phi[free[r]] = std::clamp(x, 0.5, 1.0);
            }
        }
        if (!ok) continue;
        probe.phi_b = phi;
        const double value = weight_value(k, probe, c);
        if (value > best_value) {
            best_value = value;
            best_phi = phi;
        }
    }
    return best_phi;
}

}  // namespace

OracleResult exhaustive_oracle(const CompoundGraph& k, double c, const OracleOptions& opts) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0,1]");
    if (k.edge_count() > opts.max_edges || k.t() > opts.max_t)
        throw std::invalid_argument("exhaustive oracle size cap: K has " + std::to_string(k.edge_count()) +
                                    " edges and t = " + std::to_string(k.t()));
    if (opts.phi_values)
        for (double p : *opts.phi_values)
            if (!(p >= 0.5 && p <= 1.0)) throw std::invalid_argument("phi grid values must lie in [1/2,1]");
    const std::size_t edges = k.edge_count();
    const std::size_t n = k.base().graph.order();
    OracleResult out;
    out.value = -1.0;
    std::vector<std::size_t> digit(edges, 0);
    std::vector<std::uint8_t> pattern(edges, kPatterns[0]);
    Configuration cfg;
    cfg.vertex_edge.assign(n, true);
    for (;;) {
        bool etf = true;
        for (EdgeId e = 0; e < edges && etf; ++e) etf = detail::etf_with(k, pattern, e, pattern[e]);
        if (etf) {
            ++out.candidates;
            cfg.pattern = pattern;
            if (opts.phi_values) {
                const auto& vals = *opts.phi_values;
                std::vector<std::size_t> idx(n, 0);
                cfg.phi_b.assign(n, vals.front());
                for (;;) {
                    for (std::size_t v = 0; v < n; ++v) cfg.phi_b[v] = vals[idx[v]];
                    const double value = weight_value(k, cfg, c);
                    if (value > out.value) {
                        out.value = value;
                        out.argmax = cfg;
                    }
                    std::size_t pos = 0;
                    while (pos < n && ++idx[pos] == vals.size()) idx[pos++] = 0;
                    if (pos == n) break;
                }
            } else {
                double value = 0.0;
                cfg.phi_b = maximize_on_box(weight_quadratic(k, pattern, c), pattern, k, c, value);
                if (value > out.value) {
                    out.value = value;
                    out.argmax = cfg;
                }
            }
        }
        std::size_t pos = 0;
        while (pos < edges && ++digit[pos] == kPatterns.size()) {
            digit[pos] = 0;
            pattern[pos] = kPatterns[0];
            ++pos;
        }
        if (pos == edges) break;
        pattern[pos] = kPatterns[digit[pos]];
    }
    return out;
}

}  // namespace tuza
