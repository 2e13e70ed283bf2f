#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tuza/simd.hpp"
#include "tuza/spectral.hpp"

namespace tuza {

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "index,eigenvalue\n";
    out.precision(17);
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) out << i << ',' << s.eigenvalues[i] << '\n';
}

MixingReport check_mixing(const Graph& h, const Spectrum& spectrum, std::size_t trials, std::uint64_t seed) {
    if (!h.is_regular() || !spectrum.degree) throw std::invalid_argument("mixing check needs a regular graph");
    const std::size_t t = h.order();
    const double d = static_cast<double>(*spectrum.degree);
    const double lambda = spectrum.lambda;
    const double tol = 1e-9;
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(t);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::vector<std::uint64_t> mask_a(h.words()), mask_b(h.words());

    MixingReport r;
    r.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const std::size_t a = std::uniform_int_distribution<std::size_t>(0, t)(rng);
        const std::size_t b = std::uniform_int_distribution<std::size_t>(0, t - a)(rng);
        std::fill(mask_a.begin(), mask_a.end(), 0);
        std::fill(mask_b.begin(), mask_b.end(), 0);
        for (std::size_t i = 0; i < a; ++i) mask_a[perm[i] >> 6] |= std::uint64_t{1} << (perm[i] & 63);
        for (std::size_t i = a; i < a + b; ++i) mask_b[perm[i] >> 6] |= std::uint64_t{1} << (perm[i] & 63);
        std::size_t cut = 0, inside2 = 0;
        for (std::size_t i = 0; i < a; ++i) {
            cut += simd::and_popcount(h.row(perm[i]), mask_b);
            inside2 += simd::and_popcount(h.row(perm[i]), mask_a);
        }
        const double da = static_cast<double>(a), db = static_cast<double>(b);
        const double cut_margin = std::fabs(static_cast<double>(cut) - da * db * d / static_cast<double>(t)) - lambda * std::sqrt(da * db);
        const double inside_margin =
            std::fabs(static_cast<double>(inside2) / 2.0 - da * da * d / (2.0 * static_cast<double>(t))) - lambda * da / 2.0;
        r.worst_cut_margin = std::max(r.worst_cut_margin, cut_margin);
        r.worst_inside_margin = std::max(r.worst_inside_margin, inside_margin);
        if (cut_margin > tol || inside_margin > tol) ++r.violations;
    }
    return r;
}

WeightedKMatrix WeightedKMatrix::from_regular(const Graph& h, double c) {
    if (!h.is_regular() || h.order() == 0) throw std::invalid_argument("weighted K matrix needs a nonempty regular H");
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0,1]");
    WeightedKMatrix wk;
    wk.t = h.order();
    wk.d = h.degree(0);
    wk.c = c;
    const double t = static_cast<double>(wk.t);
    wk.p = wk.d ? (1.0 - c) / (2.0 * t * static_cast<double>(wk.d)) : 0.0;
    wk.q = (1.0 - c) / (2.0 * t * t);
    wk.base = double_of(h);
    return wk;
}

std::vector<double> WeightedKMatrix::dense_n() const {
    const std::size_t n = 2 * t;
    std::vector<double> m(n * n, 0.0);
    base.graph.for_each_edge([&](Vertex u, Vertex v) {
        const double w = base.edge_type(u, v) == EdgeType::external ? q : p;
        m[u * n + v] = w;
        m[v * n + u] = w;
    });
    return m;
}

std::vector<double> WeightedKMatrix::dense_t() const {
    const std::size_t n = 2 * t;
    std::vector<double> m(n * n, 0.0);
    if (z_edges)
        for (const auto& [u, v] : *z_edges) {
            m[u * n + v] = 1.0;
            m[v * n + u] = 1.0;
        }
    return m;
}

Spectrum n_matrix_spectrum_closed_form(const WeightedKMatrix& wk, const Spectrum& h_spectrum) {
    if (!h_spectrum.degree) throw std::invalid_argument("closed form needs a regular H");
    if (h_spectrum.eigenvalues.size() != wk.t) throw std::invalid_argument("spectrum does not match t");
    const double pd = wk.p * static_cast<double>(wk.d);
    const double qt = wk.q * static_cast<double>(wk.t);
    Spectrum s;
    s.eigenvalues = {pd + qt, pd - qt};
    for (std::size_t i = 1; i < wk.t; ++i) {
        s.eigenvalues.push_back(wk.p * h_spectrum.eigenvalues[i]);
        s.eigenvalues.push_back(wk.p * h_spectrum.eigenvalues[i]);
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) s.lambda = std::max(s.lambda, std::fabs(s.eigenvalues[i]));
    s.lambda_nontrivial = s.lambda;
    return s;
}

double n_shifted_min_eigenvalue(const WeightedKMatrix& wk, double shift) {
    const std::size_t n = 2 * wk.t;
    std::vector<double> m = wk.dense_n();
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += shift;
    return symmetric_eigenvalues(std::move(m), n).back();
}

std::size_t t_matrix_row_bound(const SidedGraph& k, std::span<const Edge> z) {
    std::vector<std::size_t> deg(k.graph.order(), 0);
    for (const auto& [u, v] : z) {
        if (u >= k.graph.order() || v >= k.graph.order() || !k.graph.has_edge(u, v))
            throw std::invalid_argument("Z contains a pair that is not an edge of K");
        if (k.edge_type(u, v) != EdgeType::external) throw std::invalid_argument("Z contains a non-external edge");
        ++deg[u];
        ++deg[v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace tuza
