#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "tuza/simd.hpp"
#include "tuza/spectral.hpp"

namespace tuza {

namespace {

// Reduces the symmetric matrix to tridiagonal form in place. On return diag
// holds the diagonal and off[i] the entry between rows i and i+1.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag, std::vector<double>& off) {
    diag.assign(n, 0.0);
    off.assign(n, 0.0);
    std::vector<double> v(n), p(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;  // length of the column below the diagonal
        double* v0 = v.data() + k + 1;
        double* p0 = p.data() + k + 1;
        for (std::size_t i = 0; i < m; ++i) v0[i] = a[(k + 1 + i) * n + k];
        const double norm = std::sqrt(simd::active().dot(v0, v0, m));
        diag[k] = a[k * n + k];
        if (norm == 0.0) {
            off[k] = 0.0;
            continue;
        }
        const double alpha = v0[0] > 0 ? -norm : norm;
        off[k] = alpha;
        v0[0] -= alpha;
        const double vnorm = std::sqrt(simd::active().dot(v0, v0, m));
        if (vnorm == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) v0[i] /= vnorm;

        // A22 <- (I - 2vv')A22(I - 2vv') via p = A22 v, w = p - (v'p) v.
        for (std::size_t i = 0; i < m; ++i) p0[i] = simd::active().dot(&a[(k + 1 + i) * n + k + 1], v0, m);
        const double vp = simd::active().dot(v0, p0, m);
        simd::active().axpy(-vp, v0, p0, m);
        for (std::size_t i = 0; i < m; ++i) {
            double* row = &a[(k + 1 + i) * n + k + 1];
            simd::active().axpy(-2.0 * v0[i], p0, row, m);
            simd::active().axpy(-2.0 * p0[i], v0, row, m);
        }
    }
    if (n >= 2) {
        diag[n - 2] = a[(n - 2) * n + n - 2];
        off[n - 2] = a[(n - 1) * n + n - 2];
    }
    if (n >= 1) diag[n - 1] = a[(n - 1) * n + n - 1];
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m == l) break;
            if (++iter > 200) throw std::runtime_error("tridiagonal QL failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n, std::size_t cap) {
    if (n > cap) throw std::length_error("dense eigensolve of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (a.size() != n * n) throw std::invalid_argument("matrix size does not match order");
    std::vector<double> diag, off;
    tridiagonalize(a, n, diag, off);
    tridiagonal_ql(diag, off);
    std::sort(diag.begin(), diag.end(), std::greater<>());
    return diag;
}

Spectrum eigen_spectrum(const Graph& g, std::size_t cap) {
    const std::size_t n = g.order();
    if (n > cap) throw std::length_error("graph of order " + std::to_string(n) + " exceeds the dense eigensolver cap");
    std::vector<double> a(n * n, 0.0);
    g.for_each_edge([&](Vertex u, Vertex v) {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    });
    Spectrum s;
    s.eigenvalues = symmetric_eigenvalues(std::move(a), n, cap);
    if (g.is_regular() && n > 0) s.degree = g.degree(0);
    for (std::size_t i = 1; i < n; ++i) s.lambda = std::max(s.lambda, std::fabs(s.eigenvalues[i]));

    s.bipartite = g.size() > 0 && g.is_bipartite();
    const std::size_t last = s.bipartite ? n - 1 : n;
    for (std::size_t i = 1; i < last; ++i) s.lambda_nontrivial = std::max(s.lambda_nontrivial, std::fabs(s.eigenvalues[i]));
    return s;
}

}  // namespace tuza
