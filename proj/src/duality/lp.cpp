#include "tuza/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tuza/simd.hpp"

namespace tuza {

LpSolution solve_packing_lp(const PackingLp& lp, const LpOptions& opts) {
    const std::size_t m = lp.rows;
    const std::size_t nstruct = lp.columns.size();
    const std::size_t ntotal = nstruct + m;  // slacks follow the structural columns
    for (const auto& col : lp.columns)
        for (std::uint32_t r : col)
            if (r >= m) throw std::invalid_argument("LP column references a missing row");

    LpSolution sol;
    sol.x.assign(nstruct, 0.0);
    sol.y.assign(m, 0.0);
    if (m == 0 || nstruct == 0) return sol;

    const simd::Kernels& k = simd::active();
    std::vector<double> binv(m * m, 0.0);  // row-major B^-1
    for (std::size_t i = 0; i < m; ++i) binv[i * m + i] = 1.0;
    std::vector<std::size_t> basis(m);
    std::vector<char> in_basis(ntotal, 0);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = nstruct + i;
        in_basis[nstruct + i] = 1;
    }
    std::vector<double> xb(m, 1.0), cb(m, 0.0), y(m), alpha(m);
    const std::size_t cap = opts.iteration_cap ? opts.iteration_cap : 50 * (ntotal + m) + 1000;
    std::size_t degenerate_streak = 0;

    const auto compute_y = [&] {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (cb[i] != 0.0) k.axpy(cb[i], &binv[i * m], y.data(), m);
    };

    for (;;) {
        compute_y();
        const bool bland = degenerate_streak >= opts.degenerate_streak_for_bland;
        std::size_t enter = ntotal;
        double best = opts.optimality_tolerance;
        for (std::size_t j = 0; j < ntotal; ++j) {
            if (in_basis[j]) continue;
            double d;
            if (j < nstruct) {
                d = 1.0;
                for (std::uint32_t r : lp.columns[j]) d -= y[r];
            } else {
                d = -y[j - nstruct];
            }
            if (d > best) {
                enter = j;
                if (bland) break;
                best = d;
            }
        }
        if (enter == ntotal) break;
        if (++sol.iterations > cap) throw std::runtime_error("LP iteration cap reached after " + std::to_string(cap) + " pivots");

        std::fill(alpha.begin(), alpha.end(), 0.0);
        if (enter < nstruct) {
            for (std::uint32_t r : lp.columns[enter])
                for (std::size_t i = 0; i < m; ++i) alpha[i] += binv[i * m + r];
        } else {
            const std::size_t r = enter - nstruct;
            for (std::size_t i = 0; i < m; ++i) alpha[i] = binv[i * m + r];
        }

        std::size_t leave = m;
        double ratio = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (alpha[i] <= opts.pivot_tolerance) continue;
            const double r = std::max(xb[i], 0.0) / alpha[i];
            bool take = leave == m || r < ratio - 1e-12;
            if (!take && std::fabs(r - ratio) <= 1e-12)
                take = bland ? basis[i] < basis[leave] : alpha[i] > alpha[leave];
            if (take) {
                leave = i;
                ratio = r;
            }
        }
        if (leave == m) throw std::runtime_error("packing LP reported unbounded; the constraint matrix is malformed");
        degenerate_streak = ratio <= 1e-12 ? degenerate_streak + 1 : 0;

        const double piv = alpha[leave];
        double* prow = &binv[leave * m];
        for (std::size_t j = 0; j < m; ++j) prow[j] /= piv;
        xb[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || alpha[i] == 0.0) continue;
            k.axpy(-alpha[i], prow, &binv[i * m], m);
            xb[i] -= alpha[i] * xb[leave];
        }
        in_basis[basis[leave]] = 0;
        basis[leave] = enter;
        in_basis[enter] = 1;
        cb[leave] = enter < nstruct ? 1.0 : 0.0;
    }

    compute_y();
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < nstruct) sol.x[basis[i]] = std::max(xb[i], 0.0);
    sol.y = y;
    for (double v : sol.x) sol.primal_value += v;
    std::vector<double> load(m, 0.0);
    for (std::size_t j = 0; j < nstruct; ++j) {
        double cover = 0.0;
        for (std::uint32_t r : lp.columns[j]) {
            load[r] += sol.x[j];
            cover += y[r];
        }
        sol.max_dual_violation = std::max(sol.max_dual_violation, 1.0 - cover);
    }
    for (std::size_t i = 0; i < m; ++i) {
        sol.dual_value += y[i];
        sol.max_primal_violation = std::max(sol.max_primal_violation, load[i] - 1.0);
        sol.max_dual_violation = std::max(sol.max_dual_violation, -y[i]);
    }
    return sol;
}

}  // namespace tuza
