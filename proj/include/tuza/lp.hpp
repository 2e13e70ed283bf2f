#pragma once
// Revised simplex for 0/1 packing LPs: max 1'x subject to A x <= 1, x >= 0.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tuza {

struct PackingLp {
    std::size_t rows = 0;
    /// Row indices of the ones in each column (sorted, distinct).
    std::vector<std::vector<std::uint32_t>> columns;
};

struct LpSolution {
    double primal_value = 0.0;
    double dual_value = 0.0;
    std::vector<double> x;  // one per column
    std::vector<double> y;  // one per row; feasible for min 1'y, A'y >= 1, y >= 0
    std::size_t iterations = 0;
    double max_primal_violation = 0.0;  // max over rows of (A x)_i - 1, clipped at 0
    double max_dual_violation = 0.0;    // max over columns of 1 - (A'y)_j and over rows of -y_i
};

struct LpOptions {
    double pivot_tolerance = 1e-9;
    double optimality_tolerance = 1e-9;
    std::size_t degenerate_streak_for_bland = 50;
    std::size_t iteration_cap = 0;  // 0: derived from the problem size
};

/// Throws std::runtime_error when the iteration cap is reached.
LpSolution solve_packing_lp(const PackingLp& lp, const LpOptions& opts = {});

}  // namespace tuza
