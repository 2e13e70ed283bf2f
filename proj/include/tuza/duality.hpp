#pragma once
// Triangle packing and covering: exact nu3 / tau3 by branch and bound and the
// fractional pair nu3* = tau3* by linear programming.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tuza/graph.hpp"

namespace tuza {

inline constexpr std::size_t kDefaultTriangleCap = 100'000;

struct PackingResult {
    double value = 0.0;
    std::vector<std::pair<std::uint32_t, double>> support;  // (triangle id, weight)
    std::vector<double> certificate;                        // dual cover weights per edge (fractional only)
    std::size_t nodes = 0;                                  // search nodes or LP pivots
};

struct CoverResult {
    double value = 0.0;
    std::vector<std::pair<EdgeId, double>> support;  // (edge id, weight)
    std::size_t nodes = 0;
};

struct SolverCaps {
    std::size_t max_triangles = kDefaultTriangleCap;
    std::size_t max_nodes = 50'000'000;
};

/// Thrown when an instance exceeds the configured caps.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PackingResult nu3_exact(const TriangleSystem& ts, const SolverCaps& caps = {});
CoverResult tau3_exact(const TriangleSystem& ts, const SolverCaps& caps = {});

struct FractionalPair {
    PackingResult packing;  // nu3*, with the dual as certificate
    CoverResult cover;      // tau3*
    double gap = 0.0;       // |nu3* - tau3*|
};

/// Solves the packing LP; the cover is read from its dual. Both are checked
/// for feasibility and the objective gap is reported.
FractionalPair lp_fractional(const TriangleSystem& ts, const SolverCaps& caps = {});
PackingResult lp_packing(const TriangleSystem& ts, const SolverCaps& caps = {});
CoverResult lp_cover(const TriangleSystem& ts, const SolverCaps& caps = {});

struct TuzaReport {
    std::size_t triangles = 0;
    std::size_t tau3 = 0;
    std::size_t nu3 = 0;
    double tau3_star = 0.0;
    double nu3_star = 0.0;
    std::optional<double> ratio;  // absent when nu3 = 0
    double runtime_ms = 0.0;
};

/// Exact and fractional values with the sandwich nu3 <= nu3* = tau3* <= tau3
/// checked (std::logic_error when it fails).
TuzaReport tuza_report(const Graph& g, const SolverCaps& caps = {});

struct PaperCover {
    CoverResult cover;
    std::size_t vertex_edges = 0;
    std::size_t external_edges = 0;
    bool full_scan = false;  // every triangle summed, not just the all-internal candidates
};

/// Weight 1 on vertex edges and 1/2 on external edges of a blown-up double.
/// Throws std::logic_error naming a triangle that receives less than 1.
PaperCover paper_fractional_cover(const SidedGraph& ga, bool with_support = false,
                                  std::size_t full_scan_max_order = 200);

}  // namespace tuza
