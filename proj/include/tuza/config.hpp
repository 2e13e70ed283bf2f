#pragma once
// Configurations on K+ = K . E: validity, c-weight, fairness probing and the
// canonicalization of triangle-free subgraphs of a blown-up double.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tuza/f2.hpp"
#include "tuza/graph.hpp"

namespace tuza {

/// Membership of the four lifts of a K-edge uw (u < w) in F.
namespace lift {
inline constexpr std::uint8_t bb = 1;  // u^b w^b
inline constexpr std::uint8_t bs = 2;  // u^b w^s
inline constexpr std::uint8_t sb = 4;  // u^s w^b
inline constexpr std::uint8_t ss = 8;  // u^s w^s
}  // namespace lift

/// The seven masks that keep N(v^b) and N(v^s) disjoint on a single edge.
inline constexpr std::array<std::uint8_t, 7> kPatterns = {
    0, lift::bb, lift::ss, lift::bb | lift::ss, lift::bs, lift::sb, lift::bs | lift::sb};

bool is_allowed_pattern(std::uint8_t mask);
/// Class 1..4: bb+ss, bb, bs+sb, anything else.
int edge_class(std::uint8_t mask);
/// Finer label: "1", "2", "2'" (ss), "3", "3a" (bs), "3b" (sb), "4" (empty) or "x" (not allowed).
std::string refined_label(std::uint8_t mask);

/// K = K_{H,H} with the K-edge universe indexed and the external triangles
/// through each K-edge listed.
class CompoundGraph {
public:
    explicit CompoundGraph(const Graph& h);
    explicit CompoundGraph(SidedGraph k);

    const SidedGraph& base() const { return k_; }
    std::size_t t() const { return k_.x_count; }
    std::size_t m() const { return m_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeIndex& edges() const { return edges_; }
    EdgeType type(EdgeId e) const { return types_[e]; }
    /// Incident (neighbor, edge id) pairs of a K-vertex.
    const std::vector<std::pair<Vertex, EdgeId>>& incident(Vertex v) const { return incident_[v]; }
    /// For K-edge e, the other two edges of each external triangle through e.
    const std::vector<std::array<EdgeId, 2>>& triangles_through(EdgeId e) const { return through_[e]; }
    std::size_t external_triangle_count() const { return triangle_count_; }
    /// Edge weight in the c-weight: (1-c)/(4m) internal, (1-c)/(2t^2) external.
    double edge_coefficient(EdgeId e, double c) const;

private:
    void index();

    SidedGraph k_;
    std::size_t m_ = 0;
    EdgeIndex edges_;
    std::vector<EdgeType> types_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> incident_;
    std::vector<std::vector<std::array<EdgeId, 2>>> through_;
    std::size_t triangle_count_ = 0;
};

/// F stored per K-edge as a lift mask; phi_b is the mass on v^b.
struct Configuration {
    std::vector<std::uint8_t> pattern;
    std::vector<double> phi_b;
    std::vector<bool> vertex_edge;  // v^b v^s in F

    double delta(Vertex v) const { return phi_b[v] - 0.5; }
};

enum class ViolationKind { shape, missing_vertex_edge, common_neighbor, external_triangle, mass };

struct Violation {
    ViolationKind kind;
    std::string detail;
    std::vector<Vertex> witness;  // K+ vertex ids (2v for v^b, 2v+1 for v^s)
};

inline Vertex big(Vertex v) { return 2 * v; }
inline Vertex small(Vertex v) { return 2 * v + 1; }

/// F as a subgraph of K+, sides inherited from K and blocks {v^b, v^s}.
SidedGraph configuration_graph(const CompoundGraph& k, const Configuration& cfg);

/// Empty when cfg is a configuration. Checks shape, vertex edges, the
/// common-neighbor condition, external triangles (via crossing_triangles on F)
/// and the mass bounds.
std::vector<Violation> validate(const CompoundGraph& k, const Configuration& cfg);

Configuration naive_configuration(const CompoundGraph& k);
/// Random ETF patterns (assigned in random edge order, falling back to the
/// empty pattern on conflict) and phi_b uniform on [1/2, 1].
Configuration random_configuration(const CompoundGraph& k, std::uint64_t seed);

/// Fraction of the weight of K-edge uw captured: sum of phi(u^x) phi(w^y) over the lifts in mask.
double captured_fraction(std::uint8_t mask, double phi_u, double phi_w);

struct WeightReport {
    double c = 0.0;
    double w_c = 0.0;           // the three-sum definition
    double w_c_identity = 0.0;  // 1/2 + ((1-c)/2)(gamma_i + gamma_e) - (c/t) sum delta^2
    double zeta_i = 0.0, zeta_e = 0.0;
    double gamma_i = 0.0, gamma_e = 0.0;
    double vertex_loss = 0.0;      // (c/t) sum delta_v^2
    std::vector<double> edge_gain;  // per K-edge, weighted by its coefficient
    std::array<std::size_t, 4> class_counts{};
};

/// Throws std::invalid_argument on an invalid configuration and
/// std::logic_error when the two evaluations disagree beyond 1e-12.
WeightReport weight_c(const CompoundGraph& k, const Configuration& cfg, double c);

/// w_c without validation or the identity cross-check.
double weight_value(const CompoundGraph& k, const Configuration& cfg, double c);

/// Checks w_c = ((1-c)/2) Q_i + ((1-c)/2) Q_e + c Q_v at both c and Q_v <= 1/2,
/// then returns w_{c2} <= max(w_{c1}, 1/2).
bool fairness_monotonicity_check(const CompoundGraph& k, const Configuration& cfg, double c1, double c2);

/// Class 1 or 2 edges of K.
EdgeVector gamma_vector(const CompoundGraph& k, const Configuration& cfg);
/// Class 1, 2 or 3 edges of K.
EdgeVector class123_vector(const CompoundGraph& k, const Configuration& cfg);
/// Gamma has even intersection with every external triangle of its class 1-3 subgraph.
bool gamma_orthogonal(const CompoundGraph& k, const Configuration& cfg);

struct ProbeOptions {
    std::size_t budget = 100'000;  // annealing iterations per start
    std::size_t random_starts = 2;
    std::uint64_t seed = 0;
};

struct ProbeResult {
    Configuration best;
    double value = 0.0;
    bool disproves_fairness = false;  // value > 1/2 + 1e-9 and re-validated
};

/// Simulated annealing over per-edge patterns with closed-form phi
/// coordinate ascent, started from the naive configuration, a greedy all-big
/// configuration and random configurations.
ProbeResult probe_fairness(const CompoundGraph& k, double c, const ProbeOptions& opts = {});

/// Best phi for fixed patterns: coordinate ascent from several starts.
void optimize_phi(const CompoundGraph& k, Configuration& cfg, double c, std::uint64_t seed, std::size_t starts = 8);

struct OracleOptions {
    /// When set, phi_b ranges over these values only (grid search); otherwise
    /// phi is maximised exactly over [1/2,1]^V by enumerating active sets.
    std::optional<std::vector<double>> phi_values;
    std::size_t max_edges = 8;
    std::size_t max_t = 3;
};

struct OracleResult {
    double value = 0.0;
    Configuration argmax;
    std::size_t candidates = 0;  // ETF pattern assignments examined
};

OracleResult exhaustive_oracle(const CompoundGraph& k, double c, const OracleOptions& opts = {});

/// Weights of K . K_eta edges: vertex c/(t eta^2), internal (1-c)/(4 m eta^2),
/// external (1-c)/(2 t^2 eta^2).
struct CanonWeights {
    double vertex = 0.0, internal = 0.0, external = 0.0;
    static CanonWeights from(const CompoundGraph& k, std::size_t eta, double c);
    double of(EdgeType type) const;
};

double total_weight(const SidedGraph& f, const CanonWeights& w);

struct CanonicalForm {
    SidedGraph f;
    std::vector<std::vector<Vertex>> s, t;  // per block
    double weight_before = 0.0, weight_after = 0.0;
};

/// Steps 1-5 on each block in ascending order; ties go to the lowest id.
/// Throws std::invalid_argument when f_tilde has a triangle or no blocks.
CanonicalForm canonicalize(const SidedGraph& f_tilde, const CanonWeights& w);

/// Observation checkers, each recomputed from the graph alone.
bool check_weight_not_decreased(const CanonicalForm& cf, const CanonWeights& w);
bool check_triangle_free(const CanonicalForm& cf);
/// Every block induces a complete bipartite graph on all of its vertices, or nothing.
bool check_blocks_complete_bipartite(const SidedGraph& f);
/// Within each block side the neighborhoods agree.
bool check_twins(const SidedGraph& f);

/// Block sides derived from the graph: S = neighbors of the lowest vertex
/// with a block neighbor (empty when the block has no edges).
std::pair<std::vector<Vertex>, std::vector<Vertex>> block_sides(const SidedGraph& f, Vertex block);

/// R_v = larger side (S on a tie) becomes v^b with phi_b = |R_v|/eta.
/// Throws std::invalid_argument when f is not canonical.
Configuration collapse_to_configuration(const CompoundGraph& k, const SidedGraph& f);

/// Random maximal triangle-free subgraph of K . K_eta, edges added in random order.
SidedGraph random_triangle_free(const CompoundGraph& k, std::size_t eta, std::uint64_t seed);

}  // namespace tuza
