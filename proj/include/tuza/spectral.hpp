#pragma once
// Adjacency spectra, expander-mixing checks, the weighted double matrices N
// and T, and triangle-free regular generators.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuza/graph.hpp"

namespace tuza {

inline constexpr std::size_t kDenseEigenCap = 4096;

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    /// max over i > 1 of |lambda_i|; the value the mixing bounds need.
    double lambda = 0.0;
    /// Same, but also ignoring -d when the graph is bipartite.
    double lambda_nontrivial = 0.0;
    std::optional<std::size_t> degree;
    bool bipartite = false;
};

/// Eigenvalues (descending) of the symmetric n x n row-major matrix a.
/// Householder tridiagonalisation followed by implicit QL.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n,
                                          std::size_t cap = kDenseEigenCap);

Spectrum eigen_spectrum(const Graph& g, std::size_t cap = kDenseEigenCap);

void write_spectrum_csv(std::ostream& out, const Spectrum& s);

struct MixingReport {
    std::size_t trials = 0;
    std::size_t violations = 0;
    // Largest observed (lhs - rhs) for each inequality; <= 0 means it held.
    double worst_cut_margin = -1e300;
    double worst_inside_margin = -1e300;
};

/// Draws random disjoint A, B and checks both mixing-lemma inequalities.
MixingReport check_mixing(const Graph& h, const Spectrum& spectrum, std::size_t trials, std::uint64_t seed);

struct WeightedKMatrix {
    std::size_t t = 0;
    std::size_t d = 0;
    double c = 0.0;
    double p = 0.0;  // internal weight (1-c)/(2td)
    double q = 0.0;  // external weight (1-c)/(2t^2)
    SidedGraph base;
    std::optional<std::vector<Edge>> z_edges;

    static WeightedKMatrix from_regular(const Graph& h, double c);
    /// Dense 2t x 2t matrix [[pC, qJ], [qJ, pC]].
    std::vector<double> dense_n() const;
    /// Dense adjacency matrix of z_edges (zero when absent).
    std::vector<double> dense_t() const;
};

Spectrum n_matrix_spectrum_closed_form(const WeightedKMatrix& wk, const Spectrum& h_spectrum);

/// Smallest eigenvalue of N + shift * I from a dense solve.
double n_shifted_min_eigenvalue(const WeightedKMatrix& wk, double shift);

/// Max degree of the subgraph formed by z; every edge of z must be external.
std::size_t t_matrix_row_bound(const SidedGraph& k, std::span<const Edge> z);

enum class Family { petersen, hoffman_singleton, projective_incidence, cayley_custom };

struct GeneratorParams {
    std::size_t q = 0;                  // projective_incidence
    std::size_t n = 0;                  // cayley_custom: Z_n
    std::vector<std::size_t> generators;  // cayley_custom: connection set
};

struct GeneratedGraph {
    std::string name;
    Graph graph;
    Spectrum spectrum;
    std::size_t t = 0;
    std::size_t d = 0;
};

/// Builds the family member and verifies it is triangle-free and regular.
GeneratedGraph generate_triangle_free_expander(Family family, const GeneratorParams& params = {});

/// Registry lookup: "petersen", "hoffman_singleton", "pg2:<q>", "cayley:<n>:<s1>,<s2>,...".
GeneratedGraph generate_by_name(const std::string& name);

/// Incidence graph of the projective plane over GF(q); throws unless q is a prime power.
Graph projective_incidence_graph(std::size_t q);

}  // namespace tuza
