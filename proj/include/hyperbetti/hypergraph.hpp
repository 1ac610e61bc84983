#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperbetti/complex.hpp"
#include "hyperbetti/universe.hpp"

namespace hyperbetti {

/**
 * Hypergraph on a (possibly partitioned) vertex universe. Edges are stored
 * as a sorted, deduplicated list of nonempty faces. Simplicity (edge size
 * >= 2, antichain edge set) is a validation, not a type invariant: relaxed
 * hypergraphs with singleton edges are legal values because they arise as
 * product factors.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    static Hypergraph make(VertexUniverse u, std::vector<Face> edges);
    static Hypergraph make_on(VertexUniverse u, Face vertex_set,
                              std::vector<Face> edges);

    const VertexUniverse& universe() const { return universe_; }
    Face vertex_set() const { return vertex_set_; }
    int vertex_count() const { return face_size(vertex_set_); }
    const std::vector<Face>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const Hypergraph& o) const {
        return universe_ == o.universe_ && vertex_set_ == o.vertex_set_ &&
               edges_ == o.edges_;
    }
    bool operator!=(const Hypergraph& o) const { return !(*this == o); }

private:
    VertexUniverse universe_;
    Face vertex_set_ = 0;
    std::vector<Face> edges_;
};

struct SimplicityReport {
    std::vector<Face> undersized_edges;                 // |E| < 2
    std::vector<std::pair<Face, Face>> containments;    // (smaller, larger)

    bool simple() const {
        return undersized_edges.empty() && containments.empty();
    }
};

/// Pure check of the simplicity conditions; findings go in the report.
SimplicityReport validate_simple(const Hypergraph& h);

// d if every edge has cardinality d, otherwise nullopt. An empty edge set is
// uniform of any declared degree: returns `declared` if supplied.
std::optional<int> uniform_degree(const Hypergraph& h,
                                  std::optional<int> declared = std::nullopt);

/// Induced hypergraph on y: vertex set y, edges of h lying inside y.
Hypergraph induced(const Hypergraph& h, Face y);

// Product: disjoint union of the universes, one edge per pair (E, F) of
// factor edges, as E ∪ F. Factors must occupy their full universes.
Hypergraph product(const Hypergraph& a, const Hypergraph& b);

// The complex whose faces are the vertex sets containing no edge; its
// minimal non-faces are the inclusion-minimal edges.
SimplicialComplex independence_complex(const Hypergraph& h);

// Squarefree monomial generators of the edge ideal, one exponent vector per
// edge.
struct EdgeIdealView {
    std::vector<Face> generators;
};

EdgeIdealView edge_ideal(const Hypergraph& h);

std::vector<Face> minimal_edges(const Hypergraph& h);

// Number of i-element sets of pairwise disjoint edges whose union induces
// exactly those i edges. Requires h uniform (input error otherwise).
long long count_disjoint_edge_families(const Hypergraph& h, int i);

} // namespace hyperbetti
