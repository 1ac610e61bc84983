#pragma once

#include <optional>
#include <vector>

#include "hyperbetti/universe.hpp"

namespace hyperbetti {

/**
 * Immutable abstract simplicial complex, stored by its facets (the
 * inclusion-maximal faces). A complex lives on vertex_set(), a sub-universe
 * of its VertexUniverse; restrictions keep the original vertex identities
 * instead of re-indexing.
 *
 * Three states are distinguished: the void complex (no faces at all), the
 * empty complex {∅} (exactly one face, the empty set), and everything else.
 * The stored facet vector never contains the empty face; {∅} is the
 * non-void complex with an empty facet vector.
 *
 * Values are immutable after construction and all operations are pure, so
 * complexes may be shared freely across threads.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Complex generated by the candidate faces; dominated faces and
    // duplicates are dropped. An empty candidate list yields {∅}.
    static SimplicialComplex from_facets(VertexUniverse u,
                                         const std::vector<Face>& candidates);
    static SimplicialComplex from_facets_on(VertexUniverse u, Face vertex_set,
                                            const std::vector<Face>& candidates);

    static SimplicialComplex void_complex(VertexUniverse u);
    static SimplicialComplex void_complex_on(VertexUniverse u, Face vertex_set);
    static SimplicialComplex empty_complex(VertexUniverse u);
    static SimplicialComplex full_simplex(VertexUniverse u);
    static SimplicialComplex full_simplex_on(VertexUniverse u, Face vertex_set);

    const VertexUniverse& universe() const { return universe_; }
    Face vertex_set() const { return vertex_set_; }
    int vertex_count() const { return face_size(vertex_set_); }
    bool is_void() const { return void_; }

    // Stored facets: sorted antichain, never containing the empty face.
    const std::vector<Face>& facets() const { return facets_; }

    // Facets with the {∅} convention made explicit: for the empty complex
    // this is {∅}; for the void complex it is empty.
    std::vector<Face> effective_facets() const;

    bool contains(Face f) const;

    // nullopt encodes dim = -inf (the void complex); {∅} has dimension -1.
    std::optional<int> dimension() const;

    bool operator==(const SimplicialComplex& o) const {
        return universe_ == o.universe_ && vertex_set_ == o.vertex_set_ &&
               void_ == o.void_ && facets_ == o.facets_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    VertexUniverse universe_;
    Face vertex_set_ = 0;
    std::vector<Face> facets_;
    bool void_ = false;
};

/// All faces of dimension at most r; r = -1 gives {∅}. Void passes through.
SimplicialComplex skeleton(const SimplicialComplex& c, int r);

/// Faces of c contained in v, on vertex set v (original vertex identities).
SimplicialComplex restriction(const SimplicialComplex& c, Face v);

// Join of two complexes. Both on the same universe with disjoint vertex
// sets; faces are unions of a face from each factor. Overlap is an input
// error. join with {∅} is the identity; join with void is void.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Alexander dual on the same vertex set: faces are the complements of
// non-faces. The dual of the full simplex is the void complex. Void input is
// an input error.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

// (f_-1, f_0, ..., f_{dim}) = face counts by dimension, f_-1 = 1.
// Void input is an input error.
std::vector<long long> f_vector(const SimplicialComplex& c);

/// Inclusion-minimal subsets of the vertex set that are not faces.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

// faces[k] = all faces of cardinality k, each sorted ascending. Empty for
// the void complex.
std::vector<std::vector<Face>> faces_by_cardinality(const SimplicialComplex& c);

// Inclusion-minimal transversals of a family of faces (sets hit by every
// transversal), restricted to subsets of `within`. A family containing the
// empty set has no transversals. `cap` bounds the working antichain size;
// exceeding it raises resource_error.
std::vector<Face> minimal_transversals(const std::vector<Face>& sets, Face within,
                                       std::size_t cap = 5'000'000);

// Antichain helpers shared by the complex and hypergraph code: keep the
// inclusion-maximal (resp. -minimal) members, deduplicated, sorted ascending.
std::vector<Face> antichain_maxima(std::vector<Face> faces);
std::vector<Face> antichain_minima(std::vector<Face> faces);

} // namespace hyperbetti
