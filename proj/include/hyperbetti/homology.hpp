#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hyperbetti/complex.hpp"
#include "hyperbetti/field.hpp"

namespace hyperbetti {

// Dense integer matrix; boundary matrices have entries in {-1, 0, 1} but
// the rank routines accept anything in int32 range.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int32_t> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    std::int32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    std::int32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/**
 * Boundary map ∂_r of the reduced chain complex: columns are the faces of
 * dimension r, rows the faces of dimension r-1, both sorted ascending as bit
 * patterns. The column of a face lists sign (-1)^p at the row obtained by
 * deleting its p-th smallest vertex. ∂_0 maps every vertex to the degree -1
 * generator with coefficient +1. Out-of-range r gives an empty matrix.
 *
 * The matrix is the integer lift common to every coefficient field; reduce
 * mod p or view over Q as needed.
 */
IntMatrix boundary_matrix(const SimplicialComplex& c, int r);

// Same, from precomputed per-cardinality face lists (faces[k] sorted).
IntMatrix boundary_from_faces(const std::vector<std::vector<Face>>& faces, int r);

int rank_mod2(const IntMatrix& m);
int rank_mod_p(const IntMatrix& m, std::uint32_t p);

// Exact rank over the rationals by fraction-free (Bareiss) elimination.
// Runs on int64 with exact overflow detection and falls back to unbounded
// integers, so the result is always exact.
int rank_rational(const IntMatrix& m);

int matrix_rank(const IntMatrix& m, const FieldSpec& field);

// dim_k of the reduced homology in every degree -1 <= r <= dim; all zeros
// (an empty map) for the void complex.
struct HomologyProfile {
    std::map<int, long long> dims;

    long long dim(int degree) const {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    bool acyclic() const {
        for (const auto& [r, d] : dims)
            if (d != 0) return false;
        return true;
    }
    bool operator==(const HomologyProfile& o) const { return dims == o.dims; }
};

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field);

// Core of reduced_homology on prepared face lists; faces[0] must be {∅}.
HomologyProfile homology_from_faces(const std::vector<std::vector<Face>>& faces,
                                    const FieldSpec& field);

} // namespace hyperbetti
