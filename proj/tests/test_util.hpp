#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hyperbetti/complex.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/universe.hpp"

// Shared helpers for the test suites. The brute-force routines here are the
// independent oracles: they only use facet lists and raw subset sweeps, no
// library face machinery.

namespace testutil {

using hyperbetti::Face;
using hyperbetti::Hypergraph;
using hyperbetti::SimplicialComplex;
using hyperbetti::VertexUniverse;

inline Face face_of(std::initializer_list<int> verts) {
    Face f = 0;
    for (int v : verts) f |= hyperbetti::face_bit(v);
    return f;
}

// Membership by direct facet containment.
inline bool brute_is_face(const SimplicialComplex& c, Face f) {
    if (c.is_void()) return false;
    for (Face k : c.effective_facets())
        if (hyperbetti::face_subset(f, k)) return true;
    return false;
}

// All faces, by exhaustive subset sweep over the vertex set.
inline std::vector<Face> brute_faces(const SimplicialComplex& c) {
    std::vector<Face> out;
    if (c.is_void()) return out;
    Face vs = c.vertex_set();
    for (Face s = 0;; s = (s - vs) & vs) {  // iterate submasks ascending-ish
        if (brute_is_face(c, s)) out.push_back(s);
        if (s == vs) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<long long> brute_f_vector(const SimplicialComplex& c) {
    std::vector<long long> f;
    for (Face face : brute_faces(c)) {
        int card = hyperbetti::face_size(face);
        if (static_cast<int>(f.size()) <= card) f.resize(static_cast<size_t>(card) + 1, 0);
        ++f[static_cast<size_t>(card)];
    }
    return f;
}

inline std::vector<Face> brute_minimal_nonfaces(const SimplicialComplex& c) {
    std::vector<Face> out;
    Face vs = c.vertex_set();
    for (Face s = 0;; s = (s - vs) & vs) {
        if (s != 0 && !brute_is_face(c, s)) {
            bool minimal = true;
            Face rest = s;
            while (rest && minimal) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (!brute_is_face(c, s ^ hyperbetti::face_bit(v))) minimal = false;
            }
            if (minimal) out.push_back(s);
        }
        if (s == vs) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of i-sets of pairwise disjoint edges whose union induces exactly i
// edges, by sweeping all i-subsets of the edge list.
inline long long brute_disjoint_families(const Hypergraph& h, int i) {
    const auto& edges = h.edges();
    long long count = 0;
    std::vector<int> pick;
    auto induced_count = [&edges](Face span) {
        int c = 0;
        for (Face e : edges)
            if (hyperbetti::face_subset(e, span)) ++c;
        return c;
    };
    auto rec = [&](auto&& self, size_t start, Face used, int left) -> void {
        if (left == 0) {
            if (induced_count(used) == i) ++count;
            return;
        }
        for (size_t k = start; k < edges.size(); ++k)
            if ((edges[k] & used) == 0) self(self, k + 1, used | edges[k], left - 1);
    };
    if (i == 0) return 1;
    rec(rec, 0, 0, i);
    return count;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    Face random_subset(Face universe) {
        Face out = 0;
        for (int v : hyperbetti::face_vertices(universe))
            if (uniform(0, 1)) out |= hyperbetti::face_bit(v);
        return out;
    }
};

// Random complex on n vertices, built from a handful of random candidate
// facets; may be {∅} but never void.
inline SimplicialComplex random_complex(Rng& rng, int n, int max_facets = 6) {
    VertexUniverse u = VertexUniverse::plain(n);
    std::vector<Face> cand;
    int m = rng.uniform(0, max_facets);
    for (int k = 0; k < m; ++k) cand.push_back(rng.random_subset(u.mask()));
    return SimplicialComplex::from_facets(u, cand);
}

// Random d-uniform hypergraph on n vertices (edgeless when n < d).
inline Hypergraph random_uniform_hypergraph(Rng& rng, int n, int d, int max_edges) {
    VertexUniverse u = VertexUniverse::plain(n);
    std::vector<Face> all;
    hyperbetti::for_each_k_subset(u.mask(), d, [&all](Face e) { all.push_back(e); });
    if (all.empty()) return Hypergraph::make(u, {});
    int m = rng.uniform(1, std::min<int>(max_edges, static_cast<int>(all.size())));
    std::shuffle(all.begin(), all.end(), rng.gen);
    return Hypergraph::make(u, std::vector<Face>(all.begin(), all.begin() + m));
}

} // namespace testutil
