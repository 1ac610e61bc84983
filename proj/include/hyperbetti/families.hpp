#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

/// C(n, k), zero whenever k < 0, n < 0 or n < k.
BigInt binomial(long long n, long long k);

// Per-block cardinality intervals [alpha_s, beta_s] for the interval-complete
// family. Normalized means every member of every interval occurs in an edge:
// alpha_s + sum_{j != s} beta_j >= d and beta_s + sum_{j != s} alpha_j <= d.
struct IntervalSpec {
    std::vector<std::pair<int, int>> ranges;

    bool operator==(const IntervalSpec& o) const { return ranges == o.ranges; }
};

enum class FamilyKind { complete, multipartite, composition, interval };

// Wire names used by the CLI and the JSON spec format: "knd",
// "multipartite", "da", "dI".
std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& name);

struct FamilySpec {
    FamilyKind kind = FamilyKind::complete;
    std::vector<int> block_sizes;  // n_1..n_t (a single entry for "knd")
    int d = 0;                     // uniformity (ignored for "da": d = sum a)
    std::vector<int> a;            // composition, "da" only
    IntervalSpec intervals;        // "dI" only

    int total_vertices() const;
    int uniformity() const;  // edge cardinality d of the family
};

// K_n^d: every d-subset of [n] is an edge (none when n < d).
Hypergraph complete_hypergraph(int n, int d);

// K_{n_1..n_t}^d: all d-edges except those inside a single block.
Hypergraph complete_multipartite(const std::vector<int>& ns, int d);

// K^{d(a_1..a_t)}: edges take exactly a_s vertices from block s.
Hypergraph complete_composition(const std::vector<int>& ns,
                                const std::vector<int>& as);

// K^{d(I_1..I_t)}: union of the composition families over all (a_s) with
// a_s in I_s and sum a_s = d. Intervals are expected normalized.
Hypergraph complete_interval(const std::vector<int>& ns, const IntervalSpec& iv,
                             int d);

// Shrinks each interval minimally until the normalization inequalities hold;
// input error if an interval empties or no composition of d exists.
IntervalSpec normalize_intervals(const IntervalSpec& iv,
                                 const std::vector<int>& ns, int d);

// Builds the hypergraph for a spec. strict_intervals errors out when the
// given intervals are not already normalized instead of normalizing them.
Hypergraph make_family(const FamilySpec& spec, bool strict_intervals = false);

// Closed-form Betti tables. All entries sit at j = i + d - 1.
BettiTable betti_complete(int n, int d);
BettiTable betti_complete_multipartite(const std::vector<int>& ns, int d);
BettiTable betti_complete_composition(const std::vector<int>& ns,
                                      const std::vector<int>& as);

// Closed form for the family, when one exists (none for the interval kind).
std::optional<BettiTable> closed_betti(const FamilySpec& spec);

/**
 * Betti table of a product of hypergraphs from per-factor restriction
 * homology: convolve the factor tables over block decompositions (every
 * block part nonempty) and homology-degree compositions (degrees >= -1).
 * When every factor is uniform with linear resolution each factor table is
 * concentrated in a single degree and the convolution collapses to the
 * one-term product formula.
 */
BettiTable betti_product(const std::vector<Hypergraph>& factors,
                         const FieldSpec& field, const HochsterOptions& opts = {});

// Exact check of the two binomial identities tying the f-vector expansion to
// the closed forms.
//
// A: sum_{r=0}^{d-1} (-1)^{d-1-r} C(n,r) C(n-r,j-r) = C(n,j) C(j-1,d-1)
bool check_identity_A(int n, int d, int j);

// B: sum_{r=d}^{e} (-1)^{d-r} C(N-r,j-r) [sum_s C(n_s,r)]
//      = sum_{j_1+..+j_t=j} [prod_s C(n_s,j_s)] [sum_s C(j_s-1,d-1)]
//    with e = max(max_s n_s, d-1), the largest face cardinality.
bool check_identity_B(const std::vector<int>& ns, int d, int j);

} // namespace hyperbetti
