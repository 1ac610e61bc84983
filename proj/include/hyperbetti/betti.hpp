#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>

#include "hyperbetti/complex.hpp"
#include "hyperbetti/field.hpp"
#include "hyperbetti/homology.hpp"

namespace hyperbetti {

using BigInt = boost::multiprecision::cpp_int;

/**
 * N-graded Betti table of a quotient R/I: entries (i, j) -> beta, zero
 * entries omitted, (0, 0) -> 1 always present. vertex_count is the number
 * of ring variables.
 */
struct BettiTable {
    int vertex_count = 0;
    std::map<std::pair<int, int>, BigInt> entries;

    BigInt beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? BigInt{0} : it->second;
    }
    BigInt total(int i) const {
        BigInt s = 0;
        for (const auto& [k, v] : entries)
            if (k.first == i) s += v;
        return s;
    }
    // Totals beta_0..beta_pd.
    std::vector<BigInt> totals() const;

    bool operator==(const BettiTable& o) const {
        return vertex_count == o.vertex_count && entries == o.entries;
    }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

// Multigraded variant: entries keyed by squarefree degree (a vertex subset).
struct MultigradedBettiTable {
    int vertex_count = 0;
    Face vertex_set = 0;
    std::map<std::pair<int, Face>, long long> entries;

    BettiTable to_graded() const;

    bool operator==(const MultigradedBettiTable& o) const {
        return vertex_count == o.vertex_count && vertex_set == o.vertex_set &&
               entries == o.entries;
    }
};

struct HochsterOptions {
    int subset_limit = 24;  // refuse sweeps over more than 2^subset_limit subsets
    int jobs = 0;           // 0 = hardware concurrency
};

/**
 * Hochster's formula by direct enumeration: for every subset V of the vertex
 * set, the entry (i, V) is dim_k H~_{|V|-i-1} of the restriction to V.
 * Restrictions that are cones are skipped as acyclic. The sweep over the
 * 2^n subsets is split across jobs threads; results merge by integer
 * addition, so the outcome is identical for every jobs setting.
 */
MultigradedBettiTable hochster_multigraded(const SimplicialComplex& c,
                                           const FieldSpec& field,
                                           const HochsterOptions& opts = {});

/// N-graded aggregation of hochster_multigraded over |V| = j.
BettiTable hochster_graded(const SimplicialComplex& c, const FieldSpec& field,
                           const HochsterOptions& opts = {});

/// max i with a nonzero entry.
int projective_dimension(const BettiTable& t);

/// Auslander-Buchsbaum: depth = vertex_count - pd. Requires pd <= vertex_count.
int depth_via_ab(int vertex_count, int pd);

/// Krull dimension of the Stanley-Reisner quotient: dim Δ + 1.
int krull_dimension(const SimplicialComplex& c);

/// depth (via Auslander-Buchsbaum from the Hochster table) equals Krull dim.
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field,
                       const HochsterOptions& opts = {});

/// True iff every entry with i > 0 sits at j = i + d - 1.
bool has_linear_resolution(const BettiTable& t, int d);

// The d for which the table is d-linear, inferred from the entries; nullopt
// if the i > 0 entries sit on no common diagonal or there are none.
std::optional<int> inferred_linear_degree(const BettiTable& t);

} // namespace hyperbetti
