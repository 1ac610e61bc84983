#pragma once

#include <vector>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/complex.hpp"

namespace hyperbetti {

// Hilbert series of a Stanley-Reisner quotient as numerator / (1-t)^n with
// the numerator held dense by degree (trailing zeros trimmed).
struct HilbertSeries {
    std::vector<BigInt> numerator;
    int denominator_power = 0;

    bool operator==(const HilbertSeries& o) const {
        return numerator == o.numerator && denominator_power == o.denominator_power;
    }
};

// Numerator = sum_r f_{r-1} t^r (1-t)^{n-r}, expanded exactly from the
// f-vector; n = number of vertices of the complex.
HilbertSeries hilbert_from_fvector(const SimplicialComplex& c);

/// Alternating numerator S(t) = sum_{i,j} (-1)^i beta_{i,j} t^j.
std::vector<BigInt> hilbert_numerator_from_betti(const BettiTable& t);

// Betti table of a quotient with d-linear resolution, computed purely from
// the f-vector: beta_{i,j} = sum_r (-1)^{j-i-r} f_{r-1} C(n-r, j-r) at
// j = i + d - 1. Garbage in if the resolution is not actually d-linear
// (entries are reported signed, as computed).
BettiTable betti_from_fvector_linear(const SimplicialComplex& c, int d);

} // namespace hyperbetti
