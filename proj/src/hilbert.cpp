#include "hyperbetti/hilbert.hpp"

#include "hyperbetti/errors.hpp"
#include "hyperbetti/families.hpp"

namespace hyperbetti {

namespace {

void trim(std::vector<BigInt>& poly) {
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
}

} // namespace

HilbertSeries hilbert_from_fvector(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("the void complex has no Hilbert series");
    const int n = c.vertex_count();
    const std::vector<long long> f = f_vector(c);  // f[r] = f_{r-1}
    HilbertSeries s;
    s.denominator_power = n;
    s.numerator.assign(static_cast<size_t>(n) + 1, BigInt{0});
    // Coefficient of t^k in sum_r f_{r-1} t^r (1-t)^{n-r}.
    for (int k = 0; k <= n; ++k) {
        BigInt acc = 0;
        for (int r = 0; r < static_cast<int>(f.size()) && r <= k; ++r) {
            BigInt term = BigInt{f[static_cast<size_t>(r)]} * binomial(n - r, k - r);
            acc += ((k - r) % 2 == 0) ? term : -term;
        }
        s.numerator[static_cast<size_t>(k)] = acc;
    }
    trim(s.numerator);
    return s;
}

std::vector<BigInt> hilbert_numerator_from_betti(const BettiTable& t) {
    int maxj = 0;
    for (const auto& [k, v] : t.entries) maxj = std::max(maxj, k.second);
    std::vector<BigInt> s(static_cast<size_t>(maxj) + 1, BigInt{0});
    for (const auto& [k, v] : t.entries) {
        if (k.first % 2 == 0)
            s[static_cast<size_t>(k.second)] += v;
        else
            s[static_cast<size_t>(k.second)] -= v;
    }
    trim(s);
    return s;
}

BettiTable betti_from_fvector_linear(const SimplicialComplex& c, int d) {
    if (c.is_void()) throw input_error("f-vector route needs a non-void complex");
    if (d < 1) throw input_error("linearity degree must be >= 1");
    const int n = c.vertex_count();
    const std::vector<long long> f = f_vector(c);
    BettiTable t;
    t.vertex_count = n;
    t.entries[{0, 0}] = 1;
    for (int i = 1; i + d - 1 <= n; ++i) {
        const int j = i + d - 1;
        BigInt acc = 0;
        for (int r = 0; r < static_cast<int>(f.size()); ++r) {
            BigInt term = BigInt{f[static_cast<size_t>(r)]} * binomial(n - r, j - r);
            acc += ((d - 1 - r) % 2 == 0) ? term : -term;
        }
        if (acc != 0) t.entries[{i, j}] = acc;
    }
    return t;
}

} // namespace hyperbetti
