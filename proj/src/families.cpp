#include "hyperbetti/families.hpp"

#include <algorithm>
#include <numeric>

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::complete: return "knd";
        case FamilyKind::multipartite: return "multipartite";
        case FamilyKind::composition: return "da";
        case FamilyKind::interval: return "dI";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "knd") return FamilyKind::complete;
    if (name == "multipartite") return FamilyKind::multipartite;
    if (name == "da") return FamilyKind::composition;
    if (name == "dI") return FamilyKind::interval;
    throw input_error("unknown family kind '" + name +
                      "' (expected knd, multipartite, da or dI)");
}

int FamilySpec::total_vertices() const {
    return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

int FamilySpec::uniformity() const {
    if (kind == FamilyKind::composition)
        return std::accumulate(a.begin(), a.end(), 0);
    return d;
}

Hypergraph complete_hypergraph(int n, int d) {
    if (n < 0 || n > kMaxVertices) throw input_error("vertex count out of range");
    if (d < 1) throw input_error("uniformity must be >= 1");
    VertexUniverse u = VertexUniverse::plain(n);
    std::vector<Face> edges;
    for_each_k_subset(u.mask(), d, [&edges](Face e) { edges.push_back(e); });
    return Hypergraph::make(std::move(u), std::move(edges));
}

Hypergraph complete_multipartite(const std::vector<int>& ns, int d) {
    if (ns.empty()) throw input_error("need at least one block");
    if (d < 2) throw input_error("multipartite families need uniformity >= 2");
    VertexUniverse u = VertexUniverse::partitioned(ns);
    std::vector<Face> inside = u.blocks;
    if (inside.empty()) inside.push_back(u.mask());  // single block
    std::vector<Face> edges;
    for_each_k_subset(u.mask(), d, [&](Face e) {
        for (Face blk : inside)
            if (face_subset(e, blk)) return;
        edges.push_back(e);
    });
    return Hypergraph::make(std::move(u), std::move(edges));
}

namespace {

// Edges taking exactly counts[s] vertices from block s (counts may be 0).
std::vector<Face> composition_edges(const std::vector<Face>& blocks,
                                    const std::vector<int>& counts) {
    std::vector<Face> edges{0};
    for (size_t s = 0; s < blocks.size(); ++s) {
        std::vector<Face> parts;
        for_each_k_subset(blocks[s], counts[s], [&parts](Face p) { parts.push_back(p); });
        if (parts.empty()) return {};  // counts[s] > |block|
        std::vector<Face> next;
        next.reserve(edges.size() * parts.size());
        for (Face e : edges)
            for (Face p : parts) next.push_back(e | p);
        edges = std::move(next);
    }
    return edges;
}

std::vector<Face> universe_blocks(const VertexUniverse& u) {
    if (!u.blocks.empty()) return u.blocks;
    return {u.mask()};
}

} // namespace

Hypergraph complete_composition(const std::vector<int>& ns,
                                const std::vector<int>& as) {
    if (ns.empty() || ns.size() != as.size())
        throw input_error("need matching block size and composition lists");
    for (int av : as)
        if (av < 1) throw input_error("composition parts must be >= 1");
    VertexUniverse u = VertexUniverse::partitioned(ns);
    std::vector<Face> edges = composition_edges(universe_blocks(u), as);
    return Hypergraph::make(std::move(u), std::move(edges));
}

Hypergraph complete_interval(const std::vector<int>& ns, const IntervalSpec& iv,
                             int d) {
    if (ns.empty() || ns.size() != iv.ranges.size())
        throw input_error("need one interval per block");
    if (d < 1) throw input_error("uniformity must be >= 1");
    const size_t t = ns.size();
    int lo_sum = 0, hi_sum = 0;
    for (size_t s = 0; s < t; ++s) {
        auto [lo, hi] = iv.ranges[s];
        if (lo < 0 || lo > hi || hi > ns[s])
            throw input_error("interval bounds must satisfy 0 <= lo <= hi <= n_s");
        lo_sum += lo;
        hi_sum += hi;
    }
    if (lo_sum > d || hi_sum < d)
        throw input_error("no composition of " + std::to_string(d) +
                          " fits the intervals");
    VertexUniverse u = VertexUniverse::partitioned(ns);
    std::vector<Face> blocks = universe_blocks(u);
    std::vector<Face> edges;
    std::vector<int> counts(t, 0);
    auto rec = [&](auto&& self, size_t s, int remaining) -> void {
        if (s == t) {
            if (remaining != 0) return;
            auto part = composition_edges(blocks, counts);
            edges.insert(edges.end(), part.begin(), part.end());
            return;
        }
        auto [lo, hi] = iv.ranges[s];
        for (int c = lo; c <= std::min(hi, remaining); ++c) {
            counts[s] = c;
            self(self, s + 1, remaining - c);
        }
    };
    rec(rec, 0, d);
    return Hypergraph::make(std::move(u), std::move(edges));
}

IntervalSpec normalize_intervals(const IntervalSpec& iv, const std::vector<int>& ns,
                                 int d) {
    if (ns.empty() || ns.size() != iv.ranges.size())
        throw input_error("need one interval per block");
    IntervalSpec out = iv;
    const size_t t = ns.size();
    for (size_t s = 0; s < t; ++s) {
        auto& [lo, hi] = out.ranges[s];
        if (lo < 0 || lo > hi || hi > ns[s])
            throw input_error("interval bounds must satisfy 0 <= lo <= hi <= n_s");
    }
    for (;;) {
        long long lo_sum = 0, hi_sum = 0;
        for (auto [lo, hi] : out.ranges) {
            lo_sum += lo;
            hi_sum += hi;
        }
        if (lo_sum > d || hi_sum < d)
            throw input_error("intervals admit no composition of " + std::to_string(d));
        bool changed = false;
        for (size_t s = 0; s < t; ++s) {
            auto& [lo, hi] = out.ranges[s];
            // Every value must extend to a full composition of d.
            int min_lo = static_cast<int>(d - (hi_sum - hi));
            int max_hi = static_cast<int>(d - (lo_sum - lo));
            if (min_lo > lo) {
                lo = min_lo;
                changed = true;
            }
            if (max_hi < hi) {
                hi = max_hi;
                changed = true;
            }
            if (lo > hi)
                throw input_error("interval for block " + std::to_string(s + 1) +
                                  " empties during normalization");
            lo_sum = 0;
            hi_sum = 0;
            for (auto [l2, h2] : out.ranges) {
                lo_sum += l2;
                hi_sum += h2;
            }
        }
        if (!changed) return out;
    }
}

Hypergraph make_family(const FamilySpec& spec, bool strict_intervals) {
    switch (spec.kind) {
        case FamilyKind::complete:
            if (spec.block_sizes.size() != 1)
                throw input_error("knd takes exactly one vertex count");
            return complete_hypergraph(spec.block_sizes[0], spec.d);
        case FamilyKind::multipartite:
            return complete_multipartite(spec.block_sizes, spec.d);
        case FamilyKind::composition:
            return complete_composition(spec.block_sizes, spec.a);
        case FamilyKind::interval: {
            IntervalSpec normalized =
                normalize_intervals(spec.intervals, spec.block_sizes, spec.d);
            if (strict_intervals && !(normalized == spec.intervals))
                throw input_error("intervals are not normalized (strict mode)");
            return complete_interval(spec.block_sizes, normalized, spec.d);
        }
    }
    throw input_error("unknown family kind");
}

BettiTable betti_complete(int n, int d) {
    if (d < 1) throw input_error("uniformity must be >= 1");
    if (n < 0) throw input_error("vertex count must be >= 0");
    BettiTable t;
    t.vertex_count = n;
    t.entries[{0, 0}] = 1;
    for (int i = 1; i + d - 1 <= n; ++i) {
        const int j = i + d - 1;
        BigInt v = binomial(n, j) * binomial(j - 1, d - 1);
        if (v != 0) t.entries[{i, j}] = v;
    }
    return t;
}

namespace {

// Runs fn over every (j_1..j_t) with j_s >= lo, sum = j.
template <class Fn>
void for_each_weak_composition(int j, size_t t, int lo, std::vector<int>& parts, Fn&& fn,
                               size_t s = 0, int remaining = -1) {
    if (remaining < 0) remaining = j;
    if (s == t - 1) {
        if (remaining >= lo) {
            parts[s] = remaining;
            fn(parts);
        }
        return;
    }
    for (int c = lo; c <= remaining; ++c) {
        parts[s] = c;
        for_each_weak_composition(j, t, lo, parts, fn, s + 1, remaining - c);
    }
}

} // namespace

BettiTable betti_complete_multipartite(const std::vector<int>& ns, int d) {
    if (ns.empty()) throw input_error("need at least one block");
    if (d < 2) throw input_error("multipartite families need uniformity >= 2");
    const int N = std::accumulate(ns.begin(), ns.end(), 0);
    const size_t t = ns.size();
    BettiTable out;
    out.vertex_count = N;
    out.entries[{0, 0}] = 1;
    std::vector<int> parts(t, 0);
    for (int i = 1; i + d - 1 <= N; ++i) {
        const int j = i + d - 1;
        BigInt v = binomial(N, j) * binomial(j - 1, d - 1);
        for_each_weak_composition(j, t, 0, parts, [&](const std::vector<int>& js) {
            BigInt prod = 1;
            for (size_t s = 0; s < t; ++s) {
                prod *= binomial(ns[s], js[s]);
                if (prod == 0) return;
            }
            BigInt inner = 0;
            for (size_t s = 0; s < t; ++s) inner += binomial(js[s] - 1, d - 1);
            v -= prod * inner;
        });
        if (v != 0) out.entries[{i, j}] = v;
    }
    return out;
}

BettiTable betti_complete_composition(const std::vector<int>& ns,
                                      const std::vector<int>& as) {
    if (ns.empty() || ns.size() != as.size())
        throw input_error("need matching block size and composition lists");
    for (int av : as)
        if (av < 1) throw input_error("composition parts must be >= 1");
    const int N = std::accumulate(ns.begin(), ns.end(), 0);
    const int d = std::accumulate(as.begin(), as.end(), 0);
    const size_t t = ns.size();
    BettiTable out;
    out.vertex_count = N;
    out.entries[{0, 0}] = 1;
    std::vector<int> parts(t, 0);
    for (int i = 1; i + d - 1 <= N; ++i) {
        const int j = i + d - 1;
        BigInt v = 0;
        // One factor beta_{r, r+a-1}(K_n^a) = C(n, r+a-1) C(r+a-2, a-1) per
        // block, summed over compositions r_1+..+r_t = i+t-1, r_s >= 1.
        for_each_weak_composition(i + static_cast<int>(t) - 1, t, 1, parts,
                                  [&](const std::vector<int>& rs) {
                                      BigInt prod = 1;
                                      for (size_t s = 0; s < t; ++s) {
                                          prod *= binomial(ns[s], rs[s] + as[s] - 1) *
                                                  binomial(rs[s] + as[s] - 2, as[s] - 1);
                                          if (prod == 0) return;
                                      }
                                      v += prod;
                                  });
        if (v != 0) out.entries[{i, j}] = v;
    }
    return out;
}

std::optional<BettiTable> closed_betti(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::complete:
            if (spec.block_sizes.size() != 1)
                throw input_error("knd takes exactly one vertex count");
            return betti_complete(spec.block_sizes[0], spec.d);
        case FamilyKind::multipartite:
            return betti_complete_multipartite(spec.block_sizes, spec.d);
        case FamilyKind::composition:
            return betti_complete_composition(spec.block_sizes, spec.a);
        case FamilyKind::interval:
            return std::nullopt;
    }
    return std::nullopt;
}

BettiTable betti_product(const std::vector<Hypergraph>& factors,
                         const FieldSpec& field, const HochsterOptions& opts) {
    const size_t t = factors.size();
    if (t < 2) throw input_error("products need at least two factors");
    int N = 0;
    for (const Hypergraph& h : factors) N += h.vertex_count();

    // Per-factor tables D_l[(j, r)] = sum over |V| = j of dim H~_r of the
    // restriction of the independence complex to V; recovered from the
    // multigraded Hochster data via r = |V| - i - 1. V = ∅ never contributes
    // (the corresponding restrictions of the product are cones).
    std::vector<std::map<std::pair<int, int>, long long>> dims(t);
    for (size_t l = 0; l < t; ++l) {
        MultigradedBettiTable mg =
            hochster_multigraded(independence_complex(factors[l]), field, opts);
        for (const auto& [key, v] : mg.entries) {
            const int j = face_size(key.second);
            if (j == 0 || v == 0) continue;
            dims[l][{j, j - key.first - 1}] += v;
        }
    }

    // Convolve over block decompositions and homology degrees. Factors with
    // linear resolutions carry a single degree each, collapsing the sum to
    // the one-term product formula.
    std::map<std::pair<int, int>, BigInt> acc{{{0, 0}, BigInt{1}}};
    for (size_t l = 0; l < t; ++l) {
        std::map<std::pair<int, int>, BigInt> next;
        for (const auto& [key, v] : acc)
            for (const auto& [jr, dim] : dims[l])
                next[{key.first + jr.first, key.second + jr.second}] += v * dim;
        acc = std::move(next);
    }

    BettiTable out;
    out.vertex_count = N;
    out.entries[{0, 0}] = 1;
    const int shift = 2 * static_cast<int>(t) - 1;
    for (const auto& [key, v] : acc) {
        const int j = key.first;
        const int i = j - key.second - shift;
        if (i >= 1 && v != 0) out.entries[{i, j}] += v;
    }
    return out;
}

bool check_identity_A(int n, int d, int j) {
    if (j < d) throw input_error("identity A needs j >= d");
    BigInt lhs = 0;
    for (int r = 0; r <= d - 1; ++r) {
        BigInt term = binomial(n, r) * binomial(n - r, j - r);
        lhs += ((d - 1 - r) % 2 == 0) ? term : -term;
    }
    BigInt rhs = binomial(n, j) * binomial(j - 1, d - 1);
    return lhs == rhs;
}

bool check_identity_B(const std::vector<int>& ns, int d, int j) {
    if (ns.empty()) throw input_error("need at least one block");
    const int N = std::accumulate(ns.begin(), ns.end(), 0);
    if (N < d) throw input_error("identity B needs N >= d");
    int e = d - 1;
    for (int n : ns) e = std::max(e, n);  // largest face cardinality
    BigInt lhs = 0;
    for (int r = d; r <= e; ++r) {
        BigInt blocks = 0;
        for (int n : ns) blocks += binomial(n, r);
        BigInt term = binomial(N - r, j - r) * blocks;
        lhs += ((d - r) % 2 == 0) ? term : -term;
    }
    BigInt rhs = 0;
    std::vector<int> parts(ns.size(), 0);
    for_each_weak_composition(j, ns.size(), 0, parts, [&](const std::vector<int>& js) {
        BigInt prod = 1;
        for (size_t s = 0; s < ns.size(); ++s) {
            prod *= binomial(ns[s], js[s]);
            if (prod == 0) return;
        }
        BigInt inner = 0;
        for (size_t s = 0; s < ns.size(); ++s) inner += binomial(js[s] - 1, d - 1);
        rhs += prod * inner;
    });
    return lhs == rhs;
}

} // namespace hyperbetti
