#include "hyperbetti/betti.hpp"

#include <algorithm>

#include "hyperbetti/errors.hpp"
#include "hyperbetti/parallel.hpp"

namespace hyperbetti {

std::vector<BigInt> BettiTable::totals() const {
    int pd = 0;
    for (const auto& [k, v] : entries) pd = std::max(pd, k.first);
    std::vector<BigInt> out(static_cast<size_t>(pd) + 1, BigInt{0});
    for (const auto& [k, v] : entries) out[static_cast<size_t>(k.first)] += v;
    return out;
}

BettiTable MultigradedBettiTable::to_graded() const {
    BettiTable t;
    t.vertex_count = vertex_count;
    for (const auto& [key, v] : entries) {
        if (v == 0) continue;
        t.entries[{key.first, face_size(key.second)}] += v;
    }
    return t;
}

namespace {

// Homology profile of one restriction, working entirely on the restricted
// facet list. Returns the list of (degree, dim) with dim != 0.
void restriction_profile(const std::vector<Face>& complex_facets, Face v,
                         const FieldSpec& field,
                         std::vector<std::pair<int, long long>>& out,
                         std::vector<Face>& scratch) {
    out.clear();
    scratch.clear();
    for (Face f : complex_facets) {
        Face g = f & v;
        if (g) scratch.push_back(g);
    }
    if (scratch.empty()) {
        // The restriction is {∅}: one unit of homology in degree -1.
        out.emplace_back(-1, 1);
        return;
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());

    // A vertex lying in every restricted facet makes the restriction a cone.
    Face apex = ~Face{0};
    for (Face f : scratch) apex &= f;
    if (apex) return;

    int maxc = 0;
    for (Face f : scratch) maxc = std::max(maxc, face_size(f));
    std::vector<std::vector<Face>> faces(static_cast<size_t>(maxc) + 1);
    for (Face f : scratch)
        for_each_submask(f, [&faces](Face s) {
            faces[static_cast<size_t>(face_size(s))].push_back(s);
        });
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    HomologyProfile profile = homology_from_faces(faces, field);
    for (const auto& [degree, dim] : profile.dims)
        if (dim != 0) out.emplace_back(degree, dim);
}

} // namespace

MultigradedBettiTable hochster_multigraded(const SimplicialComplex& c,
                                           const FieldSpec& field,
                                           const HochsterOptions& opts) {
    if (c.is_void())
        throw input_error("Hochster enumeration needs a non-void complex");
    const int n = c.vertex_count();
    if (n > opts.subset_limit)
        throw resource_error("subset sweep over " + std::to_string(n) +
                             " vertices exceeds the limit of " +
                             std::to_string(opts.subset_limit));

    const std::vector<int> verts = face_vertices(c.vertex_set());
    const std::vector<Face> facets = c.effective_facets();
    const std::size_t total = std::size_t{1} << n;
    const int jobs = resolve_jobs(opts.jobs);

    using Entry = std::pair<std::pair<int, Face>, long long>;
    std::vector<std::vector<Entry>> partial(static_cast<size_t>(jobs));

    parallel_for_index(total, jobs, [&](std::size_t idx, int worker) {
        thread_local std::vector<std::pair<int, long long>> profile;
        thread_local std::vector<Face> scratch;
        Face v = 0;
        std::size_t bits = idx;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            v |= face_bit(verts[static_cast<size_t>(b)]);
        }
        restriction_profile(facets, v, field, profile, scratch);
        if (profile.empty()) return;
        const int card = face_size(v);
        auto& sink = partial[static_cast<size_t>(worker)];
        for (const auto& [degree, dim] : profile)
            sink.push_back({{card - degree - 1, v}, dim});
    });

    MultigradedBettiTable table;
    table.vertex_count = n;
    table.vertex_set = c.vertex_set();
    for (const auto& chunk : partial)
        for (const auto& [key, dim] : chunk) table.entries[key] += dim;
    return table;
}

BettiTable hochster_graded(const SimplicialComplex& c, const FieldSpec& field,
                           const HochsterOptions& opts) {
    return hochster_multigraded(c, field, opts).to_graded();
}

int projective_dimension(const BettiTable& t) {
    if (t.entries.empty()) throw input_error("projective dimension of an empty table");
    int pd = 0;
    for (const auto& [k, v] : t.entries)
        if (v != 0) pd = std::max(pd, k.first);
    return pd;
}

int depth_via_ab(int vertex_count, int pd) {
    if (pd < 0 || pd > vertex_count)
        throw input_error("projective dimension must lie in [0, n]");
    return vertex_count - pd;
}

int krull_dimension(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("Krull dimension needs a non-void complex");
    return c.dimension().value() + 1;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field,
                       const HochsterOptions& opts) {
    if (c.is_void()) throw input_error("Cohen-Macaulay test needs a non-void complex");
    const int pd = projective_dimension(hochster_graded(c, field, opts));
    return depth_via_ab(c.vertex_count(), pd) == krull_dimension(c);
}

bool has_linear_resolution(const BettiTable& t, int d) {
    if (d < 1) throw input_error("linearity degree must be >= 1");
    for (const auto& [k, v] : t.entries)
        if (k.first > 0 && v != 0 && k.second != k.first + d - 1) return false;
    return true;
}

std::optional<int> inferred_linear_degree(const BettiTable& t) {
    std::optional<int> d;
    for (const auto& [k, v] : t.entries) {
        if (k.first == 0 || v == 0) continue;
        int here = k.second - k.first + 1;
        if (d && *d != here) return std::nullopt;
        d = here;
    }
    return d;
}

} // namespace hyperbetti
