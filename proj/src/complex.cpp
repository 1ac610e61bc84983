#include "hyperbetti/complex.hpp"

#include <algorithm>

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

namespace {

// Sort by cardinality, larger (resp. smaller) first, ties by value; keeps
// comparisons one-sided in the antichain filters below.
void sort_by_size_desc(std::vector<Face>& v) {
    std::sort(v.begin(), v.end(), [](Face a, Face b) {
        int sa = face_size(a), sb = face_size(b);
        return sa != sb ? sa > sb : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_by_size_asc(std::vector<Face>& v) {
    std::sort(v.begin(), v.end(), [](Face a, Face b) {
        int sa = face_size(a), sb = face_size(b);
        return sa != sb ? sa < sb : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<Face> antichain_maxima(std::vector<Face> faces) {
    sort_by_size_desc(faces);
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = false;
        for (Face k : kept)
            if (face_subset(f, k)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Face> antichain_minima(std::vector<Face> faces) {
    sort_by_size_asc(faces);
    std::vector<Face> kept;
    for (Face f : faces) {
        bool dominated = false;
        for (Face k : kept)
            if (face_subset(k, f)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex SimplicialComplex::from_facets_on(VertexUniverse u, Face vertex_set,
                                                    const std::vector<Face>& candidates) {
    if (!face_subset(vertex_set, u.mask()))
        throw input_error("vertex set outside the universe");
    for (Face f : candidates)
        if (!face_subset(f, vertex_set))
            throw input_error("facet outside the vertex set");
    SimplicialComplex c;
    c.universe_ = std::move(u);
    c.vertex_set_ = vertex_set;
    c.facets_ = antichain_maxima(candidates);
    // {∅} is encoded as an empty facet vector.
    if (c.facets_.size() == 1 && c.facets_[0] == 0) c.facets_.clear();
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(VertexUniverse u,
                                                 const std::vector<Face>& candidates) {
    Face m = u.mask();
    return from_facets_on(std::move(u), m, candidates);
}

SimplicialComplex SimplicialComplex::void_complex_on(VertexUniverse u, Face vertex_set) {
    if (!face_subset(vertex_set, u.mask()))
        throw input_error("vertex set outside the universe");
    SimplicialComplex c;
    c.universe_ = std::move(u);
    c.vertex_set_ = vertex_set;
    c.void_ = true;
    return c;
}

SimplicialComplex SimplicialComplex::void_complex(VertexUniverse u) {
    Face m = u.mask();
    return void_complex_on(std::move(u), m);
}

SimplicialComplex SimplicialComplex::empty_complex(VertexUniverse u) {
    return from_facets(std::move(u), {});
}

SimplicialComplex SimplicialComplex::full_simplex_on(VertexUniverse u, Face vertex_set) {
    return from_facets_on(std::move(u), vertex_set, {vertex_set});
}

SimplicialComplex SimplicialComplex::full_simplex(VertexUniverse u) {
    Face m = u.mask();
    return full_simplex_on(std::move(u), m);
}

std::vector<Face> SimplicialComplex::effective_facets() const {
    if (void_) return {};
    if (facets_.empty()) return {0};
    return facets_;
}

bool SimplicialComplex::contains(Face f) const {
    if (void_) return false;
    if (f == 0) return true;
    for (Face k : facets_)
        if (face_subset(f, k)) return true;
    return false;
}

std::optional<int> SimplicialComplex::dimension() const {
    if (void_) return std::nullopt;
    int maxc = 0;
    for (Face f : facets_) maxc = std::max(maxc, face_size(f));
    return maxc - 1;
}

SimplicialComplex skeleton(const SimplicialComplex& c, int r) {
    if (r < -1) throw input_error("skeleton degree must be >= -1");
    if (c.is_void()) return c;
    if (r >= c.dimension().value()) return c;
    std::vector<Face> cand;
    for (Face f : c.effective_facets()) {
        if (face_size(f) <= r + 1)
            cand.push_back(f);
        else
            for_each_k_subset(f, r + 1, [&cand](Face s) { cand.push_back(s); });
    }
    return SimplicialComplex::from_facets_on(c.universe(), c.vertex_set(), cand);
}

SimplicialComplex restriction(const SimplicialComplex& c, Face v) {
    if (!face_subset(v, c.universe().mask()))
        throw input_error("restriction set outside the universe");
    if (c.is_void()) return SimplicialComplex::void_complex_on(c.universe(), v);
    std::vector<Face> cand;
    cand.reserve(c.facets().size());
    for (Face f : c.facets()) cand.push_back(f & v);
    return SimplicialComplex::from_facets_on(c.universe(), v, cand);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.universe() != b.universe())
        throw input_error("join factors must share a universe; embed them first");
    if (a.vertex_set() & b.vertex_set())
        throw input_error("join factors must have disjoint vertex sets");
    Face vs = a.vertex_set() | b.vertex_set();
    if (a.is_void() || b.is_void())
        return SimplicialComplex::void_complex_on(a.universe(), vs);
    std::vector<Face> cand;
    for (Face fa : a.effective_facets())
        for (Face fb : b.effective_facets()) cand.push_back(fa | fb);
    return SimplicialComplex::from_facets_on(a.universe(), vs, cand);
}

std::vector<Face> minimal_transversals(const std::vector<Face>& sets, Face within,
                                       std::size_t cap) {
    for (Face s : sets)
        if (s == 0) return {};  // the empty set cannot be hit

    std::vector<Face> work;
    work.reserve(sets.size());
    for (Face s : sets) work.push_back(s & within);
    for (Face s : work)
        if (s == 0) return {};
    work = antichain_minima(work);  // hitting the minimal members hits all

    std::vector<Face> trans{0};
    for (Face s : work) {
        std::vector<Face> next;
        next.reserve(trans.size());
        for (Face t : trans) {
            if (t & s) {
                next.push_back(t);
            } else {
                Face rest = s;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    next.push_back(t | face_bit(v));
                }
            }
        }
        trans = antichain_minima(std::move(next));
        if (trans.size() > cap)
            throw resource_error("transversal antichain exceeded " +
                                 std::to_string(cap) + " members");
    }
    return trans;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("the void complex has no non-face lattice");
    std::vector<Face> complements;
    for (Face f : c.effective_facets()) complements.push_back(c.vertex_set() & ~f);
    // A set is a non-face iff it meets the complement of every facet, so the
    // minimal non-faces are exactly the minimal transversals.
    return minimal_transversals(complements, c.vertex_set());
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("the void complex has no Alexander dual");
    std::vector<Face> nonfaces = minimal_nonfaces(c);
    if (nonfaces.empty())  // full simplex: the dual has no faces at all
        return SimplicialComplex::void_complex_on(c.universe(), c.vertex_set());
    std::vector<Face> facets;
    facets.reserve(nonfaces.size());
    for (Face s : nonfaces) facets.push_back(c.vertex_set() & ~s);
    return SimplicialComplex::from_facets_on(c.universe(), c.vertex_set(), facets);
}

std::vector<std::vector<Face>> faces_by_cardinality(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    int maxc = c.dimension().value() + 1;
    std::vector<std::vector<Face>> out(static_cast<size_t>(maxc) + 1);
    for (Face f : c.effective_facets())
        for_each_submask(f, [&out](Face s) {
            out[static_cast<size_t>(face_size(s))].push_back(s);
        });
    for (auto& level : out) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return out;
}

std::vector<long long> f_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("the void complex has no f-vector");
    std::vector<long long> f;
    for (const auto& level : faces_by_cardinality(c))
        f.push_back(static_cast<long long>(level.size()));
    return f;
}

} // namespace hyperbetti
