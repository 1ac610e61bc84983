#include "hyperbetti/hypergraph.hpp"

#include <algorithm>

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

Hypergraph Hypergraph::make_on(VertexUniverse u, Face vertex_set,
                               std::vector<Face> edges) {
    if (!face_subset(vertex_set, u.mask()))
        throw input_error("vertex set outside the universe");
    for (Face e : edges) {
        if (e == 0) throw input_error("hypergraph edges must be nonempty");
        if (!face_subset(e, vertex_set))
            throw input_error("edge outside the vertex set");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph h;
    h.universe_ = std::move(u);
    h.vertex_set_ = vertex_set;
    h.edges_ = std::move(edges);
    return h;
}

Hypergraph Hypergraph::make(VertexUniverse u, std::vector<Face> edges) {
    Face m = u.mask();
    return make_on(std::move(u), m, std::move(edges));
}

SimplicityReport validate_simple(const Hypergraph& h) {
    SimplicityReport rep;
    const auto& edges = h.edges();
    for (Face e : edges)
        if (face_size(e) < 2) rep.undersized_edges.push_back(e);
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = 0; j < edges.size(); ++j)
            if (i != j && face_subset(edges[i], edges[j]))
                rep.containments.emplace_back(edges[i], edges[j]);
    return rep;
}

std::optional<int> uniform_degree(const Hypergraph& h, std::optional<int> declared) {
    if (h.edges().empty()) return declared;
    int d = face_size(h.edges().front());
    for (Face e : h.edges())
        if (face_size(e) != d) return std::nullopt;
    return d;
}

Hypergraph induced(const Hypergraph& h, Face y) {
    if (!face_subset(y, h.universe().mask()))
        throw input_error("induced vertex set outside the universe");
    std::vector<Face> edges;
    for (Face e : h.edges())
        if (face_subset(e, y)) edges.push_back(e);
    return Hypergraph::make_on(h.universe(), y, std::move(edges));
}

Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_set() != a.universe().mask() || b.vertex_set() != b.universe().mask())
        throw input_error("product factors must occupy their full universes");
    VertexUniverse combined = concat_universes(a.universe(), b.universe());
    int shift = a.universe().size;
    std::vector<Face> edges;
    edges.reserve(a.edge_count() * b.edge_count());
    for (Face ea : a.edges())
        for (Face eb : b.edges()) edges.push_back(ea | (eb << shift));
    return Hypergraph::make(std::move(combined), std::move(edges));
}

SimplicialComplex independence_complex(const Hypergraph& h) {
    if (h.edges().empty())
        return SimplicialComplex::full_simplex_on(h.universe(), h.vertex_set());
    // Faces are the sets missing a vertex of every edge, so the facets are
    // the complements of the minimal transversals of the edge set.
    std::vector<Face> trans = minimal_transversals(h.edges(), h.vertex_set());
    std::vector<Face> facets;
    facets.reserve(trans.size());
    for (Face t : trans) facets.push_back(h.vertex_set() & ~t);
    return SimplicialComplex::from_facets_on(h.universe(), h.vertex_set(), facets);
}

EdgeIdealView edge_ideal(const Hypergraph& h) { return EdgeIdealView{h.edges()}; }

std::vector<Face> minimal_edges(const Hypergraph& h) {
    return antichain_minima(h.edges());
}

long long count_disjoint_edge_families(const Hypergraph& h, int i) {
    if (!uniform_degree(h, 0))
        throw input_error("disjoint-edge counting requires a uniform hypergraph");
    if (i < 0) throw input_error("family size must be nonnegative");
    if (i == 0) return 1;
    const auto& edges = h.edges();
    long long count = 0;
    auto induced_edge_count = [&edges](Face span) {
        int c = 0;
        for (Face e : edges)
            if (face_subset(e, span)) ++c;
        return c;
    };
    // Pick edges in index order; prune when too few remain.
    auto rec = [&](auto&& self, size_t start, Face used, int picked) -> void {
        if (picked == i) {
            if (induced_edge_count(used) == i) ++count;
            return;
        }
        for (size_t k = start; k + static_cast<size_t>(i - picked) <= edges.size(); ++k)
            if ((edges[k] & used) == 0) self(self, k + 1, used | edges[k], picked + 1);
    };
    rec(rec, 0, 0, 0);
    return count;
}

} // namespace hyperbetti
