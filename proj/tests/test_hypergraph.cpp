#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperbetti/errors.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "test_util.hpp"

using namespace hyperbetti;
using testutil::face_of;

TEST_CASE("hypergraph construction") {
    VertexUniverse u3 = VertexUniverse::plain(3);
    auto h = Hypergraph::make(u3, {face_of({0, 1}), face_of({1, 2}), face_of({0, 1})});
    CHECK(h.edges() == std::vector<Face>{face_of({0, 1}), face_of({1, 2})});
    CHECK_THROWS_AS(Hypergraph::make(u3, {Face{0}}), input_error);
    CHECK_THROWS_AS(Hypergraph::make(u3, {face_of({4})}), input_error);
}

TEST_CASE("validate_simple") {
    VertexUniverse u3 = VertexUniverse::plain(3);
    CHECK(validate_simple(Hypergraph::make(u3, {face_of({0, 1}), face_of({1, 2})})).simple());

    auto contained = validate_simple(
        Hypergraph::make(u3, {face_of({0, 1}), face_of({0, 1, 2})}));
    CHECK(!contained.simple());
    CHECK(contained.containments.size() == 1);

    // Relaxed form: singleton edges are accepted but reported.
    auto relaxed = validate_simple(Hypergraph::make(u3, {face_of({0}), face_of({1, 2})}));
    CHECK(!relaxed.simple());
    CHECK(relaxed.undersized_edges == std::vector<Face>{face_of({0})});
}

TEST_CASE("uniform degree") {
    CHECK(uniform_degree(complete_hypergraph(5, 3)) == 3);
    VertexUniverse u5 = VertexUniverse::plain(5);
    CHECK(uniform_degree(Hypergraph::make(u5, {face_of({0, 1}), face_of({2, 3, 4})})) ==
          std::nullopt);
    auto edgeless = Hypergraph::make(u5, {});
    CHECK(uniform_degree(edgeless) == std::nullopt);
    CHECK(uniform_degree(edgeless, 4) == 4);
}

TEST_CASE("induced hypergraphs") {
    auto k42 = complete_hypergraph(4, 2);
    auto ind = induced(k42, face_of({0, 1, 2}));
    CHECK(ind.vertex_set() == face_of({0, 1, 2}));
    CHECK(ind.edge_count() == 3);  // K_3^2

    CHECK(induced(k42, k42.vertex_set()) == k42);

    // K_{2,3}^3 restricted to {a, b, A} keeps the single edge abA.
    auto k233 = complete_multipartite({2, 3}, 3);
    auto small = induced(k233, face_of({0, 1, 2}));
    CHECK(small.edges() == std::vector<Face>{face_of({0, 1, 2})});
}

TEST_CASE("product") {
    // Two singleton-edge factors give the complete bipartite graph K_{2,2}.
    auto k21 = complete_hypergraph(2, 1);
    auto p = product(k21, k21);
    CHECK(p.universe().blocks.size() == 2);
    CHECK(p.edges() == std::vector<Face>{face_of({0, 2}), face_of({1, 2}),
                                         face_of({0, 3}), face_of({1, 3})});

    // One edge each: a single 4-edge on 4 vertices.
    auto k22 = complete_hypergraph(2, 2);
    CHECK(product(k22, k22).edges() == std::vector<Face>{face_of({0, 1, 2, 3})});

    // Uniformities add.
    auto a = complete_hypergraph(4, 2), b = complete_hypergraph(3, 3);
    CHECK(uniform_degree(product(a, b)) == 5);

    CHECK_THROWS_AS(product(induced(a, face_of({0, 1})), b), input_error);
}

TEST_CASE("product of complete factors is the composition family") {
    auto lhs = product(product(complete_hypergraph(3, 1), complete_hypergraph(3, 1)),
                       complete_hypergraph(3, 3));
    auto rhs = complete_composition({3, 3, 3}, {1, 1, 3});
    CHECK(lhs == rhs);
}

TEST_CASE("independence complex") {
    // Independence complex of K_n^d is the (d-2)-skeleton of the simplex.
    for (int n = 2; n <= 7; ++n)
        for (int d = 2; d <= n; ++d) {
            auto ic = independence_complex(complete_hypergraph(n, d));
            auto skel = skeleton(SimplicialComplex::full_simplex(VertexUniverse::plain(n)),
                                 d - 2);
            CHECK(ic == skel);
        }

    // Every vertex is an edge: only the empty face survives.
    auto k41 = complete_hypergraph(4, 1);
    CHECK(independence_complex(k41) == SimplicialComplex::empty_complex(k41.universe()));

    VertexUniverse u4 = VertexUniverse::plain(4);
    CHECK(independence_complex(Hypergraph::make(u4, {})) ==
          SimplicialComplex::full_simplex(u4));
}

TEST_CASE("minimal non-faces of the independence complex are the minimal edges") {
    testutil::Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(2, 8);
        VertexUniverse u = VertexUniverse::plain(n);
        std::vector<Face> edges;
        int m = rng.uniform(1, 6);
        for (int k = 0; k < m; ++k) {
            Face e = rng.random_subset(u.mask());
            if (e) edges.push_back(e);
        }
        if (edges.empty()) continue;
        auto h = Hypergraph::make(u, edges);
        CHECK(minimal_nonfaces(independence_complex(h)) == minimal_edges(h));
    }
}

TEST_CASE("edge ideal generators") {
    auto k32 = complete_hypergraph(3, 2);
    CHECK(edge_ideal(k32).generators ==
          std::vector<Face>{face_of({0, 1}), face_of({0, 2}), face_of({1, 2})});
    CHECK(edge_ideal(Hypergraph::make(VertexUniverse::plain(3), {})).generators.empty());
    CHECK(edge_ideal(complete_multipartite({2, 3}, 3)).generators.size() == 9);
}

TEST_CASE("K_{2,3}^3 edge list matches the worked example") {
    auto h = complete_multipartite({2, 3}, 3);
    // Vertices a,b | A,B,C; the nine 3-edges not inside a block.
    std::vector<Face> expected = {
        face_of({0, 1, 2}), face_of({0, 1, 3}), face_of({0, 1, 4}),  // abA abB abC
        face_of({0, 2, 3}), face_of({1, 2, 3}), face_of({0, 2, 4}),  // aAB bAB aAC
        face_of({1, 2, 4}), face_of({0, 3, 4}), face_of({1, 3, 4}),  // bAC aBC bBC
    };
    std::sort(expected.begin(), expected.end());
    CHECK(h.edges() == expected);
}

TEST_CASE("count_disjoint_edge_families") {
    VertexUniverse u4 = VertexUniverse::plain(4);
    auto two = Hypergraph::make(u4, {face_of({0, 1}), face_of({2, 3})});
    CHECK(count_disjoint_edge_families(two, 2) == 1);

    auto path = Hypergraph::make(VertexUniverse::plain(3),
                                 {face_of({0, 1}), face_of({1, 2})});
    CHECK(count_disjoint_edge_families(path, 2) == 0);
    CHECK(count_disjoint_edge_families(path, 0) == 1);
    CHECK(count_disjoint_edge_families(path, 1) == 2);

    // Disjoint pairs of K_4^2 edges induce extra edges, so none count.
    CHECK(count_disjoint_edge_families(complete_hypergraph(4, 2), 2) == 0);

    auto mixed = Hypergraph::make(u4, {face_of({0, 1}), face_of({1, 2, 3})});
    CHECK_THROWS_AS(count_disjoint_edge_families(mixed, 1), input_error);

    testutil::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = testutil::random_uniform_hypergraph(rng, rng.uniform(4, 8),
                                                     rng.uniform(2, 3), 8);
        for (int i = 0; i <= 3; ++i)
            CHECK(count_disjoint_edge_families(h, i) == testutil::brute_disjoint_families(h, i));
    }
}

TEST_CASE("independence complex of a product is the dual of the join of duals") {
    testutil::Rng rng(606060);
    auto random_hypergraph = [&rng](int n) {
        VertexUniverse u = VertexUniverse::plain(n);
        std::vector<Face> edges;
        int m = rng.uniform(1, 4);
        for (int k = 0; k < m; ++k) {
            Face e = rng.random_subset(u.mask());
            if (e) edges.push_back(e);
        }
        return Hypergraph::make(u, edges);
    };
    int kept = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto h = random_hypergraph(rng.uniform(1, 4));
        auto k = random_hypergraph(rng.uniform(1, 4));
        if (h.edge_count() == 0 || k.edge_count() == 0) continue;
        ++kept;
        auto prod = product(h, k);
        auto lhs = independence_complex(prod);

        // Assemble (Δ(H)* * Δ(K)*)* inside the product universe.
        const VertexUniverse& cu = prod.universe();
        int shift = h.universe().size;
        auto dual_h = alexander_dual(independence_complex(h));
        auto dual_k = alexander_dual(independence_complex(k));
        std::vector<Face> shifted;
        for (Face f : dual_k.facets()) shifted.push_back(f << shift);
        auto left = SimplicialComplex::from_facets_on(cu, h.universe().mask(),
                                                      dual_h.facets());
        auto right = SimplicialComplex::from_facets_on(
            cu, k.universe().mask() << shift, shifted);
        auto rhs = alexander_dual(join(left, right));
        CHECK(lhs == rhs);
    }
    CHECK(kept >= 30);
}

TEST_CASE("multipartite edge set collapses when every block is small") {
    // n_s <= d-1 for all s: every d-subset straddles blocks.
    auto collapsed = complete_multipartite({2, 2, 2}, 3);
    auto full = complete_hypergraph(6, 3);
    CHECK(collapsed.edges() == full.edges());
}
