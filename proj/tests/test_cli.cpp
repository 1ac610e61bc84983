#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperbetti/cli.hpp"
#include "hyperbetti/errors.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/io.hpp"
#include "test_util.hpp"

using namespace hyperbetti;
using testutil::face_of;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("hyperbetti_test_" + name);
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

} // namespace

TEST_CASE("hypergraph text round trip") {
    auto h = complete_multipartite({2, 3}, 3);
    std::string text = hypergraph_to_text(h);
    CHECK(text.find("vertices: a b | A B C") == 0);
    CHECK(hypergraph_from_text(text) == h);

    // Comments and blank lines are ignored.
    std::string annotated = "# a comment\n\n" + text;
    CHECK(hypergraph_from_text(annotated) == h);

    CHECK_THROWS_AS(hypergraph_from_text("edge: a b\n"), input_error);
    CHECK_THROWS_AS(hypergraph_from_text("vertices: a b\nedge: a z\n"), input_error);
    CHECK_THROWS_AS(hypergraph_from_text("vertices: a a\n"), input_error);
}

TEST_CASE("complex text round trip") {
    VertexUniverse u = VertexUniverse::partitioned({2, 2});
    auto c = SimplicialComplex::from_facets(u, {face_of({0, 1}), face_of({2, 3})});
    CHECK(complex_from_text(complex_to_text(c)) == c);

    auto empty = SimplicialComplex::empty_complex(VertexUniverse::plain(3));
    CHECK(complex_from_text(complex_to_text(empty)) == empty);

    auto void_c = SimplicialComplex::void_complex(VertexUniverse::plain(3));
    std::string text = complex_to_text(void_c);
    CHECK(text.find("void") != std::string::npos);
    CHECK(complex_from_text(text) == void_c);

    CHECK_THROWS_AS(complex_from_text("vertices: a b\nedge: a b\n"), input_error);
}

TEST_CASE("hypergraph JSON round trip") {
    auto h = complete_composition({3, 3, 3}, {1, 1, 3});
    CHECK(hypergraph_from_json(hypergraph_to_json(h)) == h);

    testutil::Rng rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testutil::random_uniform_hypergraph(rng, rng.uniform(2, 8),
                                                     rng.uniform(2, 3), 8);
        CHECK(hypergraph_from_json(hypergraph_to_json(g)) == g);
        CHECK(hypergraph_from_text(hypergraph_to_text(g)) == g);
    }
}

TEST_CASE("betti JSON carries pd, depth and linearity") {
    auto t = betti_complete(4, 2);
    json j = betti_to_json(t, "GF(2)");
    CHECK(j["n"] == 4);
    CHECK(j["pd"] == 3);
    CHECK(j["depth"] == 1);
    CHECK(j["linear_for_d"] == 2);
    CHECK(j["entries"].size() == 4);
    CHECK(betti_from_json(j) == t);

    // Values beyond int64 travel as decimal strings.
    BettiTable big;
    big.vertex_count = 63;
    big.entries[{0, 0}] = 1;
    big.entries[{1, 32}] = BigInt("123456789012345678901234567890");
    json jb = betti_to_json(big, "Q");
    CHECK(jb["entries"][1]["beta"].is_string());
    CHECK(betti_from_json(jb) == big);
}

TEST_CASE("family spec JSON round trip") {
    FamilySpec spec;
    spec.kind = FamilyKind::interval;
    spec.block_sizes = {3, 3, 3};
    spec.d = 5;
    spec.intervals = IntervalSpec{{{1, 2}, {1, 1}, {2, 3}}};
    json j = family_spec_to_json(spec);
    FamilySpec back = family_spec_from_json(j);
    CHECK(back.kind == spec.kind);
    CHECK(back.block_sizes == spec.block_sizes);
    CHECK(back.d == spec.d);
    CHECK(back.intervals == spec.intervals);
}

TEST_CASE("generate reports edge counts") {
    auto r = run({"generate", "--family", "dI", "--n", "3,3,3", "--d", "5",
                  "--intervals", "1:2,1,2:3"});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("36 edges") != std::string::npos);
    CHECK(hypergraph_from_text(r.out).edge_count() == 36);

    auto da = run({"generate", "--family", "da", "--n", "3,3,3", "--a", "1,1,3"});
    CHECK(da.code == kExitOk);
    CHECK(da.err.find("9 edges") != std::string::npos);

    auto none = run({"generate", "--family", "knd", "--n", "2", "--d", "3"});
    CHECK(none.code == kExitOk);
    CHECK(none.err.find("0 edges") != std::string::npos);
    CHECK(none.err.find("warning") != std::string::npos);
}

TEST_CASE("betti command: all methods coincide on the worked example") {
    std::vector<std::string> base = {"betti", "--family", "multipartite",
                                     "--n", "2,3", "--d", "3", "--format", "csv"};
    auto hochster = run(base);
    CHECK(hochster.code == kExitOk);
    CHECK(hochster.out ==
          "i,j,beta\n0,0,1\n1,3,9\n2,4,13\n3,5,5\n");

    auto closed = base;
    closed.insert(closed.end(), {"--method", "closed"});
    CHECK(run(closed).out == hochster.out);

    auto fvector = base;
    fvector.insert(fvector.end(), {"--method", "fvector"});
    CHECK(run(fvector).out == hochster.out);
}

TEST_CASE("multigraded betti output") {
    auto r = run({"betti", "--family", "knd", "--n", "3", "--d", "2",
                  "--multigraded"});
    CHECK(r.code == kExitOk);
    json j = json::parse(r.out);
    // (0,{}), (1,{a,b}), (1,{a,c}), (1,{b,c}), (2,{a,b,c}).
    CHECK(j["entries"].size() == 5);
    CHECK(j["entries"][1]["degree"] == json::array({"a", "b"}));
    CHECK(j["entries"][4]["beta"] == 2);

    CHECK(run({"betti", "--family", "knd", "--n", "3", "--d", "2", "--multigraded",
               "--method", "closed"}).code == kExitInputError);
}

TEST_CASE("betti command output formats") {
    auto text = run({"betti", "--family", "knd", "--n", "4", "--d", "2"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("pd: 3") != std::string::npos);
    CHECK(text.out.find("totals: 1 6 8 3") != std::string::npos);

    auto js = run({"betti", "--family", "knd", "--n", "4", "--d", "2", "--format",
                   "json", "--field", "q"});
    json parsed = json::parse(js.out);
    CHECK(parsed["field"] == "Q");
    CHECK(parsed["pd"] == 3);
}

TEST_CASE("betti command from an input file") {
    auto path = temp_file("k33.txt", hypergraph_to_text(complete_hypergraph(3, 2)));
    auto r = run({"betti", "--input", path.string(), "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "i,j,beta\n0,0,1\n1,2,3\n2,3,2\n");
    std::filesystem::remove(path);

    auto spec_path = temp_file("spec.json",
                               family_spec_to_json([] {
                                   FamilySpec s;
                                   s.kind = FamilyKind::multipartite;
                                   s.block_sizes = {2, 3};
                                   s.d = 3;
                                   return s;
                               }()).dump());
    auto from_spec = run({"betti", "--input", spec_path.string(), "--format", "csv"});
    CHECK(from_spec.out == "i,j,beta\n0,0,1\n1,3,9\n2,4,13\n3,5,5\n");
    std::filesystem::remove(spec_path);
}

TEST_CASE("fvector method from a file needs an explicit or inferable d") {
    auto path = temp_file("k42.txt", hypergraph_to_text(complete_hypergraph(4, 2)));
    auto inferred = run({"betti", "--input", path.string(), "--method", "fvector",
                         "--format", "csv"});
    CHECK(inferred.code == kExitOk);
    auto explicit_d = run({"betti", "--input", path.string(), "--method", "fvector",
                           "--d", "2", "--format", "csv"});
    CHECK(explicit_d.out == inferred.out);
    CHECK(explicit_d.out == "i,j,beta\n0,0,1\n1,2,6\n2,3,8\n3,4,3\n");
    std::filesystem::remove(path);

    // Mixed edge sizes and no --d: nothing to infer.
    auto mixed_path = temp_file(
        "mixed.txt", "vertices: a b c d\nedge: a b\nedge: b c d\n");
    auto fail = run({"betti", "--input", mixed_path.string(), "--method", "fvector"});
    CHECK(fail.code == kExitInputError);
    std::filesystem::remove(mixed_path);
}

TEST_CASE("verify succeeds on families and flags corrupted fixtures") {
    auto ok = run({"verify", "--family", "da", "--n", "3,3,3", "--a", "1,1,3"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("MISMATCH") == std::string::npos);
    CHECK(ok.out.find("product formula matches hochster") != std::string::npos);

    auto knd = run({"verify", "--family", "knd", "--n", "6", "--d", "3"});
    CHECK(knd.code == kExitOk);

    auto dI = run({"verify", "--family", "dI", "--n", "3,3,3", "--d", "5",
                   "--intervals", "1:2,1,2:3"});
    CHECK(dI.code == kExitOk);

    // Corrupt one entry of the expected table: exit 1 and a diff.
    auto good = betti_complete_multipartite({2, 3}, 3);
    good.entries[{2, 4}] = 12;  // truth is 13
    auto fixture = temp_file("corrupt.json", betti_to_json(good, "GF(2)").dump());
    auto bad = run({"verify", "--family", "multipartite", "--n", "2,3", "--d", "3",
                    "--expect-betti", fixture.string()});
    CHECK(bad.code == kExitMismatch);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
    CHECK(bad.out.find("12 vs 13") != std::string::npos);
    std::filesystem::remove(fixture);
}

TEST_CASE("dual command recovers the complement family") {
    auto r = run({"dual", "--family", "knd", "--n", "4", "--d", "2"});
    CHECK(r.code == kExitOk);
    // Facets of the dual are all 2-subsets: the independence complex of K_4^3.
    auto dual = complex_from_text(r.out);
    auto expected = independence_complex(complete_hypergraph(4, 3));
    CHECK(dual.facets() == expected.facets());
}

TEST_CASE("homology command emits a JSON profile") {
    auto path = temp_file("circle.txt",
                          "vertices: a b c\nfacet: a b\nfacet: a c\nfacet: b c\n");
    auto r = run({"homology", "--input", path.string(), "--field", "2"});
    CHECK(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["-1"] == 0);
    CHECK(j["0"] == 0);
    CHECK(j["1"] == 1);
    std::filesystem::remove(path);
}

TEST_CASE("hilbert command") {
    auto r = run({"hilbert", "--family", "knd", "--n", "3", "--d", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(1 - 3t^2 + 2t^3) / (1-t)^3\n");

    auto js = run({"hilbert", "--family", "knd", "--n", "3", "--d", "2",
                   "--format", "json"});
    json j = json::parse(js.out);
    CHECK(j["numerator"] == json::array({1, 0, -3, 2}));
    CHECK(j["denominator_power"] == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({"betti", "--family", "nope", "--n", "3", "--d", "2"}).code ==
          kExitInputError);
    CHECK(run({"betti", "--family", "knd", "--n", "3"}).code == kExitInputError);
    CHECK(run({"betti"}).code == kExitInputError);
    CHECK(run({"generate", "--family", "dI", "--n", "3,3", "--d", "5",
               "--intervals", "2,2"}).code == kExitInputError);
    CHECK(run({"betti", "--family", "knd", "--n", "12", "--d", "3", "--limit", "10"})
              .code == kExitResourceLimit);
    CHECK(run({"nonsense"}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("strict interval mode") {
    auto strict = run({"generate", "--family", "dI", "--n", "3,3,3", "--d", "5",
                       "--intervals", "0:3,1,2:3", "--strict-intervals"});
    CHECK(strict.code == kExitInputError);
    auto lenient = run({"generate", "--family", "dI", "--n", "3,3,3", "--d", "5",
                        "--intervals", "0:3,1,2:3"});
    CHECK(lenient.code == kExitOk);
    CHECK(lenient.err.find("36 edges") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across jobs settings") {
    std::vector<std::string> base = {"betti", "--family", "multipartite", "--n",
                                     "4,3", "--d", "3", "--format", "json"};
    auto serial = base;
    serial.insert(serial.end(), {"--jobs", "1"});
    auto wide = base;
    wide.insert(wide.end(), {"--jobs", "4"});
    auto a = run(serial), b = run(wide);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == run(serial).out);
}

TEST_CASE("generate round trip through a file") {
    auto path = std::filesystem::temp_directory_path() / "hyperbetti_test_rt.txt";
    auto r = run({"generate", "--family", "multipartite", "--n", "2,3", "--d", "3",
                  "--output", path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("9 edges") != std::string::npos);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(hypergraph_from_text(buf.str()) == complete_multipartite({2, 3}, 3));
    std::filesystem::remove(path);
}
