#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hyperbetti/betti.hpp"
#include "hyperbetti/complex.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hilbert.hpp"
#include "hyperbetti/hypergraph.hpp"

// Text and JSON formats.
//
// Hypergraph text:          Complex text:
//   # comment                 vertices: a b c | d e
//   vertices: a b | A B C     facet: a b d
//   edge: a b A                 (no facet lines = the empty complex {∅};
//                                a single line `void` = the void complex)
//
// Blocks are separated by `|`; bit order is declaration order; labels match
// [A-Za-z0-9_]+.

namespace hyperbetti {

using json = nlohmann::ordered_json;

std::string hypergraph_to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(const std::string& text);

std::string complex_to_text(const SimplicialComplex& c);
SimplicialComplex complex_from_text(const std::string& text);

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json complex_to_json(const SimplicialComplex& c);

// Betti numbers can exceed int64 for large closed forms; such values are
// emitted as decimal strings, everything else as JSON integers.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

// {"n":, "field":, "entries":[{"i","j","beta"}...], "pd":, "depth":,
//  "linear_for_d": d|null}
json betti_to_json(const BettiTable& t, const std::string& field_name);
BettiTable betti_from_json(const json& j);

std::string betti_to_csv(const BettiTable& t);
std::string betti_to_text(const BettiTable& t, const std::string& field_name);

// Degrees as label lists, sorted by vertex index.
json multigraded_to_json(const MultigradedBettiTable& t, const VertexUniverse& u,
                         const std::string& field_name);

json homology_to_json(const HomologyProfile& p);

json hilbert_to_json(const HilbertSeries& s);
std::string hilbert_to_text(const HilbertSeries& s);

json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const json& j);

// Sniffing loader used by the CLI: leading '{' selects JSON (a family spec
// when a "kind" key is present, a hypergraph otherwise); text files are
// hypergraphs when they contain `edge:` lines, complexes otherwise.
struct LoadedInput {
    enum class Kind { hypergraph, complex, family } kind;
    Hypergraph hypergraph;
    SimplicialComplex complex;
    FamilySpec family;
};

LoadedInput load_input_text(const std::string& content);

} // namespace hyperbetti
