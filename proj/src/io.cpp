#include "hyperbetti/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string label_list(const VertexUniverse& u, Face f) {
    std::string out;
    for (int v : face_vertices(f)) {
        if (!out.empty()) out += ' ';
        out += u.labels[static_cast<size_t>(v)];
    }
    return out;
}

std::string vertices_line(const VertexUniverse& u) {
    std::string out = "vertices:";
    if (u.blocks.empty()) {
        for (const std::string& l : u.labels) out += ' ' + l;
        return out;
    }
    for (size_t b = 0; b < u.blocks.size(); ++b) {
        if (b) out += " |";
        for (int v : face_vertices(u.blocks[b]))
            out += ' ' + u.labels[static_cast<size_t>(v)];
    }
    return out;
}

struct ParsedFile {
    VertexUniverse universe;
    std::vector<Face> edges;
    std::vector<Face> facets;
    bool saw_edge = false;
    bool saw_facet = false;
    bool saw_void = false;
};

ParsedFile parse_text(const std::string& text) {
    ParsedFile out;
    bool have_universe = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens[0] == "vertices:") {
            if (have_universe) fail("duplicate vertices line");
            std::vector<std::string> labels;
            std::vector<Face> blocks;
            Face current = 0;
            for (size_t k = 1; k < tokens.size(); ++k) {
                if (tokens[k] == "|") {
                    if (current == 0) fail("empty partition block");
                    blocks.push_back(current);
                    current = 0;
                    continue;
                }
                current |= face_bit(static_cast<int>(labels.size()));
                labels.push_back(tokens[k]);
            }
            if (current) blocks.push_back(current);
            if (labels.empty()) fail("vertices line lists no vertices");
            if (static_cast<int>(labels.size()) > kMaxVertices)
                fail("more than 63 vertices");
            out.universe = VertexUniverse::make(std::move(labels), std::move(blocks));
            have_universe = true;
            continue;
        }
        if (!have_universe) fail("expected a vertices: line first");
        if (tokens[0] == "void") {
            out.saw_void = true;
            continue;
        }
        bool is_edge = tokens[0] == "edge:";
        bool is_facet = tokens[0] == "facet:";
        if (!is_edge && !is_facet) fail("unrecognized line '" + tokens[0] + "'");
        Face f = 0;
        for (size_t k = 1; k < tokens.size(); ++k) {
            int idx = out.universe.index_of(tokens[k]);
            if (idx < 0) fail("unknown vertex '" + tokens[k] + "'");
            f |= face_bit(idx);
        }
        if (is_edge) {
            out.edges.push_back(f);
            out.saw_edge = true;
        } else {
            out.facets.push_back(f);
            out.saw_facet = true;
        }
    }
    if (!have_universe) throw input_error("input has no vertices: line");
    if (out.saw_edge && (out.saw_facet || out.saw_void))
        throw input_error("input mixes edge: lines with complex lines");
    return out;
}

} // namespace

std::string hypergraph_to_text(const Hypergraph& h) {
    std::string out = vertices_line(h.universe()) + '\n';
    for (Face e : h.edges()) out += "edge: " + label_list(h.universe(), e) + '\n';
    return out;
}

Hypergraph hypergraph_from_text(const std::string& text) {
    ParsedFile p = parse_text(text);
    if (p.saw_facet || p.saw_void)
        throw input_error("expected a hypergraph, found complex lines");
    return Hypergraph::make(std::move(p.universe), std::move(p.edges));
}

std::string complex_to_text(const SimplicialComplex& c) {
    std::string out = vertices_line(c.universe()) + '\n';
    if (c.is_void()) {
        out += "void\n";
        return out;
    }
    for (Face f : c.facets()) out += "facet: " + label_list(c.universe(), f) + '\n';
    return out;
}

SimplicialComplex complex_from_text(const std::string& text) {
    ParsedFile p = parse_text(text);
    if (p.saw_edge) throw input_error("expected a complex, found edge: lines");
    if (p.saw_void) {
        if (p.saw_facet) throw input_error("void complex cannot list facets");
        return SimplicialComplex::void_complex(std::move(p.universe));
    }
    return SimplicialComplex::from_facets(std::move(p.universe), p.facets);
}

namespace {

json universe_to_json(const VertexUniverse& u) {
    json blocks = json::array();
    if (u.blocks.empty()) {
        json one = json::array();
        for (const std::string& l : u.labels) one.push_back(l);
        blocks.push_back(std::move(one));
    } else {
        for (Face b : u.blocks) {
            json grp = json::array();
            for (int v : face_vertices(b)) grp.push_back(u.labels[static_cast<size_t>(v)]);
            blocks.push_back(std::move(grp));
        }
    }
    return blocks;
}

VertexUniverse universe_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("\"vertices\" must be a list of blocks");
    std::vector<std::string> labels;
    std::vector<Face> blocks;
    for (const json& grp : j) {
        if (!grp.is_array()) throw input_error("vertex blocks must be arrays of labels");
        Face blk = 0;
        for (const json& l : grp) {
            blk |= face_bit(static_cast<int>(labels.size()));
            labels.push_back(l.get<std::string>());
        }
        if (blk == 0) throw input_error("empty vertex block");
        blocks.push_back(blk);
    }
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw input_error("more than 63 vertices");
    return VertexUniverse::make(std::move(labels), std::move(blocks));
}

json face_labels_json(const VertexUniverse& u, Face f) {
    json out = json::array();
    for (int v : face_vertices(f)) out.push_back(u.labels[static_cast<size_t>(v)]);
    return out;
}

Face face_from_labels_json(const VertexUniverse& u, const json& arr) {
    Face f = 0;
    for (const json& l : arr) {
        int idx = u.index_of(l.get<std::string>());
        if (idx < 0) throw input_error("unknown vertex '" + l.get<std::string>() + "'");
        f |= face_bit(idx);
    }
    return f;
}

} // namespace

json hypergraph_to_json(const Hypergraph& h) {
    json out;
    out["vertices"] = universe_to_json(h.universe());
    json edges = json::array();
    for (Face e : h.edges()) edges.push_back(face_labels_json(h.universe(), e));
    out["edges"] = std::move(edges);
    return out;
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.contains("vertices")) throw input_error("hypergraph JSON needs \"vertices\"");
    VertexUniverse u = universe_from_json(j.at("vertices"));
    std::vector<Face> edges;
    if (j.contains("edges"))
        for (const json& e : j.at("edges")) edges.push_back(face_from_labels_json(u, e));
    return Hypergraph::make(std::move(u), std::move(edges));
}

json complex_to_json(const SimplicialComplex& c) {
    json out;
    out["vertices"] = universe_to_json(c.universe());
    out["void"] = c.is_void();
    json facets = json::array();
    for (Face f : c.facets()) facets.push_back(face_labels_json(c.universe(), f));
    out["facets"] = std::move(facets);
    return out;
}

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    throw input_error("expected an integer or a decimal string");
}

json betti_to_json(const BettiTable& t, const std::string& field_name) {
    json out;
    out["n"] = t.vertex_count;
    out["field"] = field_name;
    json entries = json::array();
    for (const auto& [k, v] : t.entries) {
        json e;
        e["i"] = k.first;
        e["j"] = k.second;
        e["beta"] = bigint_to_json(v);
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    const int pd = projective_dimension(t);
    out["pd"] = pd;
    out["depth"] = depth_via_ab(t.vertex_count, pd);
    auto lin = inferred_linear_degree(t);
    out["linear_for_d"] = lin ? json(*lin) : json(nullptr);
    return out;
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    t.vertex_count = j.at("n").get<int>();
    for (const json& e : j.at("entries")) {
        BigInt beta = bigint_from_json(e.at("beta"));
        if (beta != 0) t.entries[{e.at("i").get<int>(), e.at("j").get<int>()}] = beta;
    }
    return t;
}

std::string betti_to_csv(const BettiTable& t) {
    std::string out = "i,j,beta\n";
    for (const auto& [k, v] : t.entries)
        out += std::to_string(k.first) + ',' + std::to_string(k.second) + ',' +
               v.str() + '\n';
    return out;
}

std::string betti_to_text(const BettiTable& t, const std::string& field_name) {
    std::ostringstream out;
    out << "n: " << t.vertex_count << "\nfield: " << field_name << '\n';
    out << std::setw(3) << 'i' << std::setw(4) << 'j' << "  beta\n";
    for (const auto& [k, v] : t.entries)
        out << std::setw(3) << k.first << std::setw(4) << k.second << "  " << v.str()
            << '\n';
    const int pd = projective_dimension(t);
    out << "pd: " << pd << '\n';
    out << "depth: " << depth_via_ab(t.vertex_count, pd) << '\n';
    auto lin = inferred_linear_degree(t);
    out << "linear_for_d: " << (lin ? std::to_string(*lin) : "none") << '\n';
    std::vector<BigInt> totals = t.totals();
    out << "totals:";
    for (const BigInt& b : totals) out << ' ' << b.str();
    out << '\n';
    return out.str();
}

json multigraded_to_json(const MultigradedBettiTable& t, const VertexUniverse& u,
                         const std::string& field_name) {
    json out;
    out["n"] = t.vertex_count;
    out["field"] = field_name;
    json entries = json::array();
    for (const auto& [k, v] : t.entries) {
        json e;
        e["i"] = k.first;
        e["degree"] = face_labels_json(u, k.second);
        e["beta"] = v;
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

json homology_to_json(const HomologyProfile& p) {
    json out = json::object();
    for (const auto& [degree, dim] : p.dims) out[std::to_string(degree)] = dim;
    return out;
}

json hilbert_to_json(const HilbertSeries& s) {
    json out;
    json coeffs = json::array();
    for (const BigInt& c : s.numerator) coeffs.push_back(bigint_to_json(c));
    out["numerator"] = std::move(coeffs);
    out["denominator_power"] = s.denominator_power;
    return out;
}

std::string hilbert_to_text(const HilbertSeries& s) {
    std::string num;
    bool first = true;
    for (size_t k = 0; k < s.numerator.size(); ++k) {
        const BigInt& c = s.numerator[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) num += "-";
            first = false;
        } else {
            num += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) num += mag.str();
        if (k == 1)
            num += "t";
        else if (k > 1)
            num += "t^" + std::to_string(k);
    }
    if (first) num = "0";
    return "(" + num + ") / (1-t)^" + std::to_string(s.denominator_power) + "\n";
}

json family_spec_to_json(const FamilySpec& spec) {
    json out;
    out["kind"] = family_kind_name(spec.kind);
    out["n"] = spec.block_sizes;
    if (spec.kind != FamilyKind::composition) out["d"] = spec.d;
    if (spec.kind == FamilyKind::composition) out["a"] = spec.a;
    if (spec.kind == FamilyKind::interval) {
        json iv = json::array();
        for (auto [lo, hi] : spec.intervals.ranges) iv.push_back(json::array({lo, hi}));
        out["intervals"] = std::move(iv);
    }
    return out;
}

FamilySpec family_spec_from_json(const json& j) {
    FamilySpec spec;
    spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
    spec.block_sizes = j.at("n").get<std::vector<int>>();
    if (j.contains("d")) spec.d = j.at("d").get<int>();
    if (j.contains("a")) spec.a = j.at("a").get<std::vector<int>>();
    if (spec.kind == FamilyKind::composition) {
        if (spec.a.empty()) throw input_error("da spec needs \"a\"");
        spec.d = 0;
        for (int av : spec.a) spec.d += av;
    }
    if (j.contains("intervals")) {
        for (const json& r : j.at("intervals")) {
            if (!r.is_array() || r.size() != 2)
                throw input_error("intervals must be [lo, hi] pairs");
            spec.intervals.ranges.emplace_back(r[0].get<int>(), r[1].get<int>());
        }
    }
    if (spec.kind == FamilyKind::interval && spec.intervals.ranges.empty())
        throw input_error("dI spec needs \"intervals\"");
    return spec;
}

LoadedInput load_input_text(const std::string& content) {
    LoadedInput out;
    size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j = json::parse(content);
        if (j.contains("kind")) {
            out.kind = LoadedInput::Kind::family;
            out.family = family_spec_from_json(j);
        } else {
            out.kind = LoadedInput::Kind::hypergraph;
            out.hypergraph = hypergraph_from_json(j);
        }
        return out;
    }
    if (content.find("edge:") != std::string::npos) {
        out.kind = LoadedInput::Kind::hypergraph;
        out.hypergraph = hypergraph_from_text(content);
    } else {
        out.kind = LoadedInput::Kind::complex;
        out.complex = complex_from_text(content);
    }
    return out;
}

} // namespace hyperbetti
