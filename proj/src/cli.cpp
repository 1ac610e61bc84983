#include "hyperbetti/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperbetti/errors.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hilbert.hpp"
#include "hyperbetti/io.hpp"

namespace hyperbetti {

namespace {

struct RunConfig {
    std::string command;
    std::optional<FamilySpec> family;
    std::string input_path;
    std::string output_path;
    std::string field_text = "2";
    std::string fields_text = "2,3,q";
    std::string method = "hochster";
    std::string format = "text";
    int limit = 24;
    int jobs = 0;
    bool strict_intervals = false;
    bool multigraded = false;
    std::optional<int> d_override;
    std::string expect_betti_path;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (...) {
            throw input_error(std::string("cannot parse ") + what + " '" + item + "'");
        }
    }
    if (out.empty()) throw input_error(std::string("empty ") + what + " list");
    return out;
}

IntervalSpec parse_intervals(const std::string& text) {
    IntervalSpec iv;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                int v = std::stoi(item);
                iv.ranges.emplace_back(v, v);
            } else {
                iv.ranges.emplace_back(std::stoi(item.substr(0, colon)),
                                       std::stoi(item.substr(colon + 1)));
            }
        } catch (const std::exception&) {
            throw input_error("cannot parse interval '" + item +
                              "' (expected lo:hi or a single value)");
        }
    }
    if (iv.ranges.empty()) throw input_error("empty interval list");
    return iv;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        throw input_error(std::string(name) + " is not an integer");
    }
}

std::vector<FieldSpec> parse_field_list(const std::string& text) {
    std::vector<FieldSpec> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(FieldSpec::parse(item));
    if (out.empty()) throw input_error("empty field list");
    return out;
}

// Resolved problem instance: always a complex, plus the hypergraph and
// family spec when the input provides them.
struct Instance {
    std::optional<FamilySpec> family;
    std::optional<Hypergraph> hypergraph;
    SimplicialComplex complex;
};

Instance resolve_instance(const RunConfig& cfg) {
    Instance inst;
    if (cfg.family && !cfg.input_path.empty())
        throw input_error("give either --family or --input, not both");
    if (cfg.family) {
        inst.family = cfg.family;
        inst.hypergraph = make_family(*cfg.family, cfg.strict_intervals);
        inst.complex = independence_complex(*inst.hypergraph);
        return inst;
    }
    if (cfg.input_path.empty()) throw input_error("need --family or --input");
    LoadedInput loaded = load_input_text(read_file(cfg.input_path));
    switch (loaded.kind) {
        case LoadedInput::Kind::family:
            inst.family = loaded.family;
            inst.hypergraph = make_family(loaded.family, cfg.strict_intervals);
            inst.complex = independence_complex(*inst.hypergraph);
            break;
        case LoadedInput::Kind::hypergraph:
            inst.hypergraph = loaded.hypergraph;
            inst.complex = independence_complex(loaded.hypergraph);
            break;
        case LoadedInput::Kind::complex:
            inst.complex = loaded.complex;
            break;
    }
    return inst;
}

int linearity_degree(const RunConfig& cfg, const Instance& inst) {
    if (cfg.d_override) return *cfg.d_override;
    if (inst.family) return inst.family->uniformity();
    if (inst.hypergraph) {
        auto d = uniform_degree(*inst.hypergraph);
        if (d) return *d;
    }
    throw input_error("--method fvector needs --d (no uniform degree to infer)");
}

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw input_error("cannot write '" + cfg.output_path + "'");
    f << text;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.family) throw input_error("generate needs --family");
    Hypergraph h = make_family(*cfg.family, cfg.strict_intervals);
    std::string text = cfg.format == "json" ? hypergraph_to_json(h).dump(2) + "\n"
                                            : hypergraph_to_text(h);
    write_output(cfg, out, text);
    std::string note = std::to_string(h.edge_count()) + " edges";
    if (cfg.output_path.empty())
        err << note << '\n';
    else
        out << note << '\n';
    if (h.edge_count() == 0) err << "warning: family has an empty edge set\n";
    return kExitOk;
}

BettiTable compute_betti(const RunConfig& cfg, const Instance& inst,
                         const FieldSpec& field) {
    HochsterOptions opts{cfg.limit, cfg.jobs};
    if (cfg.method == "hochster") return hochster_graded(inst.complex, field, opts);
    if (cfg.method == "closed") {
        if (!inst.family) throw input_error("--method closed needs a family spec");
        auto t = closed_betti(*inst.family);
        if (!t) throw input_error("no closed form for family kind 'dI'");
        return *t;
    }
    if (cfg.method == "fvector")
        return betti_from_fvector_linear(inst.complex, linearity_degree(cfg, inst));
    throw input_error("unknown method '" + cfg.method +
                      "' (expected hochster, closed or fvector)");
}

int cmd_betti(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Instance inst = resolve_instance(cfg);
    FieldSpec field = FieldSpec::parse(cfg.field_text);
    if (cfg.multigraded) {
        if (cfg.method != "hochster")
            throw input_error("--multigraded is only available with --method hochster");
        HochsterOptions opts{cfg.limit, cfg.jobs};
        auto mg = hochster_multigraded(inst.complex, field, opts);
        out << multigraded_to_json(mg, inst.complex.universe(), field.name()).dump(2)
            << '\n';
        return kExitOk;
    }
    BettiTable t = compute_betti(cfg, inst, field);
    std::string field_name =
        cfg.method == "hochster" ? field.name() : "independent";
    if (cfg.format == "json")
        out << betti_to_json(t, field_name).dump(2) << '\n';
    else if (cfg.format == "csv")
        out << betti_to_csv(t);
    else
        out << betti_to_text(t, field_name);
    return kExitOk;
}

int cmd_dual(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Instance inst = resolve_instance(cfg);
    if (inst.complex.vertex_count() > cfg.limit)
        throw resource_error("dual computation over " +
                             std::to_string(inst.complex.vertex_count()) +
                             " vertices exceeds the limit of " +
                             std::to_string(cfg.limit));
    SimplicialComplex dual = alexander_dual(inst.complex);
    std::string text = cfg.format == "json" ? complex_to_json(dual).dump(2) + "\n"
                                            : complex_to_text(dual);
    write_output(cfg, out, text);
    return kExitOk;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Instance inst = resolve_instance(cfg);
    if (inst.complex.vertex_count() > cfg.limit)
        throw resource_error("homology over " +
                             std::to_string(inst.complex.vertex_count()) +
                             " vertices exceeds the limit of " +
                             std::to_string(cfg.limit));
    FieldSpec field = FieldSpec::parse(cfg.field_text);
    HomologyProfile p = reduced_homology(inst.complex, field);
    out << homology_to_json(p).dump(2) << '\n';
    return kExitOk;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Instance inst = resolve_instance(cfg);
    HilbertSeries s = hilbert_from_fvector(inst.complex);
    if (cfg.format == "json")
        out << hilbert_to_json(s).dump(2) << '\n';
    else
        out << hilbert_to_text(s);
    return kExitOk;
}

// One pass/fail line per check; returns true when the check passed.
class VerifyReport {
public:
    explicit VerifyReport(std::ostream& out) : out_(out) {}

    bool check(const std::string& name, bool ok, const std::string& detail = "") {
        out_ << (ok ? "ok: " : "MISMATCH: ") << name;
        if (!ok && !detail.empty()) out_ << " (" << detail << ")";
        out_ << '\n';
        all_ok_ = all_ok_ && ok;
        return ok;
    }
    bool all_ok() const { return all_ok_; }

private:
    std::ostream& out_;
    bool all_ok_ = true;
};

std::string table_diff(const BettiTable& a, const BettiTable& b) {
    std::ostringstream out;
    auto keys = a.entries;
    for (const auto& [k, v] : b.entries) keys.try_emplace(k, 0);
    int shown = 0;
    for (const auto& [k, unused] : keys) {
        BigInt va = a.beta(k.first, k.second), vb = b.beta(k.first, k.second);
        if (va == vb) continue;
        if (shown++) out << ", ";
        out << "beta(" << k.first << "," << k.second << "): " << va.str() << " vs "
            << vb.str();
        if (shown >= 4) {
            out << ", ...";
            break;
        }
    }
    return out.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.family) throw input_error("verify needs --family");
    const FamilySpec& spec = *cfg.family;
    Hypergraph h = make_family(spec, cfg.strict_intervals);
    SimplicialComplex delta = independence_complex(h);
    const int n = h.vertex_count();
    const int d = spec.uniformity();
    const bool has_edges = h.edge_count() > 0;
    HochsterOptions opts{cfg.limit, cfg.jobs};
    VerifyReport report(out);

    std::vector<FieldSpec> fields = parse_field_list(cfg.fields_text);
    std::vector<BettiTable> tables;
    tables.reserve(fields.size());
    for (const FieldSpec& f : fields) tables.push_back(hochster_graded(delta, f, opts));
    for (size_t k = 1; k < tables.size(); ++k)
        report.check("hochster tables agree over " + fields[0].name() + " and " +
                         fields[k].name(),
                     tables[0] == tables[k], table_diff(tables[0], tables[k]));
    const BettiTable& base = tables[0];

    if (auto closed = closed_betti(spec))
        report.check("closed form matches hochster", *closed == base,
                     table_diff(*closed, base));

    BettiTable fvec = betti_from_fvector_linear(delta, d);
    report.check("f-vector route matches hochster", fvec == base,
                 table_diff(fvec, base));

    if (spec.kind == FamilyKind::composition && spec.block_sizes.size() >= 2) {
        std::vector<Hypergraph> factors;
        for (size_t s = 0; s < spec.block_sizes.size(); ++s)
            factors.push_back(complete_hypergraph(spec.block_sizes[s], spec.a[s]));
        BettiTable prod = betti_product(factors, fields[0], opts);
        report.check("product formula matches hochster", prod == base,
                     table_diff(prod, base));
    }

    const int pd = projective_dimension(base);
    if (has_edges && spec.kind != FamilyKind::interval)
        report.check("pd = N - d + 1", pd == n - d + 1,
                     "pd = " + std::to_string(pd));
    report.check("resolution is " + std::to_string(d) + "-linear",
                 has_linear_resolution(base, d));

    // Cohen-Macaulay verdict against the classification for the family.
    const bool cm = depth_via_ab(n, pd) == krull_dimension(delta);
    std::optional<bool> predicted;
    switch (spec.kind) {
        case FamilyKind::complete:
            predicted = true;
            break;
        case FamilyKind::multipartite:
            if (spec.block_sizes.size() >= 2 && has_edges) {
                bool all_small = true;
                for (int ns : spec.block_sizes) all_small = all_small && ns <= d - 1;
                predicted = all_small;
            }
            break;
        case FamilyKind::composition: {
            long long best = 0;
            for (size_t i = 0; i < spec.block_sizes.size(); ++i) {
                long long v = spec.a[i];
                for (size_t k = 0; k < spec.block_sizes.size(); ++k)
                    if (k != i) v += spec.block_sizes[k];
                best = std::max(best, v);
            }
            if (has_edges) predicted = best == d;
            break;
        }
        case FamilyKind::interval:
            break;  // no classification to compare against
    }
    if (predicted)
        report.check(std::string("Cohen-Macaulay verdict (") +
                         (*predicted ? "expected CM" : "expected not CM") + ")",
                     cm == *predicted, cm ? "computed CM" : "computed not CM");

    if (has_edges) {
        SimplicialComplex dual = alexander_dual(delta);
        report.check("dual dimension = N - d - 1",
                     dual.dimension() == std::optional<int>{n - d - 1});
        report.check("dual Krull dimension = N - d", krull_dimension(dual) == n - d);
        BettiTable dual_table = hochster_graded(dual, fields[0], opts);
        const int dual_pd = projective_dimension(dual_table);
        report.check("dual pd = d", dual_pd == d, "pd = " + std::to_string(dual_pd));
        report.check("dual quotient is Cohen-Macaulay",
                     depth_via_ab(n, dual_pd) == krull_dimension(dual));
    }

    if (!cfg.expect_betti_path.empty()) {
        BettiTable expected = betti_from_json(json::parse(read_file(cfg.expect_betti_path)));
        report.check("table matches " + cfg.expect_betti_path,
                     expected.entries == base.entries, table_diff(expected, base));
    }

    return report.all_ok() ? kExitOk : kExitMismatch;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Edge ideals of complete hypergraph families: Betti tables, "
                 "homology, duals and Hilbert series"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        cfg.limit = env_int("HYPERBETTI_LIMIT", cfg.limit);
        cfg.jobs = env_int("HYPERBETTI_JOBS", cfg.jobs);
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    std::string family_kind, n_text, a_text, intervals_text;
    int d_value = 0;
    bool d_seen = false;

    auto add_family_flags = [&](CLI::App* sub) {
        sub->add_option("--family", family_kind, "family kind: knd, multipartite, da, dI");
        sub->add_option("--n", n_text, "block sizes, comma separated");
        sub->add_option("--d", d_value, "uniformity d")->each([&](const std::string&) {
            d_seen = true;
        });
        sub->add_option("--a", a_text, "composition for da, comma separated");
        sub->add_option("--intervals", intervals_text,
                        "intervals for dI, e.g. 1:2,1:1,2:3");
        sub->add_option("--input", cfg.input_path, "hypergraph/complex/spec file");
        sub->add_flag("--strict-intervals", cfg.strict_intervals,
                      "reject non-normalized intervals instead of normalizing");
        sub->add_option("--limit", cfg.limit, "max vertices for subset sweeps");
        sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    };

    CLI::App* generate = app.add_subcommand("generate", "write a family instance");
    add_family_flags(generate);
    generate->add_option("--output", cfg.output_path, "output file (default stdout)");
    generate->add_option("--format", cfg.format, "text or json");

    CLI::App* betti = app.add_subcommand("betti", "Betti table of an edge ideal");
    add_family_flags(betti);
    betti->add_option("--field", cfg.field_text, "coefficient field: a prime or q");
    betti->add_option("--method", cfg.method, "hochster, closed or fvector");
    betti->add_option("--format", cfg.format, "text, json or csv");
    betti->add_flag("--multigraded", cfg.multigraded,
                    "emit the multigraded table as JSON (hochster only)");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check every applicable method for a family");
    add_family_flags(verify);
    verify->add_option("--fields", cfg.fields_text,
                       "fields for the agreement check (default 2,3,q)");
    verify->add_option("--expect-betti", cfg.expect_betti_path,
                       "JSON Betti table to compare against");

    CLI::App* dual = app.add_subcommand("dual", "Alexander dual complex");
    add_family_flags(dual);
    dual->add_option("--output", cfg.output_path, "output file (default stdout)");
    dual->add_option("--format", cfg.format, "text or json");

    CLI::App* homology = app.add_subcommand("homology", "reduced homology profile");
    add_family_flags(homology);
    homology->add_option("--field", cfg.field_text, "coefficient field: a prime or q");

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator");
    add_family_flags(hilbert);
    hilbert->add_option("--format", cfg.format, "text or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (d_seen) cfg.d_override = d_value;
        if (!family_kind.empty()) {
            FamilySpec spec;
            spec.kind = family_kind_from_name(family_kind);
            if (n_text.empty()) throw input_error("--family needs --n");
            spec.block_sizes = parse_int_list(n_text, "--n entry");
            if (!a_text.empty()) spec.a = parse_int_list(a_text, "--a entry");
            if (!intervals_text.empty()) spec.intervals = parse_intervals(intervals_text);
            switch (spec.kind) {
                case FamilyKind::complete:
                case FamilyKind::multipartite:
                    if (!d_seen) throw input_error("this family needs --d");
                    spec.d = d_value;
                    break;
                case FamilyKind::composition:
                    if (spec.a.empty()) throw input_error("da needs --a");
                    if (spec.a.size() != spec.block_sizes.size())
                        throw input_error("--a and --n must have equal length");
                    spec.d = 0;
                    for (int av : spec.a) spec.d += av;
                    break;
                case FamilyKind::interval:
                    if (spec.intervals.ranges.empty())
                        throw input_error("dI needs --intervals");
                    if (!d_seen) throw input_error("dI needs --d");
                    spec.d = d_value;
                    break;
            }
            cfg.family = spec;
        }

        if (generate->parsed()) {
            cfg.command = "generate";
            return cmd_generate(cfg, out, err);
        }
        if (betti->parsed()) {
            cfg.command = "betti";
            return cmd_betti(cfg, out, err);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, out, err);
        }
        if (dual->parsed()) {
            cfg.command = "dual";
            return cmd_dual(cfg, out, err);
        }
        if (homology->parsed()) {
            cfg.command = "homology";
            return cmd_homology(cfg, out, err);
        }
        if (hilbert->parsed()) {
            cfg.command = "hilbert";
            return cmd_hilbert(cfg, out, err);
        }
        throw input_error("no subcommand given");
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace hyperbetti
