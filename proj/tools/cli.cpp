#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmergraph/count_doubling.hpp"
#include "kmergraph/count_dp.hpp"
#include "kmergraph/dbg.hpp"
#include "kmergraph/generators.hpp"
#include "kmergraph/lcs.hpp"
#include "kmergraph/oracle.hpp"
#include "kmergraph/wheelerize.hpp"

namespace kmergraph::cli {

using nlohmann::json;

namespace {

std::size_t cap_of(const RunConfig& c) { return c.oracle_cap ? *c.oracle_cap : oracle_cap_from_env(); }

ParsedGraph load_graph(const RunConfig& c, std::ostream& err) {
    if (c.inputs.empty()) throw Error(ErrorKind::Format, "missing input graph");
    ParsedGraph parsed = read_graph_file(c.inputs.front());
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return parsed;
}

void write_text(const RunConfig& c, const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Format, "cannot write " + path);
    file << text;
    if (c.verbosity > 0) std::cerr << "wrote " << path << '\n';
}

json counts_json(const std::vector<Count>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_decimal(v));
    return arr;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const ParsedGraph parsed = load_graph(c, err);
    if (auto diag = check_wheeler(parsed.graph)) {
        out << "invalid: " << diag->message() << '\n';
        return 1;
    }
    const WheelerGraph w = validate_wheeler(parsed.graph);
    out << "valid: " << w.num_vertices() << " vertices, " << w.num_edges() << " edges, " << w.num_sources()
        << " source(s)\n";
    return 0;
}

int cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const ParsedGraph parsed = load_graph(c, err);
    const auto start = std::chrono::steady_clock::now();
    json j{{"k", c.k}, {"algorithm", c.algorithm}};
    if (c.algorithm == "dp") {
        const auto w = validate_wheeler(parsed.graph);
        const auto r = count_kmers_dp(w, c.k);
        j["total"] = to_decimal(r.total);
        if (c.per_vertex) j["per_vertex"] = counts_json(r.per_vertex.c);
    } else if (c.algorithm == "doubling") {
        const auto w = validate_wheeler(parsed.graph);
        const auto r = count_kmers_doubling(w, c.k);
        j["total"] = to_decimal(r.total);
        if (c.per_vertex) j["per_vertex"] = counts_json(r.per_vertex);
        if (c.verbosity > 0) err << "ladder levels: " << r.levels_built << '\n';
    } else if (c.algorithm == "brute") {
        const auto e = enumerate_kmers(parsed.graph, c.k, cap_of(c));
        j["total"] = std::to_string(e.all.members.size());
        if (c.per_vertex) {
            json arr = json::array();
            for (const auto& s : e.per_vertex) arr.push_back(std::to_string(s.members.size()));
            j["per_vertex"] = arr;
        }
    } else if (c.algorithm == "layered") {
        if (c.per_vertex) throw Error(ErrorKind::Format, "per-vertex counts are not available for the layered counter");
        j["total"] = to_decimal(count_kmers_layered(parsed.graph, c.k));
    } else {
        throw Error(ErrorKind::Format, "unknown algorithm " + c.algorithm);
    }
    if (c.verbosity > 0) {
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        err << "time: " << took.count() << " s\n";
    }
    out << j.dump() << '\n';
    return 0;
}

int cmd_lcs(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto w = validate_wheeler(load_graph(c, err).graph);
    const LcsData lcs = compute_levels(w, c.k);
    const auto& e = lcs.elcs_array();
    json j{{"k", c.k},
           {"elcs", std::vector<std::uint32_t>(e.begin() + (e.empty() ? 0 : 1), e.end())},
           {"ilcs", lcs.ilcs_array()}};
    out << j.dump() << '\n';
    return 0;
}

LabelString encode_or_throw(const LabeledGraph& g, const std::string& text) {
    auto s = g.encode(text);
    if (!s) throw Error(ErrorKind::Format, "string '" + text + "' uses characters outside the graph alphabet");
    return *s;
}

json handle_json(const DbgData& d, const std::optional<DbgHandle>& h) {
    if (!h) return nullptr;
    const auto& g = d.graph().base();
    std::string labels;
    for (Label c : d.outgoing_labels(*h)) labels.push_back(g.display(c));
    return json{{"kmer", g.display(d.spell(*h))},
                {"lo", h->lo + 1},
                {"hi", h->hi + 1},
                {"j", to_decimal(h->j)},
                {"out_labels", labels}};
}

int cmd_dbg(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.k < 1) throw Error(ErrorKind::Format, "dbg needs k >= 1");
    if (c.export_path == "-" && (c.query || c.walk))
        throw Error(ErrorKind::Format, "--export - writes the graph to stdout and cannot be combined with --query or --walk");
    const auto w = validate_wheeler(load_graph(c, err).graph);
    const DbgData d = DbgData::build(w, c.k);
    const auto& g = w.base();
    json j{{"k", c.k}, {"nodes", to_decimal(d.num_kmers())}};
    if (!c.export_path.empty()) {
        const ExplicitDbg dbg = d.build_explicit();
        j["edges"] = dbg.edges.size();
        write_text(c, c.export_path, to_dbg_text(dbg, g), out);
    }
    if (c.query) {
        const LabelString s = encode_or_throw(g, *c.query);
        j["query"] = handle_json(d, s.size() == c.k ? d.handle_of(s) : std::nullopt);
    }
    if (c.walk) {
        const LabelString start = encode_or_throw(g, c.walk->first);
        const LabelString steps = encode_or_throw(g, c.walk->second);
        json path = json::array();
        auto h = start.size() == c.k ? d.handle_of(start) : std::nullopt;
        path.push_back(handle_json(d, h));
        for (Label x : steps) {
            if (!h) break;
            h = d.forward(*h, x);
            path.push_back(handle_json(d, h));
        }
        j["walk"] = path;
    }
    if (c.export_path != "-") out << j.dump() << '\n';
    return 0;
}

int cmd_gadget_build(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (c.inputs.empty()) throw Error(ErrorKind::Format, "missing input formula");
    const GadgetInfo gi = dnf_to_graph(read_dnf_file(c.inputs.front()));
    write_text(c, c.output, to_wgf(gi.graph), out);
    if (!c.output.empty() && c.output != "-")
        out << json{{"nvars", gi.formula.nvars}, {"clauses", gi.formula.clauses.size()}, {"d", gi.doubled}}.dump()
            << '\n';
    return 0;
}

int cmd_gadget_solve(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (c.inputs.empty()) throw Error(ErrorKind::Format, "missing input formula");
    const GadgetInfo gi = dnf_to_graph(read_dnf_file(c.inputs.front()));
    const std::size_t k = gi.formula.nvars;
    Count total;
    if (c.algorithm == "brute") total = count_kmers_brute(gi.graph, k, cap_of(c));
    else if (c.algorithm == "layered") total = count_kmers_layered(gi.graph, k);
    else throw Error(ErrorKind::Format, "gadget solve supports --algo brute or layered");
    out << json{{"algorithm", c.algorithm},
                {"total", to_decimal(total)},
                {"d", gi.doubled},
                {"sat_count", to_decimal(sat_count_from_total(gi, total))}}
               .dump()
        << '\n';
    return 0;
}

int cmd_unfold(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto parsed = load_graph(c, err);
    write_text(c, c.output, to_wgf(layered_to_graph(unfold(parsed.graph, c.k))), out);
    return 0;
}

int cmd_count_layered(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto parsed = load_graph(c, err);
    out << json{{"k", c.k}, {"algorithm", "layered"}, {"total", to_decimal(count_kmers_layered(parsed.graph, c.k))}}
               .dump()
        << '\n';
    return 0;
}

// Cross-engine equality on generated instances.
int cmd_selftest(const RunConfig& c, std::ostream& out, std::ostream&) {
    Rng rng(c.seed);
    const std::size_t ks[] = {1, 2, 3, 4, 5, 8};
    std::size_t checked = 0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < c.instances; ++i) {
        const LabeledGraph g = i % 2 == 0 ? random_wheeler_graph(rng, 2 + rng() % 9, 1 + rng() % 3)
                                          : dbg_of_string(random_text(rng, 4 + rng() % 8, 1 + rng() % 3), 1 + rng() % 3);
        const auto w = validate_wheeler(g);
        for (std::size_t k : ks) {
            Count brute;
            try {
                brute = count_kmers_brute(g, k, cap_of(c));
            } catch (const ResourceCapError&) {
                ++skipped;
                continue;
            }
            const Count dp = count_kmers_dp(w, k).total;
            const Count dbl = count_kmers_doubling(w, k).total;
            const Count lay = count_kmers_layered(g, k);
            if (dp != brute || dbl != brute || lay != brute) {
                out << "MISMATCH instance " << i << " k=" << k << " brute=" << brute << " dp=" << dp
                    << " doubling=" << dbl << " layered=" << lay << '\n'
                    << to_wgf(g);
                return static_cast<int>(ErrorKind::Consistency);
            }
            const DbgData d = DbgData::build(w, k);
            const ExplicitDbg mine = d.build_explicit();
            const ExplicitDbg ref = build_dbg_brute(g, k, cap_of(c));
            if (mine.nodes != ref.nodes || mine.edges != ref.edges) {
                out << "MISMATCH de Bruijn graph instance " << i << " k=" << k << '\n' << to_wgf(g);
                return static_cast<int>(ErrorKind::Consistency);
            }
            ++checked;
        }
    }
    out << json{{"seed", c.seed}, {"instances", c.instances}, {"checked", checked}, {"skipped", skipped}, {"ok", true}}
               .dump()
        << '\n';
    return 0;
}

std::string_view kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Format: return "format";
        case ErrorKind::ResourceCap: return "resource_cap";
        case ErrorKind::Consistency: return "consistency";
    }
    return "unknown";
}

int report(const RunConfig& c, ErrorKind kind, const std::string& message, std::ostream& err) {
    if (c.json_errors)
        err << json{{"error", {{"kind", kind_name(kind)}, {"message", message}, {"exit_code", static_cast<int>(kind)}}}}
                   .dump()
            << '\n';
    else
        err << "error: " << message << '\n';
    return static_cast<int>(kind);
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.command == "validate") return cmd_validate(c, out, err);
        if (c.command == "count") return cmd_count(c, out, err);
        if (c.command == "lcs") return cmd_lcs(c, out, err);
        if (c.command == "dbg") return cmd_dbg(c, out, err);
        if (c.command == "gadget-build") return cmd_gadget_build(c, out, err);
        if (c.command == "gadget-solve") return cmd_gadget_solve(c, out, err);
        if (c.command == "unfold") return cmd_unfold(c, out, err);
        if (c.command == "count-layered") return cmd_count_layered(c, out, err);
        if (c.command == "selftest") return cmd_selftest(c, out, err);
        return report(c, ErrorKind::Format, "unknown command " + c.command, err);
    } catch (const Error& e) {
        return report(c, e.kind(), e.what(), err);
    } catch (const std::bad_alloc&) {
        return report(c, ErrorKind::ResourceCap, "out of memory", err);
    } catch (const std::exception& e) {
        return report(c, ErrorKind::Consistency, e.what(), err);
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"k-mer counting and de Bruijn graph simulation on deterministic Wheeler graphs", "kmergraph"};
    app.require_subcommand(1);
    app.add_flag("--json-errors", c.json_errors, "Print errors as JSON on stderr");
    app.add_flag("-v,--verbose", c.verbosity, "Timing and statistics on stderr");

    std::string input;
    std::size_t cap = 0;
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", cap, "Oracle cap (default KMERGRAPH_ORACLE_CAP or 1000000)");
    };

    auto* validate = app.add_subcommand("validate", "Check the Wheeler conditions of a WGF graph");
    validate->add_option("graph", input, "WGF file")->required();

    auto* count = app.add_subcommand("count", "Count distinct k-mers");
    count->add_option("-k", c.k, "k-mer length")->required();
    count->add_option("--algo", c.algorithm, "dp, doubling, brute or layered")
        ->check(CLI::IsMember({"dp", "doubling", "brute", "layered"}));
    count->add_flag("--per-vertex", c.per_vertex, "Also print C_k(v) for every vertex");
    count->add_option("graph", input, "WGF file")->required();
    add_cap(count);

    auto* lcs = app.add_subcommand("lcs", "Print the capped ELCS and ILCS arrays");
    lcs->add_option("-k", c.k, "cap")->required();
    lcs->add_option("graph", input, "WGF file")->required();

    auto* dbg = app.add_subcommand("dbg", "Build the de Bruijn graph simulation");
    dbg->add_option("-k", c.k, "k-mer length")->required();
    dbg->add_option("graph", input, "WGF file")->required();
    dbg->add_option("--export", c.export_path, "Write the explicit de Bruijn graph");
    std::string query;
    dbg->add_option("--query", query, "Look up one k-mer");
    std::vector<std::string> walk;
    dbg->add_option("--walk", walk, "KMER LABELS: forward steps from a k-mer")->expected(2);

    auto* gadget = app.add_subcommand("gadget", "DNF gadget graphs");
    gadget->require_subcommand(1);
    auto* build = gadget->add_subcommand("build", "Write the gadget graph of a DNF formula");
    build->add_option("formula", input, "DNF file")->required();
    build->add_option("-o", c.output, "Output WGF file");
    auto* solve = gadget->add_subcommand("solve", "Count satisfying assignments through the gadget graph");
    solve->add_option("formula", input, "DNF file")->required();
    c.algorithm = "dp";
    std::string solve_algo = "layered";
    solve->add_option("--algo", solve_algo, "brute or layered")->check(CLI::IsMember({"brute", "layered"}));
    add_cap(solve);

    auto* unfold_cmd = app.add_subcommand("unfold", "Write the k-times unfolded layered graph");
    unfold_cmd->add_option("-k", c.k, "layers - 1")->required()->check(CLI::PositiveNumber);
    unfold_cmd->add_option("graph", input, "WGF file")->required();
    unfold_cmd->add_option("-o", c.output, "Output WGF file");

    auto* layered = app.add_subcommand("count-layered", "Count k-mers by unfolding and subset construction");
    layered->add_option("-k", c.k, "k-mer length")->required();
    layered->add_option("graph", input, "WGF file")->required();

    auto* selftest = app.add_subcommand("selftest", "Cross-engine equality on generated instances");
    selftest->add_option("--seed", c.seed, "Generator seed");
    selftest->add_option("--instances", c.instances, "Number of generated graphs");
    add_cap(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ErrorKind::Format);
    }

    if (!input.empty()) c.inputs.push_back(input);
    if (cap > 0) c.oracle_cap = cap;
    if (!query.empty()) c.query = query;
    if (walk.size() == 2) c.walk = std::make_pair(walk[0], walk[1]);

    for (auto* sub : app.get_subcommands()) {
        if (sub == gadget) {
            const auto* leaf = gadget->get_subcommands().front();
            c.command = leaf == build ? "gadget-build" : "gadget-solve";
            if (leaf == solve) c.algorithm = solve_algo;
        } else {
            c.command = sub->get_name();
        }
    }
    return run(c, out, err);
}

}  // namespace kmergraph::cli
