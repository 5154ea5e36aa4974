// Command-line front end. Subcommands: compute, verify, oracle, reproduce,
// catalog. JSON goes to standard output; human-readable tables go to
// standard error under --pretty.
//
// Exit codes: 0 success / all confirmed, 1 invalid partition or unexpected
// discrepancy, 2 input error, 3 solver cap exceeded.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "faircoal/catalog.hpp"
#include "faircoal/closed_forms.hpp"
#include "faircoal/coalition.hpp"
#include "faircoal/enumerate.hpp"
#include "faircoal/errors.hpp"
#include "faircoal/fair_domination.hpp"
#include "faircoal/graph.hpp"
#include "faircoal/graph6.hpp"
#include "faircoal/partition.hpp"
#include "faircoal/reproduce.hpp"

namespace faircoal::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

namespace detail {

inline std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error(parse_error::Kind::bad_header, "cannot open input file: " + path);
    return read_stream(in);
}

inline Graph parse_graph_text(const std::string& text, const std::string& format) {
    if (format == "graph6") return parse_graph6(text);
    if (format == "edgelist") return parse_edge_list(text);
    // auto: an edge list starts with a lone integer line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        std::string rest;
        bool lone_int = !(ls >> rest) && tok.find_first_not_of("0123456789") == std::string::npos;
        return lone_int ? parse_edge_list(text) : parse_graph6(text);
    }
    throw parse_error(parse_error::Kind::bad_header, "empty graph input");
}

// A graph source is "-" (standard input), a family spec such as path:9,
// cycle:12, complete:4, empty:5, petersen, tree:6:seed=7, corona:<inner>,
// or a file path.
inline Graph load_graph(const std::string& source, const std::string& format, std::istream& in) {
    auto family_arg = [&](const std::string& spec, const std::string& name,
                          bool allow_tail = false) {
        std::string tail = spec.substr(name.size() + 1);
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(tail, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || (!allow_tail && used != tail.size()))
            throw parse_error(parse_error::Kind::bad_token,
                              "bad order in family spec '" + spec + "'");
        return std::pair<int, std::string>{n, tail.substr(used)};
    };

    if (source == "-") return parse_graph_text(read_stream(in), format);
    if (source == "petersen") return gen_petersen();
    if (source.rfind("path:", 0) == 0) return gen_path(family_arg(source, "path").first);
    if (source.rfind("cycle:", 0) == 0) return gen_cycle(family_arg(source, "cycle").first);
    if (source.rfind("complete:", 0) == 0) return gen_complete(family_arg(source, "complete").first);
    if (source.rfind("empty:", 0) == 0) return gen_empty(family_arg(source, "empty").first);
    if (source.rfind("tree:", 0) == 0) {
        auto [n, rest] = family_arg(source, "tree", true);
        std::uint64_t seed = 0;
        if (rest.rfind(":seed=", 0) == 0) {
            std::size_t used = 0;
            try {
                seed = std::stoull(rest.substr(6), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != rest.size() - 6)
                throw parse_error(parse_error::Kind::bad_token,
                                  "bad seed in tree spec '" + source + "'");
        } else if (!rest.empty()) {
            throw parse_error(parse_error::Kind::bad_token, "bad tree spec '" + source + "'");
        }
        return gen_random_tree(n, seed);
    }
    if (source.rfind("corona:", 0) == 0)
        return corona_k1(load_graph(source.substr(7), format, in));
    return parse_graph_text(read_file(source), format);
}

inline json partition_json(const Partition& p) {
    json out = json::array();
    for (const auto& cls : p.to_vectors()) out.push_back(cls);
    return out;
}

inline json certificate_json(const FcCertificate& cert) {
    json out = json::array();
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const ClassJustification& j = cert.entries[i];
        json e;
        e["class"] = i;
        if (j.kind == ClassJustification::Kind::singleton_fd) {
            e["justification"] = "singleton_fd";
        } else {
            e["partner"] = j.partner;
            if (j.vacuous)
                e["k"] = "vacuous";
            else
                e["k"] = j.k;
        }
        out.push_back(e);
    }
    return out;
}

inline const char* violation_kind(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::empty_class: return "empty_class";
        case Violation::Kind::overlapping_classes: return "overlapping_classes";
        case Violation::Kind::not_covering: return "not_covering";
        case Violation::Kind::vertex_out_of_range: return "vertex_out_of_range";
        case Violation::Kind::fd_class_not_singleton: return "fd_class_not_singleton";
        case Violation::Kind::no_partner: return "no_partner";
    }
    return "?";
}

struct ComputeSelection {
    bool gamma = false, gamma_f = false, d_f = false, cf = false, bounds = false;
    std::vector<int> fd_is;
    bool witness = false;
    bool any() const { return gamma || gamma_f || d_f || cf || bounds || !fd_is.empty(); }
};

inline int cmd_compute(const std::string& source, const std::string& format,
                       ComputeSelection sel, const SolveOptions& opts, bool sequential,
                       bool pretty, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(source, format, in);
    if (!sel.any()) sel.gamma = sel.gamma_f = sel.d_f = sel.cf = sel.bounds = true;
    auto t0 = std::chrono::steady_clock::now();

    json doc;
    doc["command"] = "compute";
    doc["input"] = source;
    doc["n"] = g.order();
    if (g.order() <= kGraph6MaxOrder) doc["graph6"] = to_graph6(g);
    doc["sequential"] = sequential;
    json results;
    json witnesses;

    // every compute quantity runs an exponential exact search
    if (g.order() > kSolveMaxOrder)
        throw cap_exceeded("compute quantities are capped at order " +
                           std::to_string(kSolveMaxOrder) + ", got " +
                           std::to_string(g.order()));

    if (sel.gamma) results["gamma"] = gamma(g);
    if (sel.gamma_f) {
        VertexSet w = gamma_f_witness(g);
        results["gamma_f"] = w.count();
        if (sel.witness) witnesses["gamma_f"] = w.to_vector();
    }
    for (int i : sel.fd_is) results["fd_" + std::to_string(i)] = fd_i(g, i);
    FairDomaticResult dom;
    if (sel.d_f || sel.bounds) dom = fair_domatic_number(g);
    if (sel.d_f) {
        results["d_f"] = dom.value;
        if (sel.witness) witnesses["d_f"] = partition_json(dom.witness);
    }
    if (sel.cf) {
        SolveReport r = cf_solve(g, opts);
        results["cf"] = r.value;
        results["cf_nodes"] = r.nodes;
        if (sel.witness) {
            witnesses["cf"] = partition_json(r.witness);
            witnesses["cf_certificate"] = certificate_json(r.certificate);
        }
    }
    if (sel.bounds) {
        json b;
        b["cf_upper"] = upper_bound(g);
        if (g.order() >= 3 && g.full_vertices().empty()) {
            b["cf_lower_domatic"] = 2 * dom.value;
            if (sel.witness) {
                DomaticLowerBound lb = lower_bound_from_domatic(g);
                witnesses["cf_lower_domatic"] = partition_json(lb.witness);
                witnesses["cf_lower_domatic_fallback"] = lb.construction_fallback;
            }
        } else {
            b["cf_lower_domatic"] = nullptr;
        }
        results["bounds"] = b;
    }
    doc["results"] = results;
    if (sel.witness) doc["witnesses"] = witnesses;
    doc["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << doc.dump(2) << "\n";
    if (pretty) {
        err << "n = " << g.order() << "\n";
        for (auto& [key, value] : results.items()) err << key << " = " << value.dump() << "\n";
    }
    return kExitOk;
}

inline int cmd_verify(const std::string& source, const std::string& partition_path,
                      const std::string& format, bool pretty, std::istream& in,
                      std::ostream& out, std::ostream& err) {
    Graph g = load_graph(source, format, in);
    std::string ptext = partition_path == "-" ? read_stream(in) : read_file(partition_path);
    Partition p = parse_partition(ptext);
    VerifyOutcome outcome = verify_fc_partition(g, p);
    json doc;
    doc["command"] = "verify";
    doc["n"] = g.order();
    doc["classes"] = p.size();
    if (const FcCertificate* cert = std::get_if<FcCertificate>(&outcome)) {
        doc["valid"] = true;
        doc["certificate"] = certificate_json(*cert);
        out << doc.dump(2) << "\n";
        if (pretty) err << "valid fc-partition with " << p.size() << " classes\n";
        return kExitOk;
    }
    const Violation& v = std::get<Violation>(outcome);
    doc["valid"] = false;
    json vj;
    vj["kind"] = violation_kind(v.kind);
    if (v.class_index >= 0) vj["class"] = v.class_index;
    vj["detail"] = v.detail;
    doc["violation"] = vj;
    out << doc.dump(2) << "\n";
    if (pretty) err << "invalid: " << v.detail << "\n";
    return kExitInvalid;
}

inline int cmd_oracle(const std::string& source, const std::string& format, bool pretty,
                      std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(source, format, in);
    SolveReport r = cf_bruteforce(g);
    json doc;
    doc["command"] = "oracle";
    doc["input"] = source;
    doc["n"] = g.order();
    doc["cf"] = r.value;
    doc["witness"] = partition_json(r.witness);
    doc["certificate"] = certificate_json(r.certificate);
    doc["partitions_enumerated"] = r.nodes;
    doc["lower_bound"] = r.lower_bound;
    doc["upper_bound"] = r.upper_bound;
    doc["elapsed_ms"] = r.elapsed_ms;
    out << doc.dump(2) << "\n";
    if (pretty) err << "cf = " << r.value << " over " << r.nodes << " partitions\n";
    return kExitOk;
}

inline int cmd_catalog(int order, const std::string& format, std::ostream& out) {
    const std::vector<CatalogEntry>& entries = cubic_catalog(order);
    if (format == "graph6") {
        for (const CatalogEntry& e : entries)
            out << e.graph6 << "\t" << (e.connected ? "connected" : "disconnected") << "\n";
    } else {
        for (const CatalogEntry& e : entries) {
            out << "# " << e.index << " " << (e.connected ? "connected" : "disconnected") << "\n";
            out << to_edge_list(parse_graph6(e.graph6)) << "\n";
        }
    }
    return kExitOk;
}

inline int cmd_reproduce(const std::string& scope_name, const SolveOptions& opts,
                         bool sequential, bool pretty, std::ostream& out, std::ostream& err) {
    Scope scope = Scope::all;
    bool found = false;
    for (Scope s : {Scope::all, Scope::paths, Scope::cycles, Scope::coronas, Scope::cubic6,
                    Scope::cubic8, Scope::cubic10, Scope::bounds})
        if (scope_name == to_string(s)) {
            scope = s;
            found = true;
        }
    if (!found)
        throw parse_error(parse_error::Kind::bad_token, "unknown scope '" + scope_name + "'");

    ReproductionReport report = run_reproduction(scope, opts);

    json doc;
    doc["command"] = "reproduce";
    doc["scope"] = to_string(scope);
    doc["sequential"] = sequential;
    json claims = json::array();
    for (const ClaimResult& r : report.claims) {
        json c;
        c["id"] = r.id;
        c["statement"] = r.statement;
        c["expected"] = r.expected;
        c["computed"] = r.computed;
        c["status"] = to_string(r.status);
        c["known_discrepancy"] = r.known_discrepancy;
        c["elapsed_ms"] = r.elapsed_ms;
        claims.push_back(c);
    }
    doc["claims"] = claims;
    json summary;
    summary["total"] = report.claims.size();
    summary["confirmed"] = report.count(ClaimStatus::confirmed);
    summary["multiset_confirmed"] = report.count(ClaimStatus::multiset_confirmed);
    summary["discrepancies"] = report.count(ClaimStatus::discrepancy);
    summary["unexpected_discrepancies"] = report.unexpected_discrepancies();
    summary["skipped"] = report.count(ClaimStatus::skipped);
    doc["summary"] = summary;
    out << doc.dump(2) << "\n";

    if (pretty) {
        for (const ClaimResult& r : report.claims) {
            char state = r.status == ClaimStatus::discrepancy ? (r.known_discrepancy ? '!' : 'X')
                         : r.status == ClaimStatus::skipped   ? '-'
                                                              : '+';
            err << state << " " << r.id;
            for (std::size_t pad = r.id.size(); pad < 44; ++pad) err << ' ';
            err << " expected " << r.expected << ", computed " << r.computed;
            if (r.status == ClaimStatus::discrepancy && r.known_discrepancy)
                err << "  (known discrepancy)";
            err << "\n";
        }
        err << report.claims.size() << " claims, " << report.count(ClaimStatus::discrepancy)
            << " discrepancies (" << report.unexpected_discrepancies() << " unexpected)\n";
    }
    return report.ok() ? kExitOk : kExitInvalid;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact fair domination and fair coalition invariants on small graphs"};
    app.require_subcommand(1);

    std::string format = "auto";
    bool pretty = false;
    bool sequential = false;
    bool no_deep_prune = false;
    app.add_flag("--pretty", pretty, "human-readable summary on standard error");
    app.add_flag("--sequential", sequential,
                 "force the deterministic sequential search (currently always on)");
    app.add_flag("--no-deep-prune", no_deep_prune,
                 "disable settled-vertex pruning in cf_solve (cross-validation aid)");

    std::string source, partition_path, scope = "all";
    detail::ComputeSelection sel;
    int order = 0;
    std::string cat_format = "graph6";

    CLI::App* compute = app.add_subcommand("compute", "compute invariants of one graph");
    compute->add_option("input", source, "graph source: file, '-', or family spec")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    compute->add_flag("--gamma", sel.gamma, "domination number");
    compute->add_flag("--gamma-f", sel.gamma_f, "fair domination number");
    compute->add_option("--fd-i", sel.fd_is, "i-fair domination number (repeatable)");
    compute->add_flag("--d-f", sel.d_f, "fair domatic number");
    compute->add_flag("--cf", sel.cf, "fair coalition number");
    compute->add_flag("--bounds", sel.bounds, "bounds on the fair coalition number");
    compute->add_flag("--witness", sel.witness, "include witnesses in the output");

    CLI::App* verify = app.add_subcommand("verify", "verify an fc-partition");
    verify->add_option("input", source, "graph source")->required();
    verify->add_option("partition", partition_path, "partition file ('-' for stdin)")->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive fair coalition number");
    oracle->add_option("input", source, "graph source")->required();
    oracle->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

    CLI::App* reproduce = app.add_subcommand("reproduce", "re-run the family claim suites");
    reproduce->add_option("--scope", scope,
                          "all|paths|cycles|coronas|cubic6|cubic8|cubic10|bounds");

    CLI::App* catalog = app.add_subcommand("catalog", "list a cubic catalog");
    catalog->add_option("order", order, "6, 8, or 10")->required();
    catalog->add_option("--format", cat_format)->check(CLI::IsMember({"graph6", "edgelist"}));

    // top-level flags remain usable after a subcommand name
    for (CLI::App* sub : {compute, verify, oracle, reproduce, catalog}) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    SolveOptions opts;
    opts.deep_prune = !no_deep_prune;
    // the search is single-threaded, so every run is the deterministic
    // sequential one whether or not --sequential was passed
    const bool effective_sequential = true;
    (void)sequential;

    try {
        if (compute->parsed())
            return detail::cmd_compute(source, format, sel, opts, effective_sequential, pretty,
                                       in, out, err);
        if (verify->parsed())
            return detail::cmd_verify(source, partition_path, format, pretty, in, out, err);
        if (oracle->parsed()) return detail::cmd_oracle(source, format, pretty, in, out, err);
        if (reproduce->parsed())
            return detail::cmd_reproduce(scope, opts, effective_sequential, pretty, out, err);
        if (catalog->parsed()) return detail::cmd_catalog(order, cat_format, out);
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace faircoal::cli
