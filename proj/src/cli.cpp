#include "omc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "omc/classify.hpp"
#include "omc/committees.hpp"
#include "omc/graphs.hpp"
#include "omc/io.hpp"
#include "omc/matroid.hpp"
#include "omc/topes.hpp"

namespace omc {

namespace {

constexpr const char* kVersion = "omc 0.1.0";

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::validation:
    case ErrorKind::io:
        return 2;
    case ErrorKind::precondition:
    case ErrorKind::capability:
        return 3;
    case ErrorKind::resource:
        return 4;
    case ErrorKind::internal:
        return 1;
    }
    return 1;
}

void apply_env_limits() {
    // Reset to the compiled defaults first so an invocation never inherits
    // another invocation's overrides.
    limits::max_covectors = limits::kDefaultMaxCovectors;
    limits::max_validation_set = limits::kDefaultMaxValidationSet;
    limits::max_enumeration_topes = limits::kDefaultMaxEnumerationTopes;
    limits::max_search_nodes = limits::kDefaultMaxSearchNodes;
    auto load = [](const char* var, long long& target) {
        if (const char* value = std::getenv(var)) {
            try {
                target = std::stoll(value);
            } catch (const std::exception&) {
                fail(ErrorKind::domain, std::string(var) + " is not an integer");
            }
        }
    };
    load("OMC_MAX_COVECTORS", limits::max_covectors);
    load("OMC_MAX_VALIDATION_SET", limits::max_validation_set);
    load("OMC_MAX_ENUMERATION_TOPES", limits::max_enumeration_topes);
    load("OMC_MAX_SEARCH_NODES", limits::max_search_nodes);
}

struct Options {
    std::string input = "-";
    std::string output;
    std::string format = "text";
    std::string reorient_list;
    std::string graph_kind;
    bool dot = false;
    std::string base;
    std::string chain_file;
    std::string committee_file;
    std::string p = "1/2";
    std::string seq;
    int s = 0;
    int k = 0;
    std::string labels;
    std::string extend_arg;
    std::string report_graph = "gamma-max";
    bool full_classification = false;
};

MatroidFile load_matroid_file(const Options& opt, std::istream& in) {
    if (opt.input == "-") return read_matroid_file(in, "<stdin>");
    std::ifstream f(opt.input);
    if (!f) fail(ErrorKind::io, "cannot open " + opt.input);
    return read_matroid_file(f, opt.input);
}

OrientedMatroid load_matroid(const Options& opt, std::istream& in) {
    return matroid_from_file(load_matroid_file(opt, in));
}

std::vector<SignVector> load_sign_vectors(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::io, "cannot open " + path);
    return read_sign_vector_file(f, path);
}

MaximalChain resolve_chain(const OrientedMatroid& m, const Options& opt,
                           const SignVector& default_base) {
    if (!opt.chain_file.empty()) {
        std::ifstream f(opt.chain_file);
        if (!f) fail(ErrorKind::io, "cannot open " + opt.chain_file);
        return validate_chain(m, read_chain_file(f, opt.chain_file));
    }
    SignVector base = opt.base.empty() ? default_base : SignVector::parse(opt.base);
    return maximal_chain(m, base);
}

SignVector default_chain_base(const OrientedMatroid& m) {
    SignVector all_plus = SignVector::all_plus(m.ground_size());
    if (m.is_tope(all_plus)) return all_plus;
    return m.topes().front(); // canonically smallest
}

void emit_graph(std::ostream& out, const std::vector<SignVector>& vertices, const Graph& g,
                bool dot, const std::string& name) {
    if (dot) {
        out << "graph " << name << " {\n";
        for (const auto& v : vertices) out << "  \"" << v.str() << "\";\n";
        for (auto [a, b] : g.edges)
            out << "  \"" << vertices[static_cast<std::size_t>(a)].str() << "\" -- \""
                << vertices[static_cast<std::size_t>(b)].str() << "\";\n";
        out << "}\n";
    } else {
        for (auto [a, b] : g.edges)
            out << vertices[static_cast<std::size_t>(a)].str() << " "
                << vertices[static_cast<std::size_t>(b)].str() << "\n";
    }
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int dispatch(const std::string& command, const Options& opt, std::istream& in,
             std::ostream& out, std::ostream& err) {
    if (command == "validate") {
        MatroidFile file = load_matroid_file(opt, in);
        if (file.kind == MatroidFile::Kind::covectors) {
            ValidationReport report = validate_covector_axioms(file.rows);
            if (!report.ok()) {
                out << report.summary();
                return 2;
            }
        }
        // Constructors run the structural checks for every kind.
        OrientedMatroid m = matroid_from_file(file);
        StructuralPredicates p = structural_predicates(m);
        out << "ok\n";
        out << "m=" << m.ground_size() << "\n";
        out << "topes=" << m.topes().size() << "\n";
        if (m.rank() > 0) out << "rank=" << m.rank() << "\n";
        out << "simple=" << bool_str(p.simple) << "\n";
        out << "acyclic=" << bool_str(p.acyclic) << "\n";
        return 0;
    }
    if (command == "topes") {
        write_tope_file(out, load_matroid(opt, in));
        return 0;
    }
    if (command == "reorient" || command == "delete") {
        OrientedMatroid m = load_matroid(opt, in);
        ElementSet a = ElementSet::of(parse_index_list(opt.reorient_list));
        if (!a.subset_of(ElementSet::full(m.ground_size())))
            fail(ErrorKind::domain, "-A lists an element outside the ground set");
        write_tope_file(out, command == "reorient" ? reorient(m, a) : deletion(m, a));
        return 0;
    }
    if (command == "graph") {
        OrientedMatroid m = load_matroid(opt, in);
        bool dot = opt.dot || opt.format == "dot";
        if (opt.graph_kind == "gamma") {
            CoverGraph g = gamma(m);
            emit_graph(out, g.vertices, g.graph, dot, "gamma");
        } else if (opt.graph_kind == "gamma-max") {
            CoverGraph g = gamma_maxplus(m);
            emit_graph(out, g.vertices, g.graph, dot, "gamma_max");
        } else if (opt.graph_kind == "tope-graph") {
            TopeGraph g = tope_graph(m);
            Graph plain = Graph::from_edges(static_cast<int>(g.vertices.size()), g.edges);
            emit_graph(out, g.vertices, plain, dot, "tope_graph");
        } else if (opt.graph_kind == "nc") {
            // Facets of the neighborhood complex of the max+ cover graph.
            CoverGraph g = gamma_maxplus(m);
            for (const auto& facet : neighborhood_facets(g.graph)) {
                for (std::size_t i = 0; i < facet.size(); ++i)
                    out << (i ? " " : "")
                        << g.vertices[static_cast<std::size_t>(facet[i])].str();
                out << "\n";
            }
        } else if (opt.graph_kind == "xi") {
            Hypergraph h = xi_maxplus(m);
            for (const auto& edge : h.minimal_edges) {
                for (std::size_t i = 0; i < edge.size(); ++i)
                    out << (i ? " " : "")
                        << h.vertices[static_cast<std::size_t>(edge[i])].str();
                out << "\n";
            }
        } else {
            fail(ErrorKind::domain, "unknown graph kind '" + opt.graph_kind + "'");
        }
        return 0;
    }
    if (command == "chain") {
        OrientedMatroid m = load_matroid(opt, in);
        write_chain_file(out, resolve_chain(m, opt, default_chain_base(m)));
        return 0;
    }
    if (command == "cycle-committee") {
        OrientedMatroid m = load_matroid(opt, in);
        MaximalChain chain = resolve_chain(m, opt, default_chain_base(m));
        Committee c = cycle_committee(m, symmetric_cycle_from_chain(chain));
        write_committee_file(out, c.members);
        return 0;
    }
    if (command == "alg1") {
        OrientedMatroid m = load_matroid(opt, in);
        Committee c = alg1_rank2(m, parse_index_list(opt.seq));
        write_committee_file(out, c.members);
        return 0;
    }
    if (command == "alg3") {
        OrientedMatroid m = load_matroid(opt, in);
        MaximalChain chain = resolve_chain(m, opt, SignVector::all_plus(m.ground_size()));
        std::vector<int> seq =
            opt.seq.empty() ? prefix_sequence(opt.s) : parse_index_list(opt.seq);
        Committee c = alg3(m, chain, seq);
        write_committee_file(out, c.members);
        return 0;
    }
    if (command == "check-committee") {
        OrientedMatroid m = load_matroid(opt, in);
        std::vector<SignVector> members = load_sign_vectors(opt.committee_file);
        Rational p = parse_rational(opt.p);
        CommitteeClassification c =
            opt.full_classification && p == Rational(1, 2) &&
                    is_p_committee(m, members, p).is_committee
                ? classify_committee(m, members)
                : is_p_committee(m, members, p);
        out << "p=" << rational_str(p) << "\n";
        out << "size=" << members.size() << "\n";
        out << "committee=" << bool_str(c.is_committee) << "\n";
        for (const auto& [e, shortfall] : c.deficiency)
            out << "deficient e=" << e << " missing=" << shortfall << "\n";
        if (c.is_minimal) out << "minimal=" << bool_str(*c.is_minimal) << "\n";
        if (c.is_critical) out << "critical=" << bool_str(*c.is_critical) << "\n";
        std::vector<SignVector> best = maxplus(m.topes());
        std::vector<SignVector> sorted = members;
        canonicalize(sorted);
        for (const auto& k : sorted)
            out << "member " << k.str() << " maxplus=" << bool_str(contains_vector(best, k))
                << "\n";
        return 0;
    }
    if (command == "min-committee") {
        OrientedMatroid m = load_matroid(opt, in);
        write_committee_file(out, minimum_committee(m).members);
        return 0;
    }
    if (command == "enumerate") {
        OrientedMatroid m = load_matroid(opt, in);
        for (const auto& members : enumerate_committees(m, opt.k)) {
            for (std::size_t i = 0; i < members.size(); ++i)
                out << (i ? " " : "") << members[i].str();
            out << "\n";
        }
        return 0;
    }
    if (command == "filter-O") {
        OrientedMatroid m = load_matroid(opt, in);
        SignVector base = SignVector::parse(opt.base);
        for (const auto& t : filter_O(m, base)) out << "O " << t.str() << "\n";
        for (const auto& t : antichain_G(m, base)) out << "G " << t.str() << "\n";
        return 0;
    }
    if (command == "classify") {
        MatroidFile file = load_matroid_file(opt, in);
        OrientedMatroid s_matroid = matroid_from_file(file);
        ElementSet minus;
        if (!opt.labels.empty()) {
            // e.g. "-=4 +=1,2,3"; only the minus class is needed.
            std::istringstream iss(opt.labels);
            std::string tok;
            bool have_minus = false;
            while (iss >> tok) {
                if (tok.rfind("-=", 0) == 0) {
                    minus = ElementSet::of(parse_index_list(tok.substr(2)));
                    have_minus = true;
                }
            }
            if (!have_minus) fail(ErrorKind::domain, "--labels needs a -=<list> entry");
        } else if (file.minus_labels) {
            minus = *file.minus_labels;
        } else {
            fail(ErrorKind::domain, "no labels: add a labels line or pass --labels");
        }
        TrainingSet training = make_training_set(s_matroid, minus);
        OrientedMatroid m = reorient_training(training);

        std::istringstream extend_stream(opt.extend_arg);
        std::string kind;
        extend_stream >> kind;
        Extension ext;
        if (kind == "rational") {
            RationalVector g;
            std::string tok;
            while (extend_stream >> tok) g.push_back(parse_rational(tok));
            ext = localization_from_realization(m, g);
        } else if (kind == "sigma") {
            std::string path;
            extend_stream >> path;
            if (path.empty()) fail(ErrorKind::domain, "--extend sigma needs a file path");
            std::ifstream f(path);
            if (!f) fail(ErrorKind::io, "cannot open " + path);
            ext = extend(m, read_sigma_file(f, path, m));
        } else {
            fail(ErrorKind::domain, "--extend must start with 'rational' or 'sigma'");
        }
        if (ext.trivial_loop)
            fail(ErrorKind::precondition, "trivializing extension (sigma identically zero)");

        Committee committee = make_committee(opt.committee_file.empty()
                                                 ? minimum_committee(m).members
                                                 : load_sign_vectors(opt.committee_file));
        Verdict verdict = decide_all(training, committee, ext);
        if (!verdict.conformal) err << "non-conformal extension: fallback rule applied\n";
        for (int f = 1; f <= training.ground_size() + 1; ++f) {
            Sign v = verdict.per_pattern[static_cast<std::size_t>(f - 1)];
            out << "pattern " << f << ": "
                << (v == Sign::minus ? "A" : v == Sign::plus ? "B" : "unclassified") << "\n";
        }
        return 0;
    }
    if (command == "report") {
        OrientedMatroid m = load_matroid(opt, in);
        StructureReport report;
        std::vector<SignVector> vertices;
        if (opt.report_graph == "gamma") {
            CoverGraph g = gamma(m);
            report = structure_report(g);
            vertices = g.vertices;
        } else if (opt.report_graph == "gamma-max") {
            CoverGraph g = gamma_maxplus(m);
            report = structure_report(g);
            vertices = g.vertices;
        } else if (opt.report_graph == "tope-graph") {
            TopeGraph g = tope_graph(m);
            report = structure_report(
                Graph::from_edges(static_cast<int>(g.vertices.size()), g.edges));
            vertices = g.vertices;
        } else {
            fail(ErrorKind::domain, "unknown report graph '" + opt.report_graph + "'");
        }
        out << "vertices=" << vertices.size() << "\n";
        out << "connected=" << bool_str(report.connected) << "\n";
        out << "min_degree=" << report.min_degree << "\n";
        out << "bridges=" << report.bridges.size() << "\n";
        for (auto [a, b] : report.bridges)
            out << "bridge " << vertices[static_cast<std::size_t>(a)].str() << " "
                << vertices[static_cast<std::size_t>(b)].str() << "\n";
        out << "cutvertices=" << report.cutvertices.size() << "\n";
        for (int v : report.cutvertices)
            out << "cutvertex " << vertices[static_cast<std::size_t>(v)].str() << "\n";
        out << "bipartite=" << bool_str(report.bipartite) << "\n";
        if (report.odd_girth) out << "odd_girth=" << *report.odd_girth << "\n";
        out << "every_vertex_on_odd_cycle=" << bool_str(report.every_vertex_on_odd_cycle)
            << "\n";
        return 0;
    }
    fail(ErrorKind::domain, "unknown command '" + command + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"tope committees for oriented matroids"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    auto add_input = [&opt](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "matroid file ('-' for stdin)");
        cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
    };

    add_input(app.add_subcommand("validate", "run axiom and structure checks"));
    add_input(app.add_subcommand("topes", "emit the tope set"));

    auto* cmd_reorient = app.add_subcommand("reorient", "reorient on an element set");
    cmd_reorient->add_option("-A", opt.reorient_list, "comma-separated elements")->required();
    add_input(cmd_reorient);

    auto* cmd_delete = app.add_subcommand("delete", "delete an element set");
    cmd_delete->add_option("-A", opt.reorient_list, "comma-separated elements")->required();
    add_input(cmd_delete);

    auto* cmd_graph = app.add_subcommand("graph", "emit a committee-related graph");
    cmd_graph->add_option("kind", opt.graph_kind, "gamma|gamma-max|xi|nc|tope-graph")->required();
    cmd_graph->add_flag("--dot", opt.dot, "DOT output");
    cmd_graph->add_option("--format", opt.format, "text|dot");
    add_input(cmd_graph);

    auto* cmd_chain = app.add_subcommand("chain", "emit a maximal tope-poset chain");
    cmd_chain->add_option("--base", opt.base, "base tope (default all-plus when present)");
    cmd_chain->add_option("--chain-file", opt.chain_file, "validate this chain instead");
    add_input(cmd_chain);

    auto* cmd_cycle = app.add_subcommand("cycle-committee",
                                         "committee from a symmetric cycle");
    cmd_cycle->add_option("--base", opt.base, "base tope for the underlying chain");
    cmd_cycle->add_option("--chain-file", opt.chain_file, "chain defining the cycle");
    add_input(cmd_cycle);

    auto* cmd_alg1 = app.add_subcommand("alg1", "rank-2 reorientation committee");
    cmd_alg1->add_option("--seq", opt.seq, "reorientation sequence")->required();
    add_input(cmd_alg1);

    auto* cmd_alg3 = app.add_subcommand("alg3", "chain-driven committee");
    cmd_alg3->add_option("--s", opt.s, "reorient elements 1..s");
    cmd_alg3->add_option("--seq", opt.seq, "explicit distinct reorientation sequence");
    cmd_alg3->add_option("--chain-file", opt.chain_file, "chain based at the all-plus tope");
    add_input(cmd_alg3);

    auto* cmd_check = app.add_subcommand("check-committee", "test the committee predicate");
    cmd_check->add_option("--file", opt.committee_file, "committee file")->required();
    cmd_check->add_option("--p", opt.p, "threshold p as a/b (default 1/2)");
    cmd_check->add_flag("--full", opt.full_classification, "also classify minimal/critical");
    add_input(cmd_check);

    add_input(app.add_subcommand("min-committee", "committee of minimum cardinality"));

    auto* cmd_enum = app.add_subcommand("enumerate", "all committees of size k");
    cmd_enum->add_option("--k", opt.k, "layer size")->required();
    add_input(cmd_enum);

    auto* cmd_filter = app.add_subcommand("filter-O", "order filter O(B) and antichain G(B)");
    cmd_filter->add_option("--base", opt.base, "base tope B")->required();
    add_input(cmd_filter);

    auto* cmd_classify = app.add_subcommand("classify", "committee decision rule verdicts");
    cmd_classify->add_option("--labels", opt.labels, "training labels, e.g. \"-=4 +=1,2,3\"");
    cmd_classify->add_option("--extend", opt.extend_arg,
                             "extension: 'rational <r rationals>' or 'sigma <file>'")
        ->required();
    cmd_classify->add_option("--committee", opt.committee_file,
                             "committee file (default: minimum committee)");
    add_input(cmd_classify);

    auto* cmd_report = app.add_subcommand("report", "graph structure report");
    cmd_report->add_option("--graph", opt.report_graph, "gamma|gamma-max|tope-graph");
    add_input(cmd_report);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 1;
    }

    try {
        apply_env_limits();
        std::string command = app.get_subcommands().front()->get_name();
        if (!opt.output.empty()) {
            std::ofstream f(opt.output);
            if (!f) fail(ErrorKind::io, "cannot open " + opt.output + " for writing");
            return dispatch(command, opt, in, f, err);
        }
        return dispatch(command, opt, in, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace omc
