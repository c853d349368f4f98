#include <rainbow/cli.hh>
#include <rainbow/io.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

using std::string;
using std::vector;

namespace rainbow::cli
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto read_input(const string & path, std::istream & in) -> string
        {
            if (path == "-")
                return {std::istreambuf_iterator<char>{in}, {}};
            std::ifstream file{path, std::ios::binary};
            if (! file)
                throw UsageError{"cannot open " + path};
            return {std::istreambuf_iterator<char>{file}, {}};
        }

        // Writes to `path`, or to `out` when no path was given.
        class Sink
        {
        public:
            Sink(const string & path, std::ostream & out)
            {
                if (! path.empty()) {
                    _file.open(path, std::ios::binary);
                    if (! _file)
                        throw UsageError{"cannot write " + path};
                }
                _stream = path.empty() ? &out : &_file;
            }

            auto stream() -> std::ostream & { return *_stream; }

        private:
            std::ofstream _file;
            std::ostream * _stream;
        };

        struct Instance
        {
            ColouredMultigraph graph;
            std::optional<HypergraphFile> hypergraph;
        };

        // Accepts either JSON format; a hypergraph is viewed through the graph whose edge i is triple i.
        auto load_instance(const string & path, std::istream & in) -> Instance
        {
            auto json = parse_json(read_input(path, in));
            if (json.is_object() && json.contains("triples")) {
                auto file = hypergraph_from_json(json);
                auto graph = underlying_graph(file.hypergraph);
                return {std::move(graph), std::move(file)};
            }
            return {graph_from_json(json), std::nullopt};
        }

        void print_line(std::ostream & out, const Json & json)
        {
            out << json.dump() << '\n';
        }

        auto yes_no(bool x) -> const char *
        {
            return x ? "yes" : "no";
        }

        struct Options
        {
            string input = "-";
            string output;
            string format = "json";
            string family = "double-star";
            int m = 6;
            int c = 1;
            string order = "fail-first";
            bool max = false;
            bool no_brute = false;
            bool pretty = false;
            int regular = 2;
            bool bipartite = false;
            int class_size = 3;
            bool at_least = false;
            int max_edges = 12;
            bool require_gap = false;
            bool require_double_gap = false;
            std::size_t stop_after = 0;
            unsigned jobs = 1;
            string resume;
        };

        auto command_gen(const Options & o, std::ostream & out) -> int
        {
            ColouredMultigraph graph;
            try {
                graph = o.family == "double-star" ? double_star_family(o.m) : constant_defeater(o.c);
            }
            catch (const std::invalid_argument & e) {
                throw UsageError{e.what()};
            }
            Sink sink{o.output, out};
            if (o.format == "dot")
                sink.stream() << to_dot(graph);
            else
                print_line(sink.stream(), graph_to_json(graph));
            return success;
        }

        auto command_convert(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto json = parse_json(read_input(o.input, in));
            Sink sink{o.output, out};
            if (json.is_object() && json.contains("triples")) {
                auto file = hypergraph_from_json(json);
                auto graph = file.origin ? to_coloured_graph(file.hypergraph, *file.origin) : to_coloured_graph(file.hypergraph);
                if (o.format == "dot")
                    sink.stream() << to_dot(graph);
                else
                    print_line(sink.stream(), graph_to_json(graph));
            }
            else {
                if (o.format == "dot")
                    throw UsageError{"DOT output is only available for graphs"};
                auto conversion = from_coloured_graph(graph_from_json(json));
                print_line(sink.stream(), hypergraph_to_json(conversion.hypergraph, &conversion.map));
            }
            return success;
        }

        auto brute_force_json(const ColouredMultigraph & graph) -> Json
        {
            const auto limit = brute_limit_from_env();
            const auto product = brute_force_product(graph);
            if (product > limit)
                return {{"skipped", true}, {"product", product}, {"limit", limit}};
            auto brute = brute_force_full_rainbow(graph, limit);
            return {{"skipped", false}, {"product", brute.product}, {"count", brute.count}};
        }

        auto command_solve(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto instance = load_instance(o.input, in);
            SolveOptions options;
            options.order = o.order == "dynamic" ? ColourOrder::dynamic : ColourOrder::fail_first;
            auto outcome = find_full_rainbow_matching(instance.graph, options);

            Json result = {{"exists", outcome.matching.has_value()}, {"witness", matching_to_json(outcome.matching)},
                {"nodes_explored", outcome.nodes_explored}, {"exhaustive", outcome.exhaustive}};
            if (! o.no_brute) {
                auto brute = brute_force_json(instance.graph);
                if (! brute["skipped"].get<bool>() && (brute["count"].get<std::uint64_t>() > 0) != outcome.matching.has_value())
                    throw std::logic_error{"backtracking and brute force disagree on existence"};
                result["brute_force"] = std::move(brute);
            }
            if (o.max) {
                auto best = max_rainbow_matching(instance.graph);
                result["max_rainbow"] = {{"size", best.size}, {"witness", best.witness.edge_indices}};
            }

            Sink sink{o.output, out};
            if (o.format == "dot")
                sink.stream() << to_dot(instance.graph, outcome.matching);
            else
                print_line(sink.stream(), result);
            return outcome.matching ? success : no_matching;
        }

        auto command_check(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto instance = load_instance(o.input, in);
            ReportOptions options;
            options.cross_check = ! o.no_brute;
            options.brute_limit = brute_limit_from_env();
            auto report = conjecture_report(instance.graph, options);

            Sink sink{o.output, out};
            auto & s = sink.stream();
            if (o.pretty) {
                s << "Delta(G)=" << report.max_degree << "  min colour class=" << report.min_multiplicity
                  << "  delta(V1)=" << report.delta_v1 << "  Delta(V2+V3)=" << report.delta_max_rest
                  << "  bipartite=" << yes_no(report.bipartite) << "  full rainbow matching=" << yes_no(report.matching_exists) << '\n';
                s << std::left << std::setw(18) << "statement" << std::setw(12) << "hypothesis" << std::setw(12) << "conclusion"
                  << "counterexample" << '\n';
                for (const auto & v : report.verdicts)
                    s << std::left << std::setw(18) << statement_id(v.statement) << std::setw(12) << yes_no(v.hypothesis_holds)
                      << std::setw(12) << yes_no(v.conclusion_holds) << (v.is_counterexample ? "YES" : "no") << '\n';
                s << ab_conj_2_9_note << '\n';
            }
            else
                print_line(s, report_to_json(report));
            return report.matching_exists ? success : no_matching;
        }

        auto command_stats(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto instance = load_instance(o.input, in);
            const auto & graph = instance.graph;
            auto colours = colour_stats(graph);
            auto hypergraph = instance.hypergraph ? instance.hypergraph->hypergraph : from_coloured_graph(graph).hypergraph;
            auto degrees = degree_stats(hypergraph);

            Sink sink{o.output, out};
            auto & s = sink.stream();
            if (o.pretty) {
                s << "vertices            " << graph.vertex_count() << '\n'
                  << "edges               " << graph.edge_count() << '\n'
                  << "colours             " << graph.colour_count() << '\n'
                  << "Delta(G)            " << max_degree(graph) << '\n'
                  << "min colour class    " << colours.minimum << '\n'
                  << "delta(V1)           " << degrees.delta_v1 << '\n'
                  << "Delta(V2+V3)        " << degrees.delta_max_rest << '\n'
                  << "bipartite           " << yes_no(bipartition(graph).has_value()) << '\n'
                  << "tripartite          " << yes_no(hypergraph.tripartite()) << '\n'
                  << "colour classes     ";
                for (int x : colours.multiplicity)
                    s << ' ' << x;
                s << '\n';
            }
            else
                print_line(s, Json{{"vertices", graph.vertex_count()}, {"edges", graph.edge_count()},
                    {"colours", graph.colour_count()}, {"max_degree", max_degree(graph)},
                    {"colour_multiplicities", colours.multiplicity}, {"min_multiplicity", colours.minimum},
                    {"bipartite", bipartition(graph).has_value()}, {"tripartite", hypergraph.tripartite()},
                    {"delta_v1", degrees.delta_v1}, {"delta_max_rest", degrees.delta_max_rest}});
            return success;
        }

        auto command_hunt(const Options & o, std::ostream & out, std::ostream & err) -> int
        {
            SearchSpec spec;
            spec.max_edges = o.max_edges;
            spec.regularity = o.regular;
            spec.require_bipartite = o.bipartite;
            spec.class_size = {o.class_size, ! o.at_least};
            spec.require_delta_gap = o.require_gap;
            spec.require_double_gap = o.require_double_gap;
            if (o.stop_after > 0)
                spec.stop_after = o.stop_after;

            HuntOptions options;
            options.jobs = o.jobs;
            if (! o.resume.empty()) {
                std::ifstream file{o.resume};
                if (! file)
                    throw UsageError{"cannot open " + o.resume};
                string line;
                while (std::getline(file, line)) {
                    if (line.empty())
                        continue;
                    auto json = parse_json(line);
                    if (! json.is_object() || ! json.contains("canonical_form") || ! json["canonical_form"].is_string())
                        throw InvalidInstance{"resume file line lacks a canonical_form"};
                    options.skip.insert(json["canonical_form"].get<string>());
                }
            }

            HuntReport report;
            try {
                report = hunt(spec, options);
            }
            catch (const std::invalid_argument & e) {
                throw UsageError{e.what()};
            }

            Sink sink{o.output, out};
            for (const auto & r : report.results)
                print_line(sink.stream(), search_result_to_json(r));

            Json shapes = Json::array();
            for (const auto & shape : report.shapes)
                shapes.push_back(shape);
            print_line(err, Json{{"summary", {{"results", report.results.size()},
                {"candidates_examined", report.candidates_examined}, {"skipped", report.skipped},
                {"filtered_out", report.filtered_out}, {"with_rainbow", report.with_rainbow},
                {"exhaustive", report.exhaustive}, {"shapes", std::move(shapes)}}}});
            return success;
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{"Full rainbow matchings: generate, convert, solve and check instances, and hunt for counterexamples."};
        app.require_subcommand(1);

        auto add_input = [&](CLI::App * cmd) {
            cmd->add_option("input", o.input, "Instance JSON file, or - for standard input")->capture_default_str();
        };
        auto add_output = [&](CLI::App * cmd) {
            cmd->add_option("-o,--output", o.output, "Write to this file instead of standard output");
        };
        auto add_format = [&](CLI::App * cmd) {
            cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
        };

        auto gen = app.add_subcommand("gen", "Generate a family instance");
        gen->add_option("--family", o.family, "Instance family")->check(CLI::IsMember({"double-star", "constant-defeater"}))->capture_default_str();
        gen->add_option("--m", o.m, "Even number of double-star components")->capture_default_str();
        gen->add_option("--c", o.c, "Margin over the maximum degree (constant-defeater)")->capture_default_str();
        add_format(gen);
        add_output(gen);

        auto convert = app.add_subcommand("convert", "Convert a graph to its hypergraph or back");
        add_input(convert);
        add_format(convert);
        add_output(convert);

        auto solve = app.add_subcommand("solve", "Decide whether a full rainbow matching (V1-matching) exists");
        add_input(solve);
        solve->add_option("--order", o.order, "Colour ordering")->check(CLI::IsMember({"fail-first", "dynamic"}))->capture_default_str();
        solve->add_flag("--max", o.max, "Also report a maximum rainbow matching");
        solve->add_flag("--no-brute", o.no_brute, "Skip the brute-force cross-check");
        add_format(solve);
        add_output(solve);

        auto check = app.add_subcommand("check", "Evaluate every conjecture and theorem on an instance");
        add_input(check);
        check->add_flag("--pretty", o.pretty, "Print a table instead of JSON");
        check->add_flag("--no-brute", o.no_brute, "Skip the brute-force cross-check");
        add_output(check);

        auto hunt_cmd = app.add_subcommand("hunt", "Search 2-regular graphs for instances without a full rainbow matching");
        hunt_cmd->add_option("--regular", o.regular, "Vertex degree (only 2)")->capture_default_str();
        hunt_cmd->add_flag("--bipartite", o.bipartite, "Only even cycles");
        hunt_cmd->add_option("--class-size", o.class_size, "Colour class size")->capture_default_str();
        hunt_cmd->add_flag("--at-least", o.at_least, "Treat --class-size as a minimum");
        hunt_cmd->add_option("--max-edges", o.max_edges, "Largest total number of edges")->capture_default_str();
        hunt_cmd->add_flag("--require-gap", o.require_gap, "Keep only delta(V1) > Delta(V2+V3)");
        hunt_cmd->add_flag("--require-double-gap", o.require_double_gap, "Keep only delta(V1) >= 2 Delta(V2+V3)");
        hunt_cmd->add_option("--stop-after", o.stop_after, "Stop after the shape reaching this many results (0 = exhaust)");
        hunt_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
        hunt_cmd->add_option("--resume", o.resume, "JSON-lines file of results to skip");
        add_output(hunt_cmd);

        auto stats = app.add_subcommand("stats", "Print degree and colour-class statistics");
        add_input(stats);
        stats->add_flag("--pretty", o.pretty, "Print a table instead of JSON");
        add_output(stats);

        vector<const char *> argv{"rainbow"};
        for (const auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp & e) {
            app.exit(e, out, err);
            return success;
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return usage_error;
        }

        try {
            if (gen->parsed())
                return command_gen(o, out);
            if (convert->parsed())
                return command_convert(o, in, out);
            if (solve->parsed())
                return command_solve(o, in, out);
            if (check->parsed())
                return command_check(o, in, out);
            if (hunt_cmd->parsed())
                return command_hunt(o, out, err);
            if (stats->parsed())
                return command_stats(o, in, out);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
        catch (const InvalidInstance & e) {
            err << "invalid instance: " << e.what() << '\n';
            return invalid_instance;
        }
        catch (const GuardExceeded & e) {
            err << "error: " << e.what() << " (raise RAINBOW_BRUTE_LIMIT to allow it)\n";
            return usage_error;
        }
        catch (const std::logic_error & e) {
            err << "internal error: " << e.what() << '\n';
            return internal_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
        return usage_error;
    }
}
