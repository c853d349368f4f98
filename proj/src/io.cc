#include <rainbow/io.hh>

#include <limits>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace rainbow
{
    namespace
    {
        auto as_int(const Json & value, const string & what) -> int
        {
            if (! value.is_number_integer())
                throw InvalidInstance{what + " must be an integer"};
            auto wide = value.get<std::int64_t>();
            if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
                throw InvalidInstance{what + " is out of range"};
            return static_cast<int>(wide);
        }

        auto field(const Json & object, const char * key) -> const Json &
        {
            if (! object.is_object())
                throw InvalidInstance{"expected a JSON object"};
            auto it = object.find(key);
            if (it == object.end())
                throw InvalidInstance{string{"missing field \""} + key + "\""};
            return *it;
        }

        auto int_field(const Json & object, const char * key) -> int
        {
            return as_int(field(object, key), string{"\""} + key + "\"");
        }

        auto array_field(const Json & object, const char * key) -> const Json &
        {
            const auto & value = field(object, key);
            if (! value.is_array())
                throw InvalidInstance{string{"\""} + key + "\" must be an array"};
            return value;
        }

        auto int_list(const Json & array, const string & what) -> vector<int>
        {
            vector<int> out;
            for (const auto & x : array)
                out.push_back(as_int(x, what));
            return out;
        }
    }

    auto graph_to_json(const ColouredMultigraph & graph) -> Json
    {
        Json edges = Json::array();
        for (const auto & e : graph.edges())
            edges.push_back({{"u", e.u}, {"v", e.v}, {"colour", e.colour}});
        return {{"vertices", graph.vertex_count()}, {"colours", graph.colour_count()}, {"edges", std::move(edges)}};
    }

    auto graph_from_json(const Json & json) -> ColouredMultigraph
    {
        int vertices = int_field(json, "vertices");
        int colours = int_field(json, "colours");
        vector<Edge> edges;
        for (const auto & e : array_field(json, "edges"))
            edges.push_back({int_field(e, "u"), int_field(e, "v"), int_field(e, "colour")});
        return ColouredMultigraph{vertices, colours, std::move(edges)};
    }

    auto hypergraph_to_json(const TripartiteHypergraph & hypergraph, const ConversionMap * origin) -> Json
    {
        Json triples = Json::array();
        for (const auto & t : hypergraph.triples())
            triples.push_back({t.a, t.b, t.c});
        Json out = {{"v1", hypergraph.v1_count()}, {"v2", hypergraph.v2_count()}, {"v3", hypergraph.v3_count()},
            {"tripartite", hypergraph.tripartite()}, {"triples", std::move(triples)}};
        if (origin)
            out["origin"] = {{"vertices", origin->graph_vertex_count}, {"v2", origin->v2_vertices},
                {"v3", origin->v3_vertices}, {"swapped", origin->swapped}};
        return out;
    }

    auto hypergraph_from_json(const Json & json) -> HypergraphFile
    {
        const auto & flag = field(json, "tripartite");
        if (! flag.is_boolean())
            throw InvalidInstance{"\"tripartite\" must be a boolean"};
        vector<Triple> triples;
        for (const auto & t : array_field(json, "triples")) {
            if (! t.is_array() || t.size() != 3)
                throw InvalidInstance{"each triple must be an array of three integers"};
            triples.push_back({as_int(t[0], "triple entry"), as_int(t[1], "triple entry"), as_int(t[2], "triple entry")});
        }

        HypergraphFile file{TripartiteHypergraph{int_field(json, "v1"), int_field(json, "v2"), int_field(json, "v3"),
            std::move(triples), flag.get<bool>()}, std::nullopt};

        if (json.contains("origin")) {
            const auto & o = json["origin"];
            ConversionMap map;
            map.graph_vertex_count = int_field(o, "vertices");
            map.v2_vertices = int_list(array_field(o, "v2"), "origin vertex");
            map.v3_vertices = int_list(array_field(o, "v3"), "origin vertex");
            for (int i : int_list(array_field(o, "swapped"), "swapped triple")) {
                if (i < 0)
                    throw InvalidInstance{"swapped triple index must be non-negative"};
                map.swapped.push_back(static_cast<size_t>(i));
            }
            // Validates the map against the hypergraph.
            (void) to_coloured_graph(file.hypergraph, map);
            file.origin = std::move(map);
        }
        return file;
    }

    auto matching_to_json(const std::optional<Matching> & matching) -> Json
    {
        if (! matching)
            return nullptr;
        return matching->edge_indices;
    }

    auto report_to_json(const ConjectureReport & report) -> Json
    {
        Json statements = Json::array();
        for (const auto & v : report.verdicts)
            statements.push_back({{"id", statement_id(v.statement)}, {"statement", statement_text(v.statement)},
                {"hypothesis_holds", v.hypothesis_holds}, {"conclusion_holds", v.conclusion_holds},
                {"is_counterexample", v.is_counterexample}});

        Json out = {{"max_degree", report.max_degree}, {"min_multiplicity", report.min_multiplicity},
            {"delta_v1", report.delta_v1}, {"delta_max_rest", report.delta_max_rest}, {"bipartite", report.bipartite},
            {"matching_exists", report.matching_exists}, {"witness", matching_to_json(report.witness)},
            {"nodes_explored", report.nodes_explored}};
        out["brute_force_count"] = report.brute_force_count ? Json(*report.brute_force_count) : Json(nullptr);
        out["statements"] = std::move(statements);
        out["not_evaluated"] = Json::array({ab_conj_2_9_note});
        return out;
    }

    auto search_result_to_json(const SearchResult & result) -> Json
    {
        return {{"canonical_form", result.canonical_form}, {"shape", result.shape}, {"colouring", result.colouring},
            {"instance", graph_to_json(result.instance)},
            {"stats", {{"delta_v1", result.stats.delta_v1}, {"delta_max_rest", result.stats.delta_max_rest}}},
            {"certificate", {{"method", "brute_force"}, {"product", result.certificate.product},
                {"count", result.certificate.count}, {"nodes_explored", result.certificate.nodes_explored}}}};
    }

    auto parse_json(std::string_view text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InvalidInstance{string{"malformed JSON: "} + e.what()};
        }
    }

    auto to_dot(const ColouredMultigraph & graph, const std::optional<Matching> & highlight) -> string
    {
        vector<char> bold(graph.edge_count(), 0);
        if (highlight)
            for (size_t i : highlight->edge_indices)
                bold.at(i) = 1;

        std::ostringstream out;
        out << "graph G {\n";
        out << "  node [shape=circle];\n";
        for (Vertex x = 0; x < graph.vertex_count(); ++x)
            out << "  " << x << ";\n";
        for (size_t i = 0; i < graph.edge_count(); ++i) {
            const auto & e = graph.edge(i);
            out << "  " << e.u << " -- " << e.v << " [color=\"" << dot_palette[e.colour % 16] << "\", label=\"" << e.colour << "\"";
            if (bold[i])
                out << ", penwidth=3";
            out << "];\n";
        }
        out << "}\n";
        return out.str();
    }
}
