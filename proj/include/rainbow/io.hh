#pragma once

#include <rainbow/constructions.hh>
#include <rainbow/graph.hh>
#include <rainbow/hypergraph.hh>
#include <rainbow/search.hh>
#include <rainbow/solver.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rainbow
{
    using Json = nlohmann::ordered_json;

    // Graph instance: {"vertices": n, "colours": k, "edges": [{"u":..,"v":..,"colour":..}, ...]}.
    auto graph_to_json(const ColouredMultigraph & graph) -> Json;
    auto graph_from_json(const Json & json) -> ColouredMultigraph;

    struct HypergraphFile
    {
        TripartiteHypergraph hypergraph;
        std::optional<ConversionMap> origin;
    };

    // Hypergraph instance: {"v1","v2","v3","tripartite","triples":[[a,b,c],...]}, plus an
    // optional "origin" object carrying the conversion map back to graph labels.
    auto hypergraph_to_json(const TripartiteHypergraph & hypergraph, const ConversionMap * origin = nullptr) -> Json;
    auto hypergraph_from_json(const Json & json) -> HypergraphFile;

    auto matching_to_json(const std::optional<Matching> & matching) -> Json;
    auto report_to_json(const ConjectureReport & report) -> Json;
    auto search_result_to_json(const SearchResult & result) -> Json;

    /// Reads a JSON document, throwing InvalidInstance on syntax errors.
    auto parse_json(std::string_view text) -> Json;

    /// Graphviz colour names, cycled by colour identifier.
    inline constexpr std::string_view dot_palette[16] = {"blue", "red", "green3", "orange", "purple", "brown", "magenta",
        "cyan4", "gold3", "darkgreen", "navy", "deeppink", "gray40", "olivedrab", "chocolate", "black"};

    /// Undirected DOT with one `color`/`label` pair per edge. Edges in `highlight`
    /// are drawn bold.
    auto to_dot(const ColouredMultigraph & graph, const std::optional<Matching> & highlight = std::nullopt) -> std::string;
}
