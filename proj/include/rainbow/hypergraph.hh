#pragma once

#include <rainbow/graph.hh>

#include <optional>
#include <span>
#include <vector>

namespace rainbow
{
    /// One hyperedge: a colour vertex `a` in V1, and two graph vertices `b`, `c`.
    /// In a tripartite hypergraph `b` indexes V2 and `c` indexes V3; otherwise both
    /// index the single merged pool held in V2.
    struct Triple
    {
        int a = 0;
        int b = 0;
        int c = 0;

        friend auto operator==(const Triple &, const Triple &) -> bool = default;
    };

    /**
     * A 3-uniform hypergraph whose first vertex class V1 stands for colours.
     *
     * When `tripartite()` is false the underlying graph was not bipartite: V2 is
     * the merged pool of graph vertices and `v3_count()` is zero. Every V1 vertex
     * lies in at least one triple.
     */
    class TripartiteHypergraph
    {
    public:
        TripartiteHypergraph() = default;
        TripartiteHypergraph(int v1_count, int v2_count, int v3_count, std::vector<Triple> triples, bool tripartite);

        auto v1_count() const -> int { return _v1; }
        auto v2_count() const -> int { return _v2; }
        auto v3_count() const -> int { return _v3; }
        auto tripartite() const -> bool { return _tripartite; }
        auto triples() const -> std::span<const Triple> { return _triples; }

        friend auto operator==(const TripartiteHypergraph &, const TripartiteHypergraph &) -> bool = default;

    private:
        int _v1 = 0;
        int _v2 = 0;
        int _v3 = 0;
        std::vector<Triple> _triples;
        bool _tripartite = true;
    };

    /// Where each hypergraph vertex came from. Colour identifiers map to V1 unchanged.
    struct ConversionMap
    {
        int graph_vertex_count = 0;
        // Original graph vertex of each V2 (or pool) index, and of each V3 index.
        std::vector<Vertex> v2_vertices;
        std::vector<Vertex> v3_vertices;
        // Triples whose source edge listed its V3 endpoint first.
        std::vector<std::size_t> swapped;

        friend auto operator==(const ConversionMap &, const ConversionMap &) -> bool = default;
    };

    struct Conversion
    {
        TripartiteHypergraph hypergraph;
        ConversionMap map;
    };

    /// One triple per edge, in edge order. Isolated graph vertices are dropped;
    /// the surviving vertices keep ascending identifier order within each class.
    auto from_coloured_graph(const ColouredMultigraph & graph) -> Conversion;

    /// Graph on V2 followed by V3, one edge (b, v2_count + c, a) per triple.
    /// Throws InvalidInstance on a non-tripartite hypergraph.
    auto to_coloured_graph(const TripartiteHypergraph & hypergraph) -> ColouredMultigraph;

    /// Restores the original vertex identifiers and edge orientation. Works for
    /// both tripartite and merged-pool hypergraphs.
    auto to_coloured_graph(const TripartiteHypergraph & hypergraph, const ConversionMap & map) -> ColouredMultigraph;

    /// The graph whose edge i is triple i: to_coloured_graph for tripartite input,
    /// the merged pool graph otherwise.
    auto underlying_graph(const TripartiteHypergraph & hypergraph) -> ColouredMultigraph;

    struct DegreeStats
    {
        // Minimum degree over V1 (0 when V1 is empty).
        int delta_v1 = 0;
        // Maximum degree over V2 and V3, or over the merged pool.
        int delta_max_rest = 0;

        friend auto operator==(const DegreeStats &, const DegreeStats &) -> bool = default;
    };

    auto degree_stats(const TripartiteHypergraph & hypergraph) -> DegreeStats;

    /// A set of pairwise disjoint triples covering every V1 vertex once, as triple
    /// indices, or nullopt when none exists.
    auto has_v1_matching(const TripartiteHypergraph & hypergraph) -> std::optional<Matching>;
}
