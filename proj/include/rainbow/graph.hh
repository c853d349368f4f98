#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow
{
    using Vertex = int;
    using Colour = int;

    /// Raised whenever an instance violates the structural invariants of its type.
    class InvalidInstance : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct Edge
    {
        Vertex u = 0;
        Vertex v = 0;
        Colour colour = 0;

        friend auto operator==(const Edge &, const Edge &) -> bool = default;
    };

    /**
     * An edge-coloured multigraph with dense vertex and colour identifiers.
     *
     * Edges are identified by their position in the edge sequence, so parallel
     * edges stay distinct. Every colour in [0, colour_count) labels at least one
     * edge and self-loops are rejected. Immutable once built.
     */
    class ColouredMultigraph
    {
    public:
        ColouredMultigraph() = default;
        ColouredMultigraph(int vertex_count, int colour_count, std::vector<Edge> edges);

        auto vertex_count() const -> int { return _vertex_count; }
        auto colour_count() const -> int { return _colour_count; }
        auto edge_count() const -> std::size_t { return _edges.size(); }
        auto edges() const -> std::span<const Edge> { return _edges; }
        auto edge(std::size_t index) const -> const Edge & { return _edges.at(index); }

        friend auto operator==(const ColouredMultigraph &, const ColouredMultigraph &) -> bool = default;

    private:
        int _vertex_count = 0;
        int _colour_count = 0;
        std::vector<Edge> _edges;
    };

    auto build_graph(int vertex_count, int colour_count, std::vector<Edge> edges) -> ColouredMultigraph;

    /// A set of edge positions, kept sorted ascending.
    struct Matching
    {
        std::vector<std::size_t> edge_indices;

        auto size() const -> std::size_t { return edge_indices.size(); }
        friend auto operator==(const Matching &, const Matching &) -> bool = default;
    };

    /// Incident-edge count per vertex, parallel edges counted with multiplicity.
    auto vertex_degrees(const ColouredMultigraph & graph) -> std::vector<int>;

    /// Zero for edgeless graphs.
    auto max_degree(const ColouredMultigraph & graph) -> int;

    struct ColourStats
    {
        std::vector<int> multiplicity;
        // 0 when the graph has no colours.
        int minimum = 0;
    };

    auto colour_stats(const ColouredMultigraph & graph) -> ColourStats;

    struct Bipartition
    {
        std::vector<Vertex> left;
        std::vector<Vertex> right;
        // 0 for left, 1 for right, indexed by vertex.
        std::vector<int> side;
    };

    /**
     * Two-colours every component by breadth-first search, placing the smallest
     * vertex of each component on the left. Isolated vertices go left. Returns
     * nullopt if any odd cycle exists.
     */
    auto bipartition(const ColouredMultigraph & graph) -> std::optional<Bipartition>;

    /// True iff the referenced edges are pairwise vertex-disjoint. A repeated
    /// index meets itself, so it is not a matching. Throws std::out_of_range.
    auto verify_matching(const ColouredMultigraph & graph, std::span<const std::size_t> edge_indices) -> bool;

    /// A matching using every colour of the graph exactly once.
    auto is_full_rainbow(const ColouredMultigraph & graph, std::span<const std::size_t> edge_indices) -> bool;
}
