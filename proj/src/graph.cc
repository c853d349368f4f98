#include <rainbow/graph.hh>

#include <algorithm>
#include <queue>

using std::optional;
using std::size_t;
using std::span;
using std::to_string;
using std::vector;

namespace rainbow
{
    ColouredMultigraph::ColouredMultigraph(int vertex_count, int colour_count, vector<Edge> edges) :
        _vertex_count(vertex_count),
        _colour_count(colour_count),
        _edges(std::move(edges))
    {
        if (vertex_count < 0)
            throw InvalidInstance{"negative vertex count"};
        if (colour_count < 0)
            throw InvalidInstance{"negative colour count"};

        vector<char> seen(colour_count, 0);
        for (size_t i = 0; i < _edges.size(); ++i) {
            const auto & e = _edges[i];
            if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
                throw InvalidInstance{"edge " + to_string(i) + " has an endpoint outside [0, " + to_string(vertex_count) + ")"};
            if (e.u == e.v)
                throw InvalidInstance{"edge " + to_string(i) + " is a self-loop on vertex " + to_string(e.u)};
            if (e.colour < 0 || e.colour >= colour_count)
                throw InvalidInstance{"edge " + to_string(i) + " has colour " + to_string(e.colour) + " outside [0, " + to_string(colour_count) + ")"};
            seen[e.colour] = 1;
        }

        for (int c = 0; c < colour_count; ++c)
            if (! seen[c])
                throw InvalidInstance{"colour " + to_string(c) + " appears on no edge"};
    }

    auto build_graph(int vertex_count, int colour_count, vector<Edge> edges) -> ColouredMultigraph
    {
        return ColouredMultigraph{vertex_count, colour_count, std::move(edges)};
    }

    auto vertex_degrees(const ColouredMultigraph & graph) -> vector<int>
    {
        vector<int> degree(graph.vertex_count(), 0);
        for (const auto & e : graph.edges()) {
            ++degree[e.u];
            ++degree[e.v];
        }
        return degree;
    }

    auto max_degree(const ColouredMultigraph & graph) -> int
    {
        auto degree = vertex_degrees(graph);
        return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    }

    auto colour_stats(const ColouredMultigraph & graph) -> ColourStats
    {
        ColourStats result;
        result.multiplicity.assign(graph.colour_count(), 0);
        for (const auto & e : graph.edges())
            ++result.multiplicity[e.colour];
        if (! result.multiplicity.empty())
            result.minimum = *std::min_element(result.multiplicity.begin(), result.multiplicity.end());
        return result;
    }

    auto bipartition(const ColouredMultigraph & graph) -> optional<Bipartition>
    {
        const int n = graph.vertex_count();
        vector<vector<Vertex>> adjacent(n);
        for (const auto & e : graph.edges()) {
            adjacent[e.u].push_back(e.v);
            adjacent[e.v].push_back(e.u);
        }

        Bipartition result;
        result.side.assign(n, -1);
        std::queue<Vertex> pending;
        for (Vertex start = 0; start < n; ++start) {
            if (result.side[start] != -1)
                continue;
            result.side[start] = 0;
            pending.push(start);
            while (! pending.empty()) {
                Vertex x = pending.front();
                pending.pop();
                for (Vertex y : adjacent[x]) {
                    if (result.side[y] == -1) {
                        result.side[y] = 1 - result.side[x];
                        pending.push(y);
                    }
                    else if (result.side[y] == result.side[x])
                        return std::nullopt;
                }
            }
        }

        for (Vertex x = 0; x < n; ++x)
            (result.side[x] == 0 ? result.left : result.right).push_back(x);
        return result;
    }

    auto verify_matching(const ColouredMultigraph & graph, span<const size_t> edge_indices) -> bool
    {
        vector<char> used(graph.vertex_count(), 0);
        bool ok = true;
        for (size_t index : edge_indices) {
            if (index >= graph.edge_count())
                throw std::out_of_range{"edge index " + to_string(index) + " out of range"};
            const auto & e = graph.edge(index);
            if (used[e.u] || used[e.v])
                ok = false;
            used[e.u] = used[e.v] = 1;
        }
        return ok;
    }

    auto is_full_rainbow(const ColouredMultigraph & graph, span<const size_t> edge_indices) -> bool
    {
        if (! verify_matching(graph, edge_indices))
            return false;
        if (edge_indices.size() != static_cast<size_t>(graph.colour_count()))
            return false;
        vector<char> hit(graph.colour_count(), 0);
        for (size_t index : edge_indices) {
            auto c = graph.edge(index).colour;
            if (hit[c])
                return false;
            hit[c] = 1;
        }
        return true;
    }
}
