#include <rainbow/hypergraph.hh>
#include <rainbow/solver.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::to_string;
using std::vector;

namespace rainbow
{
    TripartiteHypergraph::TripartiteHypergraph(int v1_count, int v2_count, int v3_count, vector<Triple> triples, bool tripartite) :
        _v1(v1_count),
        _v2(v2_count),
        _v3(v3_count),
        _triples(std::move(triples)),
        _tripartite(tripartite)
    {
        if (v1_count < 0 || v2_count < 0 || v3_count < 0)
            throw InvalidInstance{"negative vertex class size"};
        if (! tripartite && v3_count != 0)
            throw InvalidInstance{"a merged-pool hypergraph must have an empty V3"};

        vector<char> covered(v1_count, 0);
        for (size_t i = 0; i < _triples.size(); ++i) {
            const auto & t = _triples[i];
            auto where = "triple " + to_string(i);
            if (t.a < 0 || t.a >= v1_count)
                throw InvalidInstance{where + " has a V1 index out of range"};
            if (t.b < 0 || t.b >= v2_count)
                throw InvalidInstance{where + " has a V2 index out of range"};
            if (tripartite) {
                if (t.c < 0 || t.c >= v3_count)
                    throw InvalidInstance{where + " has a V3 index out of range"};
            }
            else {
                if (t.c < 0 || t.c >= v2_count)
                    throw InvalidInstance{where + " has a pool index out of range"};
                if (t.b == t.c)
                    throw InvalidInstance{where + " repeats a pool vertex"};
            }
            covered[t.a] = 1;
        }

        for (int a = 0; a < v1_count; ++a)
            if (! covered[a])
                throw InvalidInstance{"V1 vertex " + to_string(a) + " lies in no triple"};
    }

    auto from_coloured_graph(const ColouredMultigraph & graph) -> Conversion
    {
        auto degree = vertex_degrees(graph);
        auto parts = bipartition(graph);
        const bool tripartite = parts.has_value();

        Conversion result;
        auto & map = result.map;
        map.graph_vertex_count = graph.vertex_count();

        vector<int> index_of(graph.vertex_count(), -1);
        for (Vertex x = 0; x < graph.vertex_count(); ++x) {
            if (degree[x] == 0)
                continue;
            auto & cls = (tripartite && parts->side[x] == 1) ? map.v3_vertices : map.v2_vertices;
            index_of[x] = static_cast<int>(cls.size());
            cls.push_back(x);
        }

        vector<Triple> triples;
        triples.reserve(graph.edge_count());
        for (size_t i = 0; i < graph.edge_count(); ++i) {
            const auto & e = graph.edge(i);
            if (tripartite && parts->side[e.u] == 1) {
                triples.push_back({e.colour, index_of[e.v], index_of[e.u]});
                map.swapped.push_back(i);
            }
            else
                triples.push_back({e.colour, index_of[e.u], index_of[e.v]});
        }

        result.hypergraph = TripartiteHypergraph{graph.colour_count(), static_cast<int>(map.v2_vertices.size()),
            static_cast<int>(map.v3_vertices.size()), std::move(triples), tripartite};
        return result;
    }

    auto to_coloured_graph(const TripartiteHypergraph & hypergraph) -> ColouredMultigraph
    {
        if (! hypergraph.tripartite())
            throw InvalidInstance{"cannot rebuild a bipartite graph from a non-tripartite hypergraph"};
        vector<Edge> edges;
        edges.reserve(hypergraph.triples().size());
        for (const auto & t : hypergraph.triples())
            edges.push_back({t.b, hypergraph.v2_count() + t.c, t.a});
        return ColouredMultigraph{hypergraph.v2_count() + hypergraph.v3_count(), hypergraph.v1_count(), std::move(edges)};
    }

    auto to_coloured_graph(const TripartiteHypergraph & hypergraph, const ConversionMap & map) -> ColouredMultigraph
    {
        if (map.v2_vertices.size() != static_cast<size_t>(hypergraph.v2_count())
            || map.v3_vertices.size() != static_cast<size_t>(hypergraph.v3_count()))
            throw InvalidInstance{"conversion map does not match the hypergraph's class sizes"};

        vector<char> used(std::max(map.graph_vertex_count, 0), 0);
        auto check_label = [&](Vertex x) {
            if (x < 0 || x >= map.graph_vertex_count)
                throw InvalidInstance{"conversion map names vertex " + to_string(x) + " outside the graph"};
            if (used[x])
                throw InvalidInstance{"conversion map names vertex " + to_string(x) + " twice"};
            used[x] = 1;
        };
        for (Vertex x : map.v2_vertices)
            check_label(x);
        for (Vertex x : map.v3_vertices)
            check_label(x);

        const auto triples = hypergraph.triples();
        vector<char> flip(triples.size(), 0);
        for (size_t i : map.swapped) {
            if (i >= triples.size())
                throw InvalidInstance{"conversion map swaps a triple that does not exist"};
            flip[i] = 1;
        }

        const auto & second = hypergraph.tripartite() ? map.v3_vertices : map.v2_vertices;
        vector<Edge> edges;
        edges.reserve(triples.size());
        for (size_t i = 0; i < triples.size(); ++i) {
            Vertex x = map.v2_vertices[triples[i].b], y = second[triples[i].c];
            if (flip[i])
                std::swap(x, y);
            edges.push_back({x, y, triples[i].a});
        }
        return ColouredMultigraph{map.graph_vertex_count, hypergraph.v1_count(), std::move(edges)};
    }

    auto underlying_graph(const TripartiteHypergraph & hypergraph) -> ColouredMultigraph
    {
        if (hypergraph.tripartite())
            return to_coloured_graph(hypergraph);
        vector<Edge> edges;
        edges.reserve(hypergraph.triples().size());
        for (const auto & t : hypergraph.triples())
            edges.push_back({t.b, t.c, t.a});
        return ColouredMultigraph{hypergraph.v2_count(), hypergraph.v1_count(), std::move(edges)};
    }

    auto degree_stats(const TripartiteHypergraph & hypergraph) -> DegreeStats
    {
        vector<int> v1_degree(hypergraph.v1_count(), 0);
        vector<int> rest_degree(hypergraph.v2_count() + hypergraph.v3_count(), 0);
        const int third_offset = hypergraph.tripartite() ? hypergraph.v2_count() : 0;
        for (const auto & t : hypergraph.triples()) {
            ++v1_degree[t.a];
            ++rest_degree[t.b];
            ++rest_degree[third_offset + t.c];
        }

        DegreeStats stats;
        if (! v1_degree.empty())
            stats.delta_v1 = *std::min_element(v1_degree.begin(), v1_degree.end());
        if (! rest_degree.empty())
            stats.delta_max_rest = *std::max_element(rest_degree.begin(), rest_degree.end());
        return stats;
    }

    auto has_v1_matching(const TripartiteHypergraph & hypergraph) -> optional<Matching>
    {
        if (hypergraph.tripartite())
            return find_full_rainbow_matching(to_coloured_graph(hypergraph)).matching;

        // Same search straight over the triples, with b and c sharing one occupancy pool.
        vector<Edge> items;
        items.reserve(hypergraph.triples().size());
        for (const auto & t : hypergraph.triples())
            items.push_back({t.b, t.c, t.a});
        return detail::search_full_rainbow(hypergraph.v2_count(), hypergraph.v1_count(), items, {}).matching;
    }
}
