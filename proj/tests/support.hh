#pragma once

// Random instance generators and small independent oracles shared by the tests.

#include <rainbow/graph.hh>
#include <rainbow/hypergraph.hh>

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

namespace rainbow::testing
{
    inline auto uniform(std::mt19937 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>{lo, hi}(rng);
    }

    /// Between 0 and max_edges edges on 2..max_vertices vertices, every colour used.
    inline auto random_graph(std::mt19937 & rng, int max_vertices, int max_edges, int max_colours) -> ColouredMultigraph
    {
        int n = uniform(rng, 2, max_vertices);
        int m = uniform(rng, 0, max_edges);
        int k = m == 0 ? 0 : uniform(rng, 1, std::min(m, max_colours));
        std::vector<Colour> colours(m);
        for (int i = 0; i < m; ++i)
            colours[i] = i < k ? i : uniform(rng, 0, k - 1);
        std::shuffle(colours.begin(), colours.end(), rng);

        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 2);
            if (v >= u)
                ++v;
            edges.push_back({u, v, colours[i]});
        }
        return build_graph(n, k, std::move(edges));
    }

    /// As random_graph, but every edge joins an even vertex to an odd one.
    inline auto random_bipartite_graph(std::mt19937 & rng, int max_vertices, int max_edges, int max_colours) -> ColouredMultigraph
    {
        auto g = random_graph(rng, std::max(max_vertices, 2), max_edges, max_colours);
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        int n = std::max(g.vertex_count(), 2);
        for (auto & e : edges) {
            e.u = 2 * uniform(rng, 0, (n - 1) / 2);
            e.v = 2 * uniform(rng, 0, (n - 2) / 2) + 1;
            if (rng() % 2)
                std::swap(e.u, e.v);
        }
        return build_graph(n, g.colour_count(), std::move(edges));
    }

    /// Size of a largest rainbow matching, by checking every edge subset.
    inline auto subset_max_rainbow(const ColouredMultigraph & g) -> int
    {
        const auto m = g.edge_count();
        int best = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            std::vector<char> vertex(g.vertex_count(), 0), colour(g.colour_count(), 0);
            bool ok = true;
            int size = 0;
            for (std::size_t i = 0; i < m && ok; ++i) {
                if (! (mask >> i & 1))
                    continue;
                const auto & e = g.edge(i);
                if (vertex[e.u] || vertex[e.v] || colour[e.colour])
                    ok = false;
                vertex[e.u] = vertex[e.v] = colour[e.colour] = 1;
                ++size;
            }
            if (ok)
                best = std::max(best, size);
        }
        return best;
    }

    /// Edge multiset with endpoints sorted, for order- and orientation-free comparison.
    inline auto edge_multiset(const ColouredMultigraph & g) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (auto e : g.edges()) {
            if (e.u > e.v)
                std::swap(e.u, e.v);
            out.push_back(e);
        }
        std::sort(out.begin(), out.end(), [](const Edge & x, const Edge & y) {
            return std::tie(x.u, x.v, x.colour) < std::tie(y.u, y.v, y.colour);
        });
        return out;
    }

    /**
     * A tripartite hypergraph with |V1| <= 6 where every V1 vertex has degree at least
     * twice the cap on V2/V3 degrees (cap <= 4), so delta(V1) >= 2 Delta(V2 u V3).
     * V2 and V3 are sized so the cap is tight when possible.
     */
    inline auto random_double_gap_hypergraph(std::mt19937 & rng) -> TripartiteHypergraph
    {
        int k = uniform(rng, 1, 6);
        int cap = uniform(rng, 1, 4);
        std::vector<int> degree(k);
        int total = 0;
        for (auto & d : degree) {
            d = 2 * cap + uniform(rng, 0, 1);
            total += d;
        }
        int side = (total + cap - 1) / cap + uniform(rng, 0, 2);

        std::vector<int> load2(side, 0), load3(side, 0);
        auto pick = [&](std::vector<int> & load) {
            std::vector<int> open;
            for (int x = 0; x < side; ++x)
                if (load[x] < cap)
                    open.push_back(x);
            int x = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
            ++load[x];
            return x;
        };

        std::vector<Triple> triples;
        for (int a = 0; a < k; ++a)
            for (int j = 0; j < degree[a]; ++j)
                triples.push_back({a, pick(load2), pick(load3)});
        std::shuffle(triples.begin(), triples.end(), rng);
        return TripartiteHypergraph{k, side, side, std::move(triples), true};
    }
}
