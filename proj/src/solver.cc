#include <rainbow/solver.hh>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

namespace rainbow
{
    namespace
    {
        auto edges_by_colour(int colour_count, span<const Edge> edges) -> vector<vector<size_t>>
        {
            vector<vector<size_t>> classes(colour_count);
            for (size_t i = 0; i < edges.size(); ++i)
                classes[edges[i].colour].push_back(i);
            return classes;
        }

        auto fail_first_order(const vector<vector<size_t>> & classes) -> vector<Colour>
        {
            vector<Colour> order(classes.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Colour x, Colour y) {
                return classes[x].size() < classes[y].size();
            });
            return order;
        }

        struct RainbowSearch
        {
            span<const Edge> edges;
            vector<vector<size_t>> classes;
            SolveOptions options;
            vector<char> occupied;
            vector<char> assigned;
            vector<Colour> order;
            vector<size_t> chosen;
            uint64_t nodes = 0;

            auto free(size_t e) const -> bool
            {
                return ! occupied[edges[e].u] && ! occupied[edges[e].v];
            }

            auto free_count(Colour c) const -> size_t
            {
                size_t n = 0;
                for (size_t e : classes[c])
                    n += free(e);
                return n;
            }

            auto any_free(Colour c) const -> bool
            {
                return std::any_of(classes[c].begin(), classes[c].end(), [&](size_t e) { return free(e); });
            }

            auto every_unassigned_colour_alive() const -> bool
            {
                for (Colour c = 0; c < static_cast<Colour>(classes.size()); ++c)
                    if (! assigned[c] && ! any_free(c))
                        return false;
                return true;
            }

            auto pick(size_t depth) const -> Colour
            {
                if (options.order == ColourOrder::fail_first)
                    return order[depth];
                Colour best = -1;
                size_t best_count = std::numeric_limits<size_t>::max();
                for (Colour c = 0; c < static_cast<Colour>(classes.size()); ++c)
                    if (! assigned[c]) {
                        auto n = free_count(c);
                        if (n < best_count) {
                            best = c;
                            best_count = n;
                        }
                    }
                return best;
            }

            auto solve(size_t depth) -> bool
            {
                if (depth == classes.size())
                    return true;
                Colour c = pick(depth);
                assigned[c] = 1;
                for (size_t e : classes[c]) {
                    if (! free(e))
                        continue;
                    ++nodes;
                    occupied[edges[e].u] = occupied[edges[e].v] = 1;
                    chosen.push_back(e);
                    if (every_unassigned_colour_alive() && solve(depth + 1))
                        return true;
                    chosen.pop_back();
                    occupied[edges[e].u] = occupied[edges[e].v] = 0;
                }
                assigned[c] = 0;
                return false;
            }
        };

        struct MaxSearch
        {
            span<const Edge> edges;
            vector<vector<size_t>> classes;
            vector<Colour> order;
            vector<char> occupied;
            vector<size_t> chosen;
            vector<size_t> best;
            int best_size = -1;
            uint64_t nodes = 0;

            auto free(size_t e) const -> bool
            {
                return ! occupied[edges[e].u] && ! occupied[edges[e].v];
            }

            auto live_colours_from(size_t depth) const -> int
            {
                int n = 0;
                for (size_t d = depth; d < order.size(); ++d)
                    n += std::any_of(classes[order[d]].begin(), classes[order[d]].end(), [&](size_t e) { return free(e); });
                return n;
            }

            auto done() const -> bool
            {
                return best_size == static_cast<int>(order.size());
            }

            void search(size_t depth)
            {
                ++nodes;
                int selected = static_cast<int>(chosen.size());
                if (depth == order.size()) {
                    if (selected > best_size) {
                        best_size = selected;
                        best = chosen;
                    }
                    return;
                }
                if (selected + live_colours_from(depth) <= best_size)
                    return;

                for (size_t e : classes[order[depth]]) {
                    if (! free(e))
                        continue;
                    occupied[edges[e].u] = occupied[edges[e].v] = 1;
                    chosen.push_back(e);
                    search(depth + 1);
                    chosen.pop_back();
                    occupied[edges[e].u] = occupied[edges[e].v] = 0;
                    if (done())
                        return;
                }
                search(depth + 1);
            }
        };

        auto saturating_multiply(uint64_t x, uint64_t y) -> uint64_t
        {
            if (x != 0 && y > std::numeric_limits<uint64_t>::max() / x)
                return std::numeric_limits<uint64_t>::max();
            return x * y;
        }
    }

    namespace detail
    {
        auto search_full_rainbow(int vertex_count, int colour_count, span<const Edge> edges, SolveOptions options) -> SolveOutcome
        {
            RainbowSearch s;
            s.edges = edges;
            s.classes = edges_by_colour(colour_count, edges);
            s.options = options;
            s.occupied.assign(vertex_count, 0);
            s.assigned.assign(colour_count, 0);
            s.order = fail_first_order(s.classes);

            SolveOutcome outcome;
            s.nodes = 1;
            bool found = s.every_unassigned_colour_alive() && s.solve(0);
            outcome.nodes_explored = s.nodes;
            outcome.exhaustive = ! found;
            if (found) {
                Matching m{s.chosen};
                std::sort(m.edge_indices.begin(), m.edge_indices.end());
                outcome.matching = std::move(m);
            }
            return outcome;
        }
    }

    auto find_full_rainbow_matching(const ColouredMultigraph & graph, SolveOptions options) -> SolveOutcome
    {
        return detail::search_full_rainbow(graph.vertex_count(), graph.colour_count(), graph.edges(), options);
    }

    auto max_rainbow_matching(const ColouredMultigraph & graph) -> MaxRainbow
    {
        MaxSearch s;
        s.edges = graph.edges();
        s.classes = edges_by_colour(graph.colour_count(), graph.edges());
        s.order = fail_first_order(s.classes);
        s.occupied.assign(graph.vertex_count(), 0);
        s.search(0);

        MaxRainbow result;
        result.size = s.best_size;
        result.witness.edge_indices = std::move(s.best);
        std::sort(result.witness.edge_indices.begin(), result.witness.edge_indices.end());
        result.nodes_explored = s.nodes;
        return result;
    }

    GuardExceeded::GuardExceeded(uint64_t product, uint64_t limit) :
        std::runtime_error("brute force would enumerate " + std::to_string(product) + " choices, above the limit of "
            + std::to_string(limit)),
        _product(product),
        _limit(limit)
    {
    }

    auto brute_force_product(const ColouredMultigraph & graph) -> uint64_t
    {
        uint64_t product = 1;
        for (int size : colour_stats(graph).multiplicity)
            product = saturating_multiply(product, static_cast<uint64_t>(size));
        return product;
    }

    auto brute_force_full_rainbow(const ColouredMultigraph & graph, uint64_t limit) -> BruteForceResult
    {
        BruteForceResult result;
        result.product = brute_force_product(graph);
        if (result.product > limit)
            throw GuardExceeded{result.product, limit};

        const auto edges = graph.edges();
        const auto classes = edges_by_colour(graph.colour_count(), edges);
        const size_t k = classes.size();

        // Odometer over choice[0..k), last colour turning fastest.
        vector<size_t> choice(k, 0);
        vector<uint64_t> stamp(graph.vertex_count(), 0);
        uint64_t tick = 0;
        for (uint64_t n = 0; n < result.product; ++n) {
            ++tick;
            bool disjoint = true;
            for (size_t c = 0; c < k && disjoint; ++c) {
                const auto & e = edges[classes[c][choice[c]]];
                if (stamp[e.u] == tick || stamp[e.v] == tick)
                    disjoint = false;
                stamp[e.u] = stamp[e.v] = tick;
            }
            if (disjoint) {
                if (result.count == 0) {
                    Matching m;
                    for (size_t c = 0; c < k; ++c)
                        m.edge_indices.push_back(classes[c][choice[c]]);
                    std::sort(m.edge_indices.begin(), m.edge_indices.end());
                    result.outcome.matching = std::move(m);
                }
                ++result.count;
            }
            for (size_t c = k; c-- > 0;) {
                if (++choice[c] < classes[c].size())
                    break;
                choice[c] = 0;
            }
        }

        result.outcome.nodes_explored = result.product;
        result.outcome.exhaustive = true;
        return result;
    }

    auto brute_limit_from_env() -> uint64_t
    {
        if (const char * value = std::getenv("RAINBOW_BRUTE_LIMIT")) {
            try {
                size_t used = 0;
                auto parsed = std::stoull(value, &used);
                if (used == std::string{value}.size() && parsed > 0)
                    return parsed;
            }
            catch (const std::exception &) {
            }
        }
        return default_brute_limit;
    }
}
