#pragma once

#include <rainbow/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace rainbow
{
    /// Present matching implies it is a full rainbow matching; absent implies
    /// the search was complete.
    struct SolveOutcome
    {
        std::optional<Matching> matching;
        std::uint64_t nodes_explored = 0;
        bool exhaustive = true;
    };

    enum class ColourOrder
    {
        // Ascending (class size, colour id), fixed before the search starts.
        fail_first,
        // At each node, the unassigned colour with fewest free edges (ties by id).
        dynamic
    };

    struct SolveOptions
    {
        ColourOrder order = ColourOrder::fail_first;
    };

    /**
     * Complete backtracking search for a full rainbow matching.
     *
     * Edges of a colour are tried in sequence order against a per-vertex
     * occupancy set, and a branch is cut as soon as some unassigned colour has
     * every edge blocked. Identical inputs give identical witnesses. A graph
     * with no colours has the empty matching.
     */
    auto find_full_rainbow_matching(const ColouredMultigraph & graph, SolveOptions options = {}) -> SolveOutcome;

    struct MaxRainbow
    {
        int size = 0;
        Matching witness;
        std::uint64_t nodes_explored = 0;
    };

    /// Largest matching with pairwise distinct colours, by branch and bound.
    auto max_rainbow_matching(const ColouredMultigraph & graph) -> MaxRainbow;

    inline constexpr std::uint64_t default_brute_limit = 100'000'000;

    /// Thrown when the brute-force product of colour-class sizes exceeds the guard.
    class GuardExceeded : public std::runtime_error
    {
    public:
        GuardExceeded(std::uint64_t product, std::uint64_t limit);

        auto product() const -> std::uint64_t { return _product; }
        auto limit() const -> std::uint64_t { return _limit; }

    private:
        std::uint64_t _product;
        std::uint64_t _limit;
    };

    struct BruteForceResult
    {
        SolveOutcome outcome;
        // Number of one-edge-per-colour choices that are matchings.
        std::uint64_t count = 0;
        std::uint64_t product = 0;
    };

    /// Product of the colour-class sizes, saturating at UINT64_MAX.
    auto brute_force_product(const ColouredMultigraph & graph) -> std::uint64_t;

    /// Enumerates every one-edge-per-colour choice. The witness is the first valid
    /// choice in lexicographic order of (edge for colour 0, edge for colour 1, ...).
    auto brute_force_full_rainbow(const ColouredMultigraph & graph, std::uint64_t limit = default_brute_limit) -> BruteForceResult;

    /// RAINBOW_BRUTE_LIMIT if set to a positive integer, else default_brute_limit.
    auto brute_limit_from_env() -> std::uint64_t;

    namespace detail
    {
        // Core search over a bare edge list; the hypergraph side reuses it for merged pools.
        auto search_full_rainbow(int vertex_count, int colour_count, std::span<const Edge> edges, SolveOptions options) -> SolveOutcome;
    }
}
