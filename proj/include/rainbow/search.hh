#pragma once

#include <rainbow/graph.hh>
#include <rainbow/hypergraph.hh>

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace rainbow
{
    /// Cycle lengths of a 2-regular graph, non-decreasing.
    using CycleShape = std::vector<int>;

    /**
     * Every multiset of cycle lengths (each >= 3, and even when `bipartite`) with
     * total at most `max_edges`, ordered by total, then number of cycles, then
     * lexicographically.
     */
    auto enumerate_two_regular_shapes(int max_edges, bool bipartite) -> std::vector<CycleShape>;

    struct ClassSize
    {
        int value = 1;
        // When false, `value` is a lower bound on every class size.
        bool exact = true;
    };

    /// A colouring of the edge positions of a union of cycles. Position p of cycle j
    /// is the edge from its p-th to its (p+1)-th vertex.
    struct CycleColouring
    {
        CycleShape shape;
        std::vector<Colour> colours;
        std::string canonical_form;

        /// Vertices numbered cycle by cycle; edge order follows positions.
        auto graph() const -> ColouredMultigraph;
    };

    /**
     * One representative per orbit of colourings under rotation and reflection of
     * each cycle, permutation of equal-length cycles, and renaming of colours. The
     * representative is the lexicographically smallest colouring in its orbit once
     * colours are renamed by first appearance. Orbits come out in lexicographic
     * order of their representatives.
     *
     * Throws std::invalid_argument if the class sizes cannot add up to the total.
     */
    auto enumerate_colourings(const CycleShape & shape, int colours, ClassSize class_size) -> std::vector<CycleColouring>;

    /// True iff `colours` is the minimal representative of its orbit.
    auto is_canonical_colouring(const CycleShape & shape, std::span<const Colour> colours) -> bool;

    /// Minimal representative of the orbit of any colouring, as text, e.g. "4:abab".
    auto canonical_form(const CycleShape & shape, std::span<const Colour> colours) -> std::string;

    struct SearchSpec
    {
        int max_edges = 1;
        // Only 2 is supported; the hunter enumerates unions of cycles.
        std::optional<int> regularity = 2;
        bool require_bipartite = false;
        ClassSize class_size;
        // Keep only instances with delta(V1) > Delta(V2 u V3).
        bool require_delta_gap = false;
        // Keep only instances with delta(V1) >= 2 Delta(V2 u V3).
        bool require_double_gap = false;
        // Stop after the cycle shape during which this many results were reached.
        std::optional<std::size_t> stop_after;
    };

    /// Thrown for a search space the hunter cannot enumerate.
    class UnsupportedSearch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct Certificate
    {
        std::uint64_t product = 0;
        std::uint64_t count = 0;
        std::uint64_t nodes_explored = 0;
    };

    /// An instance with no full rainbow matching, certified by brute force.
    struct SearchResult
    {
        ColouredMultigraph instance;
        CycleShape shape;
        std::vector<Colour> colouring;
        DegreeStats stats;
        Certificate certificate;
        std::string canonical_form;
    };

    struct HuntOptions
    {
        unsigned jobs = 1;
        // Canonical forms already certified by an earlier run.
        std::set<std::string> skip;
    };

    struct HuntReport
    {
        std::vector<SearchResult> results;
        // Orbits enumerated, including those filtered out or skipped.
        std::uint64_t candidates_examined = 0;
        std::uint64_t skipped = 0;
        std::uint64_t filtered_out = 0;
        std::uint64_t with_rainbow = 0;
        std::vector<CycleShape> shapes;
        // False only when stop_after cut the enumeration short.
        bool exhaustive = true;
    };

    /**
     * Walks shapes in search order and, for each, every colouring orbit with
     * feasible class sizes. Orbits passing the statistics filters are solved;
     * those without a full rainbow matching are re-certified by brute force and
     * returned in canonical order. The output does not depend on `jobs`.
     */
    auto hunt(const SearchSpec & spec, const HuntOptions & options = {}) -> HuntReport;
}
