#pragma once

#include <rainbow/graph.hh>
#include <rainbow/hypergraph.hh>
#include <rainbow/solver.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rainbow
{
    /**
     * m disjoint double stars. Component i has centres i*(m+2) and i*(m+2)+1, then
     * m/2 leaves on the first centre followed by m/2 leaves on the second. The
     * central edges share colour 0; the leaf edges of component i all get colour
     * i+1. Edge order per component: central edge, first-centre leaves,
     * second-centre leaves.
     *
     * Every colour has multiplicity m and the maximum degree is m/2+1, yet no full
     * rainbow matching exists. Throws std::invalid_argument unless m is even and
     * at least 2.
     */
    auto double_star_family(int m) -> ColouredMultigraph;

    /// The hypergraph of double_star_family(m).
    auto hypergraph_family(int m) -> TripartiteHypergraph;

    /// double_star_family(2c+2): each colour is on exactly max_degree + c edges.
    auto constant_defeater(int c) -> ColouredMultigraph;

    enum class Statement
    {
        // delta(V1) > Delta(V2 u V3) on a tripartite hypergraph implies a V1-matching.
        ab_conj_2_5,
        // Bipartite, every colour on >= Delta(G)+1 edges implies a full rainbow matching.
        conj1_bipartite,
        // delta(V1) >= Delta(V2 u V3) + 2 implies a V1-matching.
        abchs_conj_6_1,
        // Any graph, every colour on >= Delta(G)+2 edges implies a full rainbow matching.
        abchs_conj_5_4_6_2,
        // delta(V1) >= 2 Delta(V2 u V3) implies a V1-matching. A theorem.
        ab_thm_2_6,
    };

    inline constexpr std::array all_statements{Statement::ab_conj_2_5, Statement::conj1_bipartite,
        Statement::abchs_conj_6_1, Statement::abchs_conj_5_4_6_2, Statement::ab_thm_2_6};

    auto statement_id(Statement s) -> std::string_view;
    auto statement_text(Statement s) -> std::string_view;

    struct Verdict
    {
        Statement statement;
        bool hypothesis_holds = false;
        bool conclusion_holds = false;
        bool is_counterexample = false;
    };

    struct ConjectureReport
    {
        int max_degree = 0;
        int min_multiplicity = 0;
        int delta_v1 = 0;
        int delta_max_rest = 0;
        bool bipartite = false;
        bool matching_exists = false;
        std::optional<Matching> witness;
        std::uint64_t nodes_explored = 0;
        // Set when the brute-force oracle was run as a cross-check.
        std::optional<std::uint64_t> brute_force_count;
        std::array<Verdict, all_statements.size()> verdicts{};

        auto verdict(Statement s) const -> const Verdict &;
    };

    /// Text recorded in every report for the generalised conjecture that is not evaluated.
    inline constexpr std::string_view ab_conj_2_9_note = "AB-2.9: not implemented; statement not reproduced in the source";

    struct ReportOptions
    {
        // Cross-check the backtracking answer with brute force when the product fits under the limit.
        bool cross_check = true;
        std::uint64_t brute_limit = default_brute_limit;
    };

    /**
     * Evaluates every statement on one graph. Hypotheses come from degree and
     * colour statistics; the conclusion of each is the solver's existence answer.
     * Statements about tripartite hypergraphs only apply to bipartite graphs.
     * Throws std::logic_error if the theorem is ever reported violated or the
     * cross-check disagrees, either of which means a solver bug.
     */
    auto conjecture_report(const ColouredMultigraph & graph, ReportOptions options = {}) -> ConjectureReport;
}
