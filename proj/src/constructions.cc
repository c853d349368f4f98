#include <rainbow/constructions.hh>

#include <stdexcept>
#include <string>
#include <vector>

using std::string_view;
using std::vector;

namespace rainbow
{
    auto double_star_family(int m) -> ColouredMultigraph
    {
        if (m < 2 || m % 2 != 0)
            throw std::invalid_argument{"double star family needs an even m >= 2, got " + std::to_string(m)};

        const int half = m / 2;
        vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m) * (m + 1));
        for (int i = 0; i < m; ++i) {
            const Vertex first = i * (m + 2), second = first + 1;
            edges.push_back({first, second, 0});
            for (int j = 0; j < half; ++j)
                edges.push_back({first, second + 1 + j, i + 1});
            for (int j = 0; j < half; ++j)
                edges.push_back({second, second + 1 + half + j, i + 1});
        }
        return ColouredMultigraph{m * (m + 2), m + 1, std::move(edges)};
    }

    auto hypergraph_family(int m) -> TripartiteHypergraph
    {
        return from_coloured_graph(double_star_family(m)).hypergraph;
    }

    auto constant_defeater(int c) -> ColouredMultigraph
    {
        if (c < 1)
            throw std::invalid_argument{"constant defeater needs c >= 1, got " + std::to_string(c)};
        return double_star_family(2 * c + 2);
    }

    auto statement_id(Statement s) -> string_view
    {
        switch (s) {
        case Statement::ab_conj_2_5: return "AB-2.5/Conj2";
        case Statement::conj1_bipartite: return "Conj1-bipartite";
        case Statement::abchs_conj_6_1: return "ABCHS-6.1";
        case Statement::abchs_conj_5_4_6_2: return "ABCHS-5.4/6.2";
        case Statement::ab_thm_2_6: return "AB-Thm-2.6";
        }
        throw std::logic_error{"unknown statement"};
    }

    auto statement_text(Statement s) -> string_view
    {
        switch (s) {
        case Statement::ab_conj_2_5: return "tripartite, delta(V1) > Delta(V2+V3) => V1-matching";
        case Statement::conj1_bipartite: return "bipartite, every colour on >= Delta(G)+1 edges => full rainbow matching";
        case Statement::abchs_conj_6_1: return "tripartite, delta(V1) >= Delta(V2+V3)+2 => V1-matching";
        case Statement::abchs_conj_5_4_6_2: return "any graph, every colour on >= Delta(G)+2 edges => full rainbow matching";
        case Statement::ab_thm_2_6: return "tripartite, delta(V1) >= 2*Delta(V2+V3) => V1-matching (theorem)";
        }
        throw std::logic_error{"unknown statement"};
    }

    auto ConjectureReport::verdict(Statement s) const -> const Verdict &
    {
        for (const auto & v : verdicts)
            if (v.statement == s)
                return v;
        throw std::logic_error{"statement missing from report"};
    }

    auto conjecture_report(const ColouredMultigraph & graph, ReportOptions options) -> ConjectureReport
    {
        ConjectureReport report;
        report.max_degree = max_degree(graph);
        report.min_multiplicity = colour_stats(graph).minimum;
        report.bipartite = bipartition(graph).has_value();
        auto stats = degree_stats(from_coloured_graph(graph).hypergraph);
        report.delta_v1 = stats.delta_v1;
        report.delta_max_rest = stats.delta_max_rest;

        auto outcome = find_full_rainbow_matching(graph);
        report.matching_exists = outcome.matching.has_value();
        report.witness = outcome.matching;
        report.nodes_explored = outcome.nodes_explored;

        if (options.cross_check && brute_force_product(graph) <= options.brute_limit) {
            auto brute = brute_force_full_rainbow(graph, options.brute_limit);
            if ((brute.count > 0) != report.matching_exists)
                throw std::logic_error{"backtracking and brute force disagree on existence"};
            report.brute_force_count = brute.count;
        }

        // Minimum over an empty colour set is vacuous, so "every colour" bounds hold.
        const bool no_colours = graph.colour_count() == 0;
        auto every_colour_at_least = [&](int bound) { return no_colours || report.min_multiplicity >= bound; };

        for (std::size_t i = 0; i < all_statements.size(); ++i) {
            Statement s = all_statements[i];
            bool hypothesis = false;
            switch (s) {
            case Statement::ab_conj_2_5:
                hypothesis = report.bipartite && (no_colours || report.delta_v1 > report.delta_max_rest);
                break;
            case Statement::conj1_bipartite:
                hypothesis = report.bipartite && every_colour_at_least(report.max_degree + 1);
                break;
            case Statement::abchs_conj_6_1:
                hypothesis = report.bipartite && (no_colours || report.delta_v1 >= report.delta_max_rest + 2);
                break;
            case Statement::abchs_conj_5_4_6_2:
                hypothesis = every_colour_at_least(report.max_degree + 2);
                break;
            case Statement::ab_thm_2_6:
                hypothesis = report.bipartite && (no_colours || report.delta_v1 >= 2 * report.delta_max_rest);
                break;
            }
            Verdict & v = report.verdicts[i];
            v.statement = s;
            v.hypothesis_holds = hypothesis;
            v.conclusion_holds = report.matching_exists;
            v.is_counterexample = hypothesis && ! report.matching_exists;
        }

        if (report.verdict(Statement::ab_thm_2_6).is_counterexample)
            throw std::logic_error{"solver reports a violation of a proved theorem"};
        return report;
    }
}
