#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rainbow/hypergraph.hh>
#include <rainbow/search.hh>
#include <rainbow/solver.hh>

#include <algorithm>
#include <numeric>
#include <set>

using namespace rainbow;
using std::set;
using std::size_t;
using std::vector;

namespace
{
    // Orbit count by brute force: every word with the given class sizes, every
    // dihedral image per cycle, every permutation of equal cycles, every colour permutation.
    auto naive_orbit_count(const CycleShape & shape, int colours, int class_size) -> size_t
    {
        const int total = std::accumulate(shape.begin(), shape.end(), 0);
        vector<int> offsets{0};
        for (int len : shape)
            offsets.push_back(offsets.back() + len);

        vector<Colour> word;
        for (int c = 0; c < colours; ++c)
            word.insert(word.end(), class_size, c);
        REQUIRE(static_cast<int>(word.size()) == total);

        vector<int> cycle_order(shape.size());
        std::iota(cycle_order.begin(), cycle_order.end(), 0);

        set<vector<Colour>> orbit_keys;
        std::sort(word.begin(), word.end());
        do {
            vector<Colour> key;
            vector<int> perm_cycles = cycle_order;
            do {
                bool lengths_kept = true;
                for (size_t j = 0; j < shape.size(); ++j)
                    lengths_kept = lengths_kept && shape[perm_cycles[j]] == shape[j];
                if (! lengths_kept)
                    continue;
                // Mixed-radix counter over (rotation, reflection) per cycle.
                vector<int> transform(shape.size(), 0);
                while (true) {
                    vector<Colour> image(total);
                    for (size_t j = 0; j < shape.size(); ++j) {
                        int len = shape[j], rot = transform[j] % len;
                        bool refl = transform[j] >= len;
                        for (int p = 0; p < len; ++p) {
                            int q = refl ? (rot - p + len) % len : (rot + p) % len;
                            image[offsets[j] + p] = word[offsets[perm_cycles[j]] + q];
                        }
                    }
                    vector<Colour> relabel(colours);
                    std::iota(relabel.begin(), relabel.end(), 0);
                    do {
                        vector<Colour> renamed(total);
                        for (int i = 0; i < total; ++i)
                            renamed[i] = relabel[image[i]];
                        if (key.empty() || renamed < key)
                            key = renamed;
                    } while (std::next_permutation(relabel.begin(), relabel.end()));

                    size_t j = 0;
                    for (; j < shape.size(); ++j) {
                        if (++transform[j] < 2 * shape[j])
                            break;
                        transform[j] = 0;
                    }
                    if (j == shape.size())
                        break;
                }
            } while (std::next_permutation(perm_cycles.begin(), perm_cycles.end()));
            orbit_keys.insert(key);
        } while (std::next_permutation(word.begin(), word.end()));
        return orbit_keys.size();
    }

    auto forms(const vector<CycleColouring> & cs) -> vector<std::string>
    {
        vector<std::string> out;
        for (const auto & c : cs)
            out.push_back(c.canonical_form);
        return out;
    }
}

TEST_CASE("enumerate_two_regular_shapes")
{
    CHECK(enumerate_two_regular_shapes(8, true) == vector<CycleShape>{{4}, {6}, {8}, {4, 4}});
    CHECK(enumerate_two_regular_shapes(5, true) == vector<CycleShape>{{4}});
    CHECK(enumerate_two_regular_shapes(6, false) == vector<CycleShape>{{3}, {4}, {5}, {6}, {3, 3}});
    CHECK(enumerate_two_regular_shapes(2, false).empty());
    CHECK(enumerate_two_regular_shapes(12, true)
        == vector<CycleShape>{{4}, {6}, {8}, {4, 4}, {10}, {4, 6}, {12}, {4, 8}, {6, 6}, {4, 4, 4}});
}

TEST_CASE("enumerate_colourings examples")
{
    auto two = enumerate_colourings({4}, 2, {2, true});
    CHECK(forms(two) == vector<std::string>{"4:aabb", "4:abab"});

    CHECK(forms(enumerate_colourings({4}, 1, {4, true})) == vector<std::string>{"4:aaaa"});

    // Renaming colours makes every all-distinct colouring of one cycle equivalent.
    CHECK(forms(enumerate_colourings({4}, 4, {1, true})) == vector<std::string>{"4:abcd"});
    CHECK(forms(enumerate_colourings({6}, 6, {1, true})) == vector<std::string>{"6:abcdef"});

    CHECK_THROWS_AS(enumerate_colourings({4}, 3, {2, true}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_colourings({4}, 3, {2, false}), std::invalid_argument);
}

TEST_CASE("orbit counts match a naive symmetry oracle")
{
    struct Case
    {
        CycleShape shape;
        int colours, class_size;
    };
    for (const auto & c : vector<Case>{{{4}, 2, 2}, {{4}, 4, 1}, {{4}, 1, 4}, {{6}, 2, 3}, {{6}, 3, 2}, {{3, 3}, 3, 2},
             {{4, 4}, 2, 4}, {{4, 4}, 4, 2}, {{3, 5}, 2, 4}, {{4, 6}, 2, 5}, {{3, 3, 3}, 3, 3}}) {
        CAPTURE(c.shape.size());
        CAPTURE(c.colours);
        CHECK(enumerate_colourings(c.shape, c.colours, {c.class_size, true}).size()
            == naive_orbit_count(c.shape, c.colours, c.class_size));
    }
}

TEST_CASE("minimum class sizes")
{
    // Three colours on a 5-cycle with every class >= 1: class sizes (1,1,3), (1,2,2) and permutations.
    auto cs = enumerate_colourings({5}, 3, {1, false});
    for (const auto & c : cs) {
        vector<int> count(3, 0);
        for (Colour x : c.colours)
            ++count[x];
        CHECK(*std::min_element(count.begin(), count.end()) >= 1);
    }
    // Splits (3,1,1): the two singletons adjacent or not, 2 orbits. Splits (2,2,1): the
    // path opposite the singleton reads aabb, abab or abba, 3 orbits.
    CHECK(cs.size() == 5);
}

TEST_CASE("representatives are canonical and recovered from any image")
{
    auto cs = enumerate_colourings({4, 4, 4}, 4, {3, true});
    CHECK(cs.size() > 10);
    set<std::string> seen;
    for (const auto & c : cs) {
        CHECK(is_canonical_colouring(c.shape, c.colours));
        CHECK(canonical_form(c.shape, c.colours) == c.canonical_form);
        CHECK(seen.insert(c.canonical_form).second);

        // Rotate the middle cycle, reflect the last, swap the first two, rename colours.
        vector<Colour> x = c.colours, y(12);
        for (int p = 0; p < 4; ++p) {
            y[p] = x[4 + (p + 1) % 4];
            y[4 + p] = x[p];
            y[8 + p] = x[8 + (4 - p) % 4];
        }
        for (auto & v : y)
            v = 3 - v;
        CHECK(canonical_form(c.shape, y) == c.canonical_form);
    }
    CHECK_FALSE(is_canonical_colouring({4}, vector<Colour>{0, 1, 1, 0}));
    CHECK_FALSE(is_canonical_colouring({4}, vector<Colour>{1, 0, 1, 0}));
    CHECK(is_canonical_colouring({4}, vector<Colour>{0, 1, 0, 1}));
}

TEST_CASE("colouring graphs are 2-regular unions of cycles")
{
    CycleColouring c{{4, 6}, {0, 1, 0, 1, 0, 0, 1, 1, 0, 1}, ""};
    auto g = c.graph();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge(3) == Edge{3, 0, 1});
    CHECK(g.edge(9) == Edge{9, 4, 1});
    for (int d : vertex_degrees(g))
        CHECK(d == 2);
}

namespace
{
    auto colour_classes(const ColouredMultigraph & g) -> vector<int>
    {
        vector<int> count(g.colour_count(), 0);
        for (const auto & e : g.edges())
            ++count[e.colour];
        return count;
    }

    void recheck(const SearchSpec & spec, const SearchResult & r)
    {
        const auto & g = r.instance;
        for (int d : vertex_degrees(g))
            CHECK(d == 2);
        CHECK(static_cast<int>(g.edge_count()) <= spec.max_edges);
        if (spec.require_bipartite)
            CHECK(bipartition(g).has_value());
        for (int n : colour_classes(g)) {
            if (spec.class_size.exact)
                CHECK(n == spec.class_size.value);
            else
                CHECK(n >= spec.class_size.value);
        }
        auto brute = brute_force_full_rainbow(g);
        CHECK(brute.count == 0);
        CHECK(r.certificate.count == 0);
        CHECK(r.certificate.product == brute.product);
        auto stats = degree_stats(from_coloured_graph(g).hypergraph);
        CHECK(stats == r.stats);
        CHECK(stats.delta_v1 < 2 * stats.delta_max_rest);
        if (spec.require_delta_gap)
            CHECK(stats.delta_v1 > stats.delta_max_rest);
        CHECK(canonical_form(r.shape, r.colouring) == r.canonical_form);
    }
}

TEST_CASE("hunt on a single 4-cycle finds exactly abab")
{
    SearchSpec spec;
    spec.max_edges = 4;
    spec.require_bipartite = true;
    spec.class_size = {2, true};
    auto report = hunt(spec);
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].canonical_form == "4:abab");
    CHECK(report.results[0].stats == DegreeStats{2, 2});
    CHECK(report.candidates_examined == 2);
    CHECK(report.with_rainbow == 1);
    CHECK(report.exhaustive);
    recheck(spec, report.results[0]);

    // The other orbit, aabb, has a full rainbow matching.
    auto orbits = enumerate_colourings({4}, 2, {2, true});
    REQUIRE(orbits[0].canonical_form == "4:aabb");
    auto witness = find_full_rainbow_matching(orbits[0].graph()).matching;
    REQUIRE(witness);
    CHECK(is_full_rainbow(orbits[0].graph(), witness->edge_indices));
}

TEST_CASE("hunt for a 2-regular instance with a degree gap")
{
    SearchSpec spec;
    spec.max_edges = 12;
    spec.require_bipartite = true;
    spec.class_size = {3, true};
    spec.require_delta_gap = true;
    auto report = hunt(spec);
    REQUIRE_FALSE(report.results.empty());
    set<std::string> seen;
    for (const auto & r : report.results) {
        recheck(spec, r);
        CHECK(r.stats == DegreeStats{3, 2});
        CHECK(seen.insert(r.canonical_form).second);
    }
    CHECK(report.results.front().canonical_form == "4,4,4:abab|acbd|cdcd");

    auto parallel = hunt(spec, {4, {}});
    REQUIRE(parallel.results.size() == report.results.size());
    for (size_t i = 0; i < report.results.size(); ++i)
        CHECK(parallel.results[i].canonical_form == report.results[i].canonical_form);
    CHECK(parallel.candidates_examined == report.candidates_examined);
}

TEST_CASE("no instance meets the doubled degree bound")
{
    SearchSpec spec;
    spec.max_edges = 12;
    spec.require_bipartite = true;
    spec.class_size = {4, false};
    spec.require_double_gap = true;
    auto report = hunt(spec);
    CHECK(report.results.empty());
    CHECK(report.candidates_examined > 0);
    CHECK(report.exhaustive);
}

TEST_CASE("minimum class sizes without bipartiteness")
{
    SearchSpec spec;
    spec.max_edges = 7;
    spec.class_size = {2, false};
    auto report = hunt(spec);
    set<std::string> seen;
    for (const auto & r : report.results) {
        recheck(spec, r);
        CHECK(seen.insert(r.canonical_form).second);
    }
    // One colour always has a full rainbow matching, so monochromatic cycles never appear.
    for (const auto & r : report.results)
        CHECK(r.instance.colour_count() >= 2);
    CHECK(std::any_of(report.results.begin(), report.results.end(), [](const SearchResult & r) {
        return r.canonical_form == "4:abab";
    }));
    CHECK_FALSE(std::any_of(report.results.begin(), report.results.end(), [](const SearchResult & r) {
        return r.canonical_form == "4:aabb";
    }));
}

TEST_CASE("resume skips known forms and stop_after truncates")
{
    SearchSpec spec;
    spec.max_edges = 12;
    spec.require_bipartite = true;
    spec.class_size = {3, true};
    spec.require_delta_gap = true;
    auto full = hunt(spec);

    HuntOptions options;
    options.skip.insert(full.results.front().canonical_form);
    auto resumed = hunt(spec, options);
    CHECK(resumed.skipped == 1);
    CHECK(resumed.results.size() + 1 == full.results.size());

    SearchSpec small;
    small.max_edges = 8;
    small.require_bipartite = true;
    small.class_size = {2, true};
    auto all = hunt(small);
    REQUIRE(all.results.size() >= 2);
    small.stop_after = 1;
    auto first = hunt(small);
    REQUIRE(first.results.size() == 1);
    CHECK(first.results[0].canonical_form == all.results[0].canonical_form);
    CHECK_FALSE(first.exhaustive);
}

TEST_CASE("hunt rejects unsupported spaces")
{
    SearchSpec spec;
    spec.max_edges = 6;
    spec.regularity = 3;
    CHECK_THROWS_AS(hunt(spec), UnsupportedSearch);
    spec.regularity = std::nullopt;
    CHECK_THROWS_AS(hunt(spec), UnsupportedSearch);
    spec.regularity = 2;
    spec.max_edges = 0;
    CHECK_THROWS_AS(hunt(spec), std::invalid_argument);
}
