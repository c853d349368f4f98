#include <rainbow/search.hh>
#include <rainbow/solver.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace rainbow
{
    namespace
    {
        constexpr int max_named_colours = 26;

        auto offsets_of(const CycleShape & shape) -> vector<int>
        {
            vector<int> offsets(shape.size() + 1, 0);
            for (size_t j = 0; j < shape.size(); ++j)
                offsets[j + 1] = offsets[j] + shape[j];
            return offsets;
        }

        auto total_of(const CycleShape & shape) -> int
        {
            return std::accumulate(shape.begin(), shape.end(), 0);
        }

        void check_shape(const CycleShape & shape, span<const Colour> colours)
        {
            if (shape.size() > 64)
                throw std::invalid_argument{"at most 64 cycles are supported"};
            for (size_t j = 0; j < shape.size(); ++j) {
                if (shape[j] < 3)
                    throw std::invalid_argument{"cycle lengths must be at least 3"};
                if (j > 0 && shape[j] < shape[j - 1])
                    throw std::invalid_argument{"cycle lengths must be non-decreasing"};
            }
            if (static_cast<int>(colours.size()) != total_of(shape))
                throw std::invalid_argument{"colouring length does not match the shape"};
            for (Colour c : colours)
                if (c < 0 || c >= max_named_colours)
                    throw std::invalid_argument{"colour " + to_string(c) + " outside [0, 26)"};
        }

        auto format_form(const CycleShape & shape, span<const Colour> colours) -> string
        {
            string out;
            for (size_t j = 0; j < shape.size(); ++j) {
                if (j > 0)
                    out += ',';
                out += to_string(shape[j]);
            }
            out += ':';
            int pos = 0;
            for (size_t j = 0; j < shape.size(); ++j) {
                if (j > 0)
                    out += '|';
                for (int p = 0; p < shape[j]; ++p)
                    out += static_cast<char>('a' + colours[pos++]);
            }
            return out;
        }

        // Colour renaming by order of first appearance, built up incrementally.
        struct Renaming
        {
            std::array<int, max_named_colours> to{};
            int next = 0;

            Renaming() { to.fill(-1); }

            auto operator()(Colour c) -> int
            {
                if (to[c] < 0)
                    to[c] = next++;
                return to[c];
            }
        };

        auto source_position(int offset, int length, int rotation, bool reflected, int p) -> int
        {
            return offset + (reflected ? (rotation - p + length) % length : (rotation + p) % length);
        }

        // Looks for a symmetry image of `x` that is lexicographically smaller than `x`.
        struct CanonicalCheck
        {
            const CycleShape & shape;
            const vector<int> & offsets;
            span<const Colour> x;

            auto smaller_image_exists(size_t slot, uint64_t used, const Renaming & renaming) const -> bool
            {
                if (slot == shape.size())
                    return false;
                const int length = shape[slot];
                for (size_t source = 0; source < shape.size(); ++source) {
                    if (shape[source] != length || (used >> source & 1))
                        continue;
                    for (int reflected = 0; reflected < 2; ++reflected)
                        for (int rotation = 0; rotation < length; ++rotation) {
                            Renaming r = renaming;
                            int cmp = 0;
                            for (int p = 0; p < length && cmp == 0; ++p) {
                                int image = r(x[source_position(offsets[source], length, rotation, reflected, p)]);
                                int target = x[offsets[slot] + p];
                                cmp = (image < target) ? -1 : (image > target) ? 1 : 0;
                            }
                            if (cmp < 0)
                                return true;
                            if (cmp == 0 && smaller_image_exists(slot + 1, used | (uint64_t{1} << source), r))
                                return true;
                        }
                }
                return false;
            }
        };

        struct ClassBounds
        {
            int colours;
            int min_count;
            int max_count;
        };

        auto class_bounds(int total, int colours, ClassSize class_size) -> ClassBounds
        {
            if (class_size.value < 1)
                throw std::invalid_argument{"class size must be at least 1"};
            if (colours < 1 || colours > max_named_colours)
                throw std::invalid_argument{"colour count must lie in [1, 26]"};
            if (class_size.exact) {
                if (colours * class_size.value != total)
                    throw std::invalid_argument{to_string(colours) + " classes of size " + to_string(class_size.value)
                        + " cannot cover " + to_string(total) + " edges"};
                return {colours, class_size.value, class_size.value};
            }
            if (colours * class_size.value > total)
                throw std::invalid_argument{to_string(colours) + " classes of size at least " + to_string(class_size.value)
                    + " exceed " + to_string(total) + " edges"};
            return {colours, class_size.value, total - (colours - 1) * class_size.value};
        }

        // Restricted growth strings with per-class bounds, in lexicographic order.
        struct GrowthStrings
        {
            int total;
            ClassBounds bounds;
            vector<Colour> colours;
            vector<int> counts;
            int used = 0;

            GrowthStrings(int total_, ClassBounds b) :
                total(total_),
                bounds(b),
                counts(b.colours, 0)
            {
            }

            auto feasible() const -> bool
            {
                int remaining = total - static_cast<int>(colours.size());
                int needed = (bounds.colours - used) * bounds.min_count;
                for (int c = 0; c < used; ++c)
                    needed += std::max(0, bounds.min_count - counts[c]);
                return needed <= remaining;
            }

            void push(Colour c)
            {
                colours.push_back(c);
                ++counts[c];
                if (c == used)
                    ++used;
            }

            void pop()
            {
                Colour c = colours.back();
                colours.pop_back();
                if (--counts[c] == 0 && c == used - 1)
                    --used;
            }

            void extend(int stop, const std::function<void(const vector<Colour> &)> & visit)
            {
                if (static_cast<int>(colours.size()) == stop) {
                    visit(colours);
                    return;
                }
                for (Colour c = 0; c <= std::min(used, bounds.colours - 1); ++c) {
                    if (counts[c] >= bounds.max_count)
                        continue;
                    push(c);
                    if (feasible())
                        extend(stop, visit);
                    pop();
                }
            }

            void resume(const vector<Colour> & prefix, const std::function<void(const vector<Colour> &)> & visit)
            {
                for (Colour c : prefix)
                    push(c);
                extend(total, visit);
                for (size_t i = 0; i < prefix.size(); ++i)
                    pop();
            }
        };

        constexpr int prefix_depth = 6;

        // Calls `visit` on every orbit representative whose prefix index is `worker` mod `stride`.
        void for_each_representative(const CycleShape & shape, int colours, ClassSize class_size, unsigned worker, unsigned stride,
            const std::function<void(const vector<Colour> &)> & visit)
        {
            const int total = total_of(shape);
            const auto bounds = class_bounds(total, colours, class_size);
            const auto offsets = offsets_of(shape);

            vector<vector<Colour>> prefixes;
            GrowthStrings{total, bounds}.extend(std::min(total, prefix_depth), [&](const vector<Colour> & p) { prefixes.push_back(p); });

            for (size_t i = worker; i < prefixes.size(); i += stride) {
                GrowthStrings{total, bounds}.resume(prefixes[i], [&](const vector<Colour> & x) {
                    CanonicalCheck check{shape, offsets, x};
                    if (! check.smaller_image_exists(0, 0, Renaming{}))
                        visit(x);
                });
            }
        }

        auto cycle_graph(const CycleShape & shape, span<const Colour> colours) -> ColouredMultigraph
        {
            const auto offsets = offsets_of(shape);
            vector<Edge> edges;
            edges.reserve(colours.size());
            int colour_count = 0;
            for (size_t j = 0; j < shape.size(); ++j)
                for (int p = 0; p < shape[j]; ++p) {
                    Colour c = colours[offsets[j] + p];
                    edges.push_back({offsets[j] + p, offsets[j] + (p + 1) % shape[j], c});
                    colour_count = std::max(colour_count, c + 1);
                }
            return ColouredMultigraph{offsets.back(), colour_count, std::move(edges)};
        }
    }

    auto enumerate_two_regular_shapes(int max_edges, bool bipartite) -> vector<CycleShape>
    {
        vector<CycleShape> shapes;
        const int smallest = bipartite ? 4 : 3;
        const int step = bipartite ? 2 : 1;
        CycleShape current;
        std::function<void(int, int)> grow = [&](int least, int remaining) {
            if (! current.empty())
                shapes.push_back(current);
            for (int length = least; length <= remaining; length += step) {
                current.push_back(length);
                grow(length, remaining - length);
                current.pop_back();
            }
        };
        grow(smallest, max_edges);

        std::sort(shapes.begin(), shapes.end(), [](const CycleShape & x, const CycleShape & y) {
            auto tx = total_of(x), ty = total_of(y);
            if (tx != ty)
                return tx < ty;
            if (x.size() != y.size())
                return x.size() < y.size();
            return x < y;
        });
        return shapes;
    }

    auto CycleColouring::graph() const -> ColouredMultigraph
    {
        return cycle_graph(shape, colours);
    }

    auto enumerate_colourings(const CycleShape & shape, int colours, ClassSize class_size) -> vector<CycleColouring>
    {
        check_shape(shape, vector<Colour>(total_of(shape), 0));
        vector<CycleColouring> result;
        for_each_representative(shape, colours, class_size, 0, 1, [&](const vector<Colour> & x) {
            result.push_back({shape, x, format_form(shape, x)});
        });
        return result;
    }

    auto is_canonical_colouring(const CycleShape & shape, span<const Colour> colours) -> bool
    {
        check_shape(shape, colours);
        const auto offsets = offsets_of(shape);
        Renaming r;
        for (Colour c : colours)
            if (r(c) != c)
                return false;
        return ! CanonicalCheck{shape, offsets, colours}.smaller_image_exists(0, 0, Renaming{});
    }

    auto canonical_form(const CycleShape & shape, span<const Colour> colours) -> string
    {
        check_shape(shape, colours);
        const auto offsets = offsets_of(shape);
        vector<Colour> image(colours.size()), best;

        // Every symmetry image, renamed; keep the smallest.
        std::function<void(size_t, uint64_t)> place = [&](size_t slot, uint64_t used) {
            if (slot == shape.size()) {
                Renaming r;
                vector<Colour> renamed(image.size());
                for (size_t i = 0; i < image.size(); ++i)
                    renamed[i] = r(image[i]);
                if (best.empty() || renamed < best)
                    best = std::move(renamed);
                return;
            }
            const int length = shape[slot];
            for (size_t source = 0; source < shape.size(); ++source) {
                if (shape[source] != length || (used >> source & 1))
                    continue;
                for (int reflected = 0; reflected < 2; ++reflected)
                    for (int rotation = 0; rotation < length; ++rotation) {
                        for (int p = 0; p < length; ++p)
                            image[offsets[slot] + p] = colours[source_position(offsets[source], length, rotation, reflected, p)];
                        place(slot + 1, used | (uint64_t{1} << source));
                    }
            }
        };
        place(0, 0);
        return format_form(shape, best);
    }

    namespace
    {
        struct Tally
        {
            uint64_t candidates = 0;
            uint64_t skipped = 0;
            uint64_t filtered_out = 0;
            uint64_t with_rainbow = 0;
            vector<SearchResult> results;
        };

        void examine(const SearchSpec & spec, const HuntOptions & options, const CycleShape & shape, const vector<Colour> & colouring, Tally & tally)
        {
            ++tally.candidates;
            auto form = format_form(shape, colouring);
            if (options.skip.contains(form)) {
                ++tally.skipped;
                return;
            }

            auto graph = cycle_graph(shape, colouring);
            auto stats = degree_stats(from_coloured_graph(graph).hypergraph);
            const bool bipartite = bipartition(graph).has_value();
            if ((spec.require_bipartite && ! bipartite)
                || (spec.require_delta_gap && ! (stats.delta_v1 > stats.delta_max_rest))
                || (spec.require_double_gap && ! (stats.delta_v1 >= 2 * stats.delta_max_rest))) {
                ++tally.filtered_out;
                return;
            }

            auto outcome = find_full_rainbow_matching(graph);
            if (outcome.matching) {
                ++tally.with_rainbow;
                return;
            }

            auto brute = brute_force_full_rainbow(graph, brute_limit_from_env());
            if (brute.count != 0)
                throw std::logic_error{"brute force found a full rainbow matching the solver missed: " + form};
            if (bipartite && stats.delta_v1 >= 2 * stats.delta_max_rest)
                throw std::logic_error{"instance " + form + " would violate the 2-Delta theorem"};

            tally.results.push_back({std::move(graph), shape, colouring, stats,
                Certificate{brute.product, brute.count, outcome.nodes_explored}, std::move(form)});
        }
    }

    auto hunt(const SearchSpec & spec, const HuntOptions & options) -> HuntReport
    {
        if (spec.max_edges < 1)
            throw std::invalid_argument{"max_edges must be at least 1"};
        if (spec.regularity != 2)
            throw UnsupportedSearch{"only 2-regular search spaces are supported"};
        if (spec.class_size.value < 1)
            throw std::invalid_argument{"class size must be at least 1"};
        const unsigned jobs = std::max(1u, options.jobs);

        HuntReport report;
        auto shapes = enumerate_two_regular_shapes(spec.max_edges, spec.require_bipartite);
        for (size_t si = 0; si < shapes.size(); ++si) {
            const auto & shape = shapes[si];
            const int total = total_of(shape);
            const int s = spec.class_size.value;

            vector<int> colour_counts;
            if (spec.class_size.exact) {
                if (total % s == 0)
                    colour_counts.push_back(total / s);
            }
            else
                for (int k = 1; k * s <= total; ++k)
                    colour_counts.push_back(k);
            std::erase_if(colour_counts, [](int k) { return k > max_named_colours; });
            if (colour_counts.empty())
                continue;
            report.shapes.push_back(shape);

            vector<Tally> tallies(jobs);
            {
                vector<std::jthread> workers;
                vector<std::exception_ptr> failures(jobs);
                for (unsigned w = 0; w < jobs; ++w)
                    workers.emplace_back([&, w] {
                        try {
                            for (int k : colour_counts)
                                for_each_representative(shape, k, spec.class_size, w, jobs, [&](const vector<Colour> & x) {
                                    examine(spec, options, shape, x, tallies[w]);
                                });
                        }
                        catch (...) {
                            failures[w] = std::current_exception();
                        }
                    });
                workers.clear();
                for (auto & f : failures)
                    if (f)
                        std::rethrow_exception(f);
            }

            vector<SearchResult> found;
            for (auto & t : tallies) {
                report.candidates_examined += t.candidates;
                report.skipped += t.skipped;
                report.filtered_out += t.filtered_out;
                report.with_rainbow += t.with_rainbow;
                std::move(t.results.begin(), t.results.end(), std::back_inserter(found));
            }
            std::sort(found.begin(), found.end(), [](const SearchResult & x, const SearchResult & y) { return x.colouring < y.colouring; });
            std::move(found.begin(), found.end(), std::back_inserter(report.results));

            if (spec.stop_after && report.results.size() >= *spec.stop_after) {
                if (report.results.size() > *spec.stop_after || si + 1 < shapes.size())
                    report.exhaustive = false;
                report.results.resize(*spec.stop_after);
                break;
            }
        }
        return report;
    }
}
