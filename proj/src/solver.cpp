#include <plabel/solver.hpp>

#include <plabel/errors.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

namespace plabel {

namespace {

class Search {
public:
    Search(const std::vector<std::vector<Conflict>> & conflicts, const std::vector<std::vector<Color>> & domains)
        : conflicts_(conflicts), values_(domains)
    {
        const auto n = values_.size();
        alive_.resize(n);
        remaining_.resize(n);
        assigned_.assign(n, std::nullopt);
        for (std::size_t i = 0; i < n; ++i) {
            std::sort(values_[i].begin(), values_[i].end());
            values_[i].erase(std::unique(values_[i].begin(), values_[i].end()), values_[i].end());
            alive_[i].assign(values_[i].size(), 1);
            remaining_[i] = static_cast<int>(values_[i].size());
        }
    }

    std::optional<std::vector<Color>> run(std::uint64_t & nodes)
    {
        for (int r : remaining_)
            if (r == 0)
                return std::nullopt;
        if (! expand(0, nodes))
            return std::nullopt;
        std::vector<Color> out;
        out.reserve(assigned_.size());
        for (const auto & a : assigned_)
            out.push_back(*a);
        return out;
    }

private:
    struct Removal {
        int var;
        int slot;
    };

    int choose() const
    {
        int best = -1;
        for (int i = 0; i < static_cast<int>(assigned_.size()); ++i)
            if (! assigned_[i] && (best < 0 || remaining_[i] < remaining_[best]))
                best = i;
        return best;
    }

    // Prunes values of unassigned neighbours too close to `color`; false on a wipe-out.
    bool propagate(int var, Color color)
    {
        for (const auto & [other, sep] : conflicts_[var]) {
            if (assigned_[other])
                continue;
            const auto & vals = values_[other];
            auto lo = std::lower_bound(vals.begin(), vals.end(), color - (sep - 1));
            for (auto it = lo; it != vals.end() && *it <= color + (sep - 1); ++it) {
                const int slot = static_cast<int>(it - vals.begin());
                if (alive_[other][slot]) {
                    alive_[other][slot] = 0;
                    --remaining_[other];
                    trail_.push_back({other, slot});
                }
            }
            if (remaining_[other] == 0)
                return false;
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const auto r = trail_.back();
            trail_.pop_back();
            alive_[r.var][r.slot] = 1;
            ++remaining_[r.var];
        }
    }

    bool expand(std::size_t depth, std::uint64_t & nodes)
    {
        ++nodes;
        if (depth == assigned_.size())
            return true;
        const int var = choose();
        for (std::size_t slot = 0; slot < values_[var].size(); ++slot) {
            if (! alive_[var][slot])
                continue;
            const Color color = values_[var][slot];
            const auto mark = trail_.size();
            assigned_[var] = color;
            if (propagate(var, color) && expand(depth + 1, nodes))
                return true;
            undo(mark);
            assigned_[var].reset();
        }
        return false;
    }

    const std::vector<std::vector<Conflict>> & conflicts_;
    std::vector<std::vector<Color>> values_;
    std::vector<std::vector<char>> alive_;
    std::vector<int> remaining_;
    std::vector<std::optional<Color>> assigned_;
    std::vector<Removal> trail_;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::optional<std::vector<Color>> solve_network(const std::vector<std::vector<Conflict>> & conflicts,
        const std::vector<std::vector<Color>> & domains, std::uint64_t & nodes)
{
    if (conflicts.size() != domains.size())
        throw std::invalid_argument("solve_network: conflicts and domains differ in size");
    Search search(conflicts, domains);
    return search.run(nodes);
}

SolveResult solve_list(const Graph & g, int p, const ListAssignment & lists, const TotalLabelling & fixed)
{
    if (p < 0)
        throw std::invalid_argument("p must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    const auto elems = elements(g);
    std::vector<std::vector<Color>> domains(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (auto c = fixed.get(elems[i]))
            domains[i] = {*c};
        else
            domains[i] = lists.at(elems[i]);
    }
    for (const auto & [x, c] : fixed)
        if (! contains(g, x))
            throw DomainError("fixed element " + x.key() + " not in graph");

    SolveResult result;
    auto values = solve_network(total_conflicts(g, p), domains, result.stats.nodes);
    if (values) {
        TotalLabelling c;
        for (std::size_t i = 0; i < elems.size(); ++i)
            c.set(elems[i], (*values)[i]);
        // soundness re-check; pinned elements are exempt from the list test
        TotalLabelling free_part = c;
        for (const auto & [x, color] : fixed)
            free_part.erase(x);
        if (! is_valid(g, p, c, true) || ! respects_lists(free_part, lists))
            throw std::logic_error("solve_list produced a labelling that fails validation");
        result.labelling = std::move(c);
    }
    result.stats.seconds = seconds_since(start);
    return result;
}

SolveResult solve_span(const Graph & g, int p, int k)
{
    if (k < 0)
        throw std::invalid_argument("span bound k must be non-negative");
    return solve_list(g, p, ListAssignment::full(g, 0, k));
}

int span_lower_bound(const Graph & g, int p)
{
    if (g.size() == 0)
        return 0;
    // a max-degree vertex sees Delta pairwise distinct edge colors, all at
    // distance >= p from its own color
    if (p >= 1)
        return g.max_degree() + p - 1;
    return g.max_degree() - 1;
}

namespace {

template <typename Solve>
SpanOptimum scan_up(int start, int cap, Solve solve)
{
    SpanOptimum best;
    for (int k = start;; ++k) {
        auto r = solve(k);
        best.nodes += r.stats.nodes;
        if (r.labelled()) {
            best.lambda = k;
            best.labelling = std::move(*r.labelling);
            return best;
        }
        best.infeasible.push_back(k);
        if (k >= cap)
            throw TheoremViolation("span search passed its proven upper bound " + std::to_string(cap));
    }
}

} // namespace

SpanOptimum min_span(const Graph & g, int p)
{
    if (g.order() == 0)
        throw std::invalid_argument("min_span of the empty graph");
    // lambda <= 2*Delta + p - 1 for p >= 1; Delta + 1 colors suffice per class when p = 0
    return scan_up(span_lower_bound(g, p), 2 * g.max_degree() + std::max(p, 1),
            [&](int k) { return solve_span(g, p, k); });
}

int lambda(const Graph & g, int p)
{
    return min_span(g, p).lambda;
}

int chi(const Graph & g, int p)
{
    return lambda(g, p) + 1;
}

SolveResult lp1_solve_span(const Graph & g, int p, int k)
{
    if (k < 0 || p < 0)
        throw std::invalid_argument("lp1_solve_span: negative parameter");
    const auto start = std::chrono::steady_clock::now();
    std::vector<Color> range;
    for (Color c = 0; c <= k; ++c)
        range.push_back(c);
    std::vector<std::vector<Color>> domains(static_cast<std::size_t>(g.order()), range);

    SolveResult result;
    auto values = solve_network(lp1_conflicts(g, p), domains, result.stats.nodes);
    if (values) {
        TotalLabelling c;
        for (Vertex v = 0; v < g.order(); ++v)
            c.set(Element::vertex(v), (*values)[v]);
        if (! lp1_is_valid(g, p, c))
            throw std::logic_error("lp1_solve_span produced an invalid labelling");
        result.labelling = std::move(c);
    }
    result.stats.seconds = seconds_since(start);
    return result;
}

SpanOptimum lp1_min_span(const Graph & g, int p)
{
    if (g.order() == 0)
        throw std::invalid_argument("lp1_min_span of the empty graph");
    // neighbours of a vertex are pairwise distinct once p >= 1; for p = 0
    // adjacent neighbours may share a label
    const int start = p >= 1 && g.size() > 0 ? g.max_degree() + p - 1 : 0;
    // labelling vertex i with i * max(p,1) is always valid
    return scan_up(start, std::max(p, 1) * g.order(), [&](int k) { return lp1_solve_span(g, p, k); });
}

} // namespace plabel
