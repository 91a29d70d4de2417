#include <plabel/constructive.hpp>

#include <plabel/errors.hpp>
#include <plabel/generators.hpp>
#include <plabel/solver.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace plabel {

namespace {

using ColorSet = std::vector<Color>;

void erase_window(ColorSet & set, Color center, int separation)
{
    if (separation <= 0)
        return;
    std::erase_if(set, [&](Color c) { return std::abs(c - center) < separation; });
}

// L(x) minus everything the labelled neighbours of x in g forbid.
ColorSet available(const Graph & g, int p, const TotalLabelling & c, const ListAssignment & lists, const Element & x)
{
    ColorSet out = lists.at(x);
    if (x.is_vertex()) {
        for (Vertex w : g.neighbors(x.a)) {
            if (auto cw = c.get(Element::vertex(w)))
                erase_window(out, *cw, 1);
            if (auto ce = c.get(Element::edge(x.a, w)))
                erase_window(out, *ce, p);
        }
        return out;
    }
    for (Vertex end : {x.a, x.b}) {
        if (auto cv = c.get(Element::vertex(end)))
            erase_window(out, *cv, p);
        for (Vertex w : g.neighbors(end)) {
            const auto f = Element::edge(end, w);
            if (f == x)
                continue;
            if (auto cf = c.get(f))
                erase_window(out, *cf, 1);
        }
    }
    return out;
}

bool has(const ColorSet & set, Color c)
{
    return std::binary_search(set.begin(), set.end(), c);
}

void require_cover(const Graph & g, const ListAssignment & lists, int min_size, const char * who)
{
    for (const auto & x : elements(g))
        if (! lists.contains(x))
            throw std::invalid_argument(std::string(who) + ": no list for " + x.key());
    for (const auto & x : elements(g))
        if (static_cast<int>(lists.at(x).size()) < min_size)
            throw std::invalid_argument(std::string(who) + ": list of " + x.key() + " has "
                    + std::to_string(lists.at(x).size()) + " colors, needs " + std::to_string(min_size));
}

void assert_output(const Graph & g, int p, const TotalLabelling & c, const ListAssignment & lists, const char * who)
{
    auto verdict = is_valid(g, p, c, true);
    if (! verdict)
        throw TheoremViolation(std::string(who) + " produced an invalid labelling: "
                + std::string(constraint_name(verdict.violations.front().kind)) + " at "
                + verdict.violations.front().first.key() + " / " + verdict.violations.front().second.key());
    if (! respects_lists(c, lists))
        throw TheoremViolation(std::string(who) + " left an element's list");
}

// Colors x with its least available color; throws if none is left.
void greedy(const Graph & g, int p, TotalLabelling & c, const ListAssignment & lists, const Element & x, const char * who)
{
    const auto avail = available(g, p, c, lists, x);
    if (avail.empty())
        throw TheoremViolation(std::string(who) + ": no color left for " + x.key());
    c.set(x, avail.front());
}

} // namespace

Construction label_path_greedy(const Graph & g, int p, const ListAssignment & lists)
{
    if (! g.is_path())
        throw std::invalid_argument("label_path_greedy: graph is not a path");
    if (p < 1)
        throw std::invalid_argument("label_path_greedy: needs p >= 1");
    require_cover(g, lists, 2 * p + 1, "label_path_greedy");

    Vertex start = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) {
            start = v;
            break;
        }

    Construction out;
    auto & c = out.labelling;
    greedy(g, p, c, lists, Element::vertex(start), "label_path_greedy");
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (w != prev)
                next = w;
        if (next < 0)
            break;
        greedy(g, p, c, lists, Element::edge(cur, next), "label_path_greedy");
        greedy(g, p, c, lists, Element::vertex(next), "label_path_greedy");
        prev = cur;
        cur = next;
    }
    out.audit.steps.push_back("path from " + std::to_string(start));
    assert_output(g, p, c, lists, "label_path_greedy");
    return out;
}

Construction label_tree_dfs(const Graph & g, int p, const ListAssignment & lists)
{
    if (! g.is_tree())
        throw std::invalid_argument("label_tree_dfs: graph is not a tree");
    if (p < 1)
        throw std::invalid_argument("label_tree_dfs: needs p >= 1");
    // K_2 takes the path bound 2p+1
    const int k = std::max(g.max_degree(), 2) + 2 * p - 1;
    require_cover(g, lists, k, "label_tree_dfs");

    Construction out;
    auto & c = out.labelling;
    greedy(g, p, c, lists, Element::vertex(0), "label_tree_dfs");

    std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
    while (! stack.empty()) {
        auto & [u, next] = stack.back();
        const auto nbrs = g.neighbors(u);
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const Vertex child = nbrs[next++];
        if (c.contains(Element::vertex(child)))
            continue;
        const auto e = Element::edge(u, child);
        out.audit.reductions.push_back({"tree-edge", e,
                static_cast<int>(available(g, p, c, lists, e).size()), k - (g.max_degree() - 1) - (2 * p - 1)});
        greedy(g, p, c, lists, e, "label_tree_dfs");
        greedy(g, p, c, lists, Element::vertex(child), "label_tree_dfs");
        stack.push_back({child, 0});
    }
    out.audit.steps.push_back("dfs from 0");
    assert_output(g, p, c, lists, "label_tree_dfs");
    return out;
}

Construction label_star_list(const Graph & g, int p, const ListAssignment & lists)
{
    const int n = g.size();
    if (! g.is_tree() || n < 3 || g.max_degree() != n)
        throw std::invalid_argument("label_star_list: graph is not a star K_{1,n} with n >= 3");
    if (p < 2)
        throw std::invalid_argument("label_star_list: needs p >= 2");
    require_cover(g, lists, n + 2 * p - 1, "label_star_list");

    Vertex w = 0;
    while (g.degree(w) != n)
        ++w;
    const auto leaves = g.neighbors(w);

    Construction out;
    for (Color alpha : lists.at(Element::vertex(w))) {
        ++out.audit.center_attempts;
        out.audit.steps.push_back("center " + std::to_string(alpha));

        std::vector<Element> edges;
        std::vector<ColorSet> reduced;
        for (Vertex v : leaves) {
            edges.push_back(Element::edge(w, v));
            reduced.push_back(lists.at(edges.back()));
            erase_window(reduced.back(), alpha, p);
        }

        // protected edge: first one still holding n colors
        int guard = -1;
        for (int j = 0; j < n && guard < 0; ++j)
            if (static_cast<int>(reduced[j].size()) >= n)
                guard = j;
        if (guard < 0)
            continue;

        std::vector<std::optional<Color>> edge_color(static_cast<std::size_t>(n));
        bool failed = false;
        for (int i = 1; i <= n && ! failed; ++i) {
            std::optional<Color> m;
            for (int j = 0; j < n; ++j)
                if (! edge_color[j] && ! reduced[j].empty() && (! m || reduced[j].front() < *m))
                    m = reduced[j].front();
            if (! m) {
                failed = true;
                break;
            }
            int chosen = -1;
            for (int j = 0; j < n && chosen < 0; ++j)
                if (j != guard && ! edge_color[j] && has(reduced[j], *m))
                    chosen = j;
            if (chosen < 0)
                chosen = guard;
            edge_color[chosen] = *m;
            out.audit.steps.push_back("edge " + edges[chosen].key() + " <- " + std::to_string(*m)
                    + (chosen == guard ? " (protected)" : ""));
            if (i == n)
                break;
            for (int j = 0; j < n; ++j)
                if (! edge_color[j])
                    std::erase(reduced[j], *m);
            if (chosen == guard) {
                guard = -1;
                for (int j = 0; j < n && guard < 0; ++j)
                    if (! edge_color[j] && static_cast<int>(reduced[j].size()) >= n - i)
                        guard = j;
                if (guard < 0)
                    failed = true;
            }
        }
        if (failed)
            continue;

        TotalLabelling c;
        c.set(Element::vertex(w), alpha);
        for (int j = 0; j < n; ++j)
            c.set(edges[j], *edge_color[j]);
        for (int j = 0; j < n && ! failed; ++j) {
            const auto leaf = Element::vertex(leaves[j]);
            auto avail = available(g, p, c, lists, leaf);
            out.audit.reductions.push_back({"star-leaf", leaf, static_cast<int>(avail.size()), n - 1});
            if (avail.empty())
                failed = true;
            else
                c.set(leaf, avail.front());
        }
        if (failed)
            continue;

        assert_output(g, p, c, lists, "label_star_list");
        out.labelling = std::move(c);
        return out;
    }
    throw TheoremViolation("label_star_list: no center color admits an extension");
}

TotalLabelling label_star_span(int n, int p)
{
    if (n < 1 || p < 1)
        throw std::invalid_argument("label_star_span: needs n >= 1 and p >= 1");
    const Graph star = make_star(n);
    if (p >= n) {
        auto r = solve_span(star, p, n + p);
        if (! r.labelled())
            throw TheoremViolation("star has no labelling of span n+p");
        return std::move(*r.labelling);
    }
    TotalLabelling c;
    c.set(Element::vertex(0), n + p);
    for (int j = 1; j <= n; ++j) {
        c.set(Element::edge(0, j), j);
        c.set(Element::vertex(j), j < n ? p + j : 1);
    }
    if (! is_valid(star, p, c, true))
        throw TheoremViolation("star span construction is invalid");
    return c;
}

std::string ConfigurationMatch::describe() const
{
    std::string name;
    switch (kind) {
    case Kind::leaf: name = "Leaf"; break;
    case Kind::c1: name = "C1"; break;
    case Kind::c2: name = "C2"; break;
    case Kind::c3: name = "C3"; break;
    case Kind::not_found: return "NotFound";
    }
    name += "(";
    for (std::size_t i = 0; i < roles.size(); ++i)
        name += (i ? "," : "") + std::to_string(roles[i]);
    return name + ")";
}

ConfigurationMatch find_configuration(const Graph & g)
{
    using Kind = ConfigurationMatch::Kind;
    if (g.order() == 0)
        throw std::invalid_argument("find_configuration: graph has no vertices");

    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            return {Kind::leaf, {v, g.neighbors(v)[0]}};

    for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) == 2)
            for (Vertex v : g.neighbors(u))
                if (g.degree(v) == 2)
                    return {Kind::c1, {u, v}};

    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 2)
            continue;
        const Vertex a = g.neighbors(u)[0];
        const Vertex b = g.neighbors(u)[1];
        if (! g.adjacent(a, b))
            continue;
        if (g.degree(a) == 3)
            return {Kind::c2, {u, a, b}};
        if (g.degree(b) == 3)
            return {Kind::c2, {u, b, a}};
    }

    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) != 4)
            continue;
        std::vector<std::pair<Vertex, Vertex>> ears;
        for (Vertex u : g.neighbors(x)) {
            if (g.degree(u) != 2)
                continue;
            const auto nu = g.neighbors(u);
            const Vertex v = nu[0] == x ? nu[1] : nu[0];
            if (g.adjacent(x, v))
                ears.push_back({u, v});
        }
        for (std::size_t i = 0; i < ears.size(); ++i)
            for (std::size_t j = i + 1; j < ears.size(); ++j) {
                std::vector<Vertex> all{x, ears[i].first, ears[i].second, ears[j].first, ears[j].second};
                std::sort(all.begin(), all.end());
                if (std::adjacent_find(all.begin(), all.end()) == all.end())
                    return {Kind::c3, {x, ears[i].first, ears[i].second, ears[j].first, ears[j].second}};
            }
    }
    return {Kind::not_found, {}};
}

namespace {

class OuterplanarLabeller {
public:
    OuterplanarLabeller(int p, const ListAssignment & lists, int k, int max_degree, Audit & audit)
        : p_(p), lists_(lists), k_(k), max_degree_(max_degree), audit_(audit) {}

    // Extends c (valid on h minus the configuration's removed edge) to h.
    void extend(const Graph & h, const ConfigurationMatch & m, TotalLabelling & c)
    {
        using Kind = ConfigurationMatch::Kind;
        const auto & r = m.roles;
        bool done = false;
        switch (m.kind) {
        case Kind::leaf: done = extend_leaf(h, r[0], r[1], c); break;
        case Kind::c1: done = extend_c1(h, r[0], r[1], c); break;
        case Kind::c2: done = extend_c2(h, r[0], r[1], r[2], c); break;
        case Kind::c3: done = extend_c3(h, r[0], r[1], r[2], c); break;
        case Kind::not_found: break;
        }
        if (! done)
            resolve(h, m, c);
        assert_output(h, p_, c, lists_, "label_outerplanar_list");
    }

private:
    ColorSet reduced(const Graph & h, const TotalLabelling & c, const Element & x, const char * step, int bound)
    {
        auto set = available(h, p_, c, lists_, x);
        audit_.reductions.push_back({step, x, static_cast<int>(set.size()), bound});
        if (static_cast<int>(set.size()) < bound)
            throw TheoremViolation(std::string(step) + ": reduced list of " + x.key() + " has "
                    + std::to_string(set.size()) + " colors, counting bound is " + std::to_string(bound));
        return set;
    }

    bool pick_least(const Graph & h, TotalLabelling & c, const Element & x)
    {
        auto set = available(h, p_, c, lists_, x);
        if (set.empty())
            return false;
        c.set(x, set.front());
        return true;
    }

    bool extend_leaf(const Graph & h, Vertex v, Vertex u, TotalLabelling & c)
    {
        const auto e = Element::edge(u, v);
        c.erase(Element::vertex(v));
        reduced(h, c, e, "Leaf edge", k_ - (max_degree_ - 1) - (2 * p_ - 1));
        if (! pick_least(h, c, e))
            return false;
        reduced(h, c, Element::vertex(v), "Leaf vertex", k_ - 2 * p_);
        return pick_least(h, c, Element::vertex(v));
    }

    bool extend_c1(const Graph & h, Vertex u, Vertex v, TotalLabelling & c)
    {
        const auto eu = Element::vertex(u);
        const auto ev = Element::vertex(v);
        const auto e = Element::edge(u, v);
        c.erase(eu);
        c.erase(ev);
        const auto lu = reduced(h, c, eu, "C1 u", p_ + 2);
        const auto lv = reduced(h, c, ev, "C1 v", p_ + 2);
        const auto le = reduced(h, c, e, "C1 e", 3 * p_);

        Color m = le.front();
        m = std::min({m, lu.front(), lv.front()});
        if (! has(lu, m) && ! has(lv, m)) {
            audit_.steps.push_back("C1 case 1");
            c.set(e, m);
            return pick_least(h, c, eu) && pick_least(h, c, ev);
        }
        const auto first = has(lu, m) ? eu : ev;
        const auto second = has(lu, m) ? ev : eu;
        c.set(first, m);
        const auto l2 = available(h, p_, c, lists_, second);
        const auto e2 = available(h, p_, c, lists_, e);
        if (l2.empty() && e2.empty())
            return false;
        Color m1 = ! l2.empty() ? l2.front() : e2.front();
        if (! e2.empty())
            m1 = std::min(m1, e2.front());
        if (has(l2, m1)) {
            audit_.steps.push_back("C1 case 2.1");
            c.set(second, m1);
            return pick_least(h, c, e);
        }
        audit_.steps.push_back("C1 case 2.2");
        c.set(e, m1);
        return pick_least(h, c, second);
    }

    // Minimum-color rule shared by C2 and the roomy C3 case.
    bool min_color_pair(const Graph & h, TotalLabelling & c, const Element & vertex, const Element & edge,
            const ColorSet & lv, const ColorSet & le)
    {
        const Color m = le.empty() ? lv.front() : std::min(lv.front(), le.front());
        if (has(le, m)) {
            c.set(edge, m);
            return pick_least(h, c, vertex);
        }
        c.set(vertex, m);
        return pick_least(h, c, edge);
    }

    bool extend_c2(const Graph & h, Vertex u, Vertex v1, Vertex, TotalLabelling & c)
    {
        const auto eu = Element::vertex(u);
        const auto e = Element::edge(u, v1);
        c.erase(eu);
        const auto lu = reduced(h, c, eu, "C2 u", p_ + 1);
        const auto le = reduced(h, c, e, "C2 uv1", p_);
        return min_color_pair(h, c, eu, e, lu, le);
    }

    std::optional<std::pair<Color, Color>> pair_search(const ColorSet & lu, const ColorSet & le) const
    {
        for (Color a : lu)
            for (Color b : le)
                if (std::abs(a - b) >= p_)
                    return std::make_pair(a, b);
        return std::nullopt;
    }

    bool extend_c3(const Graph & h, Vertex x, Vertex u1, Vertex v1, TotalLabelling & c)
    {
        const auto eu = Element::vertex(u1);
        const auto e = Element::edge(x, u1);
        c.erase(eu);
        const auto lu = reduced(h, c, eu, "C3 u1", p_ + 1);
        const auto le = reduced(h, c, e, "C3 xu1", p_ - 1);

        if (auto pick = pair_search(lu, le)) {
            c.set(eu, pick->first);
            c.set(e, pick->second);
            return true;
        }

        // stuck lists must be {m..m+p} and {m+1..m+p-1}
        const Color m = lu.front();
        ColorSet expect_u, expect_e;
        for (Color t = m; t <= m + p_; ++t)
            expect_u.push_back(t);
        for (Color t = m + 1; t <= m + p_ - 1; ++t)
            expect_e.push_back(t);
        if (lu == expect_u && le == expect_e)
            ++audit_.stuck_shapes;
        else
            audit_.steps.push_back("C3 stuck lists outside the interval shape");

        ++audit_.interchanges;
        const auto xv1 = Element::edge(x, v1);
        const auto u1v1 = Element::edge(u1, v1);
        const Color a = c.at(xv1);
        const Color b = c.at(u1v1);
        c.set(xv1, b);
        c.set(u1v1, a);
        if (! is_valid(h, p_, c)) {
            ++audit_.invalid_swaps;
            audit_.steps.push_back("C3 interchange invalid, undone");
            c.set(xv1, a);
            c.set(u1v1, b);
            return false;
        }
        audit_.steps.push_back("C3 interchange");
        const auto lu2 = available(h, p_, c, lists_, eu);
        const auto le2 = available(h, p_, c, lists_, e);
        if (auto pick = pair_search(lu2, le2)) {
            c.set(eu, pick->first);
            c.set(e, pick->second);
            return true;
        }
        c.set(xv1, a);
        c.set(u1v1, b);
        return false;
    }

    // Exact fallback: re-solve the configuration's neighbourhood with the
    // rest pinned, then the whole working graph.
    void resolve(const Graph & h, const ConfigurationMatch & m, TotalLabelling & c)
    {
        ++audit_.local_resolves;
        audit_.steps.push_back("local re-solve at " + m.describe());
        TotalLabelling pinned = c;
        for (Vertex v : m.roles) {
            pinned.erase(Element::vertex(v));
            for (Vertex w : h.neighbors(v))
                pinned.erase(Element::edge(v, w));
        }
        if (auto r = solve_list(h, p_, lists_, pinned); r.labelled()) {
            c = std::move(*r.labelling);
            return;
        }
        ++audit_.full_resolves;
        audit_.steps.push_back("full re-solve at " + m.describe());
        auto r = solve_list(h, p_, lists_);
        if (! r.labelled())
            throw TheoremViolation("outerplanar list labelling: working graph at " + m.describe()
                    + " has no L-labelling at all");
        c = std::move(*r.labelling);
    }

    int p_;
    const ListAssignment & lists_;
    int k_;
    int max_degree_;
    Audit & audit_;
};

Edge removed_edge(const ConfigurationMatch & m)
{
    using Kind = ConfigurationMatch::Kind;
    const auto & r = m.roles;
    switch (m.kind) {
    case Kind::leaf: return make_edge(r[0], r[1]);
    case Kind::c1: return make_edge(r[0], r[1]);
    case Kind::c2: return make_edge(r[0], r[1]);
    case Kind::c3: return make_edge(r[0], r[1]);
    case Kind::not_found: break;
    }
    throw std::logic_error("no edge to remove for NotFound");
}

} // namespace

Construction label_outerplanar_list(const Graph & g, int p, const ListAssignment & lists)
{
    if (p < 1)
        throw std::invalid_argument("label_outerplanar_list: needs p >= 1");
    const int delta = g.max_degree();
    if (delta < p + 3)
        throw std::invalid_argument("label_outerplanar_list: Delta = " + std::to_string(delta)
                + " is below p+3 = " + std::to_string(p + 3));
    const int k = delta + 2 * p - 1;
    require_cover(g, lists, k, "label_outerplanar_list");

    Construction out;
    struct Frame {
        Graph graph;
        ConfigurationMatch match;
    };
    std::vector<Frame> frames;
    Graph h = g;
    while (h.size() > 0) {
        auto m = find_configuration(h);
        if (m.kind == ConfigurationMatch::Kind::not_found)
            throw ConfigurationNotFound("no Leaf/C1/C2/C3 configuration in a subgraph with "
                    + std::to_string(h.size()) + " edges; input is not outerplanar");
        const Edge e = removed_edge(m);
        out.audit.steps.push_back(m.describe());
        Graph smaller = h.without_edge(e.u, e.v);
        frames.push_back({std::move(h), std::move(m)});
        h = std::move(smaller);
    }

    auto & c = out.labelling;
    for (Vertex v = 0; v < g.order(); ++v)
        c.set(Element::vertex(v), lists.at(Element::vertex(v)).front());

    OuterplanarLabeller labeller(p, lists, k, delta, out.audit);
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
        labeller.extend(it->graph, it->match, c);

    assert_output(g, p, c, lists, "label_outerplanar_list");
    return out;
}

} // namespace plabel
